#pragma once

// The .pbx text format: '#' comment lines, one word per line in letter
// syntax (a-h, apostrophe for the complement). Families of codes separate
// their members with a line containing only "---".

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pbx/code.hpp"

namespace pbx {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

Code parse_code(std::string_view text);
std::vector<Code> parse_family(std::string_view text);
Code read_code_file(const std::string& path);
std::vector<Code> read_family_file(const std::string& path);

/// Sorted word order, one word per line, optional leading comment lines.
std::string format_code(const Code& c, const std::vector<std::string>& comments = {});
std::string format_family(const std::vector<Code>& family, const std::vector<std::string>& comments = {});

std::string read_text_file(const std::string& path);

}  // namespace pbx
