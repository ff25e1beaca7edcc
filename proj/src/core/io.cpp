#include "pbx/io.hpp"

#include <fstream>
#include <sstream>

#include "pbx/cover.hpp"

namespace pbx {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct PendingCode {
  int first_line = 0;
  std::vector<std::pair<int, Word>> words;
};

Code finish(const PendingCode& pending) {
  if (pending.words.empty()) throw ParseError(pending.first_line, "empty code");
  const int dim = pending.words.front().second.dim();
  std::vector<Word> words;
  for (const auto& [line, w] : pending.words) {
    if (w.dim() != dim) {
      throw ParseError(line, "word " + to_string(w) + " has dimension " + std::to_string(w.dim()) + ", expected " +
                                 std::to_string(dim));
    }
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (words[j] == w) throw ParseError(line, "duplicate word " + to_string(w));
      if (!is_dichotomous_unchecked(words[j], w)) {
        throw ParseError(line, "word " + to_string(w) + " is not dichotomous with " + to_string(words[j]) +
                                   " (line " + std::to_string(pending.words[j].first) + ")");
      }
    }
    words.push_back(w);
  }
  return Code::from_words(dim, std::move(words));
}

}  // namespace

std::vector<Code> parse_family(std::string_view text) {
  std::vector<Code> out;
  PendingCode pending;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line == "---") {
      if (!pending.words.empty()) out.push_back(finish(pending));
      pending = {};
      continue;
    }
    if (line.find('*') != std::string_view::npos) throw ParseError(line_no, "'*' is not allowed in a code file");
    try {
      if (pending.words.empty()) pending.first_line = line_no;
      pending.words.emplace_back(line_no, parse_word(line));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!pending.words.empty()) out.push_back(finish(pending));
  return out;
}

Code parse_code(std::string_view text) {
  auto family = parse_family(text);
  if (family.size() != 1) {
    throw ParseError(1, "expected exactly one code, found " + std::to_string(family.size()));
  }
  return std::move(family.front());
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Code read_code_file(const std::string& path) { return parse_code(read_text_file(path)); }

std::vector<Code> read_family_file(const std::string& path) { return parse_family(read_text_file(path)); }

std::string format_code(const Code& c, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& line : comments) out += "# " + line + "\n";
  for (const Word& w : c) out += to_string(w) + "\n";
  return out;
}

std::string format_family(const std::vector<Code>& family, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& line : comments) out += "# " + line + "\n";
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i > 0) out += "---\n";
    out += format_code(family[i]);
  }
  return out;
}

}  // namespace pbx
