#include <sstream>
#include <string>

#include "pbx/io.hpp"
#include "pbx/moves.hpp"

namespace pbx {

std::string format_trace(std::span<const FlipMove> trace) {
  std::string out;
  for (const FlipMove& m : trace) {
    out += std::to_string(m.direction + 1) + ": " + to_string(m.v) + " " + to_string(m.w) + " -> " +
           to_string(m.r()) + " " + to_string(m.q()) + "\n";
  }
  return out;
}

std::vector<FlipMove> parse_trace(std::string_view text) {
  std::vector<FlipMove> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string pos, v, w, arrow, r, q, extra;
    if (!(fields >> pos >> v >> w >> arrow >> r >> q) || (fields >> extra) || arrow != "->" || pos.empty() ||
        pos.back() != ':') {
      throw ParseError(line_no, "expected \"i: v w -> r q\"");
    }
    try {
      const int direction = std::stoi(pos.substr(0, pos.size() - 1)) - 1;
      const FlipMove m = FlipMove::between(parse_word(v), parse_word(w), parse_word(r), parse_word(q));
      if (m.direction != direction) {
        throw std::invalid_argument("pair differs in position " + std::to_string(m.direction + 1) + ", not " +
                                    std::to_string(direction + 1));
      }
      out.push_back(m);
    } catch (const std::logic_error& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return out;
}

}  // namespace pbx
