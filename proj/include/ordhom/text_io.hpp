#pragma once

#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordhom {

/// Error raised by any of the text-format parsers. Carries the 1-based
/// line number of the offending input line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

struct TextLine {
  int number = 0;  // 1-based position in the input
  std::vector<std::string> tokens;
};

// Splits input into tokenized lines. '#' starts a comment that runs to the
// end of the line; blank lines are dropped.
inline std::vector<TextLine> tokenize_lines(const std::string& text) {
  std::vector<TextLine> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    TextLine line;
    line.number = number;
    std::istringstream ls(raw);
    std::string tok;
    while (ls >> tok) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

inline long long parse_int_token(const std::string& tok, int line) {
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected integer, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(line, "expected integer, got '" + tok + "'");
  return value;
}

inline void expect_token_count(const TextLine& line, std::size_t count) {
  if (line.tokens.size() != count)
    throw ParseError(line.number, "expected " + std::to_string(count) +
                                      " fields, got " +
                                      std::to_string(line.tokens.size()));
}

}  // namespace detail
}  // namespace ordhom
