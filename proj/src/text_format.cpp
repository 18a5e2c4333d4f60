#include "slpedit/text_format.hpp"

#include <cctype>
#include <cstdio>

#include "slpedit/cost.hpp"

namespace slpedit::text_format {

namespace {

bool needs_escape(unsigned char c) {
  return c <= 0x20 || c >= 0x7f || c == '#' || c == '\'' || c == '\\';
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string escape_symbol(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (!needs_escape(u)) return std::string(1, c);
  char buf[5];
  std::snprintf(buf, sizeof buf, "\\x%02x", u);
  return buf;
}

char read_symbol(std::string_view text, std::size_t& pos, std::size_t line) {
  if (pos >= text.size()) throw InputError(line_error(line, "expected a symbol"));
  if (text[pos] != '\\') return text[pos++];
  if (pos + 3 >= text.size())
    throw InputError(line_error(line, "truncated escape sequence"));
  if (text[pos + 1] != 'x')
    throw InputError(line_error(line, "unknown escape sequence"));
  const int hi = hex_value(text[pos + 2]);
  const int lo = hex_value(text[pos + 3]);
  if (hi < 0 || lo < 0) throw InputError(line_error(line, "bad hex escape"));
  pos += 4;
  return static_cast<char>(hi * 16 + lo);
}

std::vector<std::string_view> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::vector<std::pair<std::size_t, std::string_view>> split_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t number = 1;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view content = text.substr(begin, end - begin);
    if (!content.empty() && content.back() == '\r') content.remove_suffix(1);
    lines.emplace_back(number++, content);
    if (end == text.size()) break;
    begin = end + 1;
  }
  return lines;
}

std::string line_error(std::size_t line, std::string_view message) {
  return "line " + std::to_string(line) + ": " + std::string(message);
}

}  // namespace slpedit::text_format
