#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace slpedit::text_format {

/// Escapes one symbol for the line-oriented file formats. Bytes outside the
/// printable ASCII range, whitespace, `#`, `'` and `\` become `\xHH`.
std::string escape_symbol(char c);

/// Reads one possibly escaped symbol starting at `pos`; advances `pos`.
/// Throws InputError (with `line`) on a malformed escape.
char read_symbol(std::string_view text, std::size_t& pos, std::size_t line);

/// Splits on ASCII whitespace after dropping a trailing `#` comment.
std::vector<std::string_view> tokenize(std::string_view line);

/// Iterates lines; yields (1-based line number, content without newline).
std::vector<std::pair<std::size_t, std::string_view>> split_lines(std::string_view text);

std::string line_error(std::size_t line, std::string_view message);

}  // namespace slpedit::text_format
