#ifndef PROFSUM_TEXT_H_
#define PROFSUM_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace profsum {

// Splits on Unicode whitespace (UTF-8 input); empty tokens are dropped.
std::vector<std::string_view> tokenize(std::string_view text);

// Byte offset just past the |n|-th token, or text.size() when the text has
// at most |n| tokens.
size_t token_prefix_end(std::string_view text, size_t n);

// 0x09, 0x0A, 0x0D and 0x20..0x7E only.
bool is_plain_ascii(std::string_view text);

// Replaces invalid UTF-8 sequences with U+FFFD.
std::string sanitize_utf8(std::string_view bytes);

// Collapses runs of blanks within each line to one space and trims each
// line; line breaks are kept.
std::string normalize_whitespace(std::string_view text);

std::string to_lower_ascii(std::string_view text);

std::string join(const std::vector<std::string_view>& parts,
                 std::string_view sep);

}  // namespace profsum

#endif  // PROFSUM_TEXT_H_
