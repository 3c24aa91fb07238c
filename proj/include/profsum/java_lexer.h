#ifndef PROFSUM_JAVA_LEXER_H_
#define PROFSUM_JAVA_LEXER_H_

#include <optional>
#include <string>
#include <string_view>

namespace profsum::java {

// Returns |source| with every comment and every string, char and text-block
// literal (delimiters included) overwritten by spaces. Newlines are kept, so
// offsets and line numbers of the result match the input. Braces and parens
// left in the mask are real code tokens.
std::string mask_non_code(std::string_view source);

// Offset of the brace matching the '{' at |open|, scanning |masked| forward.
// nullopt when the end of input is reached first.
std::optional<size_t> match_brace(std::string_view masked, size_t open);

// Same for parentheses.
std::optional<size_t> match_paren(std::string_view masked, size_t open);

bool is_keyword(std::string_view word);

struct NamedParen {
  size_t name_begin;
  size_t name_end;
  size_t open_paren;
};

// First `identifier (` in |masked| that is not an annotation argument list;
// for a method snippet this is the declared name and its parameter list.
std::optional<NamedParen> first_named_paren(std::string_view masked);

}  // namespace profsum::java

#endif  // PROFSUM_JAVA_LEXER_H_
