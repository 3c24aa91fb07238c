#include "profsum/java_lexer.h"

#include <array>
#include <algorithm>
#include <cctype>

namespace profsum::java {

namespace {

enum class State { kCode, kLineComment, kBlockComment, kString, kChar, kTextBlock };

}  // namespace

std::string mask_non_code(std::string_view src) {
  std::string out(src);
  State state = State::kCode;
  const size_t n = src.size();
  auto blank = [&](size_t i) {
    if (out[i] != '\n') out[i] = ' ';
  };
  for (size_t i = 0; i < n; ++i) {
    char c = src[i];
    char next = i + 1 < n ? src[i + 1] : '\0';
    switch (state) {
      case State::kCode:
        if (c == '/' && next == '/') {
          state = State::kLineComment;
          blank(i);
        } else if (c == '/' && next == '*') {
          state = State::kBlockComment;
          blank(i), blank(i + 1);
          ++i;
        } else if (c == '"' && src.substr(i, 3) == "\"\"\"") {
          state = State::kTextBlock;
          blank(i), blank(i + 1), blank(i + 2);
          i += 2;
        } else if (c == '"') {
          state = State::kString;
          blank(i);
        } else if (c == '\'') {
          state = State::kChar;
          blank(i);
        }
        break;
      case State::kLineComment:
        if (c == '\n') state = State::kCode;
        else blank(i);
        break;
      case State::kBlockComment:
        if (c == '*' && next == '/') {
          blank(i), blank(i + 1);
          ++i;
          state = State::kCode;
        } else {
          blank(i);
        }
        break;
      case State::kString:
      case State::kChar: {
        char quote = state == State::kString ? '"' : '\'';
        if (c == '\n') {
          // Unterminated literal; Java literals cannot span lines.
          state = State::kCode;
        } else if (c == '\\' && i + 1 < n && src[i + 1] != '\n') {
          blank(i), blank(i + 1);
          ++i;
        } else {
          blank(i);
          if (c == quote) state = State::kCode;
        }
        break;
      }
      case State::kTextBlock:
        if (c == '\\' && i + 1 < n) {
          blank(i), blank(i + 1);
          ++i;
        } else if (c == '"' && src.substr(i, 3) == "\"\"\"") {
          blank(i), blank(i + 1), blank(i + 2);
          i += 2;
          state = State::kCode;
        } else {
          blank(i);
        }
        break;
    }
  }
  return out;
}

namespace {

std::optional<size_t> match(std::string_view masked, size_t open, char lo,
                            char hi) {
  int depth = 0;
  for (size_t i = open; i < masked.size(); ++i) {
    if (masked[i] == lo) {
      ++depth;
    } else if (masked[i] == hi) {
      if (--depth == 0) return i;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<size_t> match_brace(std::string_view masked, size_t open) {
  return match(masked, open, '{', '}');
}

std::optional<size_t> match_paren(std::string_view masked, size_t open) {
  return match(masked, open, '(', ')');
}

bool is_keyword(std::string_view word) {
  static constexpr std::array<std::string_view, 22> kStatementWords = {
      "return", "new",    "throw",  "else",   "case",  "yield",
      "assert", "do",     "if",     "while",  "for",   "switch",
      "catch",  "try",    "finally", "break", "continue", "instanceof",
      "super",  "this",   "goto",   "const"};
  return std::find(kStatementWords.begin(), kStatementWords.end(), word) !=
         kStatementWords.end();
}

std::optional<NamedParen> first_named_paren(std::string_view masked) {
  auto ident = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
  };
  for (size_t i = 0; i < masked.size(); ++i) {
    if (masked[i] != '(') continue;
    size_t end = i;
    while (end > 0 && masked[end - 1] == ' ') --end;
    size_t begin = end;
    while (begin > 0 && ident(masked[begin - 1])) --begin;
    if (begin == end) continue;
    size_t k = begin;
    while (k > 0 && std::isspace(static_cast<unsigned char>(masked[k - 1]))) --k;
    if (k > 0 && masked[k - 1] == '@') {
      auto close = match_paren(masked, i);
      if (!close) return std::nullopt;
      i = *close;
      continue;
    }
    return NamedParen{begin, end, i};
  }
  return std::nullopt;
}

}  // namespace profsum::java
