#include "profsum/text.h"

#include <cstdint>

namespace profsum {

namespace {

// Decodes one UTF-8 sequence at |pos|. Returns its length and stores the
// code point, or 0 for an invalid sequence.
size_t decode_utf8(std::string_view s, size_t pos, uint32_t& cp) {
  auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) {
    cp = b0;
    return 1;
  }
  size_t len;
  uint32_t min;
  if ((b0 & 0xe0) == 0xc0) {
    len = 2, cp = b0 & 0x1f, min = 0x80;
  } else if ((b0 & 0xf0) == 0xe0) {
    len = 3, cp = b0 & 0x0f, min = 0x800;
  } else if ((b0 & 0xf8) == 0xf0) {
    len = 4, cp = b0 & 0x07, min = 0x10000;
  } else {
    return 0;
  }
  if (pos + len > s.size()) return 0;
  for (size_t i = 1; i < len; ++i) {
    auto b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xc0) != 0x80) return 0;
    cp = (cp << 6) | (b & 0x3f);
  }
  if (cp < min || cp > 0x10ffff || (cp >= 0xd800 && cp <= 0xdfff)) return 0;
  return len;
}

bool is_unicode_space(uint32_t cp) {
  return (cp >= 0x09 && cp <= 0x0d) || cp == 0x20 || cp == 0x85 ||
         cp == 0xa0 || cp == 0x1680 || (cp >= 0x2000 && cp <= 0x200a) ||
         cp == 0x2028 || cp == 0x2029 || cp == 0x202f || cp == 0x205f ||
         cp == 0x3000;
}

// Length of the whitespace sequence at |pos|, 0 if none.
size_t space_at(std::string_view s, size_t pos) {
  uint32_t cp = 0;
  size_t len = decode_utf8(s, pos, cp);
  return len && is_unicode_space(cp) ? len : 0;
}

}  // namespace

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> out;
  size_t pos = 0, start = 0;
  bool in_token = false;
  while (pos < text.size()) {
    size_t sp = space_at(text, pos);
    if (sp) {
      if (in_token) out.push_back(text.substr(start, pos - start));
      in_token = false;
      pos += sp;
    } else {
      if (!in_token) start = pos;
      in_token = true;
      ++pos;
    }
  }
  if (in_token) out.push_back(text.substr(start));
  return out;
}

size_t token_prefix_end(std::string_view text, size_t n) {
  if (n == 0) return 0;
  size_t pos = 0, seen = 0;
  bool in_token = false;
  while (pos < text.size()) {
    size_t sp = space_at(text, pos);
    if (sp) {
      if (in_token && ++seen == n) return pos;
      in_token = false;
      pos += sp;
    } else {
      in_token = true;
      ++pos;
    }
  }
  return text.size();
}

bool is_plain_ascii(std::string_view text) {
  for (char ch : text) {
    auto c = static_cast<unsigned char>(ch);
    if (c == 0x09 || c == 0x0a || c == 0x0d) continue;
    if (c < 0x20 || c > 0x7e) return false;
  }
  return true;
}

std::string sanitize_utf8(std::string_view bytes) {
  std::string out;
  out.reserve(bytes.size());
  size_t pos = 0;
  while (pos < bytes.size()) {
    uint32_t cp = 0;
    size_t len = decode_utf8(bytes, pos, cp);
    if (len == 0) {
      out += "\xef\xbf\xbd";
      ++pos;
    } else {
      out.append(bytes.substr(pos, len));
      pos += len;
    }
  }
  return out;
}

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  size_t pos = 0;
  while (true) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    bool pending_space = false;
    bool any = false;
    for (char c : line) {
      if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
        pending_space = any;
        continue;
      }
      if (pending_space) out += ' ';
      pending_space = false;
      any = true;
      out += c;
    }
    if (nl == std::string_view::npos) break;
    out += '\n';
    pos = nl + 1;
  }
  return out;
}

std::string to_lower_ascii(std::string_view text) {
  std::string out(text);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

std::string join(const std::vector<std::string_view>& parts,
                 std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace profsum
