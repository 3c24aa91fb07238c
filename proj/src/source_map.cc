#include "profsum/source_map.h"

#include <algorithm>
#include <cctype>
#include <system_error>

#include "profsum/error.h"
#include "profsum/ingest.h"
#include "profsum/java_lexer.h"
#include "profsum/text.h"

namespace fs = std::filesystem;

namespace profsum {

namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Blanks `@Name` and `@Name(...)` groups in a declaration prefix.
std::string strip_annotations(std::string_view prefix) {
  std::string out(prefix);
  for (size_t i = 0; i < out.size(); ++i) {
    if (out[i] != '@') continue;
    size_t j = i + 1;
    while (j < out.size() && (is_ident_char(out[j]) || out[j] == '.')) ++j;
    size_t k = j;
    while (k < out.size() && out[k] == ' ') ++k;
    if (k < out.size() && out[k] == '(') {
      if (auto close = java::match_paren(out, k)) j = *close + 1;
    }
    std::fill(out.begin() + i, out.begin() + j, ' ');
    i = j - 1;
  }
  return out;
}

bool plausible_decl_prefix(std::string_view prefix) {
  std::string cleaned = strip_annotations(prefix);
  for (char c : cleaned) {
    if (is_ident_char(c) || std::isspace(static_cast<unsigned char>(c)))
      continue;
    if (c == '<' || c == '>' || c == ',' || c == '?' || c == '[' ||
        c == ']' || c == '.' || c == '&')
      continue;
    return false;
  }
  std::string_view t = trim(cleaned);
  if (!t.empty() && t.back() == '.') return false;
  size_t end = t.size();
  size_t start = end;
  while (start > 0 && is_ident_char(t[start - 1])) --start;
  return !java::is_keyword(t.substr(start, end - start));
}

size_t skip_space(std::string_view s, size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

// From the ')' closing the parameter list, find the body's '{'.
std::optional<size_t> body_open_after(std::string_view masked, size_t close) {
  size_t i = skip_space(masked, close + 1);
  if (masked.substr(i, 6) == "throws" &&
      (i + 6 >= masked.size() || !is_ident_char(masked[i + 6]))) {
    i += 6;
    while (i < masked.size()) {
      char c = masked[i];
      if (is_ident_char(c) || std::isspace(static_cast<unsigned char>(c)) ||
          c == '.' || c == ',' || c == '<' || c == '>' || c == '?')
        ++i;
      else
        break;
    }
  }
  if (i < masked.size() && masked[i] == '{') return i;
  return std::nullopt;
}

struct Declaration {
  size_t line = 0;         // 1-based
  size_t line_offset = 0;  // offset of the line start
  size_t open_brace = 0;   // absolute offset
};

// Declarations of |name| starting on |line_no|.
std::optional<Declaration> declaration_on_line(const SourceText& src,
                                               size_t line_no,
                                               std::string_view name) {
  std::string_view line = src.masked_line(line_no);
  size_t base = src.line_starts[line_no - 1];
  size_t pos = 0;
  while ((pos = line.find(name, pos)) != std::string_view::npos) {
    size_t after = pos + name.size();
    bool boundary = (pos == 0 || !is_ident_char(line[pos - 1])) &&
                    (after >= line.size() || !is_ident_char(line[after]));
    size_t paren = after;
    while (paren < line.size() && line[paren] == ' ') ++paren;
    if (boundary && paren < line.size() && line[paren] == '(' &&
        plausible_decl_prefix(line.substr(0, pos))) {
      if (auto close = java::match_paren(src.masked, base + paren)) {
        if (auto open = body_open_after(src.masked, *close))
          return Declaration{line_no, base, *open};
      }
    }
    pos = after;
  }
  return std::nullopt;
}

std::string collapse_spaces(std::string_view s) {
  std::string out;
  bool space = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = !out.empty();
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

ExtractedFunction build_extracted(const SourceText& src,
                                  const SourceLocation& loc,
                                  const Declaration& decl) {
  auto close = java::match_brace(src.masked, decl.open_brace);
  if (!close)
    throw Error::UnbalancedBraces(loc.file.string(), decl.line);
  ExtractedFunction fn;
  fn.location = loc;
  fn.location.decl_line = static_cast<uint32_t>(decl.line);
  fn.start_line = static_cast<uint32_t>(decl.line);
  fn.end_line = static_cast<uint32_t>(src.line_of(*close));
  fn.signature = collapse_spaces(std::string_view(src.text).substr(
      decl.line_offset, decl.open_brace - decl.line_offset));
  size_t body_end = fn.end_line < src.line_count()
                        ? src.line_starts[fn.end_line] - 1
                        : src.text.size();
  if (body_end > decl.line_offset && src.text[body_end - 1] == '\n') --body_end;
  fn.body = src.text.substr(decl.line_offset, body_end - decl.line_offset);

  size_t first = decl.line;
  while (first > 1) {
    std::string_view raw = trim(src.line(first - 1));
    std::string_view masked = trim(src.masked_line(first - 1));
    bool comment_only = masked.empty() && !raw.empty();
    bool annotation = !masked.empty() && masked.front() == '@';
    if (!comment_only && !annotation) break;
    --first;
  }
  fn.preamble_start_line = static_cast<uint32_t>(first);
  if (first < decl.line) {
    size_t from = src.line_starts[first - 1];
    fn.preamble = src.text.substr(from, decl.line_offset - from);
  }
  return fn;
}

bool package_matches(const SourceText& src, std::string_view package) {
  return src.package() == package;
}

}  // namespace

std::string ExtractedFunction::transmission_text() const {
  return normalize_whitespace(preamble + body);
}

std::string_view SourceText::line(size_t one_based) const {
  size_t start = line_starts[one_based - 1];
  size_t end = one_based < line_starts.size() ? line_starts[one_based] - 1
                                              : text.size();
  std::string_view v = std::string_view(text).substr(start, end - start);
  if (!v.empty() && v.back() == '\n') v.remove_suffix(1);
  if (!v.empty() && v.back() == '\r') v.remove_suffix(1);
  return v;
}

std::string_view SourceText::masked_line(size_t one_based) const {
  size_t start = line_starts[one_based - 1];
  size_t end = one_based < line_starts.size() ? line_starts[one_based] - 1
                                              : masked.size();
  std::string_view v = std::string_view(masked).substr(start, end - start);
  if (!v.empty() && v.back() == '\n') v.remove_suffix(1);
  return v;
}

size_t SourceText::line_of(size_t offset) const {
  auto it = std::upper_bound(line_starts.begin(), line_starts.end(), offset);
  return static_cast<size_t>(it - line_starts.begin());
}

std::string SourceText::package() const {
  for (size_t i = 1; i <= line_count(); ++i) {
    std::string_view l = trim(masked_line(i));
    if (l.empty()) continue;
    if (l.substr(0, 7) != "package" ||
        (l.size() > 7 && is_ident_char(l[7])))
      return "";
    // The declaration may wrap; read until ';' from here.
    size_t from = line_starts[i - 1] + (masked_line(i).find("package") + 7);
    size_t semi = masked.find(';', from);
    if (semi == std::string::npos) return "";
    std::string name;
    for (char c : std::string_view(masked).substr(from, semi - from))
      if (!std::isspace(static_cast<unsigned char>(c))) name += c;
    return name;
  }
  return "";
}

SourceText SourceText::from_bytes(std::string_view bytes) {
  SourceText s;
  s.text = sanitize_utf8(bytes);
  s.masked = java::mask_non_code(s.text);
  s.line_starts.push_back(0);
  for (size_t i = 0; i < s.text.size(); ++i)
    if (s.text[i] == '\n' && i + 1 < s.text.size())
      s.line_starts.push_back(i + 1);
  return s;
}

std::optional<JavaName> parse_java_name(std::string_view function) {
  std::string fn(function);
  std::replace(fn.begin(), fn.end(), '/', '.');
  // async-profiler frame-type suffixes: _[j] _[i] _[k] _[0] ...
  if (fn.size() > 4 && fn[fn.size() - 4] == '_' && fn[fn.size() - 3] == '[' &&
      fn.back() == ']')
    fn.resize(fn.size() - 4);
  size_t dot = fn.rfind('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == fn.size())
    return std::nullopt;
  std::string cls = fn.substr(0, dot);
  JavaName out;
  out.method = fn.substr(dot + 1);
  size_t pkg_dot = cls.rfind('.');
  std::string simple = pkg_dot == std::string::npos ? cls : cls.substr(pkg_dot + 1);
  out.package = pkg_dot == std::string::npos ? "" : cls.substr(0, pkg_dot);
  out.outer_class = simple.substr(0, simple.find('$'));
  if (out.outer_class.empty()) return std::nullopt;
  std::string dir = out.package;
  std::replace(dir.begin(), dir.end(), '.', '/');
  out.relative_path = (dir.empty() ? "" : dir + "/") + out.outer_class + ".java";
  if (out.method == "<init>") {
    size_t dollar = simple.rfind('$');
    out.method = dollar == std::string::npos ? simple : simple.substr(dollar + 1);
  }
  return out;
}

ExtractedFunction extract_from_text(const SourceText& src,
                                    const SourceLocation& loc,
                                    std::string_view name) {
  auto not_found = [&] {
    return Error(ErrorKind::kDeclarationNotFound,
                 std::string(name) + " in " + loc.file.string());
  };
  if (name.empty() || src.line_count() == 0) throw not_found();
  if (loc.frame_line) {
    size_t from = std::min<size_t>(*loc.frame_line, src.line_count());
    if (*loc.frame_line > src.line_count()) throw not_found();
    for (size_t l = from; l >= 1; --l) {
      auto decl = declaration_on_line(src, l, name);
      if (!decl) continue;
      ExtractedFunction fn = build_extracted(src, loc, *decl);
      if (fn.end_line >= *loc.frame_line) return fn;
    }
    throw not_found();
  }
  std::optional<ExtractedFunction> first;
  for (size_t l = 1; l <= src.line_count(); ++l) {
    auto decl = declaration_on_line(src, l, name);
    if (!decl) continue;
    if (first) {
      first->ambiguous = true;
      break;
    }
    first = build_extracted(src, loc, *decl);
  }
  if (!first) throw not_found();
  return *first;
}

SourceIndex::SourceIndex(std::vector<fs::path> roots)
    : roots_(std::move(roots)) {}

std::shared_ptr<const SourceText> SourceIndex::load(const fs::path& path) const {
  std::error_code ec;
  auto mtime = fs::last_write_time(path, ec);
  if (ec) throw Error(ErrorKind::kIo, "cannot stat " + path.string());
  auto size = fs::file_size(path, ec);
  if (ec) throw Error(ErrorKind::kIo, "cannot stat " + path.string());
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(path);
    if (it != cache_.end() && it->second.mtime == mtime &&
        it->second.size == size)
      return it->second.text;
  }
  auto text = std::make_shared<const SourceText>(
      SourceText::from_bytes(read_file(path.string())));
  std::lock_guard<std::mutex> lock(mu_);
  cache_[path] = CacheEntry{mtime, size, text};
  return text;
}

SourceLocation SourceIndex::resolve(const Frame& frame) const {
  auto name = parse_java_name(frame.function);
  std::string package = name ? name->package : "";
  std::vector<fs::path> candidates;
  if (frame.file) {
    fs::path f(*frame.file);
    for (const auto& root : roots_) {
      candidates.push_back(root / f);
      if (name && f.has_filename())
        candidates.push_back(root / fs::path(name->relative_path).parent_path() /
                             f.filename());
    }
  }
  if (name)
    for (const auto& root : roots_) candidates.push_back(root / name->relative_path);

  for (const auto& path : candidates) {
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) continue;
    auto src = load(path);
    if (!package_matches(*src, package)) continue;
    SourceLocation loc;
    loc.file = path;
    loc.frame_line = frame.line;
    loc.decl_line = frame.line.value_or(1);
    if (name && path.extension() == ".java") {
      try {
        loc.decl_line = extract_from_text(*src, loc, name->method).start_line;
      } catch (const Error&) {
      }
    }
    return loc;
  }
  throw Error(ErrorKind::kSourceNotFound, frame.function);
}

ExtractedFunction SourceIndex::extract(const SourceLocation& location,
                                       std::string_view method_name) const {
  return extract_from_text(*load(location.file), location, method_name);
}

std::string SourceIndex::snippet(const SourceLocation& location,
                                 size_t before, size_t after) const {
  auto src = load(location.file);
  if (src->line_count() == 0) return "";
  size_t center = location.frame_line.value_or(location.decl_line);
  center = std::clamp<size_t>(center, 1, src->line_count());
  size_t first = center > before ? center - before : 1;
  size_t last = std::min(src->line_count(), center + after);
  std::string out;
  for (size_t l = first; l <= last; ++l) {
    out += src->line(l);
    if (l != last) out += '\n';
  }
  return out;
}

std::optional<fs::path> SourceIndex::confine(std::string_view relative) const {
  fs::path rel(relative);
  if (rel.empty() || rel.is_absolute()) return std::nullopt;
  bool inside_any = false;
  for (const auto& root : roots_) {
    std::error_code ec;
    fs::path base = fs::weakly_canonical(root, ec);
    if (ec) continue;
    fs::path full = fs::weakly_canonical(base / rel, ec);
    if (ec) continue;
    auto [b, f] = std::mismatch(base.begin(), base.end(), full.begin(), full.end());
    if (b != base.end()) continue;
    inside_any = true;
    if (fs::is_regular_file(full, ec)) return full;
  }
  if (inside_any) return fs::path();
  return std::nullopt;
}

SourceLocation resolve_location(const Frame& frame,
                                const std::vector<fs::path>& roots) {
  return SourceIndex(roots).resolve(frame);
}

ExtractedFunction extract_function(const SourceLocation& location,
                                   std::string_view method_name) {
  return SourceIndex({}).extract(location, method_name);
}

std::string read_snippet(const SourceLocation& location, size_t before,
                         size_t after) {
  return SourceIndex({}).snippet(location, before, after);
}

}  // namespace profsum
