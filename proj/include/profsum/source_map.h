#ifndef PROFSUM_SOURCE_MAP_H_
#define PROFSUM_SOURCE_MAP_H_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "profsum/profile.h"

namespace profsum {

struct SourceLocation {
  std::filesystem::path file;
  uint32_t decl_line = 1;
  std::optional<uint32_t> frame_line;
};

struct ExtractedFunction {
  SourceLocation location;
  std::string signature;  // up to the opening brace, whitespace collapsed
  std::string body;       // whole lines, declaration through closing brace
  uint32_t start_line = 0;
  uint32_t end_line = 0;
  // Comment and annotation lines directly above the declaration.
  std::string preamble;
  uint32_t preamble_start_line = 0;
  // More than one declaration matched and no frame line was available.
  bool ambiguous = false;

  // The text handed to a summarizer: preamble plus body, whitespace
  // normalized.
  std::string transmission_text() const;
};

// A loaded source file. |masked| is the text with comments and literals
// blanked (see java::mask_non_code).
struct SourceText {
  std::string text;
  std::string masked;
  std::vector<size_t> line_starts;  // offset of each line, 0-based index

  size_t line_count() const { return line_starts.size(); }
  std::string_view line(size_t one_based) const;
  std::string_view masked_line(size_t one_based) const;
  size_t line_of(size_t offset) const;  // 1-based
  std::string package() const;          // "" for the default package

  static SourceText from_bytes(std::string_view bytes);
};

// How a frame's function maps onto Java source.
struct JavaName {
  std::string package;         // "pkg.a"
  std::string outer_class;     // "B" for pkg.a.B$C.m
  std::string relative_path;   // "pkg/a/B.java"
  std::string method;          // simple name; constructors map to the class
};

std::optional<JavaName> parse_java_name(std::string_view function);

// Holds source roots and a (path, mtime, size)-keyed content cache. Safe for
// concurrent use.
class SourceIndex {
 public:
  explicit SourceIndex(std::vector<std::filesystem::path> roots);

  const std::vector<std::filesystem::path>& roots() const { return roots_; }

  // Throws Error{kSourceNotFound}.
  SourceLocation resolve(const Frame& frame) const;

  // Throws Error{kDeclarationNotFound} or Error{kUnbalancedBraces}.
  ExtractedFunction extract(const SourceLocation& location,
                            std::string_view method_name) const;

  std::string snippet(const SourceLocation& location, size_t before,
                      size_t after) const;

  // Relative path confined to the roots. nullopt when |relative| escapes
  // every root; an empty path when it stays inside but does not exist.
  std::optional<std::filesystem::path> confine(
      std::string_view relative) const;

  std::shared_ptr<const SourceText> load(
      const std::filesystem::path& path) const;

 private:
  struct CacheEntry {
    std::filesystem::file_time_type mtime;
    uintmax_t size;
    std::shared_ptr<const SourceText> text;
  };

  std::vector<std::filesystem::path> roots_;
  mutable std::mutex mu_;
  mutable std::map<std::filesystem::path, CacheEntry> cache_;
};

SourceLocation resolve_location(const Frame& frame,
                                const std::vector<std::filesystem::path>& roots);

ExtractedFunction extract_function(const SourceLocation& location,
                                   std::string_view method_name);

// frame_line (or decl_line) +/- the window, clamped to the file.
std::string read_snippet(const SourceLocation& location, size_t before,
                         size_t after);

// Declaration lookup on already-loaded text. Returns the 1-based line of the
// declaration whose body contains |frame_line| (nearest above wins), or of
// the first declaration when |frame_line| is absent.
ExtractedFunction extract_from_text(const SourceText& source,
                                    const SourceLocation& location,
                                    std::string_view method_name);

}  // namespace profsum

#endif  // PROFSUM_SOURCE_MAP_H_
