#ifndef PROFSUM_ERROR_H_
#define PROFSUM_ERROR_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace profsum {

enum class ErrorKind {
  kInvalidProfile,
  kMalformedLine,
  kEmptyInput,
  kDecodeError,
  kDanglingReference,
  kUnsupportedCompression,
  kUnknownNode,
  kSourceNotFound,
  kAmbiguousSource,
  kDeclarationNotFound,
  kUnbalancedBraces,
  kBackendUnavailable,
  kBackendBadResponse,
  kEmptyReference,
  kEmptyCorpus,
  kIo,
  kUnknownMetric,
};

std::string_view ErrorKindName(ErrorKind kind);

// Single exception type for the library. The optional numeric fields carry
// the structured payload of the error kinds that have one (line number for
// MalformedLine, byte offset for DecodeError, id for DanglingReference and
// UnknownNode, start line for UnbalancedBraces).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail);

  static Error MalformedLine(size_t line_no, std::string_view why);
  static Error DecodeError(size_t offset, std::string_view why);
  static Error DanglingReference(uint64_t id, std::string_view what);
  static Error UnknownNode(uint64_t id);
  static Error UnbalancedBraces(std::string file, size_t start_line);

  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

  std::optional<size_t> line_no;
  std::optional<size_t> offset;
  std::optional<uint64_t> id;

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace profsum

#endif  // PROFSUM_ERROR_H_
