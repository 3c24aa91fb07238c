#include "profsum/error.h"

#include <cinttypes>
#include <cstdio>

namespace profsum {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidProfile: return "InvalidProfile";
    case ErrorKind::kMalformedLine: return "MalformedLine";
    case ErrorKind::kEmptyInput: return "EmptyInput";
    case ErrorKind::kDecodeError: return "DecodeError";
    case ErrorKind::kDanglingReference: return "DanglingReference";
    case ErrorKind::kUnsupportedCompression: return "UnsupportedCompression";
    case ErrorKind::kUnknownNode: return "UnknownNode";
    case ErrorKind::kSourceNotFound: return "SourceNotFound";
    case ErrorKind::kAmbiguousSource: return "AmbiguousSource";
    case ErrorKind::kDeclarationNotFound: return "DeclarationNotFound";
    case ErrorKind::kUnbalancedBraces: return "UnbalancedBraces";
    case ErrorKind::kBackendUnavailable: return "BackendUnavailable";
    case ErrorKind::kBackendBadResponse: return "BackendBadResponse";
    case ErrorKind::kEmptyReference: return "EmptyReference";
    case ErrorKind::kEmptyCorpus: return "EmptyCorpus";
    case ErrorKind::kIo: return "Io";
    case ErrorKind::kUnknownMetric: return "UnknownMetric";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string detail)
    : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + detail),
      kind_(kind),
      detail_(std::move(detail)) {}

Error Error::MalformedLine(size_t line_no, std::string_view why) {
  Error e(ErrorKind::kMalformedLine,
          "line " + std::to_string(line_no) + ": " + std::string(why));
  e.line_no = line_no;
  return e;
}

Error Error::DecodeError(size_t offset, std::string_view why) {
  Error e(ErrorKind::kDecodeError,
          "offset " + std::to_string(offset) + ": " + std::string(why));
  e.offset = offset;
  return e;
}

Error Error::DanglingReference(uint64_t id, std::string_view what) {
  Error e(ErrorKind::kDanglingReference,
          std::string(what) + " id " + std::to_string(id));
  e.id = id;
  return e;
}

Error Error::UnknownNode(uint64_t id) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, id);
  Error e(ErrorKind::kUnknownNode, std::string("node ") + buf);
  e.id = id;
  return e;
}

Error Error::UnbalancedBraces(std::string file, size_t start_line) {
  Error e(ErrorKind::kUnbalancedBraces,
          file + ": method starting at line " + std::to_string(start_line) +
              " reaches end of file");
  e.line_no = start_line;
  return e;
}

}  // namespace profsum
