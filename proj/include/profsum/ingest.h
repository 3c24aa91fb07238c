#ifndef PROFSUM_INGEST_H_
#define PROFSUM_INGEST_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "profsum/profile.h"

namespace profsum {

enum class ProfileFormat { kAuto, kPprof, kFolded };

struct IngestReport {
  size_t samples_read = 0;
  size_t frames_resolved = 0;    // frames carrying a source file
  size_t frames_unresolved = 0;  // frames without one
  ProfileFormat format = ProfileFormat::kFolded;
};

using IngestResult = std::pair<Profile, IngestReport>;

// Folded (collapsed) stacks, one `frame;frame;... count` line per sample,
// leftmost frame = root. Frame tokens:
//   name | name:L<line> | name(file:line)
// An optional first line `#metric <name> <unit>` names the metric; any other
// '#' line is a comment. Lines are parsed in parallel with OpenMP.
IngestResult parse_folded(std::string_view text);

// Serial reference for parse_folded; identical results and errors.
IngestResult parse_folded_serial(std::string_view text);

// Parses one frame token; nullopt when the token violates the grammar.
std::optional<Frame> parse_folded_frame(std::string_view token);

// Serializes one frame in folded syntax (inverse of parse_folded_frame).
std::string folded_frame_token(const Frame& frame);

// Canonical folded text of |profile| projected onto |metric|. A `#metric`
// pragma line is emitted unless the descriptor is the folded default
// ("samples", "count").
std::string export_folded(const Profile& profile, size_t metric);

// pprof protobuf, optionally gzip-compressed.
IngestResult parse_pprof(std::span<const uint8_t> bytes);

// Gzip magic or a leading protobuf Profile field tag followed by binary
// content selects pprof; anything else is folded text.
ProfileFormat detect_format(std::span<const uint8_t> bytes);

IngestResult parse_any(std::span<const uint8_t> bytes,
                       ProfileFormat format = ProfileFormat::kAuto);

// Reads a whole file; throws Error{kIo}.
std::string read_file(const std::string& path);

IngestResult load_profile(const std::string& path,
                          ProfileFormat format = ProfileFormat::kAuto);

}  // namespace profsum

#endif  // PROFSUM_INGEST_H_
