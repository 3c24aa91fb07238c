#ifndef PROFSUM_PROFILE_H_
#define PROFSUM_PROFILE_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace profsum {

struct MetricDescriptor {
  std::string name;
  std::string unit;

  bool operator==(const MetricDescriptor&) const = default;
};

// One call-stack entry. Identity is the full (function, file, line) triple,
// so the same callee reached from two different lines yields two frames.
// A line of 0 means "unknown" and is stored as an absent optional.
struct Frame {
  std::string function;
  std::optional<std::string> file;
  std::optional<uint32_t> line;

  Frame() = default;
  explicit Frame(std::string fn, std::optional<std::string> f = std::nullopt,
                 std::optional<uint32_t> l = std::nullopt);

  auto operator<=>(const Frame&) const = default;
  bool operator==(const Frame&) const = default;

  // Last '.'-separated component of the function name.
  std::string_view simple_name() const;
};

struct FrameHash {
  size_t operator()(const Frame& frame) const;
};

// Stacks are root-first: stack[0] is the outermost caller, stack.back() the
// leaf where the sample was taken.
struct Sample {
  std::vector<Frame> stack;
  std::vector<uint64_t> values;

  bool operator==(const Sample&) const = default;
};

// Immutable after construction. The constructor enforces every invariant;
// Error{kInvalidProfile} reports the first violation found.
class Profile {
 public:
  Profile(std::vector<MetricDescriptor> descriptors,
          std::vector<Sample> samples, size_t default_metric);

  const std::vector<MetricDescriptor>& descriptors() const {
    return descriptors_;
  }
  const std::vector<Sample>& samples() const { return samples_; }
  size_t default_metric() const { return default_metric_; }
  size_t metric_count() const { return descriptors_.size(); }

  // Index of the descriptor called |name|, if any.
  std::optional<size_t> find_metric(std::string_view name) const;

  // Sum of values[metric] over all samples.
  uint64_t total(size_t metric) const;
  std::vector<uint64_t> totals() const;

  bool operator==(const Profile&) const = default;

 private:
  std::vector<MetricDescriptor> descriptors_;
  std::vector<Sample> samples_;
  size_t default_metric_ = 0;
};

// Merges samples with identical stacks (values summed) and sorts samples
// lexicographically by stack. Idempotent; preserves per-metric totals.
Profile canonicalize(const Profile& profile);

// True when |profile| is already in canonical form.
bool is_canonical(const Profile& profile);

// Single-metric projection used by the folded exporter: keeps only samples
// with a positive value for |metric|, canonicalized.
Profile project(const Profile& profile, size_t metric);

}  // namespace profsum

#endif  // PROFSUM_PROFILE_H_
