#include "profsum/profile.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

#include "profsum/error.h"
#include "profsum/hash.h"

namespace profsum {

Frame::Frame(std::string fn, std::optional<std::string> f,
             std::optional<uint32_t> l)
    : function(std::move(fn)), file(std::move(f)), line(l) {
  if (line && *line == 0) line.reset();
}

std::string_view Frame::simple_name() const {
  std::string_view fn = function;
  size_t dot = fn.rfind('.');
  return dot == std::string_view::npos ? fn : fn.substr(dot + 1);
}

size_t FrameHash::operator()(const Frame& frame) const {
  uint64_t h = Fnv1a(frame.function);
  if (frame.file) h = Fnv1a(*frame.file, h ^ 0x9e3779b97f4a7c15ULL);
  if (frame.line) h = (h ^ *frame.line) * kFnvPrime;
  return static_cast<size_t>(h);
}

Profile::Profile(std::vector<MetricDescriptor> descriptors,
                 std::vector<Sample> samples, size_t default_metric)
    : descriptors_(std::move(descriptors)),
      samples_(std::move(samples)),
      default_metric_(default_metric) {
  if (descriptors_.empty())
    throw Error(ErrorKind::kInvalidProfile, "no metric descriptors");
  if (default_metric_ >= descriptors_.size())
    throw Error(ErrorKind::kInvalidProfile, "default metric out of range");
  std::unordered_set<std::string> names;
  for (const auto& d : descriptors_) {
    if (d.name.empty() || d.unit.empty())
      throw Error(ErrorKind::kInvalidProfile, "empty metric name or unit");
    if (!names.insert(d.name).second)
      throw Error(ErrorKind::kInvalidProfile, "duplicate metric " + d.name);
  }
  for (size_t i = 0; i < samples_.size(); ++i) {
    const Sample& s = samples_[i];
    if (s.stack.empty())
      throw Error(ErrorKind::kInvalidProfile,
                  "sample " + std::to_string(i) + " has an empty stack");
    if (s.values.size() != descriptors_.size())
      throw Error(ErrorKind::kInvalidProfile,
                  "sample " + std::to_string(i) + " has " +
                      std::to_string(s.values.size()) + " values, expected " +
                      std::to_string(descriptors_.size()));
    if (std::none_of(s.values.begin(), s.values.end(),
                     [](uint64_t v) { return v > 0; }))
      throw Error(ErrorKind::kInvalidProfile,
                  "sample " + std::to_string(i) + " has zero weight");
    for (const Frame& f : s.stack) {
      if (f.function.empty())
        throw Error(ErrorKind::kInvalidProfile,
                    "sample " + std::to_string(i) + " has an unnamed frame");
    }
  }
}

std::optional<size_t> Profile::find_metric(std::string_view name) const {
  for (size_t i = 0; i < descriptors_.size(); ++i)
    if (descriptors_[i].name == name) return i;
  return std::nullopt;
}

uint64_t Profile::total(size_t metric) const {
  uint64_t sum = 0;
  for (const auto& s : samples_) sum += s.values[metric];
  return sum;
}

std::vector<uint64_t> Profile::totals() const {
  std::vector<uint64_t> out(descriptors_.size(), 0);
  for (const auto& s : samples_)
    for (size_t m = 0; m < out.size(); ++m) out[m] += s.values[m];
  return out;
}

namespace {

std::vector<Sample> merge_sorted(std::vector<Sample> samples) {
  std::vector<size_t> order(samples.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return samples[a].stack < samples[b].stack;
  });
  std::vector<Sample> merged;
  merged.reserve(samples.size());
  for (size_t idx : order) {
    Sample& s = samples[idx];
    if (!merged.empty() && merged.back().stack == s.stack) {
      auto& acc = merged.back().values;
      for (size_t m = 0; m < acc.size(); ++m) acc[m] += s.values[m];
    } else {
      merged.push_back(std::move(s));
    }
  }
  return merged;
}

}  // namespace

Profile canonicalize(const Profile& profile) {
  if (is_canonical(profile)) return profile;
  return Profile(profile.descriptors(), merge_sorted(profile.samples()),
                 profile.default_metric());
}

bool is_canonical(const Profile& profile) {
  const auto& s = profile.samples();
  for (size_t i = 1; i < s.size(); ++i)
    if (!(s[i - 1].stack < s[i].stack)) return false;
  return true;
}

Profile project(const Profile& profile, size_t metric) {
  if (metric >= profile.metric_count())
    throw Error(ErrorKind::kUnknownMetric,
                "metric index " + std::to_string(metric));
  std::vector<Sample> kept;
  for (const auto& s : profile.samples()) {
    if (s.values[metric] == 0) continue;
    kept.push_back(Sample{s.stack, {s.values[metric]}});
  }
  return Profile({profile.descriptors()[metric]}, merge_sorted(std::move(kept)),
                 0);
}

}  // namespace profsum
