#ifndef PROFSUM_SUMMARIZE_H_
#define PROFSUM_SUMMARIZE_H_

#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "profsum/cct.h"
#include "profsum/source_map.h"

namespace profsum {

inline constexpr std::string_view kNotFound = "NOT FOUND";

// Reference values for the fine-tuned encoder-decoder summarization model the
// remote backend is expected to serve. Fine-tuning happens outside this tool;
// only the token limits are enforced here.
namespace model_reference {
inline constexpr size_t kMaxInputTokens = 256;
inline constexpr size_t kMaxOutputTokens = 128;
inline constexpr double kLearningRate = 5e-5;
inline constexpr size_t kBatchSize = 32;
inline constexpr size_t kDecoderLayers = 6;
inline constexpr size_t kHiddenSize = 768;
inline constexpr size_t kAttentionHeads = 12;
// Smoothed BLEU of the Java CodeBERT summarizer; documentation only.
inline constexpr double kReportedJavaBleu = 17.65;
}  // namespace model_reference

struct RemoteBackend {
  std::string endpoint;  // e.g. http://host:port or https://host/base
};
struct ExtractiveBackend {};

struct SummarizerConfig {
  std::variant<RemoteBackend, ExtractiveBackend> backend = ExtractiveBackend{};
  size_t max_input_tokens = model_reference::kMaxInputTokens;
  size_t max_output_tokens = model_reference::kMaxOutputTokens;
  size_t parallelism = 4;
  std::chrono::milliseconds timeout{10000};

  // Throws std::invalid_argument on non-positive limits.
  void validate() const;
};

enum class Provenance { kBackend, kExtractive, kCacheHit, kUnresolved };
std::string_view ProvenanceName(Provenance p);

struct SummaryRecord {
  uint64_t node_id = 0;
  std::string function;
  std::optional<uint32_t> line;
  std::string summary;
  Provenance provenance = Provenance::kUnresolved;
  bool truncated_input = false;
  std::string error;  // diagnostic for unresolved entries, else empty
};

struct SummaryTree {
  std::vector<SummaryRecord> entries;  // parents, current, children
};

// Deterministic offline summary: first sentence of a leading doc comment,
// else "method: " plus the method name split into lowercase words.
std::string extractive_summary(std::string_view code);

// camelCase / snake_case / $-separated identifier -> lowercase words.
std::vector<std::string> split_identifier(std::string_view name);

// The text limited to its first |max_tokens| tokens; original spacing kept.
std::string truncate_tokens(std::string_view text, size_t max_tokens,
                            bool* truncated = nullptr);

// Something that turns code into a one-sentence summary. Implementations
// throw Error{kBackendUnavailable} / Error{kBackendBadResponse}.
class SummaryBackend {
 public:
  virtual ~SummaryBackend() = default;
  virtual std::string summarize(const std::string& code) = 0;
  virtual Provenance provenance() const = 0;
};

// POST <endpoint>/summarize {"language":"java","code":...} -> {"summary":...}
class HttpSummaryBackend final : public SummaryBackend {
 public:
  HttpSummaryBackend(std::string endpoint, std::chrono::milliseconds timeout);
  std::string summarize(const std::string& code) override;
  Provenance provenance() const override { return Provenance::kBackend; }

 private:
  std::string scheme_host_port_;
  std::string base_path_;
  std::string endpoint_;
  std::chrono::milliseconds timeout_;
};

class ExtractiveSummaryBackend final : public SummaryBackend {
 public:
  std::string summarize(const std::string& code) override {
    return extractive_summary(code);
  }
  Provenance provenance() const override { return Provenance::kExtractive; }
};

std::unique_ptr<SummaryBackend> make_backend(const SummarizerConfig& config);

// Applies the token limits, caches by the FNV-1a hash of the truncated code,
// and fans out to the backend with at most config.parallelism requests in
// flight.
class Summarizer {
 public:
  explicit Summarizer(SummarizerConfig config);
  Summarizer(SummarizerConfig config, std::unique_ptr<SummaryBackend> backend);

  const SummarizerConfig& config() const { return config_; }

  // Backend failures come back as Unresolved records, never as exceptions.
  SummaryRecord summarize(const std::string& code);

  // Summarizes many snippets. Identical snippets are sent once; the first
  // occurrence carries the backend provenance (or CacheHit when cached
  // before the call) and later occurrences are CacheHit. Output order and
  // provenance are independent of completion order.
  std::vector<SummaryRecord> summarize_batch(
      const std::vector<std::string>& codes);

  size_t cache_size() const;

 private:
  SummarizerConfig config_;
  std::unique_ptr<SummaryBackend> backend_;
  mutable std::mutex mu_;
  std::unordered_map<uint64_t, std::string> cache_;
};

// The snippet for one CCT node: its Java method when it can be extracted,
// else a window around the frame line for non-Java files. Throws the
// source-map errors otherwise.
std::string code_for_frame(const Frame& frame, const SourceIndex& sources);

SummaryTree summarize_call_path(const Cct& tree, const SelectedCallPath& path,
                                const SourceIndex& sources,
                                Summarizer& summarizer);

}  // namespace profsum

#endif  // PROFSUM_SUMMARIZE_H_
