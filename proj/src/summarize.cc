#include "profsum/summarize.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "httplib.h"
#include "json.hpp"

#include "profsum/error.h"
#include "profsum/hash.h"
#include "profsum/java_lexer.h"
#include "profsum/text.h"

namespace profsum {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// First sentence of a leading /** ... */ or /* ... */ comment, or "".
std::string doc_first_sentence(std::string_view code) {
  std::string_view s = trim(code);
  if (!s.starts_with("/*")) return "";
  size_t end = s.find("*/", 2);
  if (end == std::string_view::npos) return "";
  std::string_view body = s.substr(2, end - 2);
  std::string text;
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t nl = body.find('\n', pos);
    std::string_view line = body.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    line = trim(line);
    while (!line.empty() && line.front() == '*') line.remove_prefix(1);
    line = trim(line);
    if (line.starts_with('@')) break;
    if (!line.empty()) {
      if (!text.empty()) text += ' ';
      text += line;
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '.' && (i + 1 == text.size() || text[i + 1] == ' '))
      return text.substr(0, i + 1);
  }
  return text;
}

}  // namespace

std::vector<std::string> split_identifier(std::string_view name) {
  std::vector<std::string> words;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) words.push_back(to_lower_ascii(cur));
    cur.clear();
  };
  for (size_t i = 0; i < name.size(); ++i) {
    char c = name[i];
    if (!std::isalnum(static_cast<unsigned char>(c))) {
      flush();
      continue;
    }
    if (std::isupper(static_cast<unsigned char>(c)) && !cur.empty()) {
      char prev = cur.back();
      bool next_lower = i + 1 < name.size() &&
                        std::islower(static_cast<unsigned char>(name[i + 1]));
      if (std::islower(static_cast<unsigned char>(prev)) ||
          std::isdigit(static_cast<unsigned char>(prev)) ||
          (std::isupper(static_cast<unsigned char>(prev)) && next_lower))
        flush();
    }
    cur += c;
  }
  flush();
  return words;
}

std::string extractive_summary(std::string_view code) {
  std::string doc = doc_first_sentence(code);
  if (!doc.empty()) return doc;
  std::string masked = java::mask_non_code(code);
  std::vector<std::string> words;
  if (auto named = java::first_named_paren(masked))
    words = split_identifier(
        masked.substr(named->name_begin, named->name_end - named->name_begin));
  if (words.empty()) words = {"code"};
  std::string out = "method:";
  for (const auto& w : words) out += " " + w;
  return out;
}

std::string truncate_tokens(std::string_view text, size_t max_tokens,
                            bool* truncated) {
  size_t end = token_prefix_end(text, max_tokens);
  bool cut = !trim(text.substr(end)).empty();
  if (truncated) *truncated = cut;
  return std::string(cut ? text.substr(0, end) : text);
}

void SummarizerConfig::validate() const {
  if (max_input_tokens == 0 || max_output_tokens == 0)
    throw std::invalid_argument("token limits must be positive");
  if (parallelism == 0) throw std::invalid_argument("parallelism must be >= 1");
  if (timeout.count() <= 0) throw std::invalid_argument("timeout must be > 0");
}

std::string_view ProvenanceName(Provenance p) {
  switch (p) {
    case Provenance::kBackend: return "backend";
    case Provenance::kExtractive: return "extractive";
    case Provenance::kCacheHit: return "cache_hit";
    case Provenance::kUnresolved: return "unresolved";
  }
  return "unresolved";
}

HttpSummaryBackend::HttpSummaryBackend(std::string endpoint,
                                       std::chrono::milliseconds timeout)
    : endpoint_(std::move(endpoint)), timeout_(timeout) {
  std::string_view e = endpoint_;
  while (e.ends_with('/')) e.remove_suffix(1);
  size_t scheme = e.find("://");
  size_t path = e.find('/', scheme == std::string_view::npos ? 0 : scheme + 3);
  scheme_host_port_ = std::string(e.substr(0, path));
  base_path_ = path == std::string_view::npos ? "" : std::string(e.substr(path));
}

std::string HttpSummaryBackend::summarize(const std::string& code) {
  httplib::Client client(scheme_host_port_);
  if (!client.is_valid())
    throw Error(ErrorKind::kBackendUnavailable,
                endpoint_ + ": unsupported endpoint");
  auto secs = std::chrono::duration_cast<std::chrono::seconds>(timeout_);
  auto usecs =
      std::chrono::duration_cast<std::chrono::microseconds>(timeout_ - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_write_timeout(secs.count(), usecs.count());
  nlohmann::json req = {{"language", "java"}, {"code", code}};
  auto res = client.Post(base_path_ + "/summarize",
                         req.dump(-1, ' ', false,
                                  nlohmann::json::error_handler_t::replace),
                         "application/json");
  if (!res)
    throw Error(ErrorKind::kBackendUnavailable,
                endpoint_ + ": " + httplib::to_string(res.error()));
  if (res->status != 200)
    throw Error(ErrorKind::kBackendBadResponse,
                "status " + std::to_string(res->status));
  auto body = nlohmann::json::parse(res->body, nullptr, false);
  if (body.is_discarded() || !body.is_object() || !body.contains("summary") ||
      !body["summary"].is_string())
    throw Error(ErrorKind::kBackendBadResponse, "missing string field summary");
  std::string summary = body["summary"].get<std::string>();
  if (trim(summary).empty())
    throw Error(ErrorKind::kBackendBadResponse, "empty summary");
  return summary;
}

std::unique_ptr<SummaryBackend> make_backend(const SummarizerConfig& config) {
  if (auto* remote = std::get_if<RemoteBackend>(&config.backend))
    return std::make_unique<HttpSummaryBackend>(remote->endpoint, config.timeout);
  return std::make_unique<ExtractiveSummaryBackend>();
}

Summarizer::Summarizer(SummarizerConfig config)
    : Summarizer(config, make_backend(config)) {}

Summarizer::Summarizer(SummarizerConfig config,
                       std::unique_ptr<SummaryBackend> backend)
    : config_(std::move(config)), backend_(std::move(backend)) {
  config_.validate();
}

size_t Summarizer::cache_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.size();
}

SummaryRecord Summarizer::summarize(const std::string& code) {
  return summarize_batch({code}).front();
}

std::vector<SummaryRecord> Summarizer::summarize_batch(
    const std::vector<std::string>& codes) {
  struct Job {
    std::string input;
    uint64_t key = 0;
    bool cached = false;
    bool ok = false;
    std::string summary;
    std::string error;
  };
  std::vector<SummaryRecord> out(codes.size());
  std::vector<Job> jobs;
  std::vector<size_t> job_of(codes.size());
  std::unordered_map<uint64_t, size_t> job_by_key;
  for (size_t i = 0; i < codes.size(); ++i) {
    bool truncated = false;
    std::string input = truncate_tokens(codes[i], config_.max_input_tokens,
                                        &truncated);
    out[i].truncated_input = truncated;
    uint64_t key = Fnv1a(input);
    auto [it, inserted] = job_by_key.try_emplace(key, jobs.size());
    if (inserted) {
      Job job;
      job.input = std::move(input);
      job.key = key;
      jobs.push_back(std::move(job));
    }
    job_of[i] = it->second;
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    for (Job& job : jobs) {
      if (auto it = cache_.find(job.key); it != cache_.end()) {
        job.cached = job.ok = true;
        job.summary = it->second;
      }
    }
  }
  std::vector<size_t> pending;
  for (size_t j = 0; j < jobs.size(); ++j)
    if (!jobs[j].cached) pending.push_back(j);

  const long n = static_cast<long>(pending.size());
  const int threads =
      static_cast<int>(std::max<size_t>(1, std::min(config_.parallelism, pending.size())));
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long p = 0; p < n; ++p) {
    Job& job = jobs[pending[p]];
    try {
      job.summary = truncate_tokens(backend_->summarize(job.input),
                                    config_.max_output_tokens);
      job.ok = true;
    } catch (const std::exception& e) {
      job.error = e.what();
    }
  }

  {
    std::lock_guard<std::mutex> lock(mu_);
    for (size_t j : pending) {
      Job& job = jobs[j];
      if (!job.ok) continue;
      // A concurrent batch may have stored this key first; keep its text.
      auto [it, inserted] = cache_.try_emplace(job.key, job.summary);
      job.summary = it->second;
    }
  }

  std::vector<bool> seen(jobs.size(), false);
  for (size_t i = 0; i < codes.size(); ++i) {
    const Job& job = jobs[job_of[i]];
    SummaryRecord& r = out[i];
    if (!job.ok) {
      r.summary = std::string(kNotFound);
      r.provenance = Provenance::kUnresolved;
      r.error = job.error;
    } else {
      r.summary = job.summary;
      bool repeat = seen[job_of[i]];
      r.provenance = (job.cached || repeat) ? Provenance::kCacheHit
                                            : backend_->provenance();
    }
    seen[job_of[i]] = true;
  }
  return out;
}

std::string code_for_frame(const Frame& frame, const SourceIndex& sources) {
  SourceLocation loc = sources.resolve(frame);
  auto name = parse_java_name(frame.function);
  if (loc.file.extension() == ".java") {
    std::string method = name ? name->method : std::string(frame.simple_name());
    return sources.extract(loc, method).transmission_text();
  }
  return normalize_whitespace(sources.snippet(loc, 10, 10));
}

SummaryTree summarize_call_path(const Cct& tree, const SelectedCallPath& path,
                                const SourceIndex& sources,
                                Summarizer& summarizer) {
  SummaryTree result;
  std::vector<size_t> order = path.ordered();
  result.entries.resize(order.size());
  std::vector<std::string> codes;
  std::vector<size_t> slots;
  for (size_t i = 0; i < order.size(); ++i) {
    const CctNode& node = tree.node(order[i]);
    SummaryRecord& r = result.entries[i];
    r.node_id = node.id;
    r.function = std::string(node.label());
    if (node.frame) r.line = node.frame->line;
    try {
      if (!node.frame) throw Error(ErrorKind::kSourceNotFound, "virtual root");
      codes.push_back(code_for_frame(*node.frame, sources));
      slots.push_back(i);
    } catch (const Error& e) {
      r.summary = std::string(kNotFound);
      r.provenance = Provenance::kUnresolved;
      r.error = e.what();
    }
  }
  std::vector<SummaryRecord> done = summarizer.summarize_batch(codes);
  for (size_t k = 0; k < slots.size(); ++k) {
    SummaryRecord& r = result.entries[slots[k]];
    r.summary = std::move(done[k].summary);
    r.provenance = done[k].provenance;
    r.truncated_input = done[k].truncated_input;
    r.error = std::move(done[k].error);
  }
  return result;
}

}  // namespace profsum
