#ifndef PROFSUM_SERVICE_H_
#define PROFSUM_SERVICE_H_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "profsum/cct.h"
#include "profsum/ingest.h"
#include "profsum/profile.h"
#include "profsum/source_map.h"
#include "profsum/summarize.h"

namespace profsum {

inline constexpr std::string_view kEndpointHeader = "X-Summarizer-Endpoint";

struct SessionConfig {
  std::string profile_path;
  ProfileFormat format = ProfileFormat::kAuto;
  std::vector<std::filesystem::path> source_roots;
  AppPredicate app_prefixes;
  SummarizerConfig summarizer;
  int port = 8080;
  std::string host = "127.0.0.1";
  // Values accepted in the X-Summarizer-Endpoint request header.
  std::vector<std::string> allowed_endpoints;

  // Throws std::invalid_argument.
  void validate() const;
};

// Loaded profile plus both tree orientations, built once. Everything but the
// summarizers and the source cache is immutable after construction, and
// those two synchronize internally.
class Session {
 public:
  Session(Profile profile, SessionConfig config);
  static std::unique_ptr<Session> load(const SessionConfig& config);

  const Profile& profile() const { return profile_; }
  const SessionConfig& config() const { return config_; }
  const Cct& tree(Orientation o) const {
    return o == Orientation::kTopDown ? top_down_ : bottom_up_;
  }
  const std::vector<FlatRow>& flat() const { return flat_; }
  const SourceIndex& sources() const { return sources_; }

  // The configured summarizer, or the one for an allowlisted override
  // endpoint. nullptr when |endpoint| is not allowlisted.
  Summarizer* summarizer_for(std::optional<std::string_view> endpoint);

 private:
  Profile profile_;
  SessionConfig config_;
  Cct top_down_;
  Cct bottom_up_;
  std::vector<FlatRow> flat_;
  SourceIndex sources_;
  Summarizer summarizer_;
  std::mutex mu_;
  std::map<std::string, std::unique_ptr<Summarizer>, std::less<>> overrides_;
};

// Metric index by name; nullopt picks the profile default. Throws
// Error{kUnknownMetric}.
size_t resolve_metric(const Profile& profile,
                      const std::optional<std::string>& name);

std::string format_node_id(uint64_t id);
std::optional<uint64_t> parse_node_id(std::string_view hex);

nlohmann::json meta_json(const Profile& profile);
nlohmann::json node_json(const Cct& tree, size_t index, size_t metric,
                         bool recursive);
nlohmann::json flat_json(const std::vector<FlatRow>& rows, size_t metric);
nlohmann::json callpath_json(const Cct& tree, const SelectedCallPath& path,
                             size_t metric);
nlohmann::json summaries_json(const SummaryTree& tree);
nlohmann::json hot_json(const Cct& tree, const std::vector<HotEntry>& rows,
                        size_t metric);

// Compact, key-sorted serialization; invalid UTF-8 is replaced.
std::string dump_json(const nlohmann::json& j);

struct HttpRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::map<std::string, std::string> headers;  // lookup is case-insensitive
};

struct HttpResponse {
  int status = 200;
  std::string body;
};

// Routes one API request. Every response body is JSON; failures are
// {"error": kind, "detail": text}.
HttpResponse handle_request(Session& session, const HttpRequest& request);

// Binds the API on config.host:config.port and blocks.
class Server {
 public:
  explicit Server(Session& session);
  ~Server();

  // Port actually bound (useful with port 0). Throws Error{kIo}.
  int bind(const std::string& host, int port);
  void listen();  // blocks until stop()
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace profsum

#endif  // PROFSUM_SERVICE_H_
