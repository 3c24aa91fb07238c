#include "profsum/service.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <stdexcept>

#include "httplib.h"

#include "profsum/error.h"

namespace profsum {

using nlohmann::json;

void SessionConfig::validate() const {
  if (port < 0 || port > 65535)
    throw std::invalid_argument("port must be in [0, 65535], 0 = any free port");
  summarizer.validate();
}

Session::Session(Profile profile, SessionConfig config)
    : profile_(std::move(profile)),
      config_(std::move(config)),
      top_down_(build_top_down(profile_)),
      bottom_up_(build_bottom_up(profile_)),
      flat_(build_flat(profile_)),
      sources_(config_.source_roots),
      summarizer_(config_.summarizer) {
  config_.validate();
}

std::unique_ptr<Session> Session::load(const SessionConfig& config) {
  config.validate();
  auto [profile, report] = load_profile(config.profile_path, config.format);
  return std::make_unique<Session>(std::move(profile), config);
}

Summarizer* Session::summarizer_for(std::optional<std::string_view> endpoint) {
  if (!endpoint || endpoint->empty()) return &summarizer_;
  const auto& allowed = config_.allowed_endpoints;
  if (std::find(allowed.begin(), allowed.end(), *endpoint) == allowed.end())
    return nullptr;
  std::lock_guard<std::mutex> lock(mu_);
  auto it = overrides_.find(*endpoint);
  if (it == overrides_.end()) {
    SummarizerConfig c = config_.summarizer;
    c.backend = RemoteBackend{std::string(*endpoint)};
    it = overrides_
             .emplace(std::string(*endpoint),
                      std::make_unique<Summarizer>(std::move(c)))
             .first;
  }
  return it->second.get();
}

size_t resolve_metric(const Profile& profile,
                      const std::optional<std::string>& name) {
  if (!name) return profile.default_metric();
  if (auto m = profile.find_metric(*name)) return *m;
  throw Error(ErrorKind::kUnknownMetric, "no metric named '" + *name + "'");
}

std::string format_node_id(uint64_t id) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, id);
  return buf;
}

std::optional<uint64_t> parse_node_id(std::string_view hex) {
  if (hex.empty() || hex.size() > 16) return std::nullopt;
  uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), v, 16);
  if (ec != std::errc() || ptr != hex.data() + hex.size()) return std::nullopt;
  return v;
}

namespace {

json frame_fields(const CctNode& n) {
  json j;
  j["name"] = std::string(n.label());
  j["file"] = n.frame && n.frame->file ? json(*n.frame->file) : json(nullptr);
  j["line"] = n.frame && n.frame->line ? json(*n.frame->line) : json(nullptr);
  return j;
}

}  // namespace

json meta_json(const Profile& profile) {
  json metrics = json::array();
  for (const auto& d : profile.descriptors())
    metrics.push_back({{"name", d.name}, {"unit", d.unit}});
  return {{"metrics", metrics},
          {"default_metric",
           profile.descriptors()[profile.default_metric()].name},
          {"sample_count", profile.samples().size()}};
}

json node_json(const Cct& tree, size_t index, size_t metric, bool recursive) {
  const CctNode& n = tree.node(index);
  json j = frame_fields(n);
  j["id"] = format_node_id(n.id);
  j["value"] = n.inclusive[metric];
  j["self"] = n.exclusive[metric];
  j["children"] = json::array();
  if (recursive)
    for (size_t c : n.children)
      j["children"].push_back(node_json(tree, c, metric, true));
  return j;
}

json flat_json(const std::vector<FlatRow>& rows, size_t metric) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"function", r.function},
                   {"module", r.module},
                   {"file", r.file ? json(*r.file) : json(nullptr)},
                   {"exclusive", r.exclusive[metric]},
                   {"inclusive", r.inclusive[metric]}});
  return out;
}

json callpath_json(const Cct& tree, const SelectedCallPath& path,
                   size_t metric) {
  json parents = json::array(), children = json::array();
  for (size_t i : path.parents) parents.push_back(node_json(tree, i, metric, false));
  for (size_t i : path.children)
    children.push_back(node_json(tree, i, metric, false));
  return {{"parents", parents},
          {"current", node_json(tree, path.current, metric, false)},
          {"children", children}};
}

json summaries_json(const SummaryTree& tree) {
  json entries = json::array();
  for (const auto& e : tree.entries) {
    json j = {{"node_id", format_node_id(e.node_id)},
              {"function", e.function},
              {"line", e.line ? json(*e.line) : json(nullptr)},
              {"summary", e.summary},
              {"provenance", std::string(ProvenanceName(e.provenance))},
              {"truncated_input", e.truncated_input}};
    if (!e.error.empty()) j["error"] = e.error;
    entries.push_back(std::move(j));
  }
  return {{"entries", entries}};
}

json hot_json(const Cct& tree, const std::vector<HotEntry>& rows,
              size_t metric) {
  const uint64_t total = tree.root().inclusive[metric];
  json out = json::array();
  size_t rank = 0;
  for (const auto& r : rows) {
    json j = frame_fields(tree.node(r.index));
    j["rank"] = ++rank;
    j["node_id"] = format_node_id(r.node_id);
    j["value"] = r.value;
    j["percent"] = total ? 100.0 * static_cast<double>(r.value) / total : 0.0;
    out.push_back(std::move(j));
  }
  return out;
}

std::string dump_json(const json& j) {
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

namespace {

struct HttpError {
  int status;
  std::string error;
  std::string detail;
};

HttpResponse error_response(int status, std::string_view error,
                            std::string_view detail) {
  return {status, dump_json({{"error", error}, {"detail", detail}})};
}

int status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUnknownNode:
    case ErrorKind::kSourceNotFound:
    case ErrorKind::kDeclarationNotFound:
      return 404;
    case ErrorKind::kUnknownMetric:
      return 400;
    default:
      return 500;
  }
}

std::optional<std::string> param(const HttpRequest& r, const std::string& key) {
  auto it = r.query.find(key);
  if (it == r.query.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> header(const HttpRequest& r, std::string_view key) {
  for (const auto& [k, v] : r.headers) {
    if (k.size() == key.size() &&
        std::equal(k.begin(), k.end(), key.begin(), [](char a, char b) {
          return std::tolower(static_cast<unsigned char>(a)) ==
                 std::tolower(static_cast<unsigned char>(b));
        }))
      return v;
  }
  return std::nullopt;
}

Orientation view_param(const HttpRequest& r) {
  auto v = param(r, "view").value_or("topdown");
  if (v == "topdown") return Orientation::kTopDown;
  if (v == "bottomup") return Orientation::kBottomUp;
  throw HttpError{400, "BadRequest", "view must be topdown or bottomup"};
}

size_t number_param(const HttpRequest& r, const std::string& key,
                    std::optional<size_t> fallback) {
  auto v = param(r, key);
  if (!v) {
    if (fallback) return *fallback;
    throw HttpError{400, "BadRequest", "missing parameter " + key};
  }
  size_t out = 0;
  auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
  if (ec != std::errc() || ptr != v->data() + v->size())
    throw HttpError{400, "BadRequest", "parameter " + key + " is not a count"};
  return out;
}

// "/api/node/<id>/<action>" -> (id text, action)
std::optional<std::pair<std::string, std::string>> split_node_route(
    std::string_view path) {
  constexpr std::string_view kPrefix = "/api/node/";
  if (!path.starts_with(kPrefix)) return std::nullopt;
  path.remove_prefix(kPrefix.size());
  size_t slash = path.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  return std::pair{std::string(path.substr(0, slash)),
                   std::string(path.substr(slash + 1))};
}

SelectedCallPath route_call_path(const Session& s, const Cct& tree,
                                 const std::string& id_text) {
  auto id = parse_node_id(id_text);
  if (!id) throw HttpError{404, "UnknownNode", "node " + id_text};
  return select_call_path(tree, *id, s.config().app_prefixes);
}

HttpResponse route_source(const Session& s, const HttpRequest& r) {
  auto file = param(r, "file");
  if (!file || file->empty())
    throw HttpError{400, "BadRequest", "missing parameter file"};
  size_t start = number_param(r, "start", std::nullopt);
  size_t end = number_param(r, "end", std::nullopt);
  if (start == 0 || end < start)
    throw HttpError{400, "BadRequest", "need 1 <= start <= end"};
  auto path = s.sources().confine(*file);
  if (!path) throw HttpError{403, "Forbidden", "path outside source roots"};
  if (path->empty()) throw HttpError{404, "SourceNotFound", *file};
  auto text = s.sources().load(*path);
  json lines = json::array();
  for (size_t i = start; i <= std::min(end, text->line_count()); ++i)
    lines.push_back(std::string(text->line(i)));
  return {200, dump_json({{"lines", lines}})};
}

HttpResponse route(Session& s, const HttpRequest& r) {
  const Profile& p = s.profile();
  const bool get = r.method == "GET";
  if (get && r.path == "/api/meta") return {200, dump_json(meta_json(p))};
  if (get && r.path == "/api/tree") {
    const Cct& tree = s.tree(view_param(r));
    size_t m = resolve_metric(p, param(r, "metric"));
    return {200, dump_json(node_json(tree, 0, m, true))};
  }
  if (get && r.path == "/api/flat") {
    size_t m = resolve_metric(p, param(r, "metric"));
    return {200, dump_json(flat_json(s.flat(), m))};
  }
  if (get && r.path == "/api/source") return route_source(s, r);
  if (get && r.path == "/api/hot") {
    size_t m = resolve_metric(p, param(r, "metric"));
    size_t k = number_param(r, "k", 10);
    auto mode_text = param(r, "mode").value_or("exclusive");
    RankMode mode;
    if (mode_text == "exclusive") mode = RankMode::kExclusive;
    else if (mode_text == "inclusive") mode = RankMode::kInclusive;
    else throw HttpError{400, "BadRequest", "mode must be inclusive or exclusive"};
    const Cct& tree = s.tree(Orientation::kTopDown);
    return {200, dump_json(hot_json(tree, rank_hot(tree, m, k, mode), m))};
  }
  if (auto node = split_node_route(r.path)) {
    const auto& [id_text, action] = *node;
    if (get && action == "callpath") {
      const Cct& tree = s.tree(view_param(r));
      size_t m = resolve_metric(p, param(r, "metric"));
      auto path = route_call_path(s, tree, id_text);
      return {200, dump_json(callpath_json(tree, path, m))};
    }
    if (r.method == "POST" && action == "summaries") {
      const Cct& tree = s.tree(view_param(r));
      auto path = route_call_path(s, tree, id_text);
      Summarizer* summarizer = s.summarizer_for(header(r, kEndpointHeader));
      if (!summarizer)
        throw HttpError{403, "Forbidden", "summarizer endpoint not allowed"};
      SummaryTree st = summarize_call_path(tree, path, s.sources(), *summarizer);
      return {200, dump_json(summaries_json(st))};
    }
  }
  throw HttpError{404, "NotFound", r.method + " " + r.path};
}

}  // namespace

HttpResponse handle_request(Session& session, const HttpRequest& request) {
  try {
    return route(session, request);
  } catch (const HttpError& e) {
    return error_response(e.status, e.error, e.detail);
  } catch (const Error& e) {
    return error_response(status_for(e.kind()), ErrorKindName(e.kind()),
                          e.detail());
  } catch (const std::exception& e) {
    return error_response(500, "Internal", e.what());
  }
}

struct Server::Impl {
  explicit Impl(Session& s) : session(s) {}
  Session& session;
  httplib::Server server;
};

Server::Server(Session& session)
    : impl_(std::make_unique<Impl>(session)) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    HttpRequest r;
    r.method = req.method;
    r.path = req.path;
    for (const auto& [k, v] : req.params) r.query.emplace(k, v);
    for (const auto& [k, v] : req.headers) r.headers.emplace(k, v);
    HttpResponse out = handle_request(impl_->session, r);
    res.status = out.status;
    res.set_content(out.body, "application/json; charset=utf-8");
  };
  impl_->server.Get(R"(/api/.*)", handler);
  impl_->server.Post(R"(/api/.*)", handler);
}

Server::~Server() = default;

int Server::bind(const std::string& host, int port) {
  int bound = port == 0 ? impl_->server.bind_to_any_port(host)
                        : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound <= 0)
    throw Error(ErrorKind::kIo,
                "cannot bind " + host + ":" + std::to_string(port));
  return bound;
}

void Server::listen() { impl_->server.listen_after_bind(); }

void Server::stop() { impl_->server.stop(); }

}  // namespace profsum
