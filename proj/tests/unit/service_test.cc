#include "doctest.h"

#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "oracles/fixtures.h"
#include "oracles/stub_server.h"
#include "profsum/ingest.h"
#include "profsum/service.h"

using namespace profsum;
using nlohmann::json;

namespace {

SessionConfig four_function_config() {
  SessionConfig c;
  c.profile_path = testing::fixture("four_function/profile.folded").string();
  c.source_roots = {testing::fixture("four_function/src")};
  return c;
}

HttpResponse get(Session& s, std::string path,
                 std::map<std::string, std::string> query = {}) {
  return handle_request(s, {"GET", std::move(path), std::move(query), {}});
}

HttpResponse post(Session& s, std::string path,
                  std::map<std::string, std::string> headers = {}) {
  return handle_request(s, {"POST", std::move(path), {}, std::move(headers)});
}

std::string node_path(const Session& s, size_t idx, std::string_view action,
                      Orientation o = Orientation::kTopDown) {
  return "/api/node/" + format_node_id(s.tree(o).node(idx).id) + "/" +
         std::string(action);
}

size_t foo_index(const Cct& t) {
  return t.node(t.node(t.node(0).children[0]).children[0]).children[0];
}

}  // namespace

TEST_CASE("node ids") {
  CHECK(format_node_id(0x1f) == "000000000000001f");
  CHECK(parse_node_id("000000000000001f") == 0x1fu);
  CHECK(parse_node_id("00000000000000AB") == 0xabu);
  CHECK(parse_node_id("1f") == 0x1fu);
  CHECK_FALSE(parse_node_id("00000000000000001"));
  CHECK_FALSE(parse_node_id(""));
  CHECK_FALSE(parse_node_id("zz00000000000000"));
}

TEST_CASE("session config validation") {
  SessionConfig c = four_function_config();
  c.port = 70000;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.port = 0;
  CHECK_NOTHROW(c.validate());
}

TEST_CASE("meta, tree, flat and hot") {
  auto s = Session::load(four_function_config());
  json meta = json::parse(get(*s, "/api/meta").body);
  CHECK(meta["default_metric"] == "samples");
  CHECK(meta["sample_count"] == 2);
  CHECK(meta["metrics"][0]["name"] == "samples");

  auto tree = get(*s, "/api/tree");
  CHECK(tree.status == 200);
  json t = json::parse(tree.body);
  CHECK(t["value"] == 9);
  CHECK(t["name"] == "VIRTUAL ROOT");
  CHECK(t["children"][0]["name"] == "main");
  CHECK(t["children"][0]["file"] == "Demo.java");
  CHECK(t["children"][0]["line"] == 5);
  CHECK(t["children"][0]["id"].get<std::string>().size() == 16);

  json bu = json::parse(get(*s, "/api/tree", {{"view", "bottomup"}}).body);
  CHECK(bu["children"].size() == 2);
  CHECK(get(*s, "/api/tree", {{"view", "sideways"}}).status == 400);

  json flat = json::parse(get(*s, "/api/flat").body);
  CHECK(flat.is_array());

  json hot = json::parse(get(*s, "/api/hot", {{"k", "1"}}).body);
  REQUIRE(hot.size() == 1);
  CHECK(hot[0]["name"] == "print");
  CHECK(hot[0]["value"] == 5);
  CHECK(get(*s, "/api/hot", {{"k", "x"}}).status == 400);
  CHECK(get(*s, "/api/hot", {{"mode", "both"}}).status == 400);
}

TEST_CASE("errors map to status codes") {
  auto s = Session::load(four_function_config());
  auto bad_metric = get(*s, "/api/tree", {{"metric", "cycles"}});
  CHECK(bad_metric.status == 400);
  CHECK(json::parse(bad_metric.body)["error"] == "UnknownMetric");
  auto unknown = get(*s, "/api/node/00000000deadbeef/callpath");
  CHECK(unknown.status == 404);
  CHECK(json::parse(unknown.body)["error"] == "UnknownNode");
  CHECK(get(*s, "/api/node/xyz/callpath").status == 404);
  CHECK(get(*s, "/api/nothing").status == 404);
  CHECK(post(*s, "/api/meta").status == 404);
}

TEST_CASE("source route") {
  auto s = Session::load(four_function_config());
  auto ok = get(*s, "/api/source", {{"file", "Demo.java"}, {"start", "4"}, {"end", "5"}});
  REQUIRE(ok.status == 200);
  json lines = json::parse(ok.body)["lines"];
  CHECK(lines.size() == 2);
  CHECK(lines[1] == "    moo();");
  auto clamp = get(*s, "/api/source", {{"file", "Demo.java"}, {"start", "22"}, {"end", "99"}});
  CHECK(json::parse(clamp.body)["lines"].size() == 2);
  CHECK(get(*s, "/api/source", {{"file", "../profile.folded"}, {"start", "1"}, {"end", "1"}})
            .status == 403);
  CHECK(get(*s, "/api/source", {{"file", "/etc/passwd"}, {"start", "1"}, {"end", "1"}})
            .status == 403);
  CHECK(get(*s, "/api/source", {{"file", "Nope.java"}, {"start", "1"}, {"end", "1"}})
            .status == 404);
  CHECK(get(*s, "/api/source", {{"file", "Demo.java"}, {"start", "0"}, {"end", "1"}})
            .status == 400);
  CHECK(get(*s, "/api/source", {{"start", "1"}, {"end", "1"}}).status == 400);
}

TEST_CASE("call path and summaries") {
  auto s = Session::load(four_function_config());
  size_t foo = foo_index(s->tree(Orientation::kTopDown));
  auto cp = get(*s, node_path(*s, foo, "callpath"));
  REQUIRE(cp.status == 200);
  json j = json::parse(cp.body);
  CHECK(j["parents"].size() == 2);
  CHECK(j["current"]["name"] == "foo");
  CHECK(j["children"].size() == 2);
  CHECK(j["current"]["value"] == 9);

  auto first = post(*s, node_path(*s, foo, "summaries"));
  REQUIRE(first.status == 200);
  json e = json::parse(first.body)["entries"];
  REQUIRE(e.size() == 5);
  CHECK(e[0]["function"] == "main");
  CHECK(e[2]["summary"] == "method: foo");
  CHECK(e[2]["provenance"] == "extractive");
  CHECK(get(*s, node_path(*s, foo, "callpath")).body == cp.body);
  CHECK(handle_request(*s, {"GET", node_path(*s, foo, "summaries"), {}, {}}).status == 404);
}

TEST_CASE("endpoint header is checked against the allowlist") {
  testing::StubBackend stub("stub summary text");
  SessionConfig c = four_function_config();
  c.allowed_endpoints = {stub.endpoint()};
  auto s = Session::load(c);
  std::string route = node_path(*s, foo_index(s->tree(Orientation::kTopDown)), "summaries");

  auto denied = post(*s, route, {{"X-Summarizer-Endpoint", "http://evil.example:1"}});
  CHECK(denied.status == 403);
  CHECK(json::parse(denied.body)["error"] == "Forbidden");
  CHECK(stub.requests() == 0);

  auto allowed = post(*s, route, {{"x-summarizer-endpoint", stub.endpoint()}});
  REQUIRE(allowed.status == 200);
  json e = json::parse(allowed.body)["entries"];
  CHECK(e[0]["summary"] == "stub summary text");
  CHECK(e[0]["provenance"] == "backend");
  CHECK(e[4]["provenance"] == "cache_hit");
  CHECK(stub.requests() == 4);

  auto plain = json::parse(post(*s, route).body)["entries"];
  CHECK(plain[0]["provenance"] == "extractive");
}

TEST_CASE("remote outage yields NOT FOUND entries with 200") {
  SessionConfig c = four_function_config();
  c.summarizer.backend =
      RemoteBackend{"http://127.0.0.1:" + std::to_string(testing::closed_port())};
  c.summarizer.timeout = std::chrono::milliseconds(500);
  auto s = Session::load(c);
  auto r = post(*s, node_path(*s, foo_index(s->tree(Orientation::kTopDown)), "summaries"));
  CHECK(r.status == 200);
  for (auto& e : json::parse(r.body)["entries"]) {
    CHECK(e["summary"] == "NOT FOUND");
    CHECK(e["provenance"] == "unresolved");
    CHECK(e.contains("error"));
  }
}

TEST_CASE("server on an ephemeral port") {
  testing::StubBackend stub("over the wire");
  SessionConfig c = four_function_config();
  c.allowed_endpoints = {stub.endpoint()};
  auto s = Session::load(c);
  Server server(*s);
  int port = server.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread t([&] { server.listen(); });
  httplib::Client client("127.0.0.1", port);
  auto meta = client.Get("/api/meta");
  REQUIRE(meta);
  CHECK(meta->status == 200);
  CHECK(meta->body == get(*s, "/api/meta").body);
  auto tree = client.Get("/api/tree?view=bottomup");
  REQUIRE(tree);
  CHECK(tree->body == get(*s, "/api/tree", {{"view", "bottomup"}}).body);
  std::string route = node_path(*s, foo_index(s->tree(Orientation::kTopDown)), "summaries");
  auto sum = client.Post(route, httplib::Headers{{"X-Summarizer-Endpoint", stub.endpoint()}},
                         "", "application/json");
  REQUIRE(sum);
  CHECK(sum->status == 200);
  CHECK(json::parse(sum->body)["entries"][1]["summary"] == "over the wire");
  auto forbidden = client.Post(route, httplib::Headers{{"X-Summarizer-Endpoint", "http://x"}},
                               "", "application/json");
  REQUIRE(forbidden);
  CHECK(forbidden->status == 403);
  server.stop();
  t.join();
}
