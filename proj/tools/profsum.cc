#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "profsum/commands.h"

using namespace profsum;

namespace {

const std::map<std::string, ProfileFormat> kFormats = {
    {"auto", ProfileFormat::kAuto},
    {"pprof", ProfileFormat::kPprof},
    {"folded", ProfileFormat::kFolded}};

struct SummarizerFlags {
  std::string backend_url;
  bool offline = false;
  size_t parallelism = 4;
  int timeout_ms = 10000;

  SummarizerConfig config() const {
    SummarizerConfig c;
    if (!backend_url.empty() && !offline) c.backend = RemoteBackend{backend_url};
    c.parallelism = parallelism;
    c.timeout = std::chrono::milliseconds(timeout_ms);
    return c;
  }
};

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.input, "Profile file (pprof or folded)")
      ->required();
  cmd->add_option("--format", in.format, "Input format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  cmd->add_option("--metric", in.metric, "Metric name");
}

void add_summarizer(CLI::App* cmd, SummarizerFlags& s) {
  cmd->add_option("--backend-url", s.backend_url,
                  "Summarizer service, e.g. http://host:port");
  cmd->add_flag("--offline", s.offline, "Use the extractive summarizer");
  cmd->add_option("--parallelism", s.parallelism,
                  "Concurrent summarizer requests")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--timeout", s.timeout_ms, "Backend timeout in ms")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Profile viewer with call-path code summaries"};
  app.require_subcommand(1);

  InputOptions flame_in;
  std::string flame_view = "topdown";
  auto* flame = app.add_subcommand("flame", "Tree or flat view as JSON");
  add_input(flame, flame_in);
  flame->add_option("--view", flame_view)
      ->check(CLI::IsMember({"topdown", "bottomup", "flat"}));

  InputOptions hot_in;
  size_t hot_k = 10;
  std::string hot_mode = "exclusive";
  auto* hot = app.add_subcommand("hot", "Hottest calling contexts");
  add_input(hot, hot_in);
  hot->add_option("-k", hot_k, "Rows to print")->check(CLI::PositiveNumber);
  hot->add_option("--mode", hot_mode)
      ->check(CLI::IsMember({"inclusive", "exclusive"}));

  SelectOptions sel;
  SummarizerFlags sel_sum;
  std::string sel_view = "topdown";
  std::vector<std::string> sel_roots;
  auto* select = app.add_subcommand("select", "Selected call path of one node");
  add_input(select, sel.in);
  select->add_option("--node", sel.node, "Node id (hex) or frame;frame;...")
      ->required();
  select->add_option("--view", sel_view)
      ->check(CLI::IsMember({"topdown", "bottomup"}));
  select->add_flag("--summaries", sel.summaries, "Summarize every entry");
  select->add_option("--source-root", sel_roots, "Source root (repeatable)");
  select->add_option("--app-prefix", sel.app_prefixes,
                     "Application package prefix (repeatable)");
  add_summarizer(select, sel_sum);

  std::string clean_in;
  std::optional<std::string> clean_out;
  auto* clean = app.add_subcommand("clean", "Filter a code/comment JSONL corpus");
  clean->add_option("input", clean_in)->required();
  clean->add_option("--output", clean_out, "Write kept pairs here");

  std::string bleu_cand, bleu_ref;
  auto* bleu = app.add_subcommand("bleu", "Smoothed BLEU of line-aligned files");
  bleu->add_option("candidates", bleu_cand)->required();
  bleu->add_option("references", bleu_ref)->required();

  SessionConfig serve_cfg;
  SummarizerFlags serve_sum;
  std::vector<std::string> serve_roots;
  auto* serve = app.add_subcommand("serve", "HTTP API for the viewer");
  serve->add_option("input", serve_cfg.profile_path)->required();
  serve->add_option("--format", serve_cfg.format)
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  serve->add_option("--source-root", serve_roots, "Source root (repeatable)");
  serve->add_option("--app-prefix", serve_cfg.app_prefixes,
                    "Application package prefix (repeatable)");
  serve->add_option("--port", serve_cfg.port)->check(CLI::Range(0, 65535));
  serve->add_option("--host", serve_cfg.host);
  serve->add_option("--allow-endpoint", serve_cfg.allowed_endpoints,
                    "Endpoint accepted in X-Summarizer-Endpoint (repeatable)");
  add_summarizer(serve, serve_sum);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*flame) {
    FlameView v = flame_view == "flat"       ? FlameView::kFlat
                  : flame_view == "bottomup" ? FlameView::kBottomUp
                                             : FlameView::kTopDown;
    return cmd_flame(flame_in, v, std::cout, std::cerr);
  }
  if (*hot) {
    RankMode m = hot_mode == "inclusive" ? RankMode::kInclusive
                                         : RankMode::kExclusive;
    return cmd_hot(hot_in, hot_k, m, std::cout, std::cerr);
  }
  if (*select) {
    sel.view = sel_view == "bottomup" ? Orientation::kBottomUp
                                      : Orientation::kTopDown;
    sel.source_roots.assign(sel_roots.begin(), sel_roots.end());
    sel.summarizer = sel_sum.config();
    return cmd_select(sel, std::cout, std::cerr);
  }
  if (*clean) return cmd_clean(clean_in, clean_out, std::cout, std::cerr);
  if (*bleu) return cmd_bleu(bleu_cand, bleu_ref, std::cout, std::cerr);
  serve_cfg.source_roots.assign(serve_roots.begin(), serve_roots.end());
  serve_cfg.summarizer = serve_sum.config();
  return cmd_serve(serve_cfg, std::cout, std::cerr);
}
