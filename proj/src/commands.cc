#include "profsum/commands.h"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "profsum/bleu.h"
#include "profsum/clean.h"
#include "profsum/error.h"

namespace profsum {

namespace {

int report(const Error& e, std::ostream& err) {
  err << "profsum: " << e.what() << "\n";
  switch (e.kind()) {
    case ErrorKind::kUnknownMetric: return kExitUsage;
    default: return kExitFailure;
  }
}

// Runs |body|, mapping library errors onto exit codes.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return report(e, err);
  } catch (const std::invalid_argument& e) {
    err << "profsum: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "profsum: " << e.what() << "\n";
    return kExitFailure;
  }
}

std::string frame_location(const CctNode& n) {
  std::string s = n.frame && n.frame->file ? *n.frame->file : "?";
  s += ':';
  s += n.frame && n.frame->line ? std::to_string(*n.frame->line) : "?";
  return s;
}

std::string line_label(const CctNode& n) {
  std::string s(n.label());
  if (n.frame && n.frame->line) s += ":L" + std::to_string(*n.frame->line);
  return s;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::string text = read_file(path);
  std::vector<std::string> lines;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    std::string line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    pos = nl + 1;
  }
  return lines;
}

}  // namespace

int cmd_flame(const InputOptions& in, FlameView view, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    auto [profile, report] = load_profile(in.input, in.format);
    size_t m = resolve_metric(profile, in.metric);
    nlohmann::json j;
    switch (view) {
      case FlameView::kTopDown:
        j = node_json(build_top_down(profile), 0, m, true);
        break;
      case FlameView::kBottomUp:
        j = node_json(build_bottom_up(profile), 0, m, true);
        break;
      case FlameView::kFlat:
        j = flat_json(build_flat(profile), m);
        break;
    }
    out << dump_json(j) << "\n";
    return kExitOk;
  });
}

int cmd_hot(const InputOptions& in, size_t k, RankMode mode, std::ostream& out,
            std::ostream& err) {
  return guarded(err, [&] {
    auto [profile, report] = load_profile(in.input, in.format);
    size_t m = resolve_metric(profile, in.metric);
    Cct tree = build_top_down(profile);
    const uint64_t total = tree.root().inclusive[m];
    size_t rank = 0;
    for (const HotEntry& h : rank_hot(tree, m, k, mode)) {
      char pct[32];
      std::snprintf(pct, sizeof(pct), "%.2f%%",
                    total ? 100.0 * static_cast<double>(h.value) / total : 0.0);
      out << ++rank << '\t' << h.value << '\t' << pct << '\t' << h.function
          << '\t' << frame_location(tree.node(h.index)) << "\n";
    }
    return kExitOk;
  });
}

size_t find_node(const Cct& tree, std::string_view query) {
  if (query.size() == 16 && query.find(';') == std::string_view::npos)
    if (auto id = parse_node_id(query))
      if (auto idx = tree.find(*id); idx && *idx != 0) return *idx;
  size_t cur = 0;
  size_t pos = 0;
  bool any = false;
  while (pos <= query.size()) {
    size_t semi = query.find(';', pos);
    if (semi == std::string_view::npos) semi = query.size();
    std::string_view token = query.substr(pos, semi - pos);
    pos = semi + 1;
    auto frame = parse_folded_frame(token);
    if (!frame) throw Error(ErrorKind::kUnknownNode, std::string(query));
    bool exact = frame->file || frame->line;
    std::optional<size_t> next;
    for (size_t c : tree.node(cur).children) {
      const Frame& f = *tree.node(c).frame;
      if (exact ? f == *frame : f.function == frame->function) {
        next = c;
        break;
      }
    }
    if (!next) throw Error(ErrorKind::kUnknownNode, std::string(query));
    cur = *next;
    any = true;
  }
  if (!any) throw Error(ErrorKind::kUnknownNode, std::string(query));
  return cur;
}

int cmd_select(const SelectOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    o.summarizer.validate();
    auto [profile, report] = load_profile(o.in.input, o.in.format);
    Cct tree = build_cct(profile, o.view);
    size_t idx = find_node(tree, o.node);
    SelectedCallPath path =
        select_call_path(tree, tree.node(idx).id, o.app_prefixes);
    std::vector<std::string> summaries;
    if (o.summaries) {
      SourceIndex sources(o.source_roots);
      Summarizer summarizer(o.summarizer);
      for (auto& e : summarize_call_path(tree, path, sources, summarizer).entries)
        summaries.push_back(std::move(e.summary));
    }
    size_t row = 0;
    auto emit = [&](size_t node, std::string_view prefix) {
      out << prefix << line_label(tree.node(node));
      if (o.summaries) out << " — " << summaries[row];
      out << "\n";
      ++row;
    };
    for (size_t p : path.parents) emit(p, "");
    emit(path.current, "> ");
    for (size_t c : path.children) emit(c, "    ");
    return kExitOk;
  });
}

int cmd_clean(const std::string& input, const std::optional<std::string>& output,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    CleanResult r = clean_jsonl(read_file(input));
    nlohmann::json stats = {{"input", r.stats.input},
                            {"kept", r.stats.kept},
                            {"malformed", r.stats.malformed},
                            {"params_missing_from_doc",
                             r.stats.params_missing_from_doc},
                            {"params_extra_in_doc", r.stats.params_extra_in_doc}};
    for (size_t i = 0; i < kCleanRuleCount; ++i)
      stats["dropped"][std::string(CleanRuleName(static_cast<CleanRule>(i)))] =
          r.stats.dropped[i];
    std::string kept = to_jsonl(r.kept);
    if (output) {
      std::ofstream f(*output, std::ios::binary);
      f << kept;
      if (!f) throw Error(ErrorKind::kIo, "cannot write " + *output);
      out << dump_json(stats) << "\n";
    } else {
      out << kept;
      err << dump_json(stats) << "\n";
    }
    return kExitOk;
  });
}

int cmd_bleu(const std::string& candidates, const std::string& references,
             std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto cand = read_lines(candidates);
    auto ref = read_lines(references);
    if (cand.size() != ref.size())
      throw Error(ErrorKind::kIo, "candidate and reference line counts differ");
    std::vector<BleuPair> pairs;
    for (size_t i = 0; i < cand.size(); ++i)
      pairs.emplace_back(bleu_tokens(cand[i]), bleu_tokens(ref[i]));
    double score = corpus_bleu(pairs);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", score);
    out << "BLEU " << buf << " over " << pairs.size() << " pairs\n";
    return kExitOk;
  });
}

int cmd_serve(const SessionConfig& config, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    auto session = Session::load(config);
    Server server(*session);
    int port = server.bind(config.host, config.port);
    out << "profsum: serving http://" << config.host << ":" << port << "\n"
        << std::flush;
    server.listen();
    return kExitOk;
  });
}

}  // namespace profsum
