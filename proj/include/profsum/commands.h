#ifndef PROFSUM_COMMANDS_H_
#define PROFSUM_COMMANDS_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "profsum/cct.h"
#include "profsum/ingest.h"
#include "profsum/service.h"
#include "profsum/summarize.h"

namespace profsum {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // parse errors, unknown node, I/O
inline constexpr int kExitUsage = 2;    // bad flags, unknown metric

struct InputOptions {
  std::string input;
  ProfileFormat format = ProfileFormat::kAuto;
  std::optional<std::string> metric;
};

enum class FlameView { kTopDown, kBottomUp, kFlat };

int cmd_flame(const InputOptions& in, FlameView view, std::ostream& out,
              std::ostream& err);

int cmd_hot(const InputOptions& in, size_t k, RankMode mode,
            std::ostream& out, std::ostream& err);

struct SelectOptions {
  InputOptions in;
  // 16-digit hex node id, or a ';'-separated frame path from the root whose
  // segments use folded frame syntax (bare names match any file/line).
  std::string node;
  Orientation view = Orientation::kTopDown;
  bool summaries = false;
  std::vector<std::filesystem::path> source_roots;
  AppPredicate app_prefixes;
  SummarizerConfig summarizer;
};

// Lookup for SelectOptions::node. Throws Error{kUnknownNode}.
size_t find_node(const Cct& tree, std::string_view query);

int cmd_select(const SelectOptions& options, std::ostream& out,
               std::ostream& err);

// Kept pairs as JSONL on |out|, or into |output| when given (then the drop
// statistics go to |out| as JSON; otherwise to |err|).
int cmd_clean(const std::string& input, const std::optional<std::string>& output,
              std::ostream& out, std::ostream& err);

// Line-aligned candidate and reference files.
int cmd_bleu(const std::string& candidates, const std::string& references,
             std::ostream& out, std::ostream& err);

int cmd_serve(const SessionConfig& config, std::ostream& out,
              std::ostream& err);

}  // namespace profsum

#endif  // PROFSUM_COMMANDS_H_
