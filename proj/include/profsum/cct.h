#ifndef PROFSUM_CCT_H_
#define PROFSUM_CCT_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "profsum/profile.h"

namespace profsum {

inline constexpr std::string_view kVirtualRootLabel = "VIRTUAL ROOT";

enum class Orientation { kTopDown, kBottomUp };

// Node ids are FNV-1a 64 over the root-to-node frame sequence; the virtual
// root hashes the empty string. Each frame contributes
//   0x1f function 0x00 file 0x00 decimal-line
// with absent file/line contributing nothing between the separators.
uint64_t extend_node_id(uint64_t parent_id, const Frame& frame);

struct CctNode {
  uint64_t id = 0;
  const Frame* frame = nullptr;  // owned by the tree; null for the virtual root
  std::vector<uint64_t> inclusive;
  std::vector<uint64_t> exclusive;
  std::optional<size_t> parent;  // index into Cct::nodes()
  std::vector<size_t> children;  // sorted, see Cct
  size_t depth = 0;              // virtual root is 0

  std::string_view label() const {
    return frame ? std::string_view(frame->function) : kVirtualRootLabel;
  }
};

// Calling context tree. Children of every node are ordered by descending
// inclusive[default_metric], ties broken by ascending frame triple.
class Cct {
 public:
  const CctNode& root() const { return nodes_[0]; }
  const std::vector<CctNode>& nodes() const { return nodes_; }
  const CctNode& node(size_t index) const { return nodes_[index]; }
  Orientation orientation() const { return orientation_; }
  const std::vector<MetricDescriptor>& descriptors() const {
    return descriptors_;
  }
  size_t default_metric() const { return default_metric_; }

  std::optional<size_t> find(uint64_t id) const;
  // Node indices from the virtual root (inclusive) down to |index|.
  std::vector<size_t> path_to(size_t index) const;

 private:
  friend Cct build_cct(const Profile&, Orientation);

  std::vector<CctNode> nodes_;
  // Frame of node k + 1 at index k; shared between copies.
  std::shared_ptr<const std::vector<Frame>> frames_;
  std::vector<std::pair<uint64_t, size_t>> by_id_;  // sorted by id
  Orientation orientation_ = Orientation::kTopDown;
  std::vector<MetricDescriptor> descriptors_;
  size_t default_metric_ = 0;
};

Cct build_cct(const Profile& profile, Orientation orientation);
Cct build_top_down(const Profile& profile);
// Trie over reversed stacks: the leaf becomes the first level.
Cct build_bottom_up(const Profile& profile);

// Per-function self weight as the view displays it. Top-down: the sum of
// node exclusives. Bottom-up: first-level nodes are leaf frames, so their
// inclusive weight is the self weight.
std::unordered_map<std::string, std::vector<uint64_t>> function_self_totals(
    const Cct& tree);

struct FlatRow {
  std::string function;
  std::string module;  // function prefix up to its last '.'
  std::optional<std::string> file;
  std::vector<uint64_t> exclusive;
  std::vector<uint64_t> inclusive;
};

// One row per distinct (function, file). Inclusive counts each sample once
// even when the key recurs in its stack. Sorted by descending
// exclusive[default_metric], then function, then file.
std::vector<FlatRow> build_flat(const Profile& profile);

// Indices into a tree; valid only while the tree is alive.
struct SelectedCallPath {
  std::vector<size_t> parents;  // root-most first, virtual root excluded
  size_t current = 0;
  std::vector<size_t> children;

  size_t size() const { return parents.size() + 1 + children.size(); }
  // parents, then current, then children.
  std::vector<size_t> ordered() const;
};

// Function-name prefixes that mark application code. Empty means every frame
// is application code.
using AppPredicate = std::vector<std::string>;

bool is_application_frame(const Frame& frame, const AppPredicate& prefixes);

// Throws Error{kUnknownNode}. When |app_prefixes| is nonempty and at least
// one ancestor is application code, parents start at the outermost such
// ancestor.
SelectedCallPath select_call_path(const Cct& tree, uint64_t node_id,
                                  const AppPredicate& app_prefixes = {});

enum class RankMode { kInclusive, kExclusive };

struct HotEntry {
  uint64_t node_id;
  std::string function;
  uint64_t value;
  size_t index;  // node index in the tree
};

// Top-k nodes (virtual root excluded) by the selected value, descending;
// ties by node id ascending.
std::vector<HotEntry> rank_hot(const Cct& tree, size_t metric, size_t k,
                               RankMode mode);

}  // namespace profsum

#endif  // PROFSUM_CCT_H_
