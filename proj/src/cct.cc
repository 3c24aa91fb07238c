#include "profsum/cct.h"

#include <algorithm>
#include <map>
#include <set>

#include "profsum/error.h"
#include "profsum/hash.h"

namespace profsum {

uint64_t extend_node_id(uint64_t parent_id, const Frame& frame) {
  uint64_t h = Fnv1a(std::string_view("\x1f", 1), parent_id);
  h = Fnv1a(frame.function, h);
  h = Fnv1a(std::string_view("\0", 1), h);
  if (frame.file) h = Fnv1a(*frame.file, h);
  h = Fnv1a(std::string_view("\0", 1), h);
  if (frame.line) h = Fnv1a(std::to_string(*frame.line), h);
  return h;
}

namespace {

// A sample's stack read root-to-end in the tree's orientation.
struct OrientedStack {
  const std::vector<Frame>* stack;
  bool reversed;
  size_t size() const { return stack->size(); }
  const Frame& operator[](size_t i) const {
    return reversed ? (*stack)[stack->size() - 1 - i] : (*stack)[i];
  }
};

}  // namespace

Cct build_cct(const Profile& profile, Orientation orientation) {
  const size_t metrics = profile.metric_count();
  const size_t dm = profile.default_metric();
  const auto& samples = profile.samples();
  Cct tree;
  tree.orientation_ = orientation;
  tree.descriptors_ = profile.descriptors();
  tree.default_metric_ = dm;

  // Sorting the oriented stacks makes every shared prefix contiguous, so the
  // trie is built by diffing each stack against the previous one.
  std::vector<OrientedStack> stacks;
  stacks.reserve(samples.size());
  for (const Sample& s : samples)
    stacks.push_back({&s.stack, orientation == Orientation::kBottomUp});
  std::vector<size_t> order(samples.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    const OrientedStack &a = stacks[x], &b = stacks[y];
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
      if (auto c = a[i] <=> b[i]; c != 0) return c < 0;
    }
    return a.size() < b.size();
  });

  auto& nodes = tree.nodes_;
  CctNode root;
  root.id = kFnvOffsetBasis;
  root.inclusive.assign(metrics, 0);
  root.exclusive.assign(metrics, 0);
  nodes.push_back(std::move(root));
  auto frames = std::make_shared<std::vector<Frame>>();

  std::vector<size_t> path;  // node index per depth for the previous stack
  const OrientedStack* prev = nullptr;
  for (size_t si : order) {
    const OrientedStack& st = stacks[si];
    const auto& values = samples[si].values;
    size_t common = 0;
    if (prev)
      while (common < st.size() && common < prev->size() &&
             st[common] == (*prev)[common])
        ++common;
    path.resize(common);
    for (size_t d = common; d < st.size(); ++d) {
      size_t parent = d ? path[d - 1] : 0;
      CctNode n;
      n.id = extend_node_id(nodes[parent].id, st[d]);
      n.inclusive.assign(metrics, 0);
      n.exclusive.assign(metrics, 0);
      n.parent = parent;
      n.depth = d + 1;
      nodes[parent].children.push_back(nodes.size());
      path.push_back(nodes.size());
      nodes.push_back(std::move(n));
      frames->push_back(st[d]);
    }
    for (size_t m = 0; m < metrics; ++m) nodes[0].inclusive[m] += values[m];
    for (size_t idx : path)
      for (size_t m = 0; m < metrics; ++m) nodes[idx].inclusive[m] += values[m];
    if (!path.empty())
      for (size_t m = 0; m < metrics; ++m)
        nodes[path.back()].exclusive[m] += values[m];
    prev = &st;
  }
  for (size_t i = 1; i < nodes.size(); ++i) nodes[i].frame = &(*frames)[i - 1];
  tree.frames_ = std::move(frames);

  for (auto& n : nodes) {
    std::sort(n.children.begin(), n.children.end(), [&](size_t a, size_t b) {
      uint64_t va = nodes[a].inclusive[dm], vb = nodes[b].inclusive[dm];
      if (va != vb) return va > vb;
      return *nodes[a].frame < *nodes[b].frame;
    });
  }
  tree.by_id_.reserve(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i) tree.by_id_.emplace_back(nodes[i].id, i);
  std::stable_sort(tree.by_id_.begin(), tree.by_id_.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  return tree;
}

Cct build_top_down(const Profile& profile) {
  return build_cct(profile, Orientation::kTopDown);
}

Cct build_bottom_up(const Profile& profile) {
  return build_cct(profile, Orientation::kBottomUp);
}

std::optional<size_t> Cct::find(uint64_t id) const {
  auto it = std::lower_bound(
      by_id_.begin(), by_id_.end(), id,
      [](const std::pair<uint64_t, size_t>& e, uint64_t v) { return e.first < v; });
  if (it == by_id_.end() || it->first != id) return std::nullopt;
  return it->second;
}

std::vector<size_t> Cct::path_to(size_t index) const {
  std::vector<size_t> path;
  for (std::optional<size_t> cur = index; cur; cur = nodes_[*cur].parent)
    path.push_back(*cur);
  std::reverse(path.begin(), path.end());
  return path;
}

std::unordered_map<std::string, std::vector<uint64_t>> function_self_totals(
    const Cct& tree) {
  std::unordered_map<std::string, std::vector<uint64_t>> out;
  const size_t metrics = tree.descriptors().size();
  auto add = [&](const CctNode& n, const std::vector<uint64_t>& v) {
    auto& acc = out[n.frame->function];
    acc.resize(metrics, 0);
    for (size_t m = 0; m < metrics; ++m) acc[m] += v[m];
  };
  if (tree.orientation() == Orientation::kTopDown) {
    for (const auto& n : tree.nodes())
      if (n.frame) add(n, n.exclusive);
  } else {
    for (size_t c : tree.root().children) add(tree.node(c), tree.node(c).inclusive);
  }
  return out;
}

std::vector<FlatRow> build_flat(const Profile& profile) {
  using Key = std::pair<std::string, std::optional<std::string>>;
  const size_t metrics = profile.metric_count();
  std::map<Key, FlatRow> rows;
  auto row_for = [&](const Frame& f) -> FlatRow& {
    auto [it, inserted] = rows.try_emplace(Key{f.function, f.file});
    if (inserted) {
      FlatRow& r = it->second;
      r.function = f.function;
      size_t dot = f.function.rfind('.');
      r.module = dot == std::string::npos ? "" : f.function.substr(0, dot);
      r.file = f.file;
      r.exclusive.assign(metrics, 0);
      r.inclusive.assign(metrics, 0);
    }
    return it->second;
  };
  std::set<const FlatRow*> seen;
  for (const Sample& s : profile.samples()) {
    seen.clear();
    for (const Frame& f : s.stack) {
      FlatRow& r = row_for(f);
      if (seen.insert(&r).second)
        for (size_t m = 0; m < metrics; ++m) r.inclusive[m] += s.values[m];
    }
    FlatRow& leaf = row_for(s.stack.back());
    for (size_t m = 0; m < metrics; ++m) leaf.exclusive[m] += s.values[m];
  }
  std::vector<FlatRow> out;
  out.reserve(rows.size());
  for (auto& [key, row] : rows) out.push_back(std::move(row));
  const size_t dm = profile.default_metric();
  std::stable_sort(out.begin(), out.end(),
                   [dm](const FlatRow& a, const FlatRow& b) {
                     return a.exclusive[dm] > b.exclusive[dm];
                   });
  return out;
}

std::vector<size_t> SelectedCallPath::ordered() const {
  std::vector<size_t> out = parents;
  out.push_back(current);
  out.insert(out.end(), children.begin(), children.end());
  return out;
}

bool is_application_frame(const Frame& frame, const AppPredicate& prefixes) {
  if (prefixes.empty()) return true;
  return std::any_of(prefixes.begin(), prefixes.end(), [&](const auto& p) {
    return frame.function.starts_with(p);
  });
}

SelectedCallPath select_call_path(const Cct& tree, uint64_t node_id,
                                  const AppPredicate& app_prefixes) {
  std::optional<size_t> idx = tree.find(node_id);
  if (!idx || *idx == 0) throw Error::UnknownNode(node_id);
  SelectedCallPath path;
  path.current = *idx;
  std::vector<size_t> chain = tree.path_to(*idx);
  path.parents.assign(chain.begin() + 1, chain.end() - 1);
  if (!app_prefixes.empty()) {
    auto first = std::find_if(
        path.parents.begin(), path.parents.end(), [&](size_t i) {
          return is_application_frame(*tree.node(i).frame, app_prefixes);
        });
    if (first != path.parents.end())
      path.parents.erase(path.parents.begin(), first);
  }
  path.children = tree.node(*idx).children;
  return path;
}

std::vector<HotEntry> rank_hot(const Cct& tree, size_t metric, size_t k,
                               RankMode mode) {
  if (metric >= tree.descriptors().size())
    throw Error(ErrorKind::kUnknownMetric,
                "metric index " + std::to_string(metric));
  std::vector<HotEntry> all;
  all.reserve(tree.nodes().size());
  for (size_t i = 1; i < tree.nodes().size(); ++i) {
    const CctNode& n = tree.node(i);
    uint64_t v = mode == RankMode::kInclusive ? n.inclusive[metric]
                                              : n.exclusive[metric];
    all.push_back({n.id, n.frame->function, v, i});
  }
  auto cmp = [](const HotEntry& a, const HotEntry& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.node_id < b.node_id;
  };
  k = std::min(k, all.size());
  std::partial_sort(all.begin(), all.begin() + k, all.end(), cmp);
  all.resize(k);
  return all;
}

}  // namespace profsum
