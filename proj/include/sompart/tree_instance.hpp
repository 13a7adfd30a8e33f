#pragma once

// Rooted trees with per-node weight and score, as consumed by the tree
// partition DP, the exhaustive tree oracle and the knapsack reduction.

#include "sompart/core.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace sompart {

// Nodes are numbered 1..n. parent(v) == 0 marks the root. Children are kept
// in increasing node order, which is the left-to-right order the DP uses.
class TreeInstance {
 public:
  TreeInstance(std::vector<std::size_t> parents, std::vector<Weight> weights,
               std::vector<Score> scores, Weight threshold)
      : parent_(std::move(parents)),
        weights_(std::move(weights)),
        scores_(std::move(scores)),
        threshold_(threshold) {
    const std::size_t n = parent_.size();
    if (n == 0) throw ValidationError("tree must contain at least one node");
    if (weights_.size() != n || scores_.size() != n)
      throw ValidationError("parent, weight and score lists differ in length");
    if (threshold_ < 0) throw ValidationError("threshold must be nonnegative");
    std::int64_t wsum = 0;
    for (Weight w : weights_) {
      if (w < 0) throw ValidationError("negative node weight");
      if (w > std::numeric_limits<std::int64_t>::max() - wsum)
        throw ValidationError("total weight overflows 64 bits");
      wsum += w;
    }
    std::int64_t ssum = 0;
    for (Score s : scores_) {
      if (s < 0) throw ValidationError("negative node score");
      if (s > std::numeric_limits<std::int64_t>::max() / 2 - ssum)
        throw ValidationError("total score overflows 62 bits");
      ssum += s;
    }

    children_.assign(n + 1, {});
    for (std::size_t v = 1; v <= n; ++v) {
      const std::size_t p = parent_[v - 1];
      if (p > n) throw ValidationError("parent index out of range");
      if (p == v) throw ValidationError("node is its own parent");
      if (p == 0) {
        if (root_ != 0) throw ValidationError("tree has more than one root");
        root_ = v;
      } else {
        children_[p].push_back(v);
      }
    }
    if (root_ == 0) throw ValidationError("tree has no root");

    // Every node must be reachable from the root, else the parent array has a cycle.
    order_.reserve(n);
    std::vector<std::size_t> stack{root_};
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      order_.push_back(v);
      for (auto it = children_[v].rbegin(); it != children_[v].rend(); ++it) stack.push_back(*it);
    }
    if (order_.size() != n) throw ValidationError("parent array contains a cycle");
  }

  [[nodiscard]] std::size_t size() const { return parent_.size(); }
  [[nodiscard]] std::size_t root() const { return root_; }
  [[nodiscard]] std::size_t parent(std::size_t v) const { return parent_[v - 1]; }
  [[nodiscard]] std::span<const std::size_t> children(std::size_t v) const { return children_[v]; }
  [[nodiscard]] Weight weight(std::size_t v) const { return weights_[v - 1]; }
  [[nodiscard]] Score score(std::size_t v) const { return scores_[v - 1]; }
  [[nodiscard]] Weight threshold() const { return threshold_; }
  [[nodiscard]] std::span<const std::size_t> parents() const { return parent_; }
  [[nodiscard]] std::span<const Weight> weights() const { return weights_; }
  [[nodiscard]] std::span<const Score> scores() const { return scores_; }
  // Parents before children (preorder, children left to right).
  [[nodiscard]] std::span<const std::size_t> preorder() const { return order_; }

  [[nodiscard]] bool unit_weight() const {
    return std::all_of(weights_.begin(), weights_.end(), [](Weight w) { return w == 1; });
  }

  friend bool operator==(const TreeInstance& a, const TreeInstance& b) {
    return a.parent_ == b.parent_ && a.weights_ == b.weights_ && a.scores_ == b.scores_ &&
           a.threshold_ == b.threshold_;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<Weight> weights_;
  std::vector<Score> scores_;
  Weight threshold_;
  std::size_t root_ = 0;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> order_;
};

// Path 1-2-...-n rooted at 1; matches the sequence instance item for item.
inline TreeInstance path_tree(const SequenceInstance& inst) {
  std::vector<std::size_t> parents(inst.size());
  for (std::size_t v = 1; v <= inst.size(); ++v) parents[v - 1] = v - 1;
  return TreeInstance(std::move(parents), {inst.weights().begin(), inst.weights().end()},
                      {inst.scores().begin(), inst.scores().end()}, inst.threshold());
}

struct TreeFile {
  TreeInstance tree;
  std::optional<std::int64_t> budget;
};

// Format: `n w0` / parents (0 = root) / weights / scores / optional budget `b`.
inline TreeFile read_tree_file(std::istream& in) {
  detail::TokenReader rd(in, "tree instance");
  const std::size_t n = detail::to_count(rd.next_int("n"), "tree instance");
  const Weight w0 = rd.next_int("w0");
  std::vector<std::size_t> parents;
  parents.reserve(n);
  for (std::int64_t p : rd.next_ints(n, "parents")) {
    if (p < 0) throw ParseError("tree instance: negative parent index");
    parents.push_back(static_cast<std::size_t>(p));
  }
  auto w = rd.next_ints(n, "weights (integers)");
  auto s = rd.next_ints(n, "scores");
  std::optional<std::int64_t> budget;
  if (!rd.at_end()) budget = rd.next_int("budget");
  rd.expect_end();
  return {TreeInstance(std::move(parents), std::move(w), std::move(s), w0), budget};
}

inline TreeFile load_tree_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_tree_file(in);
}

inline void write_tree_file(std::ostream& os, const TreeInstance& t,
                            std::optional<std::int64_t> budget = std::nullopt) {
  os << t.size() << ' ' << t.threshold() << '\n';
  detail::write_list(os, t.parents());
  detail::write_list(os, t.weights());
  detail::write_list(os, t.scores());
  if (budget) os << *budget << '\n';
}

// Components induced by cutting the edges above the given nodes. Returns a
// component id per node (index 0 unused), numbered in preorder of their tops.
inline std::vector<std::size_t> components_from_cuts(const TreeInstance& t,
                                                     std::span<const std::size_t> cut_nodes) {
  std::vector<char> cut(t.size() + 1, 0);
  for (std::size_t v : cut_nodes) cut[v] = 1;
  std::vector<std::size_t> comp(t.size() + 1, 0);
  std::size_t next_id = 0;
  for (std::size_t v : t.preorder()) {
    if (v == t.root() || cut[v])
      comp[v] = next_id++;
    else
      comp[v] = comp[t.parent(v)];
  }
  return comp;
}

// Sum-of-Max of the components induced by the cut set, or Unreachable when
// some component is over the threshold. Cut nodes must be distinct non-roots.
inline CostValue evaluate_tree_cuts(const TreeInstance& t, std::span<const std::size_t> cut_nodes) {
  const auto comp = components_from_cuts(t, cut_nodes);
  const std::size_t m = cut_nodes.size() + 1;
  std::vector<Weight> w(m, 0);
  std::vector<Score> top(m, 0);
  for (std::size_t v = 1; v <= t.size(); ++v) {
    w[comp[v]] += t.weight(v);
    top[comp[v]] = std::max(top[comp[v]], t.score(v));
  }
  std::int64_t total = 0;
  for (std::size_t c = 0; c < m; ++c) {
    if (w[c] > t.threshold()) return CostValue::unreachable();
    total += top[c];
  }
  return CostValue(total);
}

}  // namespace sompart
