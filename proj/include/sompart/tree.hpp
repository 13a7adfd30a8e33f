#pragma once

// Integer-weight tree partition by dynamic programming over (subtree, weight
// of the growing component, score cap), plus the operation-count witness for
// the unit-weight bound and the binary-tree counting lemma behind it.
//
// For node v, score rank k and weight j:
//   f[v][k][j] = min cost of the grown part over partitions of T_v whose
//                component containing v weighs exactly j and has no score
//                above ranks[k].
//   F[v]       = min over k, j of f[v][k][j] + ranks[k].
// Children are merged left to right; merging child c either cuts the edge
// (adds F[c]) or joins c's growing component of weight x (adds f[c][k][x]).

#include "sompart/core.hpp"
#include "sompart/tree_instance.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sompart {

struct TreeDpOptions {
  bool reconstruct = true;
  // Retain every f table (otherwise a child's tables are freed once merged).
  bool keep_tables = false;
};

struct TreeDpResult {
  CostValue cost;
  // Nodes whose parent edge is cut, ascending. Empty when unreachable or not
  // reconstructed.
  std::vector<std::size_t> cut_nodes;
  // Distinct scores ascending; rank k caps component scores at ranks[k].
  std::vector<Score> ranks;
  // tables[v][k][j] when keep_tables was set (j = 0..min(weight of T_v, w0)).
  std::vector<std::vector<std::vector<CostValue>>> tables;
  // Inner merge iterations for the top rank, counted over branches a >= 2.
  std::uint64_t merge_iterations = 0;
};

// Largest growing-component weight the DP will tabulate.
inline constexpr Weight kTreeDpWeightLimit = 1 << 16;

namespace detail {

class TreeDp {
 public:
  TreeDp(const TreeInstance& t, std::vector<Score> ranks, TreeDpOptions opt)
      : t_(t), ranks_(std::move(ranks)), opt_(opt) {}

  TreeDpResult run() {
    const std::size_t n = t_.size(), m = ranks_.size();
    const Weight w0 = t_.threshold();
    TreeDpResult res;
    res.ranks = ranks_;
    for (std::size_t v = 1; v <= n; ++v)
      if (t_.weight(v) > w0) {
        res.cost = CostValue::unreachable();
        return res;
      }

    subtree_weight_.assign(n + 1, 0);
    cap_.assign(n + 1, 0);
    tables_.assign(n + 1, {});
    best_.assign(n + 1, CostValue::unreachable());
    best_choice_.assign(n + 1, {0, 0});
    if (opt_.reconstruct) decisions_.assign(n + 1, {});

    const auto order = t_.preorder();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const std::size_t v = *it;
      Weight total = t_.weight(v);
      for (std::size_t c : t_.children(v)) total += subtree_weight_[c];
      subtree_weight_[v] = total;
      cap_[v] = std::min(total, w0);
      if (cap_[v] > kTreeDpWeightLimit)
        throw TooLargeError("solve_tree_dp: growing-component weight range exceeds " +
                            std::to_string(kTreeDpWeightLimit));

      tables_[v].assign(m, {});
      if (opt_.reconstruct) decisions_[v].assign(m, {});
      for (std::size_t k = 0; k < m; ++k) compute_node(v, k, k + 1 == m ? &res.merge_iterations : nullptr);

      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = 0; j < tables_[v][k].size(); ++j) {
          const CostValue c = tables_[v][k][j] + ranks_[k];
          if (c < best_[v]) {
            best_[v] = c;
            best_choice_[v] = {k, j};
          }
        }
      if (!opt_.keep_tables)
        for (std::size_t c : t_.children(v)) tables_[c] = {};
    }

    res.cost = best_[t_.root()];
    if (opt_.reconstruct && res.cost.reachable()) res.cut_nodes = trace();
    if (opt_.keep_tables) res.tables = std::move(tables_);
    return res;
  }

 private:
  static constexpr std::int32_t kCut = -1;

  void compute_node(std::size_t v, std::size_t k, std::uint64_t* counter) {
    const Weight w0 = t_.threshold();
    const Score cap_score = ranks_[k];
    auto& g = tables_[v][k];
    g.assign(static_cast<std::size_t>(cap_[v]) + 1, CostValue::unreachable());
    if (t_.score(v) > cap_score) return;  // v itself breaks the cap

    Weight span = t_.weight(v);  // min(weight of T_v^{a}, w0), the live range of g
    g[static_cast<std::size_t>(span)] = CostValue(0);
    std::vector<CostValue> next;
    const auto kids = t_.children(v);
    for (std::size_t a = 0; a < kids.size(); ++a) {
      const std::size_t c = kids[a];
      const auto& fc = tables_[c][k];
      const Weight child_span = cap_[c];
      const Weight new_span = std::min(span + subtree_weight_[c], w0);
      next.assign(g.size(), CostValue::unreachable());
      std::vector<std::int32_t>* dec = nullptr;
      if (opt_.reconstruct) {
        decisions_[v][k].emplace_back(g.size(), kCut);
        dec = &decisions_[v][k].back();
      }

      // Cut the edge to c.
      for (Weight j = t_.weight(v); j <= span; ++j) next[j] = g[j] + best_[c];
      // Join c's growing component of weight x.
      for (Weight jp = t_.weight(v); jp <= span; ++jp) {
        for (Weight x = t_.weight(c); x <= child_span; ++x) {
          if (counter && a >= 1) ++*counter;
          if (jp + x > w0) continue;
          const CostValue cand = g[jp] + fc[x];
          if (cand < next[jp + x]) {
            next[jp + x] = cand;
            if (dec) (*dec)[jp + x] = static_cast<std::int32_t>(x);
          }
        }
      }
      g.swap(next);
      span = new_span;
    }
  }

  std::vector<std::size_t> trace() const {
    std::vector<std::size_t> cuts;
    struct Frame {
      std::size_t v, k;
      Weight j;
    };
    std::vector<Frame> stack;
    auto open = [&](std::size_t v) {
      const auto [k, j] = best_choice_[v];
      stack.push_back({v, k, static_cast<Weight>(j)});
    };
    open(t_.root());
    while (!stack.empty()) {
      auto [v, k, j] = stack.back();
      stack.pop_back();
      const auto kids = t_.children(v);
      for (std::size_t a = kids.size(); a-- > 0;) {
        const std::size_t c = kids[a];
        const std::int32_t x = decisions_[v][k][a][j];
        if (x == kCut) {
          cuts.push_back(c);
          open(c);
        } else {
          stack.push_back({c, k, x});
          j -= x;
        }
      }
    }
    std::sort(cuts.begin(), cuts.end());
    return cuts;
  }

  const TreeInstance& t_;
  std::vector<Score> ranks_;
  TreeDpOptions opt_;
  std::vector<Weight> subtree_weight_, cap_;
  std::vector<std::vector<std::vector<CostValue>>> tables_;  // [v][k][j]
  std::vector<CostValue> best_;                              // F[v]
  std::vector<std::pair<std::size_t, std::size_t>> best_choice_;
  std::vector<std::vector<std::vector<std::vector<std::int32_t>>>> decisions_;  // [v][k][a][j]
};

inline std::vector<Score> distinct_scores(const TreeInstance& t) {
  std::vector<Score> r(t.scores().begin(), t.scores().end());
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

}  // namespace detail

inline TreeDpResult solve_tree_dp(const TreeInstance& t, TreeDpOptions opt = {}) {
  return detail::TreeDp(t, detail::distinct_scores(t), opt).run();
}

// Inner-loop iterations of the DP for one fixed score cap on a unit-weight
// tree: sum over v and branches a >= 2 of
// min(|T_v^{a-1}|, w0) * min(|T_{c_a}|, w0).
inline std::uint64_t dp_operation_count(const TreeInstance& t) {
  if (!t.unit_weight()) throw ValidationError("dp_operation_count: tree is not unit-weight");
  const Score top = *std::max_element(t.scores().begin(), t.scores().end());
  return detail::TreeDp(t, {top}, {.reconstruct = false, .keep_tables = false}).run().merge_iterations;
}

inline std::uint64_t unit_operation_bound(const TreeInstance& t) {
  return 16ull * t.size() * static_cast<std::uint64_t>(t.threshold() + 1);
}

// ---------------------------------------------------------------------------
// Binary trees and the min(L, K) * min(R, K) counting bound.

// Nodes 1..n; 0 means "no child".
struct BinaryTree {
  std::vector<std::size_t> left, right;  // index 0 unused
  std::size_t root = 0;

  [[nodiscard]] std::size_t size() const { return left.empty() ? 0 : left.size() - 1; }
};

// Left-child right-sibling view of a rooted tree: a node's right child is its
// rightmost child, its left child is its left-hand sibling.
inline BinaryTree to_binary(const TreeInstance& t) {
  BinaryTree b{std::vector<std::size_t>(t.size() + 1, 0), std::vector<std::size_t>(t.size() + 1, 0),
               t.root()};
  for (std::size_t v = 1; v <= t.size(); ++v) {
    const auto kids = t.children(v);
    if (!kids.empty()) b.right[v] = kids.back();
    for (std::size_t a = 1; a < kids.size(); ++a) b.left[kids[a]] = kids[a - 1];
  }
  return b;
}

// Subtree sizes of each child slot: (L_v, R_v) per node.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> child_subtree_sizes(const BinaryTree& b) {
  const std::size_t n = b.size();
  std::vector<std::uint64_t> size(n + 1, 0);
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<std::size_t> stack{b.root};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    if (v == 0) continue;
    order.push_back(v);
    stack.push_back(b.left[v]);
    stack.push_back(b.right[v]);
  }
  if (order.size() != n) throw ValidationError("binary tree is not connected from its root");
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    size[*it] = 1 + size[b.left[*it]] + size[b.right[*it]];
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out(n + 1, {0, 0});
  for (std::size_t v = 1; v <= n; ++v) out[v] = {size[b.left[v]], size[b.right[v]]};
  return out;
}

inline std::uint64_t lemma_c_sum(const BinaryTree& b, std::uint64_t K) {
  const auto lr = child_subtree_sizes(b);
  std::uint64_t sum = 0;
  for (std::size_t v = 1; v <= b.size(); ++v)
    sum += std::min(lr[v].first, K) * std::min(lr[v].second, K);
  return sum;
}

// sum_v min(L_v, K) * min(R_v, K) <= 6 |V| K. The constant collects the four
// partial bounds 2K|V| + K|V| + K|V| + 2K|V|.
inline bool check_lemma_C(const BinaryTree& b, std::uint64_t K) {
  if (K < 1) throw ValidationError("check_lemma_C: K must be at least 1");
  return lemma_c_sum(b, K) <= 6 * b.size() * K;
}

}  // namespace sompart
