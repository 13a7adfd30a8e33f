#pragma once

// Slow reference solvers. Everything here is deliberately direct: the fast
// solvers are tested against these, never the other way round.

#include "sompart/core.hpp"
#include "sompart/tree_instance.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sompart {

inline constexpr std::size_t kExhaustiveSequenceLimit = 20;
inline constexpr std::size_t kExhaustiveTreeLimit = 15;

// Max score over positions a..b inclusive (1-based, a <= b).
inline Score range_max(std::span<const Score> scores, std::size_t a, std::size_t b) {
  Score top = scores[a - 1];
  for (std::size_t v = a + 1; v <= b; ++v) top = std::max(top, scores[v - 1]);
  return top;
}

// Enumerates every composition of 1..n (bit g of the mask cuts after
// position g+1). Ties go to the lexicographically smallest breakpoint list.
inline PartitionResult solve_exhaustive(const SequenceInstance& inst) {
  const std::size_t n = inst.size();
  if (n > kExhaustiveSequenceLimit)
    throw TooLargeError("solve_exhaustive: n exceeds " +
                        std::to_string(kExhaustiveSequenceLimit));
  PartitionResult best = PartitionResult::infeasible();
  std::vector<std::size_t> bp;
  const std::uint64_t masks = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    bp.clear();
    for (std::size_t g = 0; g + 1 < n; ++g)
      if (mask >> g & 1) bp.push_back(g + 1);
    bp.push_back(n);

    std::size_t start = 1;
    std::int64_t total = 0;
    bool ok = true;
    for (std::size_t end : bp) {
      Weight w = 0;
      for (std::size_t v = start; v <= end; ++v) w += inst.weight(v);
      if (w > inst.threshold()) {
        ok = false;
        break;
      }
      total += range_max(inst.scores(), start, end);
      start = end + 1;
    }
    if (!ok) continue;
    if (!best.feasible() || total < best.cost || (total == best.cost && bp < best.breakpoints))
      best = PartitionResult{Status::Feasible, total, bp};
  }
  return best;
}

// F[0..n] of the quadratic recurrence; Unreachable where a prefix has no
// feasible partition.
inline std::vector<CostValue> optimal_prefix_costs(const SequenceInstance& inst,
                                                   std::vector<std::size_t>* decision = nullptr) {
  const std::size_t n = inst.size();
  std::vector<CostValue> f(n + 1);
  f[0] = CostValue(0);
  if (decision) decision->assign(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    Weight w = 0;
    Score top = 0;
    for (std::size_t j = i; j-- > 0;) {
      w += inst.weight(j + 1);
      if (w > inst.threshold()) break;
      top = std::max(top, inst.score(j + 1));
      const CostValue cand = f[j] + top;
      if (cand.reachable() && cand <= f[i]) {  // smallest j wins ties
        f[i] = cand;
        if (decision) (*decision)[i] = j;
      }
    }
  }
  return f;
}

inline PartitionResult solve_naive(const SequenceInstance& inst) {
  std::vector<std::size_t> decision;
  const auto f = optimal_prefix_costs(inst, &decision);
  if (!f.back().reachable()) return PartitionResult::infeasible();
  return {Status::Feasible, f.back().value(), trace_breakpoints(decision, inst.size())};
}

// Minimum Sum-of-Max over every subset of cut edges whose components all fit
// the threshold.
inline CostValue solve_tree_exhaustive(const TreeInstance& t) {
  const std::size_t n = t.size();
  if (n > kExhaustiveTreeLimit)
    throw TooLargeError("solve_tree_exhaustive: n exceeds " + std::to_string(kExhaustiveTreeLimit));
  std::vector<std::size_t> edges;  // each non-root node names the edge to its parent
  for (std::size_t v = 1; v <= n; ++v)
    if (v != t.root()) edges.push_back(v);

  CostValue best = CostValue::unreachable();
  std::vector<std::size_t> cuts;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    cuts.clear();
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (mask >> e & 1) cuts.push_back(edges[e]);
    best = min(best, evaluate_tree_cuts(t, cuts));
  }
  return best;
}

// Quadrangle inequality v(a,c) + v(b,d) <= v(b,c) + v(a,d) for the range-max
// cost, a <= b <= c <= d (1-based).
inline bool range_max_satisfies_quadrangle(std::span<const Score> s, std::size_t a, std::size_t b,
                                           std::size_t c, std::size_t d) {
  return range_max(s, a, c) + range_max(s, b, d) <= range_max(s, b, c) + range_max(s, a, d);
}

// s = (3,1,1,3): S(1,3) + S(2,4) = 6 exceeds S(2,3) + S(1,4) = 4, so range
// max is not a concave (quadrangle-inequality) cost.
inline bool check_nonconcavity_fixture() {
  constexpr Score s[] = {3, 1, 1, 3};
  return !range_max_satisfies_quadrangle(s, 1, 2, 3, 4);
}

}  // namespace sompart
