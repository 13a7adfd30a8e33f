#pragma once

// Knapsack -> "knapsack minus max" -> tree partition: the reduction chain
// showing the real-weighted tree problem is NP-complete, together with the
// brute-force deciders used to check it on small instances.
//
// Empty subsets are admitted with value 0 (both the sum and the max term).

#include "sompart/core.hpp"
#include "sompart/oracle.hpp"
#include "sompart/tree_instance.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace sompart {

// Shared shape of both decision problems: does some A in [1, n] have
// sum_{A} w <= w0 and value(A) >= s0, where value is sum_{A} s (plain) or
// sum_{A} s - max_{A} s (minus-max).
struct KnapsackInstance {
  std::vector<Weight> weights;
  std::vector<Score> scores;
  Weight capacity = 0;
  std::int64_t target = 0;

  [[nodiscard]] std::size_t size() const { return weights.size(); }
  friend bool operator==(const KnapsackInstance&, const KnapsackInstance&) = default;
};

using KnapsackInstance2 = KnapsackInstance;

inline void validate(const KnapsackInstance& k) {
  if (k.weights.empty()) throw ValidationError("knapsack instance needs at least one item");
  if (k.weights.size() != k.scores.size())
    throw ValidationError("knapsack weight and score lists differ in length");
  if (k.capacity < 0) throw ValidationError("knapsack capacity must be nonnegative");
  for (Weight w : k.weights)
    if (w < 0) throw ValidationError("negative knapsack weight");
  for (Score s : k.scores)
    if (s < 0) throw ValidationError("negative knapsack score");
}

inline constexpr std::size_t kKnapsackBruteLimit = 20;

namespace detail {

template <class Value>
bool any_subset(const KnapsackInstance& k, Value value) {
  validate(k);
  const std::size_t n = k.size();
  if (n > kKnapsackBruteLimit)
    throw TooLargeError("knapsack brute force: n exceeds " + std::to_string(kKnapsackBruteLimit));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Weight w = 0;
    std::int64_t sum = 0;
    Score top = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) {
        w += k.weights[i];
        sum += k.scores[i];
        top = std::max(top, k.scores[i]);
      }
    if (w <= k.capacity && value(sum, top) >= k.target) return true;
  }
  return false;
}

}  // namespace detail

inline bool brute_knapsack(const KnapsackInstance& k) {
  return detail::any_subset(k, [](std::int64_t sum, Score) { return sum; });
}

inline bool brute_knapsack2(const KnapsackInstance2& k) {
  return detail::any_subset(k, [](std::int64_t sum, Score top) { return sum - top; });
}

// Append a weightless item carrying the maximum score: it absorbs the max
// term, so the minus-max value of A + {n+1} is the plain value of A.
inline KnapsackInstance2 reduce_knapsack_to_knapsack2(const KnapsackInstance& k) {
  validate(k);
  KnapsackInstance2 out = k;
  out.weights.push_back(0);
  out.scores.push_back(*std::max_element(k.scores.begin(), k.scores.end()));
  return out;
}

struct TreeDecision {
  TreeInstance tree;
  std::int64_t budget;
};

// Star with a weightless, scoreless hub n'+1 joined to every item that fits
// the capacity on its own (items that do not fit can never be chosen and are
// dropped). Budget b = (sum of kept scores) - s0. The hub's component is the
// chosen set A, and the partition cost is max_A s + sum_{not A} s.
inline TreeDecision reduce_knapsack2_to_tree(const KnapsackInstance2& k) {
  validate(k);
  std::vector<Weight> w;
  std::vector<Score> s;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k.weights[i] <= k.capacity) {
      w.push_back(k.weights[i]);
      s.push_back(k.scores[i]);
    }
  const std::size_t hub = w.size() + 1;
  std::vector<std::size_t> parents(hub, hub);
  parents.back() = 0;
  const std::int64_t budget = std::accumulate(s.begin(), s.end(), std::int64_t{0}) - k.target;
  w.push_back(0);
  s.push_back(0);
  return {TreeInstance(std::move(parents), std::move(w), std::move(s), k.capacity), budget};
}

// Decides the tree partition question exhaustively.
inline bool tree_decision_exhaustive(const TreeDecision& d) {
  const CostValue best = solve_tree_exhaustive(d.tree);
  return best.reachable() && best.value() <= d.budget;
}

// Format: `n w0 s0` / n weights / n scores.
inline KnapsackInstance read_knapsack(std::istream& in) {
  detail::TokenReader rd(in, "knapsack instance");
  const std::size_t n = detail::to_count(rd.next_int("n"), "knapsack instance");
  KnapsackInstance k;
  k.capacity = rd.next_int("w0");
  k.target = rd.next_int("s0");
  k.weights = rd.next_ints(n, "weights");
  k.scores = rd.next_ints(n, "scores");
  rd.expect_end();
  validate(k);
  return k;
}

inline KnapsackInstance load_knapsack(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_knapsack(in);
}

inline void write_knapsack(std::ostream& os, const KnapsackInstance& k) {
  os << k.size() << ' ' << k.capacity << ' ' << k.target << '\n';
  detail::write_list(os, std::span<const Weight>(k.weights));
  detail::write_list(os, std::span<const Score>(k.scores));
}

}  // namespace sompart
