#pragma once

// Partition-and-assign: every interval is handed to one of k agent types, each
// with its own weight threshold and its own per-item scores. One combined
// deque per agent type runs over the shared F array, giving O(nk).

#include "sompart/core.hpp"
#include "sompart/linear_solver.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace sompart {

// Agent types 1..k. columns[a-1][i-1] is the score of item i under agent a.
class AgentCatalog {
 public:
  AgentCatalog(std::vector<Weight> thresholds, std::vector<std::vector<Score>> columns)
      : thresholds_(std::move(thresholds)), columns_(std::move(columns)) {
    if (thresholds_.empty()) throw ValidationError("catalog needs at least one agent type");
    if (columns_.size() != thresholds_.size())
      throw ValidationError("catalog has a score column count different from k");
    for (Weight w : thresholds_)
      if (w < 0) throw ValidationError("agent threshold must be nonnegative");
    const std::size_t n = columns_.front().size();
    if (n == 0) throw ValidationError("catalog score columns are empty");
    for (const auto& col : columns_) {
      if (col.size() != n) throw ValidationError("catalog score columns differ in length");
      std::int64_t sum = 0;
      for (Score s : col) {
        if (s < 0) throw ValidationError("negative agent score");
        if (s > std::numeric_limits<std::int64_t>::max() / 2 - sum)
          throw ValidationError("agent score total overflows 62 bits");
        sum += s;
      }
    }
  }

  // Agent a processes an interval at cost c_a * (max score in the interval).
  static AgentCatalog from_coefficients(std::vector<Weight> thresholds,
                                        std::span<const std::int64_t> coefficients,
                                        std::span<const Score> scores) {
    if (coefficients.size() != thresholds.size())
      throw ValidationError("coefficient count differs from threshold count");
    std::vector<std::vector<Score>> cols;
    for (std::int64_t c : coefficients) {
      if (c < 0) throw ValidationError("negative agent coefficient");
      std::vector<Score> col;
      col.reserve(scores.size());
      for (Score s : scores) {
        if (c != 0 && s > std::numeric_limits<std::int64_t>::max() / 2 / c)
          throw ValidationError("scaled score overflows");
        col.push_back(c * s);
      }
      cols.push_back(std::move(col));
    }
    return AgentCatalog(std::move(thresholds), std::move(cols));
  }

  [[nodiscard]] std::size_t agents() const { return thresholds_.size(); }
  [[nodiscard]] std::size_t items() const { return columns_.front().size(); }
  [[nodiscard]] Weight threshold(std::size_t a) const { return thresholds_[a - 1]; }
  [[nodiscard]] std::span<const Score> column(std::size_t a) const { return columns_[a - 1]; }
  [[nodiscard]] std::span<const Weight> thresholds() const { return thresholds_; }

  // Copy with one more agent type appended.
  [[nodiscard]] AgentCatalog with_agent(Weight threshold, std::vector<Score> column) const {
    auto t = thresholds_;
    auto c = columns_;
    t.push_back(threshold);
    c.push_back(std::move(column));
    return AgentCatalog(std::move(t), std::move(c));
  }

 private:
  std::vector<Weight> thresholds_;
  std::vector<std::vector<Score>> columns_;
};

struct AssignResult {
  Status status = Status::Infeasible;
  std::int64_t cost = 0;
  std::vector<std::size_t> breakpoints;
  std::vector<std::size_t> agents;  // agent type (1-based) per interval

  [[nodiscard]] bool feasible() const { return status == Status::Feasible; }
};

// Recomputes the cost of an assignment and checks every interval against its
// agent's threshold.
inline bool verify_assignment(std::span<const Weight> weights, const AgentCatalog& cat,
                              const AssignResult& r) {
  if (!r.feasible() || r.breakpoints.empty() || r.breakpoints.size() != r.agents.size())
    return false;
  if (r.breakpoints.back() != weights.size()) return false;
  std::size_t start = 1;
  std::int64_t total = 0;
  for (std::size_t k = 0; k < r.breakpoints.size(); ++k) {
    const std::size_t end = r.breakpoints[k], a = r.agents[k];
    if (end < start || a < 1 || a > cat.agents()) return false;
    Weight w = 0;
    Score top = 0;
    for (std::size_t v = start; v <= end; ++v) {
      w += weights[v - 1];
      top = std::max(top, cat.column(a)[v - 1]);
    }
    if (w > cat.threshold(a)) return false;
    total += top;
    start = end + 1;
  }
  return total == r.cost;
}

namespace detail {

inline void check_assign_shapes(std::span<const Weight> weights, const AgentCatalog& cat) {
  if (weights.empty()) throw ValidationError("assign: no items");
  if (cat.items() != weights.size())
    throw ValidationError("assign: catalog covers " + std::to_string(cat.items()) +
                          " items, instance has " + std::to_string(weights.size()));
}

inline bool item_fits_some_agent(Weight w, const AgentCatalog& cat) {
  return std::any_of(cat.thresholds().begin(), cat.thresholds().end(),
                     [w](Weight t) { return w <= t; });
}

}  // namespace detail

// observers, when given, must hold one observer per agent type.
template <class Observer = NullDequeObserver>
AssignResult solve_assign(std::span<const Weight> weights, const AgentCatalog& cat,
                          std::vector<Observer>* observers = nullptr) {
  detail::check_assign_shapes(weights, cat);
  for (Weight w : weights)
    if (!detail::item_fits_some_agent(w, cat)) return {};
  const std::size_t n = weights.size(), k = cat.agents();
  std::vector<Observer> own;
  if (!observers) {
    own.resize(k);
    observers = &own;
  } else if (observers->size() != k) {
    throw Error("solve_assign: need one observer per agent type");
  }

  std::vector<detail::CombinedDeque> deques;
  deques.reserve(k);
  for (std::size_t a = 1; a <= k; ++a) {
    detail::Scratch<Pos> buffer;
    auto table = detail::preprocess_scores(cat.column(a), weights, cat.threshold(a), &buffer);
    deques.emplace_back(cat.column(a), weights, cat.threshold(a), std::move(table), std::move(buffer));
  }

  std::vector<std::int64_t> f(n + 1, 0);
  std::vector<std::size_t> decision(n + 1, 0), agent(n + 1, 0);
  std::vector<detail::CombinedDeque::Candidate> cand(k);
  for (std::size_t i = 1; i <= n; ++i) {
    detail::CombinedDeque::Candidate best;
    std::size_t best_agent = 0;
    for (std::size_t a = 0; a < k; ++a) {
      cand[a] = deques[a].best_for(i, f, (*observers)[a]);
      if (cand[a].reachable && (!best.reachable || cand[a].cost < best.cost)) {
        best = cand[a];
        best_agent = a + 1;
      }
    }
    f[i] = best.cost;
    decision[i] = best.option;
    agent[i] = best_agent;
    for (std::size_t a = 0; a < k; ++a) {
      DequeView v = deques[a].view(i);
      v.f = cand[a].reachable ? cand[a].cost : std::numeric_limits<std::int64_t>::max();
      v.decision = cand[a].option;
      (*observers)[a].on_iteration(v);
      deques[a].push(i, (*observers)[a]);
    }
  }

  AssignResult r{Status::Feasible, f[n], trace_breakpoints(decision, n), {}};
  for (std::size_t end : r.breakpoints) r.agents.push_back(agent[end]);
  return r;
}

inline constexpr std::size_t kAssignBruteItemLimit = 12;
inline constexpr std::size_t kAssignBruteAgentLimit = 4;

// Enumerates every composition; each interval independently takes its
// cheapest admissible agent (lowest index on ties), which is exactly the
// optimum over all agent assignments for that composition.
inline AssignResult solve_assign_bruteforce(std::span<const Weight> weights,
                                            const AgentCatalog& cat) {
  detail::check_assign_shapes(weights, cat);
  const std::size_t n = weights.size(), k = cat.agents();
  if (n > kAssignBruteItemLimit || k > kAssignBruteAgentLimit)
    throw TooLargeError("solve_assign_bruteforce: instance exceeds n <= 12, k <= 4");

  AssignResult best;
  std::vector<std::size_t> bp, ag;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    bp.clear();
    ag.clear();
    for (std::size_t g = 0; g + 1 < n; ++g)
      if (mask >> g & 1) bp.push_back(g + 1);
    bp.push_back(n);
    std::size_t start = 1;
    std::int64_t total = 0;
    bool ok = true;
    for (std::size_t end : bp) {
      Weight w = 0;
      for (std::size_t v = start; v <= end; ++v) w += weights[v - 1];
      std::optional<std::int64_t> cheapest;
      std::size_t who = 0;
      for (std::size_t a = 1; a <= k; ++a) {
        if (w > cat.threshold(a)) continue;
        Score top = 0;
        for (std::size_t v = start; v <= end; ++v) top = std::max(top, cat.column(a)[v - 1]);
        if (!cheapest || top < *cheapest) {
          cheapest = top;
          who = a;
        }
      }
      if (!cheapest) {
        ok = false;
        break;
      }
      total += *cheapest;
      ag.push_back(who);
      start = end + 1;
    }
    if (!ok) continue;
    if (!best.feasible() || total < best.cost || (total == best.cost && bp < best.breakpoints))
      best = {Status::Feasible, total, bp, ag};
  }
  return best;
}

// Catalog file:
//   P1 / k / k lines `w0 c`                       (scores scaled from the instance)
//   P2 / k / k lines `w0` / n lines of k scores   (explicit score matrix)
inline AgentCatalog read_agent_catalog(std::istream& in, std::span<const Score> instance_scores) {
  detail::TokenReader rd(in, "agent catalog");
  const std::string mode = rd.next_word("mode header");
  if (mode != "P1" && mode != "P2")
    throw ParseError("agent catalog: mode header must be P1 or P2, got '" + mode + "'");
  const std::int64_t k = rd.next_int("k");
  if (k < 1) throw ParseError("agent catalog: k must be at least 1");
  std::vector<Weight> thresholds;
  std::vector<std::int64_t> coeffs;
  for (std::int64_t a = 0; a < k; ++a) {
    thresholds.push_back(rd.next_int("agent threshold"));
    if (mode == "P1") coeffs.push_back(rd.next_int("agent coefficient"));
  }
  if (mode == "P1") {
    rd.expect_end();
    return AgentCatalog::from_coefficients(std::move(thresholds), coeffs, instance_scores);
  }
  const std::size_t n = instance_scores.size();
  std::vector<std::vector<Score>> cols(static_cast<std::size_t>(k), std::vector<Score>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < cols.size(); ++a) cols[a][i] = rd.next_int("score matrix");
  rd.expect_end();
  return AgentCatalog(std::move(thresholds), std::move(cols));
}

inline void write_assign_result(std::ostream& os, const AssignResult& r) {
  if (!r.feasible()) {
    os << "INFEASIBLE\n";
    return;
  }
  os << r.cost << '\n';
  detail::write_list(os, std::span<const std::size_t>(r.breakpoints));
  detail::write_list(os, std::span<const std::size_t>(r.agents));
}

}  // namespace sompart
