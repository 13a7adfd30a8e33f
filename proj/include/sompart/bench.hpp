#pragma once

// Instance generators and the timing harness comparing the sequence solvers.

#include "sompart/core.hpp"
#include "sompart/heap_solver.hpp"
#include "sompart/linear_solver.hpp"
#include "sompart/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sompart {

enum class CaseKind { Special, General };

inline std::string_view to_string(CaseKind k) { return k == CaseKind::Special ? "special" : "general"; }

inline CaseKind parse_case_kind(std::string_view s) {
  if (s == "special") return CaseKind::Special;
  if (s == "general") return CaseKind::General;
  throw ParseError("unknown case kind '" + std::string(s) + "' (expected special or general)");
}

// Unit weights throughout.
//   special: s_i = n - i + 1 (strictly decreasing), w0 = n
//   general: s_i uniform in [0, n], w0 uniform in [1, n]
inline SequenceInstance generate(CaseKind kind, std::size_t n, std::uint64_t seed) {
  if (n < 1) throw ValidationError("generate: n must be at least 1");
  std::vector<Weight> w(n, 1);
  std::vector<Score> s(n);
  Weight w0 = static_cast<Weight>(n);
  if (kind == CaseKind::Special) {
    for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Score>(n - i);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Score> score(0, static_cast<Score>(n));
    for (auto& x : s) x = score(rng);
    w0 = std::uniform_int_distribution<Weight>(1, static_cast<Weight>(n))(rng);
  }
  return SequenceInstance(std::move(w), std::move(s), w0);
}

enum class Algo { Exhaustive, Naive, Heap, Linear };

inline std::string_view to_string(Algo a) {
  switch (a) {
    case Algo::Exhaustive: return "exhaustive";
    case Algo::Naive: return "naive";
    case Algo::Heap: return "heap";
    case Algo::Linear: return "linear";
  }
  return "?";
}

inline Algo parse_algo(std::string_view s) {
  if (s == "exhaustive") return Algo::Exhaustive;
  if (s == "naive") return Algo::Naive;
  if (s == "heap") return Algo::Heap;
  if (s == "linear") return Algo::Linear;
  throw ParseError("unknown sequence algorithm '" + std::string(s) + "'");
}

inline PartitionResult run_algo(Algo a, const SequenceInstance& inst) {
  switch (a) {
    case Algo::Exhaustive: return solve_exhaustive(inst);
    case Algo::Naive: return solve_naive(inst);
    case Algo::Heap: return solve_heap(inst);
    case Algo::Linear: return solve_linear(inst);
  }
  throw Error("unreachable algorithm id");
}

struct BenchRecord {
  std::size_t n = 0;
  Algo algo = Algo::Linear;
  CaseKind kind = CaseKind::Special;
  std::uint64_t seed = 0;
  std::size_t rep = 0;
  std::int64_t ns = 0;
  double ns_per_n = 0.0;
};

// Raised when two algorithms disagree on the same benchmark instance.
class CostMismatchError : public Error {
 public:
  using Error::Error;
};

struct BenchConfig {
  std::vector<Algo> algos;
  std::vector<std::size_t> sizes;
  CaseKind kind = CaseKind::Special;
  std::size_t reps = 1;
  std::uint64_t seed = 1;
};

// 25 geometrically spaced sizes from 10 to 10^6.
inline std::vector<std::size_t> default_size_ladder() {
  std::vector<std::size_t> out;
  constexpr int kPoints = 25;
  for (int p = 0; p < kPoints; ++p) {
    const double e = 1.0 + 5.0 * p / (kPoints - 1);
    const auto n = static_cast<std::size_t>(std::llround(std::pow(10.0, e)));
    if (out.empty() || out.back() != n) out.push_back(n);
  }
  return out;
}

// Times one solve; the result is returned so the call cannot be elided.
template <class Clock = std::chrono::steady_clock>
std::pair<PartitionResult, std::int64_t> time_solve(Algo a, const SequenceInstance& inst) {
  const auto t0 = Clock::now();
  PartitionResult r = run_algo(a, inst);
  const auto t1 = Clock::now();
  const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
  return {std::move(r), std::max<std::int64_t>(ns, 1)};
}

// For every size and repetition, generates one instance (seed + rep), times
// each algorithm on it and checks that all of them agree on the cost.
inline std::vector<BenchRecord> bench(const BenchConfig& cfg) {
  std::vector<BenchRecord> out;
  for (std::size_t n : cfg.sizes) {
    for (std::size_t rep = 0; rep < cfg.reps; ++rep) {
      const std::uint64_t seed = cfg.seed + rep;
      const SequenceInstance inst = generate(cfg.kind, n, seed);
      std::optional<PartitionResult> reference;
      for (Algo a : cfg.algos) {
        auto [result, ns] = time_solve(a, inst);
        if (!reference) {
          reference = result;
        } else if (reference->status != result.status || reference->cost != result.cost) {
          throw CostMismatchError("bench: " + std::string(to_string(a)) + " disagrees with " +
                                  std::string(to_string(cfg.algos.front())) + " at n=" +
                                  std::to_string(n) + " seed=" + std::to_string(seed));
        }
        out.push_back({n, a, cfg.kind, seed, rep, ns, static_cast<double>(ns) / static_cast<double>(n)});
      }
    }
  }
  return out;
}

inline constexpr std::string_view kBenchCsvHeader = "n,algo,kind,seed,rep,ns,ns_per_n";

inline void write_bench_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << kBenchCsvHeader << '\n';
  for (const auto& r : records)
    os << r.n << ',' << to_string(r.algo) << ',' << to_string(r.kind) << ',' << r.seed << ','
       << r.rep << ',' << r.ns << ',' << std::fixed << std::setprecision(3) << r.ns_per_n
       << std::defaultfloat << '\n';
}

// Mean t/n per (n, algorithm).
inline std::map<std::pair<std::size_t, Algo>, double> mean_ns_per_n(
    const std::vector<BenchRecord>& records) {
  std::map<std::pair<std::size_t, Algo>, std::pair<double, std::size_t>> acc;
  for (const auto& r : records) {
    auto& [sum, cnt] = acc[{r.n, r.algo}];
    sum += r.ns_per_n;
    ++cnt;
  }
  std::map<std::pair<std::size_t, Algo>, double> out;
  for (const auto& [key, v] : acc) out[key] = v.first / static_cast<double>(v.second);
  return out;
}

inline void write_bench_summary(std::ostream& os, const std::vector<BenchRecord>& records,
                                const std::vector<Algo>& algos) {
  const auto means = mean_ns_per_n(records);
  os << std::setw(10) << "n";
  for (Algo a : algos) os << std::setw(14) << (std::string(to_string(a)) + " t/n");
  os << '\n';
  std::size_t last = 0;
  for (const auto& [key, _] : means) {
    if (key.first == last) continue;
    last = key.first;
    os << std::setw(10) << key.first;
    for (Algo a : algos) {
      auto it = means.find({key.first, a});
      os << std::setw(14) << std::fixed << std::setprecision(2)
         << (it == means.end() ? 0.0 : it->second) << std::defaultfloat;
    }
    os << '\n';
  }
}

}  // namespace sompart
