#pragma once

// O(n log n) solver: a deque J of s-maximal options plus a min-heap over
// their costs F[j] + s[next(j)], with lazy deletion via per-option versions.

#include "sompart/core.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

namespace sompart {

namespace detail {

struct HeapEntry {
  std::int64_t cost;
  std::size_t option;
  std::uint32_t version;

  friend bool operator>(const HeapEntry& a, const HeapEntry& b) { return a.cost > b.cost; }
};

}  // namespace detail

// Counters describing one heap solve; used by tests to check the amortized
// bound on heap traffic.
struct HeapStats {
  std::size_t pushes = 0;
  std::size_t stale_pops = 0;
};

inline PartitionResult solve_heap(const SequenceInstance& inst, HeapStats* stats = nullptr) {
  if (first_oversized_item(inst)) return PartitionResult::infeasible();
  const std::size_t n = inst.size();
  const auto s = inst.scores();  // s[i - 1] is the score of position i
  const auto w = inst.weights();
  const Weight w0 = inst.threshold();

  std::vector<std::int64_t> f(n + 1, 0);
  std::vector<std::size_t> decision(n + 1, 0);
  // Bumped whenever an option leaves J or is renewed; older heap entries go stale.
  std::vector<std::uint32_t> version(n + 1, 0);

  // J occupies dq[head, tail).
  std::vector<std::size_t> dq(n + 1);
  std::size_t head = 0, tail = 0;
  std::priority_queue<detail::HeapEntry, std::vector<detail::HeapEntry>, std::greater<>> heap;
  HeapStats local;

  auto retire = [&](std::size_t j) { ++version[j]; };

  // o = o_i with window = W(o + 1, i); option j fits the bound iff j >= o.
  std::size_t o = 0;
  Weight window = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const Score si = s[i - 1];
    window += w[i - 1];
    while (window > w0) window -= w[o++];
    // i-1 joins J (as a fresh option, no heap entry until it is renewed).
    if (i > 1) dq[tail++] = i - 1;
    while (tail > head && s[dq[tail - 1] - 1] <= si) retire(dq[--tail]);
    while (tail > head && dq[head] < o) retire(dq[head++]);
    if (tail > head) {
      // next(J.tail) becomes i.
      const std::size_t j = dq[tail - 1];
      ++version[j];
      heap.push({f[j] + si, j, version[j]});
      ++local.pushes;
    }
    // u = argmax of s over (o, i], largest index on ties.
    std::size_t u = i;
    if (tail > head) {
      if (dq[head] != o)
        u = dq[head];
      else if (tail - head > 1)
        u = dq[head + 1];
    }
    f[i] = f[o] + s[u - 1];
    decision[i] = o;

    while (!heap.empty() && heap.top().version != version[heap.top().option]) {
      heap.pop();
      ++local.stale_pops;
    }
    if (!heap.empty() && heap.top().cost < f[i]) {
      f[i] = heap.top().cost;
      decision[i] = heap.top().option;
    }
  }
  if (stats) *stats = local;
  return {Status::Feasible, f[n], trace_breakpoints(decision, n)};
}

}  // namespace sompart
