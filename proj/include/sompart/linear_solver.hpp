#pragma once

// Linear-time Sum-of-Max partition.
//
// The candidate set for F[i] is o_i plus the s-maximal options J. A forward
// simulation of J (preprocess) records, for every option j, how many times it
// will later leave J from the tail, either popped by a larger score or
// renewed when next(j) moves. An option whose remaining count is zero leaves
// only through the head (patient, FIFO); the others leave only through the
// tail (impatient, FILO). The main pass keeps just the live options in one
// deque K: patient prefix with increasing cost, impatient suffix with
// decreasing cost, so the best option is always at one of the two ends.

#include "sompart/core.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace sompart {

// Positions inside the linear solver are 32-bit: it halves the memory traffic
// of the index arrays, which dominates the running time for large n.
using Pos = std::uint32_t;
inline constexpr std::size_t kMaxLinearItems = (std::size_t{1} << 31) - 1;

// Both arrays are indexed by 1-based position; entry 0 is unused.
struct CounterTable {
  // Number of future tail exits (score pop or renew) of each option.
  std::vector<std::int32_t> counter;
  // argmax of s over (o_i, i], largest index on ties.
  std::vector<Pos> u;
};

enum class DequeEvent {
  Push,       // option i joins K after F[i] is known
  HeadPop,    // weight constraint violated
  TailPop,    // score no longer exceeds s_i
  Renew,      // next(K.tail) moved to i
  DeadTail,   // impatient tail dominated by its predecessor
  DeadTail2,  // patient predecessor dominated by the tail
};

// State of K after maintenance for position i, together with o_i and F[i].
struct DequeView {
  std::size_t i = 0;
  std::span<const Pos> options;           // K from head to tail
  std::span<const std::int64_t> cost;     // indexed by option
  std::span<const std::int32_t> counter;  // indexed by option
  std::size_t o = 0;
  std::int64_t f = 0;
  std::size_t decision = 0;
};

struct NullDequeObserver {
  void on_event(DequeEvent, std::size_t) {}
  void on_iteration(const DequeView&) {}
};

namespace detail {

// Heap array left uninitialised. Used for buffers where every slot is written
// before it is read, which spares a full zeroing pass over each of them.
template <class T>
class Scratch {
 public:
  Scratch() = default;
  explicit Scratch(std::size_t n) : p_(std::make_unique_for_overwrite<T[]>(n)), n_(n) {}

  [[nodiscard]] T* data() { return p_.get(); }
  [[nodiscard]] const T* data() const { return p_.get(); }
  [[nodiscard]] std::size_t size() const { return n_; }
  T& operator[](std::size_t i) { return p_[i]; }
  const T& operator[](std::size_t i) const { return p_[i]; }
  operator std::span<const T>() const { return {p_.get(), n_}; }

 private:
  std::unique_ptr<T[]> p_;
  std::size_t n_ = 0;
};

// o_i, the smallest j with W(j+1, i) <= w0, tracked with a running window sum.
// Weights are nonnegative, so option j satisfies the weight bound at i
// exactly when j >= o_i; no prefix-sum array is needed.
class WeightWindow {
 public:
  WeightWindow(std::span<const Weight> w, Weight w0) : w_(w), w0_(w0) {}

  std::size_t advance(std::size_t i) {
    sum_ += w_[i - 1];
    while (sum_ > w0_) sum_ -= w_[o_++];
    return o_;
  }

 private:
  std::span<const Weight> w_;
  Weight w0_;
  Weight sum_ = 0;  // W(o + 1, i)
  std::size_t o_ = 0;
};

// s and w are 0-based: s[i - 1] is the score of position i. Items heavier
// than w0 are allowed here: the multi-agent solver runs one table per agent
// and some agents may be unable to take an item at all. For such an i,
// o_i = i and u[i] = i. The deque buffer is left in *work for reuse.
inline CounterTable preprocess_scores(std::span<const Score> s, std::span<const Weight> w, Weight w0,
                                      Scratch<Pos>* work = nullptr) {
  const std::size_t n = s.size();
  if (n > kMaxLinearItems) throw TooLargeError("linear solver: more than 2^31 - 1 items");
  CounterTable t{std::vector<std::int32_t>(n + 1, 0), std::vector<Pos>(n + 1, 0)};
  Scratch<Pos> local;
  Scratch<Pos>& J = work ? *work : local;
  if (J.size() < n + 1) J = Scratch<Pos>(n + 1);
  std::size_t head = 0, tail = 0;  // J = J[head, tail)
  WeightWindow window(w, w0);
  for (std::size_t i = 1; i <= n; ++i) {
    const Score si = s[i - 1];
    const std::size_t o = window.advance(i);
    while (tail > head && J[head] < o) ++head;
    while (tail > head && s[J[tail - 1] - 1] <= si) ++t.counter[J[--tail]];
    if (tail > head) ++t.counter[J[tail - 1]];
    J[tail++] = static_cast<Pos>(i);
    if (J[head] != o)
      t.u[i] = J[head];
    else
      t.u[i] = tail - head > 1 ? J[head + 1] : static_cast<Pos>(i);
  }
  return t;
}

// The combined deque K for one score column and threshold. Positions are
// processed in order: best_for(i) then push(i).
class CombinedDeque {
 public:
  // Cost of an option pushed but not yet renewed. It compares below any real
  // cost so the renew guard always accepts a fresh tail.
  static constexpr std::int64_t kFresh = std::numeric_limits<std::int64_t>::min();

  struct Candidate {
    std::int64_t cost = 0;
    std::size_t option = 0;
    bool reachable = false;
  };

  // buffer, if large enough, is reused as storage for K.
  CombinedDeque(std::span<const Score> s, std::span<const Weight> w, Weight w0, CounterTable table,
                Scratch<Pos> buffer = {})
      : s_(s),
        window_(w, w0),
        counter_(std::move(table.counter)),
        u_(std::move(table.u)),
        cost_(s.size() + 1),
        K_(std::move(buffer)) {
    if (K_.size() < s.size() + 1) K_ = Scratch<Pos>(s.size() + 1);
  }

  template <class Observer>
  Candidate best_for(std::size_t i, std::span<const std::int64_t> f, Observer& obs) {
    // Work on local copies; the member loads otherwise repeat after every store.
    Pos* const K = K_.data();
    std::int64_t* const cost = cost_.data();
    std::int32_t* const counter = counter_.data();
    const Score* const s = s_.data();
    std::size_t head = head_, tail = tail_;

    const Score si = s[i - 1];
    const std::size_t o = o_ = window_.advance(i);
    while (tail > head && K[head] < o) obs.on_event(DequeEvent::HeadPop, K[head++]);
    while (tail > head && s[K[tail - 1] - 1] <= si) obs.on_event(DequeEvent::TailPop, K[--tail]);
    if (tail > head) {
      const std::size_t j = K[tail - 1];
      // Only a live J.tail passes this guard, so a dead J.tail is skipped
      // without tracking J itself.
      if (cost[j] <= f[j] + si) {
        cost[j] = f[j] + si;
        --counter[j];
        obs.on_event(DequeEvent::Renew, j);
      }
    }
    if (tail - head > 1) {
      const std::size_t last = K[tail - 1], prev = K[tail - 2];
      if (counter[prev] > 0 && cost[prev] <= cost[last]) obs.on_event(DequeEvent::DeadTail, K[--tail]);
    }
    while (tail - head > 1) {
      const Pos last = K[tail - 1], prev = K[tail - 2];
      if (counter[last] != 0 || cost[prev] < cost[last]) break;
      obs.on_event(DequeEvent::DeadTail2, prev);
      K[tail - 2] = last;
      --tail;
    }
    head_ = head;
    tail_ = tail;

    Candidate best;
    if (o < i) best = {f[o] + s[u_[i] - 1], o, true};
    if (tail > head) {
      const std::size_t h = K[head], t = K[tail - 1];
      if (!best.reachable || cost[h] < best.cost) best = {cost[h], h, true};
      if (cost[t] < best.cost) best = {cost[t], t, true};
    }
    return best;
  }

  template <class Observer>
  void push(std::size_t i, Observer& obs) {
    cost_[i] = kFresh;
    K_[tail_++] = static_cast<Pos>(i);
    obs.on_event(DequeEvent::Push, i);
  }

  [[nodiscard]] DequeView view(std::size_t i) const {
    return {i, std::span<const Pos>(K_.data() + head_, tail_ - head_), cost_, counter_, o_, 0, 0};
  }

 private:
  std::span<const Score> s_;
  WeightWindow window_;
  std::vector<std::int32_t> counter_;
  std::vector<Pos> u_;
  Scratch<std::int64_t> cost_;  // written at push, read only for options in K
  Scratch<Pos> K_;
  std::size_t head_ = 0, tail_ = 0;  // K = K_[head_, tail_)
  std::size_t o_ = 0;
};

}  // namespace detail

inline CounterTable preprocess(const SequenceInstance& inst) {
  return detail::preprocess_scores(inst.scores(), inst.weights(), inst.threshold());
}

template <class Observer>
PartitionResult solve_linear(const SequenceInstance& inst, Observer& obs) {
  if (first_oversized_item(inst)) return PartitionResult::infeasible();
  const std::size_t n = inst.size();
  const auto s = inst.scores();
  const auto w = inst.weights();
  detail::Scratch<Pos> buffer;
  auto table = detail::preprocess_scores(s, w, inst.threshold(), &buffer);
  detail::CombinedDeque K(s, w, inst.threshold(), std::move(table), std::move(buffer));

  detail::Scratch<std::int64_t> f(n + 1);
  detail::Scratch<Pos> decision(n + 1);
  f[0] = 0;
  decision[0] = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto best = K.best_for(i, f, obs);
    f[i] = best.cost;
    decision[i] = static_cast<Pos>(best.option);
    DequeView v = K.view(i);
    v.f = f[i];
    v.decision = decision[i];
    obs.on_iteration(v);
    K.push(i, obs);
  }
  return {Status::Feasible, f[n], trace_breakpoints(decision, n)};
}

inline PartitionResult solve_linear(const SequenceInstance& inst) {
  NullDequeObserver obs;
  return solve_linear(inst, obs);
}

// ---------------------------------------------------------------------------
// Transcript: one row per position showing K as used for F[i].

inline constexpr std::size_t kTranscriptLimit = 64;

struct TranscriptEntry {
  std::size_t option;
  std::int64_t cost;
  std::int64_t counter;
  friend bool operator==(const TranscriptEntry&, const TranscriptEntry&) = default;
};

struct TranscriptRow {
  std::size_t i;
  std::vector<TranscriptEntry> deque;
  std::size_t o;
  std::int64_t f;
};

namespace detail {

struct TranscriptRecorder : NullDequeObserver {
  std::vector<TranscriptRow>* rows;
  void on_iteration(const DequeView& v) {
    TranscriptRow row{v.i, {}, v.o, v.f};
    for (std::size_t j : v.options) row.deque.push_back({j, v.cost[j], v.counter[j]});
    rows->push_back(std::move(row));
  }
};

}  // namespace detail

// Throws TooLargeError beyond kTranscriptLimit items. An infeasible instance
// yields no rows.
inline std::vector<TranscriptRow> deque_transcript(const SequenceInstance& inst) {
  if (inst.size() > kTranscriptLimit)
    throw TooLargeError("deque_transcript: n exceeds " + std::to_string(kTranscriptLimit));
  std::vector<TranscriptRow> rows;
  detail::TranscriptRecorder rec;
  rec.rows = &rows;
  solve_linear(inst, rec);
  return rows;
}

// `i | K: (j:cost:counter)... | o_i | F[i]`
inline void write_transcript(std::ostream& os, std::span<const TranscriptRow> rows) {
  for (const auto& r : rows) {
    os << r.i << " | K:";
    for (const auto& e : r.deque) os << " (" << e.option << ':' << e.cost << ':' << e.counter << ')';
    os << " | " << r.o << " | " << r.f << '\n';
  }
}

}  // namespace sompart
