#pragma once

// Shared domain types for Sum-of-Max partitioning: instances, prefix sums,
// partition results, the reachable/unreachable cost type and text I/O.
//
// Item positions are 1-based throughout (position 0 is the empty prefix), so
// breakpoints, options and the F array all line up with the usual DP notation.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sompart {

using Weight = std::int64_t;
using Score = std::int64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

// Raised by exponential oracles when asked to enumerate beyond their guard.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

// A 64-bit cost, or Unreachable (ordered above every finite cost and
// absorbing under addition).
class CostValue {
 public:
  constexpr CostValue() = default;
  constexpr explicit CostValue(std::int64_t v) : value_(v) {}

  static constexpr CostValue unreachable() { return CostValue(); }

  [[nodiscard]] constexpr bool reachable() const { return value_ != kUnreachable; }
  [[nodiscard]] std::int64_t value() const {
    if (!reachable()) throw Error("value() called on an unreachable cost");
    return value_;
  }

  friend constexpr CostValue operator+(CostValue a, CostValue b) {
    if (!a.reachable() || !b.reachable()) return unreachable();
    return CostValue(a.value_ + b.value_);
  }
  friend constexpr CostValue operator+(CostValue a, std::int64_t b) { return a + CostValue(b); }

  friend constexpr auto operator<=>(CostValue, CostValue) = default;
  friend constexpr bool operator==(CostValue, CostValue) = default;

  friend std::ostream& operator<<(std::ostream& os, CostValue c) {
    if (c.reachable()) return os << c.value_;
    return os << "UNREACHABLE";
  }

 private:
  static constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max();
  std::int64_t value_ = kUnreachable;
};

constexpr CostValue min(CostValue a, CostValue b) { return b < a ? b : a; }

// Validated sequence instance: n >= 1 items with nonnegative weights and
// scores, and a nonnegative knapsack threshold. Immutable once built.
class SequenceInstance {
 public:
  SequenceInstance(std::vector<Weight> weights, std::vector<Score> scores, Weight threshold)
      : weights_(std::move(weights)), scores_(std::move(scores)), threshold_(threshold) {
    if (weights_.empty()) throw ValidationError("instance must contain at least one item");
    if (weights_.size() != scores_.size())
      throw ValidationError("weight and score lists differ in length");
    if (threshold_ < 0) throw ValidationError("threshold must be nonnegative");
    constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
    std::int64_t wsum = 0;
    for (Weight w : weights_) {
      if (w < 0) throw ValidationError("negative weight");
      if (w > kMax - wsum) throw ValidationError("total weight overflows 64 bits");
      wsum += w;
    }
    // Costs are bounded by the score total; keep half the range as headroom
    // for the F[j] + s sums formed inside the solvers.
    std::int64_t ssum = 0;
    for (Score s : scores_) {
      if (s < 0) throw ValidationError("negative score");
      if (s > kMax / 2 - ssum) throw ValidationError("total score overflows 62 bits");
      ssum += s;
    }
  }

  [[nodiscard]] std::size_t size() const { return weights_.size(); }
  [[nodiscard]] std::span<const Weight> weights() const { return weights_; }
  [[nodiscard]] std::span<const Score> scores() const { return scores_; }
  [[nodiscard]] Weight threshold() const { return threshold_; }

  // 1-based accessors.
  [[nodiscard]] Weight weight(std::size_t pos) const { return weights_[pos - 1]; }
  [[nodiscard]] Score score(std::size_t pos) const { return scores_[pos - 1]; }

  friend bool operator==(const SequenceInstance&, const SequenceInstance&) = default;

 private:
  std::vector<Weight> weights_;
  std::vector<Score> scores_;
  Weight threshold_;
};

// W[0] = 0, W[i] = w_1 + ... + w_i.
class PrefixWeights {
 public:
  explicit PrefixWeights(std::span<const Weight> weights) : sums_(weights.size() + 1, 0) {
    for (std::size_t i = 0; i < weights.size(); ++i) sums_[i + 1] = sums_[i] + weights[i];
  }

  [[nodiscard]] Weight operator[](std::size_t i) const { return sums_[i]; }
  // Total weight of positions a..b inclusive (1-based); zero when a > b.
  [[nodiscard]] Weight range(std::size_t a, std::size_t b) const {
    return a > b ? 0 : sums_[b] - sums_[a - 1];
  }
  [[nodiscard]] std::size_t size() const { return sums_.size(); }
  [[nodiscard]] std::span<const Weight> values() const { return sums_; }

 private:
  std::vector<Weight> sums_;
};

inline PrefixWeights prefix_weights(const SequenceInstance& inst) {
  return PrefixWeights(inst.weights());
}

enum class Status { Feasible, Infeasible };

struct PartitionResult {
  Status status = Status::Infeasible;
  std::int64_t cost = 0;
  // End positions b_1 < ... < b_m = n of the intervals.
  std::vector<std::size_t> breakpoints;

  [[nodiscard]] bool feasible() const { return status == Status::Feasible; }
  static PartitionResult infeasible() { return {}; }

  friend bool operator==(const PartitionResult&, const PartitionResult&) = default;
};

// First position whose weight alone exceeds the threshold, if any. Such an
// item makes every partition infeasible.
inline std::optional<std::size_t> first_oversized_item(const SequenceInstance& inst) {
  for (std::size_t i = 1; i <= inst.size(); ++i)
    if (inst.weight(i) > inst.threshold()) return i;
  return std::nullopt;
}

// Walk the per-position optimal decisions back from n. decision[i] is the
// last breakpoint before i in an optimal partition of the prefix 1..i.
template <class Decisions>
std::vector<std::size_t> trace_breakpoints(const Decisions& decision, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = n; i > 0; i = decision[i]) out.push_back(i);
  std::reverse(out.begin(), out.end());
  return out;
}

// True iff the breakpoints describe a partition of 1..n whose intervals all
// fit the threshold and whose Sum-of-Max equals the reported cost.
inline bool verify_partition(const SequenceInstance& inst, const PartitionResult& result) {
  if (!result.feasible()) return false;
  const auto& bp = result.breakpoints;
  if (bp.empty() || bp.back() != inst.size()) return false;
  std::size_t start = 1;
  std::int64_t total = 0;
  for (std::size_t end : bp) {
    if (end < start || end > inst.size()) return false;
    Weight w = 0;
    Score top = 0;
    for (std::size_t v = start; v <= end; ++v) {
      w += inst.weight(v);
      top = std::max(top, inst.score(v));
    }
    if (w > inst.threshold()) return false;
    total += top;
    start = end + 1;
  }
  return total == result.cost;
}

// ---------------------------------------------------------------------------
// Text I/O

namespace detail {

class TokenReader {
 public:
  explicit TokenReader(std::istream& in, std::string_view what) : in_(in), what_(what) {}

  std::int64_t next_int(std::string_view field) {
    std::string tok;
    if (!(in_ >> tok))
      throw ParseError(std::string(what_) + ": unexpected end of input reading " +
                       std::string(field));
    std::int64_t v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc::result_out_of_range)
      throw ParseError(std::string(what_) + ": value out of 64-bit range in " +
                       std::string(field) + ": '" + tok + "'");
    if (ec != std::errc() || ptr != last)
      throw ParseError(std::string(what_) + ": malformed integer in " + std::string(field) +
                       ": '" + tok + "'");
    return v;
  }

  std::vector<std::int64_t> next_ints(std::size_t count, std::string_view field) {
    std::vector<std::int64_t> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(next_int(field));
    return out;
  }

  std::string next_word(std::string_view field) {
    std::string tok;
    if (!(in_ >> tok))
      throw ParseError(std::string(what_) + ": unexpected end of input reading " +
                       std::string(field));
    return tok;
  }

  [[nodiscard]] bool at_end() {
    in_ >> std::ws;
    return in_.eof();
  }

  void expect_end() {
    if (!at_end()) throw ParseError(std::string(what_) + ": trailing tokens after instance");
  }

 private:
  std::istream& in_;
  std::string_view what_;
};

inline std::size_t to_count(std::int64_t v, std::string_view what) {
  if (v < 1) throw ParseError(std::string(what) + ": item count must be at least 1");
  return static_cast<std::size_t>(v);
}

template <class T>
void write_list(std::ostream& os, std::span<const T> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  os << '\n';
}

}  // namespace detail

// Format: `n w0` / n weights / n scores, whitespace separated.
inline SequenceInstance read_sequence_instance(std::istream& in) {
  detail::TokenReader rd(in, "sequence instance");
  const std::size_t n = detail::to_count(rd.next_int("n"), "sequence instance");
  const Weight w0 = rd.next_int("w0");
  auto w = rd.next_ints(n, "weights");
  auto s = rd.next_ints(n, "scores");
  rd.expect_end();
  return SequenceInstance(std::move(w), std::move(s), w0);
}

inline SequenceInstance load_sequence_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_sequence_instance(in);
}

inline void write_sequence_instance(std::ostream& os, const SequenceInstance& inst) {
  os << inst.size() << ' ' << inst.threshold() << '\n';
  detail::write_list(os, inst.weights());
  detail::write_list(os, inst.scores());
}

// `cost` then the breakpoints, or a single `INFEASIBLE` line.
inline void write_partition_result(std::ostream& os, const PartitionResult& r) {
  if (!r.feasible()) {
    os << "INFEASIBLE\n";
    return;
  }
  os << r.cost << '\n';
  detail::write_list(os, std::span<const std::size_t>(r.breakpoints));
}

}  // namespace sompart
