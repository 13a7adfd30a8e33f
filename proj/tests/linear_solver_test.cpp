#include "sompart/heap_solver.hpp"
#include "sompart/linear_solver.hpp"
#include "sompart/oracle.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace sompart {
namespace {

using Counters = std::vector<std::int32_t>;
using Us = std::vector<Pos>;

TEST(Preprocess, RenewAndPopExample) {
  const auto t = preprocess(SequenceInstance({1, 1, 1}, {3, 1, 2}, 3));
  EXPECT_EQ(t.counter, (Counters{0, 2, 1, 0}));
  EXPECT_EQ(t.u, (Us{0, 1, 1, 1}));
}

TEST(Preprocess, IncreasingScores) {
  // Every i-1 is popped by s_i at step i, which is one tail exit each.
  const SequenceInstance inst({1, 1, 1}, {1, 2, 3}, 3);
  const auto t = preprocess(inst);
  EXPECT_EQ(t.counter, (Counters{0, 1, 1, 0}));
  EXPECT_EQ(t.counter, testing::counters_by_definition(inst).counter);
  EXPECT_EQ(t.u, (Us{0, 1, 2, 3}));
}

TEST(Preprocess, SingleItem) {
  const auto t = preprocess(SequenceInstance({1}, {5}, 1));
  EXPECT_EQ(t.counter, (Counters{0, 0}));
  EXPECT_EQ(t.u, (Us{0, 1}));
}

TEST(Preprocess, MatchesDefinitionOnRandomInstances) {
  testing::Rng rng(31);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto inst = testing::random_sequence(rng, 25, 4, 6, 12);
    if (first_oversized_item(inst)) continue;
    const auto got = preprocess(inst), want = testing::counters_by_definition(inst);
    ASSERT_EQ(got.counter, want.counter) << "trial " << trial;
    ASSERT_EQ(got.u, want.u) << "trial " << trial;
  }
}

TEST(SolveLinear, Examples) {
  const SequenceInstance small({1, 1, 1}, {5, 3, 4}, 2);
  const auto r = solve_linear(small);
  EXPECT_EQ(r.cost, 9);
  EXPECT_TRUE(verify_partition(small, r));
  EXPECT_EQ(solve_linear(SequenceInstance(std::vector<Weight>(6, 1), {6, 5, 4, 3, 2, 1}, 6)).cost, 6);
  EXPECT_EQ(solve_linear(SequenceInstance({1, 1, 1}, {3, 1, 2}, 3)).cost, 3);
  EXPECT_FALSE(solve_linear(SequenceInstance({1, 3}, {1, 1}, 2)).feasible());
}

TEST(SolveLinear, DifferentialAgainstNaive) {
  testing::Rng rng(32);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto inst = testing::random_sequence(rng, 64, 6, 20, 25);
    const auto a = solve_naive(inst), b = solve_linear(inst);
    ASSERT_EQ(a.status, b.status) << "trial " << trial;
    if (!a.feasible()) continue;
    ASSERT_EQ(a.cost, b.cost) << "trial " << trial;
    ASSERT_TRUE(verify_partition(inst, b)) << "trial " << trial;
  }
}

TEST(SolveLinear, LargeInstancesAgreeWithHeap) {
  testing::Rng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Weight> w(10000);
    std::vector<Score> s(10000);
    for (auto& x : w) x = testing::uniform(rng, 0, 10);
    for (auto& x : s) x = testing::uniform(rng, 0, trial % 2 ? 1000000 : 30);
    const SequenceInstance inst(std::move(w), std::move(s), testing::uniform(rng, 10, 400));
    const auto a = solve_heap(inst), b = solve_linear(inst);
    ASSERT_EQ(a.status, b.status);
    if (a.feasible()) {
      ASSERT_EQ(a.cost, b.cost) << "trial " << trial;
      ASSERT_TRUE(verify_partition(inst, b));
    }
  }
}

TEST(SolveLinear, StructuralWitnesses) {
  testing::Rng rng(34);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto inst = testing::random_sequence(rng, 40, 4, 8, 14);
    if (first_oversized_item(inst)) continue;
    const auto remaining = testing::future_exits_by_definition(inst);
    testing::DequeWitness wit;
    wit.remaining = &remaining;
    solve_linear(inst, wit);
    wit.check_exits();
    ASSERT_TRUE(wit.failures.empty()) << "trial " << trial << ": " << wit.failures.front();
    ASSERT_LE(wit.events, 4 * inst.size());
    // Conservation: every decrement was a renew, and all counters end at zero.
    const auto t = preprocess(inst);
    for (std::size_t j = 1; j <= inst.size(); ++j) {
      const std::int64_t renews = j < wit.renews.size() ? wit.renews[j] : 0;
      std::int64_t pops = 0;
      for (auto [step, opt] : wit.tail_pops) pops += opt == j;
      ASSERT_LE(renews, t.counter[j]);
      ASSERT_LE(pops, 1);
    }
  }
}

TEST(SolveLinear, EventsStayLinearOnSpecialCase) {
  const std::size_t n = 5000;
  std::vector<Score> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<Score>(n - i);
  const SequenceInstance inst(std::vector<Weight>(n, 1), s, static_cast<Weight>(n));
  testing::DequeWitness wit;
  EXPECT_EQ(solve_linear(inst, wit).cost, static_cast<std::int64_t>(n));
  EXPECT_TRUE(wit.failures.empty());
  EXPECT_LE(wit.events, 4 * n);
}

TEST(Transcript, SingleItem) {
  const auto rows = deque_transcript(SequenceInstance({1}, {7}, 1));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_TRUE(rows[0].deque.empty());
  EXPECT_EQ(rows[0].f, 7);
}

TEST(Transcript, ThreeItemExample) {
  const auto rows = deque_transcript(SequenceInstance({1, 1, 1}, {3, 1, 2}, 3));
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& r : rows) EXPECT_EQ(r.f, 3);
  std::ostringstream out;
  write_transcript(out, rows);
  EXPECT_EQ(out.str(),
            "1 | K: | 0 | 3\n"
            "2 | K: (1:4:1) | 0 | 3\n"
            "3 | K: (1:5:0) | 0 | 3\n");
}

TEST(Transcript, LastRowMatchesSolver) {
  testing::Rng rng(35);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = testing::random_sequence(rng, 64, 3, 9, 12);
    const auto r = solve_linear(inst);
    const auto rows = deque_transcript(inst);
    if (!r.feasible()) continue;
    ASSERT_EQ(rows.size(), inst.size());
    EXPECT_EQ(rows.back().f, r.cost);
  }
  EXPECT_THROW(deque_transcript(SequenceInstance(std::vector<Weight>(65, 1), std::vector<Score>(65, 1), 3)),
               TooLargeError);
}

}  // namespace
}  // namespace sompart
