#include "sompart/oracle.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace sompart {
namespace {

const SequenceInstance kSmall({1, 1, 1}, {5, 3, 4}, 2);

TEST(SolveExhaustive, SmallExample) {
  const auto r = solve_exhaustive(kSmall);
  ASSERT_TRUE(r.feasible());
  EXPECT_EQ(r.cost, 9);
  // Both {1,2}{3} and {1}{2,3} cost 9; the lexicographically smaller list wins.
  EXPECT_EQ(r.breakpoints, (std::vector<std::size_t>{1, 3}));
  EXPECT_TRUE(verify_partition(kSmall, r));
}

TEST(SolveExhaustive, SingleItemAndOversized) {
  EXPECT_EQ(solve_exhaustive(SequenceInstance({1}, {7}, 1)).cost, 7);
  EXPECT_FALSE(solve_exhaustive(SequenceInstance({3}, {7}, 2)).feasible());
}

TEST(SolveExhaustive, RefusesLargeInstances) {
  EXPECT_THROW(solve_exhaustive(SequenceInstance(std::vector<Weight>(21, 1), std::vector<Score>(21, 1), 5)),
               TooLargeError);
}

TEST(SolveNaive, Examples) {
  EXPECT_EQ(solve_naive(kSmall).cost, 9);
  EXPECT_EQ(solve_naive(SequenceInstance({1, 1, 1}, {5, 3, 4}, 3)).cost, 5);
  const SequenceInstance inst({1, 1, 1}, {3, 1, 2}, 3);
  const auto f = optimal_prefix_costs(inst);
  EXPECT_EQ(f, (std::vector<CostValue>{CostValue(0), CostValue(3), CostValue(3), CostValue(3)}));
  EXPECT_EQ(solve_naive(inst).cost, 3);
}

TEST(SolveNaive, UnreachablePrefixes) {
  const SequenceInstance inst({1, 5, 1}, {1, 1, 1}, 2);
  const auto f = optimal_prefix_costs(inst);
  EXPECT_TRUE(f[1].reachable());
  EXPECT_FALSE(f[2].reachable());
  EXPECT_FALSE(f[3].reachable());
  EXPECT_FALSE(solve_naive(inst).feasible());
}

TEST(SolveNaive, AgreesWithExhaustive) {
  testing::Rng rng(3);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto inst = testing::random_sequence(rng, 12, 4, 9, 12);
    const auto a = solve_exhaustive(inst), b = solve_naive(inst);
    ASSERT_EQ(a.status, b.status);
    if (!a.feasible()) continue;
    ASSERT_EQ(a.cost, b.cost);
    ASSERT_TRUE(verify_partition(inst, a));
    ASSERT_TRUE(verify_partition(inst, b));
  }
}

TEST(SolveNaive, PrefixCostsAreMonotoneUnderZeroWeightExtension) {
  // Appending a zero-weight, zero-score item never increases the optimum.
  testing::Rng rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto inst = testing::random_sequence(rng, 12, 4, 9, 12);
    std::vector<Weight> w(inst.weights().begin(), inst.weights().end());
    std::vector<Score> s(inst.scores().begin(), inst.scores().end());
    w.push_back(0);
    s.push_back(0);
    const auto a = solve_naive(inst), b = solve_naive(SequenceInstance(w, s, inst.threshold()));
    ASSERT_EQ(a.status, b.status);
    if (a.feasible()) {
      ASSERT_EQ(a.cost, b.cost);
    }
  }
}

TEST(TreeExhaustive, Examples) {
  EXPECT_EQ(solve_tree_exhaustive(TreeInstance({0}, {1}, {4}, 1)), CostValue(4));
  EXPECT_EQ(solve_tree_exhaustive(TreeInstance({0, 1, 2}, {1, 1, 1}, {5, 3, 4}, 2)), CostValue(9));
  EXPECT_EQ(solve_tree_exhaustive(TreeInstance({0, 1, 1}, {0, 1, 1}, {0, 2, 3}, 1)), CostValue(5));
  EXPECT_FALSE(solve_tree_exhaustive(TreeInstance({0, 1}, {1, 3}, {1, 1}, 2)).reachable());
}

TEST(TreeExhaustive, PathTreeMatchesSequence) {
  testing::Rng rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const auto inst = testing::random_sequence(rng, 10, 4, 9, 12);
    const auto seq = solve_naive(inst);
    const auto tree = solve_tree_exhaustive(path_tree(inst));
    ASSERT_EQ(seq.feasible(), tree.reachable());
    if (seq.feasible()) {
      ASSERT_EQ(tree.value(), seq.cost);
    }
  }
}

TEST(Quadrangle, NonConcavityFixture) {
  EXPECT_TRUE(check_nonconcavity_fixture());
  constexpr Score s[] = {3, 1, 1, 3};
  EXPECT_EQ(range_max(s, 1, 3) + range_max(s, 2, 4), 6);
  EXPECT_EQ(range_max(s, 2, 3) + range_max(s, 1, 4), 4);
}

TEST(Quadrangle, HoldsOnConstantAndIncreasingScores) {
  constexpr Score flat[] = {1, 1, 1, 1};
  constexpr Score up[] = {1, 2, 3, 4};
  EXPECT_TRUE(range_max_satisfies_quadrangle(flat, 1, 2, 3, 4));
  EXPECT_TRUE(range_max_satisfies_quadrangle(up, 1, 2, 3, 4));
  EXPECT_EQ(range_max(flat, 1, 3) + range_max(flat, 2, 4), range_max(flat, 2, 3) + range_max(flat, 1, 4));
}

}  // namespace
}  // namespace sompart
