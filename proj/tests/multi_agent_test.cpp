#include "sompart/linear_solver.hpp"
#include "sompart/multi_agent.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace sompart {
namespace {

AgentCatalog random_catalog(testing::Rng& rng, std::size_t n, std::size_t k) {
  std::vector<Weight> thr(k);
  std::vector<std::vector<Score>> cols(k, std::vector<Score>(n));
  for (auto& t : thr) t = testing::uniform(rng, 0, 8);
  for (auto& c : cols)
    for (auto& x : c) x = testing::uniform(rng, 0, 9);
  return AgentCatalog(std::move(thr), std::move(cols));
}

TEST(SolveAssign, TwoAgentExample) {
  const std::vector<Weight> w{1, 1};
  const std::vector<std::int64_t> c{1, 2};
  const std::vector<Score> s{4, 2};
  const auto cat = AgentCatalog::from_coefficients({1, 3}, c, s);
  const auto r = solve_assign(w, cat);
  ASSERT_TRUE(r.feasible());
  EXPECT_EQ(r.cost, 6);
  EXPECT_EQ(r.breakpoints, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(r.agents, (std::vector<std::size_t>{1, 1}));
  EXPECT_TRUE(verify_assignment(w, cat, r));
  EXPECT_EQ(solve_assign_bruteforce(w, cat).cost, 6);
}

TEST(SolveAssign, NoAgentFits) {
  const std::vector<Weight> w{1, 5};
  const AgentCatalog cat({2, 3}, {{1, 1}, {1, 1}});
  EXPECT_FALSE(solve_assign(w, cat).feasible());
  EXPECT_FALSE(solve_assign_bruteforce(w, cat).feasible());
}

TEST(SolveAssign, SingleAgentMatchesLinear) {
  testing::Rng rng(41);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto inst = testing::random_sequence(rng, 40, 4, 9, 12);
    const std::int64_t coef = testing::uniform(rng, 0, 3);
    const auto cat = AgentCatalog::from_coefficients({inst.threshold()}, std::vector<std::int64_t>{coef},
                                                     inst.scores());
    std::vector<Score> scaled(inst.scores().begin(), inst.scores().end());
    for (auto& x : scaled) x *= coef;
    const auto a = solve_assign(inst.weights(), cat);
    const auto b = solve_linear(SequenceInstance({inst.weights().begin(), inst.weights().end()}, scaled,
                                                 inst.threshold()));
    ASSERT_EQ(a.feasible(), b.feasible());
    if (a.feasible()) {
      ASSERT_EQ(a.cost, b.cost);
    }
  }
}

TEST(SolveAssign, DuplicateAgentChangesNothing) {
  testing::Rng rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const auto inst = testing::random_sequence(rng, 30, 4, 9, 12);
    const auto cat = AgentCatalog({inst.threshold()}, {{inst.scores().begin(), inst.scores().end()}});
    const auto twice = cat.with_agent(inst.threshold(), {inst.scores().begin(), inst.scores().end()});
    const auto a = solve_assign(inst.weights(), cat), b = solve_assign(inst.weights(), twice);
    ASSERT_EQ(a.feasible(), b.feasible());
    if (!a.feasible()) continue;
    ASSERT_EQ(a.cost, b.cost);
    for (std::size_t ag : b.agents) EXPECT_EQ(ag, 1u);  // ties go to the lower index
  }
}

TEST(SolveAssign, DifferentialAgainstBruteForce) {
  testing::Rng rng(43);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 10));
    const auto k = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    std::vector<Weight> w(n);
    for (auto& x : w) x = testing::uniform(rng, 0, 4);
    const auto cat = random_catalog(rng, n, k);
    const auto a = solve_assign(w, cat), b = solve_assign_bruteforce(w, cat);
    ASSERT_EQ(a.feasible(), b.feasible()) << "trial " << trial;
    if (!a.feasible()) continue;
    ASSERT_EQ(a.cost, b.cost) << "trial " << trial;
    ASSERT_TRUE(verify_assignment(w, cat, a));
    ASSERT_TRUE(verify_assignment(w, cat, b));
  }
}

TEST(SolveAssign, PerAgentWitnesses) {
  testing::Rng rng(44);
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = static_cast<std::size_t>(testing::uniform(rng, 1, 60));
    const auto k = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
    std::vector<Weight> w(n);
    for (auto& x : w) x = testing::uniform(rng, 0, 3);
    const auto cat = random_catalog(rng, n, k);
    std::vector<testing::DequeWitness> obs(k);
    if (!solve_assign(w, cat, &obs).feasible()) continue;
    for (const auto& o : obs) {
      ASSERT_TRUE(o.failures.empty()) << o.failures.front();
      ASSERT_LE(o.events, 4 * n);
    }
  }
}

TEST(AgentCatalog, RejectsBadShapes) {
  EXPECT_THROW(AgentCatalog({}, {}), ValidationError);
  EXPECT_THROW(AgentCatalog({1}, {{1}, {2}}), ValidationError);
  EXPECT_THROW(AgentCatalog({1, 1}, {{1}, {2, 3}}), ValidationError);
  EXPECT_THROW(AgentCatalog({-1}, {{1}}), ValidationError);
  const std::vector<Weight> w{1, 1, 1};
  EXPECT_THROW(solve_assign(w, AgentCatalog({1}, {{1, 1}})), ValidationError);
}

TEST(AgentCatalog, ReadsBothModes) {
  const std::vector<Score> s{4, 2};
  std::istringstream p1("P1\n2\n1 1\n3 2\n");
  const auto a = read_agent_catalog(p1, s);
  EXPECT_EQ(a.agents(), 2u);
  EXPECT_EQ(a.threshold(2), 3);
  EXPECT_EQ(std::vector<Score>(a.column(2).begin(), a.column(2).end()), (std::vector<Score>{8, 4}));

  std::istringstream p2("P2\n2\n1\n3\n4 8\n2 4\n");
  const auto b = read_agent_catalog(p2, s);
  EXPECT_EQ(std::vector<Score>(b.column(1).begin(), b.column(1).end()), (std::vector<Score>{4, 2}));
  EXPECT_EQ(std::vector<Score>(b.column(2).begin(), b.column(2).end()), (std::vector<Score>{8, 4}));

  std::istringstream bad("P3\n1\n1\n");
  EXPECT_THROW(read_agent_catalog(bad, s), ParseError);
}

TEST(AssignResult, Writes) {
  std::ostringstream out;
  write_assign_result(out, {Status::Feasible, 6, {1, 2}, {1, 1}});
  EXPECT_EQ(out.str(), "6\n1 2\n1 1\n");
}

}  // namespace
}  // namespace sompart
