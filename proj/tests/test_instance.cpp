#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "nctree/instance.hpp"
#include "support.hpp"

using namespace nctree;
using nctree::test::parabola;

namespace {

Instance make(int n_red, std::vector<int> f, int n_blue) {
  auto pts = parabola(n_red + n_blue);
  std::vector<ExactPoint> red(pts.begin(), pts.begin() + n_red);
  std::vector<ExactPoint> blue(pts.begin() + n_red, pts.end());
  return Instance(red, std::move(f), blue);
}

// Decrement the largest budget, lowest index first, one unit at a time.
std::vector<int> naive_reduce(std::vector<int> f, std::int64_t slack) {
  while (slack-- > 0) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < f.size(); ++i)
      if (f[i] > f[best]) best = i;
    --f[best];
  }
  return f;
}

}  // namespace

TEST(Instance, IndexingPutsRedFirst) {
  const auto inst = make(2, {3, 2}, 3);
  EXPECT_EQ(inst.size(), 5);
  EXPECT_TRUE(inst.is_red(0));
  EXPECT_TRUE(inst.is_red(1));
  EXPECT_TRUE(inst.is_blue(2));
  EXPECT_EQ(inst.budget(0), 3);
  EXPECT_EQ(inst.colors()[4], Color::Blue);
}

TEST(Instance, RejectsBadInput) {
  EXPECT_THROW(make(1, {1}, 2), InvalidInstance);
  EXPECT_THROW(make(2, {3}, 2), InvalidInstance);
  EXPECT_THROW(Instance({{0, 0}}, {2}, {{1, 1}, {2, 2}}), GeneralPositionError);
  EXPECT_THROW(Instance({{0, 0}}, {2}, {{0, 0}, {2, 5}}), GeneralPositionError);
  EXPECT_THROW(Instance({{kMaxCoord + 1, 0}}, {2}, {{0, 1}, {1, 5}}), InvalidInstance);
}

TEST(Feasibility, Examples) {
  const auto empty_red = check_feasibility(make(0, {}, 2));
  EXPECT_EQ(empty_red.status, Feasibility::Equality);
  EXPECT_EQ(empty_red.slack, 0);

  const auto strict = check_feasibility(make(7, std::vector<int>(7, 3), 7));
  EXPECT_EQ(strict.status, Feasibility::StrictlyFeasible);
  EXPECT_EQ(strict.bound, 9);
  EXPECT_EQ(strict.slack, 2);

  const auto high = check_feasibility(make(1, {4}, 5));
  EXPECT_EQ(high.status, Feasibility::InfeasibleHigh);
  EXPECT_EQ(high.slack, -1);

  const auto low = check_feasibility(make(3, {3, 3, 3}, 1));
  EXPECT_EQ(low.status, Feasibility::InfeasibleLow);
  EXPECT_FALSE(low.feasible());
}

TEST(ReduceBudget, Examples) {
  EXPECT_EQ(reduce_budget(make(2, {3, 3}, 4)), (std::vector<int>{3, 3}));
  EXPECT_EQ(reduce_budget(make(2, {4, 3}, 3)), (std::vector<int>{2, 3}));
  EXPECT_EQ(reduce_budget(make(1, {2}, 2)), (std::vector<int>{2}));
  EXPECT_EQ(reduce_budget(make(0, {}, 2)), (std::vector<int>{}));
}

TEST(ReduceBudget, RejectsInfeasible) {
  EXPECT_THROW(reduce_budget(make(1, {4}, 5)), InfeasibleInstance);
  EXPECT_THROW(reduce_budget(make(1, {4}, 1)), InfeasibleInstance);
}

TEST(ReduceBudget, MatchesUnitDecrementRule) {
  std::mt19937_64 rng(99);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int trial = 0; trial < 2000; ++trial) {
    const int n_red = pick(1, 12);
    std::vector<int> f(n_red);
    for (int& v : f) v = pick(2, 9);
    const auto bound = leaf_bound(f);
    const int n_blue = pick(2, static_cast<int>(bound));
    const auto inst = make(n_red, f, n_blue);
    const auto reduced = reduce_budget(inst);
    ASSERT_EQ(reduced, naive_reduce(f, bound - n_blue));
    ASSERT_EQ(leaf_bound(reduced), n_blue);
    for (int i = 0; i < n_red; ++i) {
      ASSERT_GE(reduced[i], 2);
      ASSERT_LE(reduced[i], f[i]);
    }
  }
}

TEST(ReduceBudget, IdempotentOnEquality) {
  const auto inst = make(3, {4, 2, 5}, 7);
  const auto once = reduce_budget(inst);
  EXPECT_EQ(once, (std::vector<int>{4, 2, 5}));
  const auto again = reduce_budget(make(3, once, 7));
  EXPECT_EQ(again, once);
}

TEST(UniformInstance, Examples) {
  const auto pts = parabola(9);
  const std::vector<ExactPoint> red(pts.begin(), pts.begin() + 7);

  const auto path = uniform_instance({pts[0], pts[1], pts[2]}, {pts[3], pts[4]}, 2);
  EXPECT_EQ(check_feasibility(path).status, Feasibility::Equality);

  const auto p16 = parabola(14);
  const auto strict = uniform_instance({p16.begin(), p16.begin() + 7}, {p16.begin() + 7, p16.end()}, 3);
  EXPECT_EQ(check_feasibility(strict).status, Feasibility::StrictlyFeasible);

  const auto high = uniform_instance(red, {pts[7], pts[8], {100, -3}}, 2);
  EXPECT_EQ(check_feasibility(high).status, Feasibility::InfeasibleHigh);

  EXPECT_THROW(uniform_instance(red, {pts[7], pts[8]}, 1), InvalidInstance);
}

TEST(UniformInstance, OverridesExistingBudgets) {
  const auto inst = make(3, {2, 7, 4}, 3);
  const auto u = uniform_instance(inst, 5);
  EXPECT_EQ(std::vector<int>(u.budgets().begin(), u.budgets().end()), (std::vector<int>{5, 5, 5}));
  EXPECT_EQ(u.blue_count(), 3);
  EXPECT_EQ(u.point(4), inst.point(4));
}
