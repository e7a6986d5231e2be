#include <gtest/gtest.h>

#include <cmath>

#include "brute_force.hpp"
#include "highway/errors.hpp"
#include "highway/line.hpp"
#include "highway/oracle.hpp"
#include "highway/tree.hpp"

using namespace highway;

TEST(TreeView, RerootingKeepsEdges) {
  Instance inst = make_tree({0, 1, 1, 2, 3}, {});
  auto view = rooted_view(inst, 4);
  EXPECT_EQ(view.root, 4);
  EXPECT_EQ(view.parent, (std::vector<int>{2, 4, 1, 0, 3}));
  EXPECT_EQ(view.order.front(), 4);
  EXPECT_EQ(view.order.size(), 5u);
  EXPECT_EQ(rooted_view(inst).root, 1);
  EXPECT_THROW(rooted_view(inst, 6), ValidationError);
  EXPECT_THROW(rooted_view(make_line(2, {}), std::nullopt), ValidationError);
}

TEST(TreeRandom, SingleItem) {
  Instance inst = make_tree({0}, {{1, 1, 1}});
  int ones = 0;
  for (std::uint64_t s = 0; s < 2000; ++s) {
    auto r = tree_random(inst, s);
    ASSERT_TRUE(r.prices[0] == Rational(0) || r.prices[0] == Rational(1));
    ones += r.prices[0] == Rational(1) ? 1 : 0;
  }
  EXPECT_NEAR(ones, 1000, 3 * std::sqrt(500.0));
}

TEST(TreeRandom, ParentDifferences) {
  Instance inst = bf::random_instance(Topology::tree, 6, 5, 1, 4, 8);
  auto r = tree_random(inst, 3);
  const auto view = rooted_view(inst);
  for (int i = 1; i <= 6; ++i) {
    const int p = view.parent[i - 1];
    EXPECT_EQ(r.prices[i - 1], Rational(r.sums[i - 1] - (p == 0 ? 0 : r.sums[p - 1])));
    EXPECT_GE(r.sums[i - 1], 0);
    EXPECT_LE(r.sums[i - 1], 4);
  }
  EXPECT_EQ(r.profit, bf::coupon_profit(inst, r.prices));
  EXPECT_EQ(tree_random(inst, 3).prices, r.prices);
}

TEST(TreeRandom, DescendingPathTelescopes) {
  // chain 1 - 2 - 3 - 4 with a side branch 5 under 2
  Instance inst = make_tree({0, 1, 2, 3, 2}, {{2, 4, 3}, {1, 5, 3}});
  const auto view = rooted_view(inst);
  for (std::uint64_t s = 0; s < 50; ++s) {
    auto r = tree_random(inst, s);
    EXPECT_EQ(bundle_sum(inst, 0, r.prices), Rational(r.sums[3] - r.sums[0]));
    EXPECT_EQ(bundle_sum(inst, 1, r.prices), Rational(r.sums[4]));
  }
  (void)view;
}

TEST(TreeRandom, PathTreeMatchesLineDistribution) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Instance line = bf::random_instance(Topology::line, 1 + static_cast<int>(seed % 4), 1 + static_cast<int>(seed % 4),
                                        1, 2, seed);
    std::vector<int> parents{0};
    for (int i = 2; i <= line.n(); ++i) parents.push_back(i - 1);
    Instance tree = make_tree(parents, line.customers());
    // the tree's item 1 takes the role of the line's first difference s_1 - s_0 with s_0 = 0, so the
    // tree mean equals the line mean conditioned on s_0 = 0; compare enumerations directly
    EXPECT_EQ(exact_expectation(Algorithm::tree_random, tree, Execution::serial), bf::tree_random_mean(tree));
    const auto r = tree_random(tree, seed);
    std::vector<Rational> sums{Rational(0)};
    for (auto s : r.sums) sums.emplace_back(s);
    EXPECT_EQ(r.prices, prices_from_partial_sums({sums}, line.n()));
  }
}

TEST(TreeRandom, ExpectationMatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Instance inst = bf::random_instance(Topology::tree, 1 + static_cast<int>(seed % 5), 1 + static_cast<int>(seed % 5),
                                        1, 1 + static_cast<int>(seed % 3), seed);
    EXPECT_EQ(exact_expectation(Algorithm::tree_random, inst, Execution::parallel), bf::tree_random_mean(inst));
  }
}

TEST(TreeRandom, Bound) {
  EXPECT_NEAR(static_cast<double>(tree_ratio_bound(Rational(1, 2))), 32.0 / 3.0, 1e-12);
  EXPECT_THROW(tree_random(make_line(2, {}), 0), ValidationError);
}
