#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nctree/tree_builder.hpp"
#include "support.hpp"

using namespace nctree;
using nctree::test::is_spanning_tree;
using nctree::test::parabola;

namespace {

// Every labelled tree on n vertices, by scanning all (n-1)-edge subsets of K_n.
std::vector<std::vector<Segment>> all_trees_by_subsets(int n) {
  std::vector<Segment> all;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) all.push_back({a, b});
  std::vector<std::vector<Segment>> trees;
  const int m = static_cast<int>(all.size());
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != n - 1) continue;
    std::vector<Segment> edges;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) edges.push_back(all[i]);
    if (is_spanning_tree(edges, n)) trees.push_back(edges);
  }
  return trees;
}

std::vector<int> degrees_of(std::span<const Segment> edges, int n) {
  std::vector<int> d(n, 0);
  for (const auto& e : edges) ++d[e.a], ++d[e.b];
  return d;
}

}  // namespace

TEST(TreeFromDegrees, SingleEdge) {
  const auto t = tree_from_degrees(std::vector<int>{1, 1});
  EXPECT_EQ(t.sorted_edges(), (std::vector<Segment>{{0, 1}}));
}

TEST(TreeFromDegrees, Star) {
  const auto t = tree_from_degrees(std::vector<int>{3, 1, 1, 1});
  EXPECT_EQ(t.sorted_edges(), (std::vector<Segment>{{0, 1}, {0, 2}, {0, 3}}));
}

TEST(TreeFromDegrees, PathFromSequenceZeroOne) {
  // Decoding (0, 1): leaf 2 -> 0, then leaf 0 -> 1, then 1 - 3.
  const auto t = tree_from_degrees(std::vector<int>{2, 2, 1, 1});
  const auto edges = t.sorted_edges();
  EXPECT_EQ(edges, (std::vector<Segment>{{0, 1}, {0, 2}, {1, 3}}));

  // Among all 16 trees on 4 vertices exactly two have degrees (2,2,1,1).
  const auto trees = all_trees_by_subsets(4);
  ASSERT_EQ(trees.size(), 16u);
  int matching = 0;
  bool found = false;
  for (const auto& tree : trees) {
    if (degrees_of(tree, 4) != std::vector<int>{2, 2, 1, 1}) continue;
    ++matching;
    found = found || tree == edges;
  }
  EXPECT_EQ(matching, 2);
  EXPECT_TRUE(found);
}

TEST(TreeFromDegrees, RejectsInvalidSequences) {
  EXPECT_THROW(tree_from_degrees(std::vector<int>{1}), std::invalid_argument);
  EXPECT_THROW(tree_from_degrees(std::vector<int>{2, 1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(tree_from_degrees(std::vector<int>{0, 2, 2, 2}), std::invalid_argument);
}

TEST(TreeFromDegrees, RandomSequencesRealizedExactly) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 30)(rng);
    std::vector<int> d(n, 1);
    for (int extra = 0; extra < n - 2; ++extra) ++d[std::uniform_int_distribution<int>(0, n - 1)(rng)];
    const auto t = tree_from_degrees(d);
    ASSERT_TRUE(is_spanning_tree(t.edges(), n));
    ASSERT_EQ(t.degrees(), d);
    ASSERT_EQ(degrees_of(t.edges(), n), d);
  }
}

TEST(Prufer, RoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 25)(rng);
    std::vector<int> seq(n - 2);
    for (int& v : seq) v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const auto t = prufer_decode(seq, n);
    ASSERT_EQ(prufer_encode(t), seq);
    // Vertex v occurs deg(v) - 1 times.
    for (int v = 0; v < n; ++v) ASSERT_EQ(std::count(seq.begin(), seq.end(), v), t.degree(v) - 1);
  }
}

TEST(Prufer, DecodeCoversEveryTreeOnFiveVertices) {
  std::set<std::vector<Segment>> decoded;
  std::vector<int> seq(3, 0);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c) {
        seq = {a, b, c};
        decoded.insert(prufer_decode(seq, 5).sorted_edges());
      }
  std::set<std::vector<Segment>> brute;
  for (auto t : all_trees_by_subsets(5)) brute.insert(t);
  EXPECT_EQ(decoded, brute);
}

TEST(GeoTree, AddRemoveKeepsAdjacencyInSync) {
  GeoTree t(4);
  t.add_edge(0, 1);
  t.add_edge(2, 1);
  t.add_edge(3, 1);
  EXPECT_EQ(t.degree(1), 3);
  t.remove_edge(1, 2);
  t.add_edge(2, 0);
  EXPECT_EQ(t.degrees(), (std::vector<int>{2, 2, 1, 1}));
  EXPECT_TRUE(t.has_edge(0, 2));
  EXPECT_FALSE(t.has_edge(1, 2));
  EXPECT_EQ(t.sorted_edges(), (std::vector<Segment>{{0, 1}, {0, 2}, {1, 3}}));
}

TEST(InitialGeoTree, TwoBlueNoRed) {
  const Instance inst({}, {}, parabola(2));
  const auto t = initial_geo_tree(inst, {});
  EXPECT_EQ(t.sorted_edges(), (std::vector<Segment>{{0, 1}}));
}

TEST(InitialGeoTree, StarAtSingleRed) {
  const auto pts = parabola(4);
  const Instance inst({pts[0]}, {3}, {pts[1], pts[2], pts[3]});
  const auto t = initial_geo_tree(inst, std::vector<int>{3});
  EXPECT_EQ(t.sorted_edges(), (std::vector<Segment>{{0, 1}, {0, 2}, {0, 3}}));
}

TEST(InitialGeoTree, TwoRedPath) {
  const auto pts = parabola(4);
  const Instance inst({pts[0], pts[1]}, {2, 2}, {pts[2], pts[3]});
  const auto t = initial_geo_tree(inst, std::vector<int>{2, 2});
  EXPECT_EQ(t.degrees(), (std::vector<int>{2, 2, 1, 1}));
  EXPECT_TRUE(is_spanning_tree(t.edges(), 4));
}

TEST(InitialGeoTree, RejectsNonEqualityBudget) {
  const auto pts = parabola(4);
  const Instance inst({pts[0]}, {4}, {pts[1], pts[2], pts[3]});
  EXPECT_THROW(initial_geo_tree(inst, std::vector<int>{4}), std::invalid_argument);
}

TEST(InitialGeoTree, LeavesAreExactlyBlue) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto parsed = test::random_feasible(rng, 20, 30);
    const auto& inst = parsed.instance;
    const auto reduced = reduce_budget(inst);
    const auto t = initial_geo_tree(inst, reduced);
    ASSERT_TRUE(is_spanning_tree(t.edges(), inst.size()));
    for (int v = 0; v < inst.size(); ++v) {
      if (inst.is_blue(v))
        ASSERT_EQ(t.degree(v), 1);
      else
        ASSERT_EQ(t.degree(v), reduced[v]);
    }
  }
}
