#include <vector>

#include "gtest/gtest.h"
#include "knit/constructions.hpp"
#include "knit/graph_io.hpp"

namespace knit {
namespace {

TEST(Sharpness, SizesForThirteenFive) {
  auto w = sharpness_graph(13, 5);
  EXPECT_EQ(w.a_side, VertexSet::prefix(5));
  EXPECT_EQ(w.b_mid, (VertexSet{5, 6, 7}));
  EXPECT_EQ(w.c_side.size(), 5);
  EXPECT_EQ(w.graph.min_degree(), 7);
  EXPECT_EQ(w.x, 0);
  EXPECT_EQ(w.y, 8);
  EXPECT_EQ(w.instance.terminals(), (VertexSet{0, 5, 6, 7, 8}));
  EXPECT_EQ(w.instance.partition.parts, (std::vector<VertexSet>{{0, 8}, {5}, {6}, {7}}));
  EXPECT_TRUE(w.warning.empty());
}

TEST(Sharpness, SizesForFourteenFive) {
  auto w = sharpness_graph(14, 5);
  EXPECT_EQ(w.a_side.size(), 5);
  EXPECT_EQ(w.b_mid.size(), 3);
  EXPECT_EQ(w.c_side.size(), 6);
  EXPECT_EQ(w.graph.min_degree(), 7);
  EXPECT_FALSE(solve_knit(w.instance).has_value());
}

TEST(Sharpness, StructureAndDegreeAcrossRange) {
  for (int n = 13; n <= 24; ++n) {
    for (int k = 5; k <= (n - 3) / 2; ++k) {
      auto w = sharpness_graph(n, k);
      const Graph& g = w.graph;
      EXPECT_EQ(w.a_side.size(), (n - k + 2) / 2);
      EXPECT_EQ(w.b_mid.size(), k - 2);
      EXPECT_EQ(w.c_side.size(), (n - k + 3) / 2);
      EXPECT_EQ(g.min_degree(), sharpness_min_degree(n, k)) << n << "," << k;
      EXPECT_EQ(sharpness_min_degree(n, k), (n + k) / 2 - 2);
      EXPECT_LT(g.min_degree(), min_degree_threshold(n, k));
      for (int a : w.a_side) EXPECT_FALSE(g.neighbors(a).intersects(w.c_side));
      for (int b : w.b_mid) EXPECT_EQ(g.degree(b), n - 1);
      EXPECT_TRUE(w.warning.empty());
    }
  }
}

TEST(Sharpness, WitnessUnsolvableAcrossRange) {
  for (int n = 13; n <= 24; ++n)
    for (int k = 5; k <= (n - 3) / 2; ++k) EXPECT_FALSE(solve_knit(sharpness_graph(n, k).instance).has_value()) << n << "," << k;
}

TEST(Sharpness, OneExtraEdgeMakesWitnessSolvable) {
  auto w = sharpness_graph(13, 5);
  for (int c : w.c_side) {
    Graph g = w.graph;
    g.add_edge(w.x, c);
    auto knit = solve_knit(g, w.instance.partition.parts);
    ASSERT_TRUE(knit.has_value()) << "c=" << c;
    EXPECT_TRUE(verify_knit(g, w.instance.partition.parts, *knit));
  }
}

TEST(Sharpness, OutOfRegimeWarnsAndBadInputThrows) {
  EXPECT_FALSE(sharpness_graph(10, 5).warning.empty());
  EXPECT_FALSE(sharpness_graph(13, 4).warning.empty());
  EXPECT_THROW(sharpness_graph(5, 7), InputError);
  EXPECT_THROW(sharpness_graph(13, 1), InputError);
  EXPECT_THROW(sharpness_graph(65, 5), InputError);
}

TEST(RandomMinDegree, FloorAndDeterminism) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Graph g = random_min_degree_graph(13, 8, seed);
    EXPECT_GE(g.min_degree(), 8);
    EXPECT_EQ(g, random_min_degree_graph(13, 8, seed));
    Graph e = random_exact_min_degree_graph(13, 8, seed);
    EXPECT_EQ(e.min_degree(), 8);
  }
  EXPECT_NE(to_graph6(random_min_degree_graph(16, 9, 1)), to_graph6(random_min_degree_graph(16, 9, 2)));
  EXPECT_EQ(random_min_degree_graph(9, 8, 5), named_family("complete", {9}));
  EXPECT_THROW(random_min_degree_graph(5, 5, 1), InputError);
}

TEST(NamedFamily, Baselines) {
  EXPECT_EQ(named_family("complete", {6}).edge_count(), 15);
  Graph c6 = named_family("cycle", {6});
  EXPECT_EQ(c6.edge_count(), 6);
  for (int v = 0; v < 6; ++v) EXPECT_EQ(c6.degree(v), 2);
  Graph k33 = named_family("complete_bipartite", {3, 3});
  EXPECT_EQ(k33.edge_count(), 9);
  EXPECT_FALSE(k33.adjacent(0, 1));
  EXPECT_TRUE(k33.adjacent(0, 3));
  EXPECT_EQ(named_family("empty", {4}).edge_count(), 0);
  EXPECT_EQ(named_family("sharpness", {13, 5}), sharpness_graph(13, 5).graph);
  EXPECT_THROW(named_family("petersen", {}), InputError);
  EXPECT_THROW(named_family("complete", {}), InputError);
  EXPECT_THROW(named_family("cycle", {2}), InputError);
}

}  // namespace
}  // namespace knit
