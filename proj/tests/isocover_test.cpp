#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "magiccover/families.hpp"
#include "magiccover/isocover.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace magiccover {
namespace {

using testing::code_of;

std::set<oracle::Copy> as_set(const std::vector<CopySet>& copies) {
  std::set<oracle::Copy> out;
  for (const auto& c : copies) out.emplace(c.vertices, c.edges);
  return out;
}

void expect_matches_oracle(const Graph& g, const Graph& h) {
  const auto got = enumerate_copies(g, h);
  EXPECT_EQ(as_set(got), oracle::naive_copies(g, h));
  EXPECT_EQ(as_set(got).size(), got.size());
}

TEST(EnumerateCopies, FlowerSevenHasFourteenTriangles) {
  EXPECT_EQ(count_copies(flower(7), cycle(3)), 14u);
  EXPECT_TRUE(has_h_covering(flower(7), cycle(3)));
}

TEST(EnumerateCopies, FlowerThreeHasRimTriangle) {
  EXPECT_EQ(count_copies(flower(3), cycle(3)), 7u);
  expect_matches_oracle(flower(3), cycle(3));
}

TEST(EnumerateCopies, PathWindows) {
  EXPECT_EQ(count_copies(path(5), path(3)), 3u);
  EXPECT_EQ(count_copies(amalgamate(path(3), "p3", 2).graph, path(3)), 3u);
  EXPECT_FALSE(has_h_covering(path(5), cycle(3)));
  EXPECT_TRUE(enumerate_copies(path(5), cycle(3)).empty());
}

TEST(EnumerateCopies, BananaUnits) {
  const auto unit = banana(1, 4).graph;
  EXPECT_EQ(count_copies(banana(2, 4).graph, unit), 2u);
  EXPECT_TRUE(has_h_covering(banana(2, 4).graph, unit));
  EXPECT_EQ(count_copies(banana(3, 5).graph, banana(2, 5).graph), 3u);
}

TEST(EnumerateCopies, FirecrackerPatterns) {
  // n = 5: only the k-1 intended copies
  for (int k = 2; k <= 6; ++k) {
    EXPECT_EQ(count_copies(firecracker(k, 5).graph, firecracker(2, 5).graph), static_cast<std::size_t>(k - 1));
  }
  // n = 4: inner path vertices have degree 3 and act as extra star centres
  const std::vector<std::size_t> n4{1, 2, 5, 8, 12, 16};
  for (int k = 2; k <= 7; ++k) {
    EXPECT_EQ(count_copies(firecracker(k, 4).graph, firecracker(2, 4).graph), n4[k - 2]) << "k=" << k;
  }
}

TEST(EnumerateCopies, AgreesWithNaiveOracle) {
  expect_matches_oracle(path(5), path(3));
  expect_matches_oracle(flower(3), path(3));
  expect_matches_oracle(wheel(5), cycle(3));
  expect_matches_oracle(wheel(5), cycle(4));
  expect_matches_oracle(wheel(4), k4_minus());
  expect_matches_oracle(banana(2, 4).graph, banana(1, 4).graph);
  expect_matches_oracle(firecracker(2, 4).graph, star(4));
  expect_matches_oracle(firecracker(2, 5).graph, star(5));
  expect_matches_oracle(path_attach(cycle(3), "c1", 3).graph, path_attach(cycle(3), "c1", 2).graph);
  expect_matches_oracle(amalgamate(cycle(4), "c1", 2).graph, path(4));
}

TEST(EnumerateCopies, AgreesWithNaiveOracleOnRandomGraphs) {
  std::mt19937 rng(20261015);
  const std::vector<Graph> patterns{path(3), path(4), cycle(3), cycle(4), star(4), k4_minus()};
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 5 + trial % 4;
    std::vector<VertexId> vs;
    for (int i = 0; i < n; ++i) vs.push_back("r" + std::to_string(i));
    EdgeList es;
    std::bernoulli_distribution coin(0.45);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (coin(rng)) es.emplace_back(vs[a], vs[b]);
      }
    }
    const Graph g(vs, es);
    for (const auto& h : patterns) expect_matches_oracle(g, h);
  }
}

TEST(EnumerateCopies, WholeGraphIsOneCopy) {
  for (const auto& g : {k4_minus(), flower(5), wheel(6), banana(2, 5).graph, firecracker(3, 4).graph}) {
    const auto copies = enumerate_copies(g, g);
    ASSERT_EQ(copies.size(), 1u);
    EXPECT_EQ(copies.front().vertices.size(), g.num_vertices());
    EXPECT_EQ(copies.front().edges.size(), g.num_edges());
  }
}

TEST(EnumerateCopies, CopiesTimesAutomorphismsEqualsEmbeddings) {
  const std::vector<std::pair<Graph, Graph>> cases{
      {flower(7), cycle(3)}, {wheel(6), path(3)}, {wheel(5), cycle(4)},
      {flower(5), path(4)},  {wheel(6), star(4)}, {flower(5), k4_minus()},
  };
  for (const auto& [g, h] : cases) {
    const auto aut = count_embeddings(h, h);
    EXPECT_EQ(count_copies(g, h) * aut, count_embeddings(g, h));
  }
  EXPECT_EQ(count_embeddings(cycle(3), cycle(3)), 6u);
  EXPECT_EQ(count_embeddings(path(3), path(3)), 2u);
  EXPECT_EQ(count_embeddings(star(5), star(5)), 24u);
}

TEST(EnumerateCopies, WitnessIsAnEmbedding) {
  const Graph g = firecracker(4, 5).graph;
  const Graph h = firecracker(2, 5).graph;
  for (const auto& c : enumerate_copies(g, h)) {
    ASSERT_EQ(c.witness.size(), h.num_vertices());
    std::set<std::size_t> image(c.witness.begin(), c.witness.end());
    EXPECT_EQ(image.size(), h.num_vertices());
    EXPECT_TRUE(std::equal(image.begin(), image.end(), c.vertices.begin()));
    for (const auto& e : h.edges()) EXPECT_TRUE(g.adjacent(c.witness[e.u], c.witness[e.v]));
    EXPECT_TRUE(isomorphic(copy_subgraph(g, c), h));
  }
}

TEST(EnumerateCopies, OrderIsSortedAndThreadIndependent) {
  const Graph g = flower(9);
  IsoOptions one;
  one.threads = 1;
  IsoOptions many;
  many.threads = 4;
  const auto a = enumerate_copies(g, path(4), one);
  const auto b = enumerate_copies(g, path(4), many);
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
  EXPECT_EQ(a, b);
}

TEST(EnumerateCopies, Limits) {
  IsoOptions small;
  small.max_pattern_vertices = 3;
  EXPECT_EQ(code_of([&] { enumerate_copies(flower(5), cycle(4), small); }), ErrorCode::PatternTooLarge);
  IsoOptions few;
  few.max_copies = 5;
  EXPECT_EQ(code_of([&] { enumerate_copies(flower(7), cycle(3), few); }), ErrorCode::CopyLimitExceeded);
}

TEST(Isomorphic, Basics) {
  EXPECT_TRUE(isomorphic(path(3), star(3)));
  EXPECT_FALSE(isomorphic(path(4), star(4)));
  EXPECT_FALSE(isomorphic(cycle(4), k4_minus()));
  EXPECT_TRUE(isomorphic(banana(1, 4).graph, banana_unit(4)));
}

}  // namespace
}  // namespace magiccover
