#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "magiccover/constructions.hpp"
#include "magiccover/families.hpp"
#include "magiccover/search.hpp"
#include "magiccover/verifier.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace magiccover {
namespace {

SearchOptions mode(SearchMode m) {
  SearchOptions o;
  o.mode = m;
  return o;
}

void expect_sound(const Graph& g, const Graph& h, const SearchOutcome& out) {
  ASSERT_EQ(out.kind, OutcomeKind::Solution);
  ASSERT_TRUE(out.solution.has_value());
  const auto r = verify_supermagic(g, h, *out.solution);
  EXPECT_TRUE(r.certified());
  EXPECT_EQ(r.magic_sum, out.magic_sum);
}

TEST(Search, PathFourByPathThree) {
  const Graph g = path(4), h = path(3);
  const auto out = search_supermagic(g, h);
  expect_sound(g, h, out);
  const auto all = search_supermagic(g, h, mode(SearchMode::CountAll));
  EXPECT_EQ(all.kind, OutcomeKind::Count);
  EXPECT_EQ(all.count, oracle::naive_supermagic_count(g, h));
}

TEST(Search, SpecimenSolutionIsAmongTheCounted) {
  // vertices (1,2,4,3), edges (7,6,5): both windows sum to 20
  const Graph g = path(4);
  const LabelVector labels{1, 2, 4, 3, 7, 6, 5};
  EXPECT_EQ(verify_supermagic(g, path(3), labels).magic_sum, std::optional<Label>(20));
  auto target = mode(SearchMode::TargetSum);
  target.target = 20;
  const auto out = search_supermagic(g, path(3), target);
  expect_sound(g, path(3), out);
  EXPECT_EQ(out.magic_sum, std::optional<Label>(20));
}

TEST(Search, TriangleCountsAllSuperBijections) {
  const auto out = search_supermagic(cycle(3), cycle(3), mode(SearchMode::CountAll));
  EXPECT_EQ(out.kind, OutcomeKind::Count);
  EXPECT_EQ(out.count, 36u);
}

TEST(Search, CountAllMatchesNaiveOracle) {
  const std::vector<std::pair<Graph, Graph>> cases{
      {path(4), path(3)},        {path(5), path(3)},        {path(5), path(4)},
      {star(4), path(3)},        {cycle(4), path(3)},       {k4_minus(), cycle(3)},
      {cycle(4), path(4)},       {amalgamate(path(3), "p3", 2).graph, path(3)},
      {star(5), star(3)},        {path(3), path(2)},
  };
  for (const auto& [g, h] : cases) {
    ASSERT_LE(g.num_elements(), 9u);
    const auto out = search_supermagic(g, h, mode(SearchMode::CountAll));
    EXPECT_EQ(out.count, oracle::naive_supermagic_count(g, h)) << g.num_vertices() << "/" << h.num_vertices();
  }
}

TEST(Search, TargetCountMatchesNaiveOracle) {
  for (Label t = 15; t <= 25; ++t) {
    SearchOptions o = mode(SearchMode::TargetSum);
    o.target = t;
    const auto first = search_supermagic(path(4), path(3), o);
    const auto expected = oracle::naive_supermagic_count(path(4), path(3), t);
    EXPECT_EQ(first.kind == OutcomeKind::Solution, expected > 0) << "target " << t;
    if (first.kind == OutcomeKind::Solution) {
      EXPECT_EQ(first.magic_sum, std::optional<Label>(t));
    }
  }
}

TEST(Search, PruningDoesNotChangeCounts) {
  const std::vector<std::pair<Graph, Graph>> cases{
      {path(4), path(3)}, {cycle(4), path(3)}, {k4_minus(), cycle(3)}, {star(5), star(3)}, {path(5), path(3)}};
  for (const auto& [g, h] : cases) {
    auto on = mode(SearchMode::CountAll);
    auto off = on;
    off.pruning = false;
    const auto a = search_supermagic(g, h, on);
    const auto b = search_supermagic(g, h, off);
    EXPECT_EQ(a.count, b.count);
    EXPECT_LE(a.nodes, b.nodes);
  }
}

TEST(Search, FirstSolutionIsLeastInSearchOrder) {
  const Graph g = path(5), h = path(3);
  const auto copies = enumerate_copies(g, h);
  std::vector<std::vector<std::size_t>> sets;
  for (const auto& c : copies) sets.push_back(c.elements(g));
  const auto order = search_order(g.num_elements(), sets);

  // every super labeling, filtered by the copy sums
  std::optional<std::vector<Label>> best;
  std::vector<Label> vl(g.num_vertices()), el(g.num_edges());
  std::iota(vl.begin(), vl.end(), 1);
  std::iota(el.begin(), el.end(), static_cast<Label>(g.num_vertices()) + 1);
  do {
    do {
      LabelVector labels(vl);
      labels.insert(labels.end(), el.begin(), el.end());
      std::optional<Label> common;
      bool ok = true;
      for (const auto& s : sets) {
        Label t = 0;
        for (auto x : s) t += labels[x];
        if (!common) common = t;
        ok = ok && t == *common;
      }
      if (!ok) continue;
      std::vector<Label> key;
      for (auto x : order) key.push_back(labels[x]);
      if (!best || key < *best) best = key;
    } while (std::next_permutation(el.begin(), el.end()));
  } while (std::next_permutation(vl.begin(), vl.end()));

  const auto out = search_supermagic(g, h);
  expect_sound(g, h, out);
  std::vector<Label> key;
  for (auto x : order) key.push_back((*out.solution)[x]);
  ASSERT_TRUE(best.has_value());
  EXPECT_EQ(key, *best);
}

TEST(Search, SearchOrderIsAPermutation) {
  const Graph g = flower(5);
  std::vector<std::vector<std::size_t>> sets;
  for (const auto& c : enumerate_copies(g, cycle(3))) sets.push_back(c.elements(g));
  auto order = search_order(g.num_elements(), sets);
  EXPECT_EQ(order.front(), g.vertex_index("x0"));
  std::sort(order.begin(), order.end());
  std::vector<std::size_t> all(g.num_elements());
  std::iota(all.begin(), all.end(), 0);
  EXPECT_EQ(order, all);
}

TEST(Search, NoCopiesMeansNoSolution) {
  EXPECT_EQ(search_supermagic(path(5), cycle(3)).kind, OutcomeKind::NoSolution);
  const auto counted = search_supermagic(path(5), cycle(3), mode(SearchMode::CountAll));
  EXPECT_EQ(counted.kind, OutcomeKind::Count);
  EXPECT_EQ(counted.count, 0u);
}

TEST(Search, ImpossibleTargetIsNoSolution) {
  auto o = mode(SearchMode::TargetSum);
  o.target = 1000;
  EXPECT_EQ(search_supermagic(path(4), path(3), o).kind, OutcomeKind::NoSolution);
}

TEST(Search, NodeLimitGivesExhausted) {
  auto o = mode(SearchMode::CountAll);
  o.node_limit = 50;
  const auto out = search_supermagic(flower(3), cycle(3), o);
  EXPECT_EQ(out.kind, OutcomeKind::Exhausted);
  EXPECT_LE(out.nodes, 51u);
}

TEST(Search, SymmetryBreakingStillSound) {
  for (const auto& [g, h] : std::vector<std::pair<Graph, Graph>>{
           {star(5), star(3)}, {k4_minus(), cycle(3)}, {banana(2, 3).graph, banana(1, 3).graph}}) {
    auto o = mode(SearchMode::FirstSolution);
    o.symmetry_breaking = true;
    const auto with = search_supermagic(g, h, o);
    const auto without = search_supermagic(g, h);
    EXPECT_EQ(with.kind, without.kind);
    if (with.kind == OutcomeKind::Solution) {
      expect_sound(g, h, with);
      EXPECT_LE(with.nodes, without.nodes);
    }
  }
}

TEST(Search, FindsFirecrackerLabelingIndependently) {
  const Graph g = firecracker(2, 4).graph;
  const Graph h = firecracker(2, 4).graph;
  expect_sound(g, h, search_supermagic(g, h));
}

TEST(Search, FlowerFiveWithTarget) {
  auto o = mode(SearchMode::TargetSum);
  o.target = 87;
  const auto out = search_supermagic(flower(5), cycle(3), o);
  expect_sound(flower(5), cycle(3), out);
  EXPECT_EQ(out.magic_sum, std::optional<Label>(87));
}

TEST(Search, FlowerSevenWithTarget) {
  auto o = mode(SearchMode::TargetSum);
  o.target = 119;
  const auto out = search_supermagic(flower(7), cycle(3), o);
  expect_sound(flower(7), cycle(3), out);
}

TEST(CopyOrbits, FlowerSplitsIntoRimAndPendantTriangles) {
  const Graph g = flower(5);
  const auto copies = enumerate_copies(g, cycle(3));
  const auto orbits = copy_orbits(g, copies);
  ASSERT_EQ(orbits.size(), 2u);
  EXPECT_EQ(orbits[0].size(), 5u);
  EXPECT_EQ(orbits[1].size(), 5u);
  for (const auto& orbit : orbits) {
    const bool pendant = copies[orbit.front()].vertices.back() > g.vertex_index("x5");
    for (auto i : orbit) EXPECT_EQ(copies[i].vertices.back() > g.vertex_index("x5"), pendant);
  }
}

TEST(CopyOrbits, CappedAutomorphismsGiveFinerGroups) {
  const Graph g = flower(5);
  const auto copies = enumerate_copies(g, cycle(3));
  const auto groups = copy_orbits(g, copies, 1);
  EXPECT_GE(groups.size(), copy_orbits(g, copies).size());
  std::size_t members = 0;
  for (const auto& grp : groups) members += grp.size();
  EXPECT_EQ(members, copies.size());
}

}  // namespace
}  // namespace magiccover
