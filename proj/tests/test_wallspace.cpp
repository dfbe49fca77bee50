#include "support.hpp"

#include <gtest/gtest.h>

using namespace wallcube;
using namespace wallcube::testing;

namespace {

Wallspace c8_single() {
  auto g = cycle(8);
  return Wallspace(g, canonical_divisions(g, {vs({0, 4})}).divisions);
}

Wallspace theta_walls() {
  auto g = theta();
  return Wallspace(g, canonical_divisions(g, {vs({0, 1})}).divisions);
}

}  // namespace

TEST(SideOfTriple, MajorityOnC8) {
  auto ws = c8_single();
  EXPECT_EQ(ws.side_of_triple(0, Triple(1, 2, 5)), Side::plus);
  EXPECT_EQ(ws.side_of_triple(0, Triple(1, 5, 6)), Side::minus);
  EXPECT_EQ(ws.side_of_triple(0, Triple(1, 2, 3)), Side::plus);
}

TEST(SideOfTriple, RejectsPointsOnTheWall) {
  auto ws = c8_single();
  EXPECT_THROW(ws.side_of_triple(0, Triple(0, 1, 2)), ValidationError);
  EXPECT_THROW(Triple(1, 1, 2), ValidationError);
}

TEST(SideOfTriple, EquivariantUnderDihedralGroup) {
  auto g = cycle(12);
  auto rot = enumerate_group(g, {{rotation(12, 6), reflection(12, 0)}});
  auto fam2 = close_under_action(canonical_divisions(g, {vs({0, 6}), vs({2, 8})}), rot);
  Wallspace ws2(g, fam2.divisions);
  std::map<Division, std::size_t> index;
  for (std::size_t w = 0; w < ws2.wall_count(); ++w) index.emplace(ws2.division(w), w);
  for (const auto& p : rot.elements()) {
    for (std::size_t w = 0; w < ws2.wall_count(); ++w) {
      Division img = ws2.division(w).image(p);
      std::size_t w2 = index.at(img);
      bool flip = !img.same_orientation(ws2.division(w2));
      triple_scan::for_each_triple(ws2.off_wall(), [&](const Triple& t) {
        Side s = ws2.side_of_triple(w, t);
        EXPECT_EQ(ws2.side_of_triple(w2, t.image(p)), flip ? opposite(s) : s);
        return true;
      });
    }
  }
}

TEST(Finiteness, Examples) {
  auto ws = theta_walls();
  EXPECT_EQ(ws.finiteness_condition(Triple(2, 3, 4), Triple(2, 3, 4)), 0u);
  // arc 1 = {2,3}, arc 2 = {4,5}
  EXPECT_EQ(ws.finiteness_condition(Triple(2, 3, 4), Triple(4, 5, 2)), 2u);
}

TEST(Finiteness, FourRotatedAntipodalWallsOnC16) {
  auto g = cycle(16);
  auto fam = canonical_divisions(g, {vs({0, 8}), vs({2, 10}), vs({4, 12}), vs({6, 14})});
  Wallspace ws(g, fam.divisions);
  EXPECT_EQ(ws.off_wall(), vs({1, 3, 5, 7, 9, 11, 13, 15}));
  std::size_t expected = 0;
  for (std::size_t w = 0; w < ws.wall_count(); ++w) {
    expected += triple_scan::majority(ws.division(w), Triple(1, 3, 5)) !=
                triple_scan::majority(ws.division(w), Triple(9, 11, 13));
  }
  EXPECT_EQ(ws.finiteness_condition(Triple(1, 3, 5), Triple(9, 11, 13)), expected);
  EXPECT_EQ(expected, 4u);
  EXPECT_EQ(ws.finiteness_condition(Triple(1, 3, 5), Triple(3, 5, 7)), 1u);
}

TEST(Finiteness, ZeroIffSameSideEverywhere) {
  auto ws = theta_walls();
  std::vector<Triple> all;
  triple_scan::for_each_triple(ws.off_wall(), [&](const Triple& t) {
    all.push_back(t);
    return true;
  });
  for (const auto& a : all) {
    for (const auto& b : all) {
      bool same = principal_ultrafilter(ws, a) == principal_ultrafilter(ws, b);
      EXPECT_EQ(ws.finiteness_condition(a, b) == 0, same);
    }
  }
}

TEST(Transverse, CrossingPairsOnC8) {
  auto g = cycle(8);
  Wallspace ws(g, canonical_divisions(g, {vs({0, 4}), vs({2, 6})}).divisions);
  EXPECT_TRUE(ws.transverse(0, 1));
  EXPECT_TRUE(triple_scan::transverse(ws, 0, 1));
  EXPECT_THROW(ws.transverse(0, 0), std::invalid_argument);
}

TEST(Transverse, NestedPairsAreNot) {
  auto g = cycle(12);
  Wallspace ws(g, canonical_divisions(g, {vs({1, 4}), vs({7, 10})}).divisions);
  EXPECT_FALSE(ws.transverse(0, 1));
  EXPECT_FALSE(triple_scan::transverse(ws, 0, 1));
}

TEST(Transverse, ThetaWallsPairwiseNested) {
  auto ws = theta_walls();
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) EXPECT_FALSE(ws.transverse(a, b));
  }
}

TEST(Wallspace, SmallSideWithOnePointIsRejected) {
  auto g = cycle(8);
  auto fam = canonical_divisions(g, {vs({1, 3}), vs({5, 7})});
  auto problems = Wallspace::diagnose(g, fam.divisions);
  ASSERT_EQ(problems.size(), 2u);
  EXPECT_NE(problems[0].find("empty halfspace"), std::string::npos);
  EXPECT_THROW(Wallspace(g, fam.divisions), ValidationError);
}

TEST(Wallspace, DuplicateWallsRejected) {
  auto g = cycle(8);
  auto fam = canonical_divisions(g, {vs({0, 4}), vs({1, 5})});
  // Off-the-wall {2,3,6,7}: both walls split them as {2,3} | {6,7}.
  auto problems = Wallspace::diagnose(g, fam.divisions);
  ASSERT_EQ(problems.size(), 1u);
  EXPECT_NE(problems[0].find("duplicate wall"), std::string::npos);
}

TEST(Wallspace, TooFewOffTheWallPoints) {
  auto g = cycle(8);
  auto fam = canonical_divisions(g, {vs({0, 4}), vs({1, 5}), vs({2, 6}), vs({3, 7})});
  auto problems = Wallspace::diagnose(g, fam.divisions);
  ASSERT_EQ(problems.size(), 1u);
  EXPECT_NE(problems[0].find("fewer than 3"), std::string::npos);
}

TEST(HalfspaceSubset, Reflexive) {
  auto ws = theta_walls();
  for (std::size_t w = 0; w < ws.wall_count(); ++w) {
    for (Side s : {Side::plus, Side::minus}) EXPECT_TRUE(ws.halfspace_subset({w, s}, {w, s}));
  }
}

TEST(HalfspaceSubset, ThetaSmallInsideOtherBig) {
  auto ws = theta_walls();
  // plus = small arc, minus = the other two arcs.
  EXPECT_TRUE(ws.halfspace_subset({0, Side::plus}, {1, Side::minus}));
  EXPECT_FALSE(ws.halfspace_subset({0, Side::minus}, {1, Side::minus}));
  EXPECT_TRUE(triple_scan::halfspace_subset(ws, {0, Side::plus}, {1, Side::minus}));
}

TEST(HalfspaceSubset, MatchesExplicitTripleSets) {
  auto ws = theta_walls();
  for (std::size_t i = 0; i < 2 * ws.wall_count(); ++i) {
    for (std::size_t j = 0; j < 2 * ws.wall_count(); ++j) {
      auto h1 = HalfspaceOrder::unpack(i), h2 = HalfspaceOrder::unpack(j);
      auto a = halfspace_triples(ws, h1), b = halfspace_triples(ws, h2);
      EXPECT_EQ(ws.halfspace_subset(h1, h2), std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }
  }
}

TEST(HalfspacePartition, EveryTripleOnExactlyOneSide) {
  auto ws = theta_walls();
  std::size_t n = ws.off_wall().size();
  for (std::size_t w = 0; w < ws.wall_count(); ++w) {
    auto p = halfspace_triples(ws, {w, Side::plus}), m = halfspace_triples(ws, {w, Side::minus});
    EXPECT_EQ(p.size() + m.size(), n * (n - 1) * (n - 2) / 6);
    for (const auto& t : p) EXPECT_FALSE(m.count(t));
  }
}

// Region-count criterion against the triple scan on random families, including hand-made
// divisions whose sides are arbitrary unions of components.
TEST(RegionCount, AgreesWithTripleScanOnRandomFamilies) {
  std::mt19937_64 rng(29);
  std::size_t families = 0;
  for (int trial = 0; trial < 20000 && families < 150; ++trial) {
    auto g = random_ear_graph(rng, 16);
    auto cuts = enumerate_cut_sets(g, trial % 3 == 0 ? 3 : 2);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    std::vector<Division> divs;
    for (std::size_t k = 0; k < cuts.size() && divs.size() < 4; ++k) {
      if (rng() % 2) continue;
      auto comps = components(g, cuts[k]);
      VertexSet plus, minus;
      for (const auto& c : comps) {
        auto& side = rng() % 2 ? plus : minus;
        side = set_union(side, c);
      }
      if (plus.empty() || minus.empty()) {
        plus = comps[0];
        minus = set_difference(set_difference(all_vertices(g.size()), cuts[k]), plus);
      }
      divs.push_back({cuts[k], plus, minus});
    }
    if (!Wallspace::diagnose(g, divs).empty()) continue;
    ++families;
    Wallspace ws(g, divs);
    for (std::size_t a = 0; a < ws.wall_count(); ++a) {
      for (std::size_t b = a + 1; b < ws.wall_count(); ++b) {
        ASSERT_EQ(ws.transverse(a, b), triple_scan::transverse(ws, a, b));
      }
    }
    for (std::size_t i = 0; i < 2 * ws.wall_count(); ++i) {
      for (std::size_t j = 0; j < 2 * ws.wall_count(); ++j) {
        auto h1 = HalfspaceOrder::unpack(i), h2 = HalfspaceOrder::unpack(j);
        ASSERT_EQ(ws.halfspace_subset(h1, h2), triple_scan::halfspace_subset(ws, h1, h2));
        ASSERT_EQ(ws.corner_nonempty(h1, h2), triple_scan::corner_nonempty(ws, h1, h2));
      }
    }
  }
  EXPECT_EQ(families, 150u);
}

TEST(Clique, Examples) {
  auto g = cycle(8);
  Wallspace crossing(g, canonical_divisions(g, {vs({0, 4}), vs({2, 6})}).divisions);
  auto c = max_transverse_clique(crossing);
  EXPECT_EQ(c.size, 2u);
  EXPECT_EQ(c.witness, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(max_transverse_clique(theta_walls()).size, 1u);
  EXPECT_EQ(max_transverse_clique(TransversalityMatrix{}).size, 0u);
}

TEST(Clique, MatchesSubsetEnumeration) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t m = rng() % 11;
    TransversalityMatrix t(m, std::vector<bool>(m, false));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) t[a][b] = t[b][a] = rng() % 3 != 0;
    }
    std::size_t best = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      bool clique = true;
      for (std::size_t a = 0; a < m && clique; ++a) {
        for (std::size_t b = a + 1; b < m && clique; ++b) {
          if ((mask >> a & 1) && (mask >> b & 1) && !t[a][b]) clique = false;
        }
      }
      if (clique) best = std::max<std::size_t>(best, std::popcount(mask));
    }
    auto c = max_transverse_clique(t);
    ASSERT_EQ(c.size, best);
    for (auto a : c.witness) {
      for (auto b : c.witness) {
        if (a != b) {
          EXPECT_TRUE(t[a][b]);
        }
      }
    }
  }
}
