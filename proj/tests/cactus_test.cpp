#include "rainbow/cactus.hpp"

#include <algorithm>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbow/families.hpp"
#include "rainbow/generate.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {
namespace {

Digraph two_triangles() {
  // Two directed triangles sharing vertex 0.
  return Digraph::build(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

TEST(Decompose, SingleCycle) {
  CactusDecomposition dec = decompose(dicycle(3));
  EXPECT_EQ(dec.q(), 1);
  EXPECT_TRUE(dec.cut_vertices.empty());
}

TEST(Decompose, TwoTriangles) {
  Digraph d = two_triangles();
  CactusDecomposition dec = decompose(d);
  EXPECT_EQ(dec.q(), 2);
  EXPECT_EQ(dec.q(), d.arc_count() - d.vertex_count() + 1);
  EXPECT_EQ(dec.cut_vertices, std::vector<Vertex>{0});
  EXPECT_EQ(dec.block_edges.size(), 1u);
  // Ordered decomposition: the second cycle meets the first in one vertex.
  std::vector<char> seen(5, 0);
  for (Vertex v : dec.cycles[0]) seen[v] = 1;
  int shared = 0;
  for (Vertex v : dec.cycles[1]) shared += seen[v];
  EXPECT_EQ(shared, 1);
}

TEST(Decompose, RejectsNonCacti) {
  try {
    decompose(tournament_T4());
    FAIL() << "T4 accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ArcInMultipleCycles);
    EXPECT_EQ(e.u, 0);
    EXPECT_EQ(e.v, 1);
  }
  EXPECT_THROW(decompose(bio_path(3)), Error);   // not oriented
  EXPECT_THROW(decompose(dipath(3)), Error);     // not strongly connected
  try {
    decompose(bio_path(3));
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotOriented);
  }
}

TEST(Decompose, AgreesWithCycleEnumeration) {
  Rng rng(303);
  for (int round = 0; round < 120; ++round) {
    int q = 1 + rng.uniform(3);
    int n = 2 * q + 1 + rng.uniform(8 - 2 * q);
    Digraph d = random_cactus(n, q, rng);
    auto cycles = oracle::all_directed_cycles(d);
    EXPECT_EQ(static_cast<int>(cycles.size()), q);
    CactusDecomposition dec = decompose(d);
    EXPECT_EQ(dec.q(), q);
    // Every arc covered exactly once by the oracle's cycles.
    std::vector<int> cover(d.arc_count(), 0);
    for (const auto& cycle : cycles)
      for (size_t i = 0; i < cycle.size(); ++i)
        ++cover[d.arc_index(cycle[i], cycle[(i + 1) % cycle.size()])];
    EXPECT_TRUE(std::all_of(cover.begin(), cover.end(),
                            [](int c) { return c == 1; }));
  }
}

TEST(UniquePath, MatchesEnumeration) {
  Rng rng(307);
  for (int round = 0; round < 60; ++round) {
    int q = 1 + rng.uniform(3);
    int n = 2 * q + 1 + rng.uniform(std::max(9 - 2 * q, 1));
    Digraph d = random_cactus(n, q, rng);
    CactusDecomposition dec = decompose(d);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        if (u == v) continue;
        auto all = oracle::all_simple_paths(d, u, v);
        ASSERT_EQ(all.size(), 1u);
        EXPECT_EQ(unique_path(d, dec, u, v), all[0]);
      }
  }
}

TEST(UniquePath, FactorsThroughCutVertices) {
  Digraph d = two_triangles();
  CactusDecomposition dec = decompose(d);
  std::vector<Vertex> path = unique_path(d, dec, 1, 3);
  EXPECT_EQ(path, (std::vector<Vertex>{1, 2, 0, 3}));
}

TEST(Profile, SpecialPathAndDistances) {
  Digraph d = two_triangles();
  CactusDecomposition dec = decompose(d);
  CactusProfile prof = profile(d, dec);
  EXPECT_TRUE(prof.is_special_path);
  EXPECT_EQ(prof.min_cut_distance, kInfDist);
  EXPECT_TRUE(prof.kq_independent);

  // Extra triangles at one vertex make the block graph a clique, not a path.
  QnqlResult star = build_Qnql(7, 3, 1, QnqlVariant::base);
  CactusDecomposition star_dec = decompose(star.d);
  CactusProfile star_prof = profile(star.d, star_dec);
  EXPECT_FALSE(star_prof.is_special_path);

  // Chain of triangles: consecutive cut vertices at distance 1.
  QnqlResult chain = build_Qnql(9, 4, 3, QnqlVariant::base);
  CactusProfile chain_prof = profile(chain.d, decompose(chain.d));
  EXPECT_EQ(chain_prof.min_cut_distance, 1);
  EXPECT_FALSE(chain_prof.kq_independent);
  EXPECT_TRUE(chain_prof.is_special_path);
}

TEST(RvcColoring, UpperAndOptimal) {
  Digraph d = two_triangles();
  CactusDecomposition dec = decompose(d);
  Coloring upper = rvc_coloring(d, dec, RvcMode::upper);
  EXPECT_EQ(upper.color_count(), 3);  // n - 2
  EXPECT_TRUE(check_connected(d, upper, ParamKind::RVC).ok);
  Coloring optimal = rvc_coloring(d, dec, RvcMode::optimal);
  EXPECT_EQ(optimal.color_count(), 3);  // n - 2q + 2
  EXPECT_TRUE(check_connected(d, optimal, ParamKind::RVC).ok);

  // Adjacent cut vertices refuse the optimal mode.
  QnqlResult chain = build_Qnql(9, 4, 3, QnqlVariant::base);
  CactusDecomposition chain_dec = decompose(chain.d);
  EXPECT_THROW(rvc_coloring(chain.d, chain_dec, RvcMode::optimal), Error);
  Coloring chain_upper = rvc_coloring(chain.d, chain_dec, RvcMode::upper);
  EXPECT_EQ(chain_upper.color_count(), chain.d.vertex_count() - 2);
  EXPECT_TRUE(check_connected(chain.d, chain_upper, ParamKind::RVC).ok);

  EXPECT_THROW(rvc_coloring(dicycle(4), decompose(dicycle(4)), RvcMode::upper),
               Error);
}

TEST(TrcColoring, CombinesArcAndVertexParts) {
  Digraph d = two_triangles();
  CactusDecomposition dec = decompose(d);
  Coloring c = trc_coloring(d, dec, SolveBudget::with_elements(64));
  EXPECT_EQ(c.color_count(), 7);  // 2n - 3 on the two-triangle cactus
  EXPECT_TRUE(check_connected(d, c, ParamKind::TRC).ok);

  Rng rng(311);
  for (int round = 0; round < 25; ++round) {
    int q = 2 + rng.uniform(2);
    int n = 2 * q + 1 + rng.uniform(std::max(8 - 2 * q, 1));
    Digraph cactus = random_cactus(n, q, rng);
    CactusDecomposition cd = decompose(cactus);
    Coloring tc = trc_coloring(cactus, cd, SolveBudget::with_elements(64));
    EXPECT_TRUE(check_connected(cactus, tc, ParamKind::TRC).ok);
    EXPECT_GE(tc.color_count(), 2 * n - 3 * q + 3);
    EXPECT_LE(tc.color_count(), 2 * n - 3);
  }
}

TEST(LowerBounds, BasesAndRecursion) {
  EXPECT_EQ(lower_bounds(dicycle(5), decompose(dicycle(5)), ParamKind::TRC),
            10);
  EXPECT_EQ(lower_bounds(dicycle(4), decompose(dicycle(4)), ParamKind::RVC),
            2);
  Digraph d = two_triangles();
  CactusDecomposition dec = decompose(d);
  EXPECT_EQ(lower_bounds(d, dec, ParamKind::RVC), 3);
  EXPECT_EQ(lower_bounds(d, dec, ParamKind::TRC), 7);
  EXPECT_THROW(lower_bounds(d, dec, ParamKind::RC), Error);

  Rng rng(313);
  for (int round = 0; round < 30; ++round) {
    int q = 2 + rng.uniform(2);
    int n = 2 * q + 1 + rng.uniform(std::max(8 - 2 * q, 1));
    Digraph cactus = random_cactus(n, q, rng);
    CactusDecomposition cd = decompose(cactus);
    int lb = lower_bounds(cactus, cd, ParamKind::RVC);
    EXPECT_GE(lb, n - 2 * q + 2);
    int exact_rvc =
        exact(cactus, ParamKind::RVC, SolveBudget::with_elements(64)).value;
    EXPECT_LE(lb, exact_rvc);
  }
}

TEST(BuildQnql, SpecExamples) {
  QnqlResult a = build_Qnql(7, 3, 1, QnqlVariant::base);
  ASSERT_TRUE(a.rvc.has_value());
  EXPECT_EQ(a.rvc->color_count(), 3);  // n - 2q + 2
  EXPECT_TRUE(check_connected(a.d, *a.rvc, ParamKind::RVC).ok);

  QnqlResult b = build_Qnql(9, 3, 2, QnqlVariant::base);
  ASSERT_TRUE(b.trc.has_value());
  EXPECT_EQ(b.trc->color_count(), 15);  // 2n - 3q + 6
  EXPECT_TRUE(check_connected(b.d, *b.trc, ParamKind::TRC).ok);

  QnqlResult c = build_Qnql(8, 3, 2, QnqlVariant::odd);
  ASSERT_TRUE(c.rvc.has_value());
  EXPECT_EQ(c.rvc->color_count(), 5);  // n - 2q + 3
  EXPECT_TRUE(check_connected(c.d, *c.rvc, ParamKind::RVC).ok);

  QnqlResult m = build_Qnql(11, 4, 3, QnqlVariant::mod2);
  EXPECT_FALSE(m.rvc.has_value());
  ASSERT_TRUE(m.trc.has_value());
  EXPECT_EQ(m.trc->color_count(), 2 * 11 - 3 * 4 + 5);
  EXPECT_TRUE(check_connected(m.d, *m.trc, ParamKind::TRC).ok);

  EXPECT_THROW(build_Qnql(6, 3, 1, QnqlVariant::base), Error);
  EXPECT_THROW(build_Qnql(9, 3, 1, QnqlVariant::odd), Error);
  EXPECT_THROW(build_Qnql(12, 4, 2, QnqlVariant::mod2), Error);
}

TEST(CactusParameters, StrongEqualsWeakByUniqueness) {
  Rng rng(317);
  SolveBudget budget = SolveBudget::with_elements(64);
  for (int round = 0; round < 20; ++round) {
    int q = 1 + rng.uniform(2);
    int n = 2 * q + 1 + rng.uniform(3);
    Digraph d = random_cactus(n, q, rng);
    EXPECT_EQ(exact(d, ParamKind::RC, budget).value,
              exact(d, ParamKind::SRC, budget).value);
    EXPECT_EQ(exact(d, ParamKind::RVC, budget).value,
              exact(d, ParamKind::SRVC, budget).value);
    if (n + d.arc_count() <= 14) {
      EXPECT_EQ(exact(d, ParamKind::TRC, budget).value,
                exact(d, ParamKind::STRC, budget).value);
    }
  }
}

}  // namespace
}  // namespace rainbow
