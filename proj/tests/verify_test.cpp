#include "rainbow/verify.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbow/families.hpp"
#include "rainbow/generate.hpp"

namespace rainbow {
namespace {

TEST(RainbowElements, KindsSelectElements) {
  Digraph d = dicycle(3);
  Coloring c = Coloring::total_coloring(d, {0, 1, 2}, {3, 4, 5});
  // Path 0 -> 1 -> 2: arcs (0,1), (1,2) and internal vertex 1.
  EXPECT_EQ(rainbow_elements(d, c, ParamKind::TRC, {0, 1, 2}),
            (std::vector<int>{0, 4, 1}));
  EXPECT_EQ(rainbow_elements(d, c, ParamKind::RC, {0, 1, 2}),
            (std::vector<int>{0, 1}));
  EXPECT_EQ(rainbow_elements(d, c, ParamKind::RVC, {0, 1}),
            std::vector<int>{});
  EXPECT_THROW(rainbow_elements(d, c, ParamKind::TRC, {0, 2}), Error);
  EXPECT_THROW(rainbow_elements(d, c, ParamKind::TRC, {0, 1, 0}), Error);
}

TEST(ExistsRainbowPath, Basics) {
  Digraph d = dicycle(3);
  Coloring all_distinct = Coloring::total_coloring(d, {0, 1, 2}, {3, 4, 5});
  EXPECT_TRUE(exists_rainbow_path(d, all_distinct, ParamKind::TRC, 0, 2));

  // Five-cycle where vertex 1 shares a color with arc (2,3): the unique
  // 0 -> 3 path repeats that color.
  Digraph c5 = dicycle(5);
  std::vector<int> arcs(5, 0);
  arcs[c5.arc_index(2, 3)] = 1;
  for (int i = 0; i < 5; ++i)
    if (c5.arc(i) != Arc{2, 3}) arcs[i] = 2 + i;
  Coloring c = Coloring::total_coloring(c5, arcs, {8, 1, 9, 10, 11});
  EXPECT_FALSE(exists_rainbow_path(c5, c, ParamKind::TRC, 0, 3));
  EXPECT_TRUE(exists_rainbow_path(c5, c, ParamKind::RC, 0, 3));
}

TEST(ExistsRainbowPath, AgreesWithEnumeration) {
  Rng rng(31);
  for (int round = 0; round < 150; ++round) {
    int n = 3 + rng.uniform(4);  // up to 6
    Digraph d = random_strongly_connected_digraph(n, 35, rng);
    Coloring c = random_coloring(d, Domain::total, 1 + rng.uniform(5), rng);
    for (ParamKind kind :
         {ParamKind::RC, ParamKind::RVC, ParamKind::TRC}) {
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
          if (u == v) continue;
          EXPECT_EQ(exists_rainbow_path(d, c, kind, u, v),
                    oracle::rainbow_path_exists(d, c, kind, u, v))
              << kind_name(kind) << " pair " << u << "," << v;
        }
    }
  }
}

TEST(ExistsRainbowGeodesic, AgreesWithEnumeration) {
  Rng rng(37);
  for (int round = 0; round < 150; ++round) {
    int n = 3 + rng.uniform(4);
    Digraph d = random_strongly_connected_digraph(n, 35, rng);
    DistanceTable dt = distances(d);
    Coloring c = random_coloring(d, Domain::total, 1 + rng.uniform(5), rng);
    for (ParamKind kind :
         {ParamKind::SRC, ParamKind::SRVC, ParamKind::STRC}) {
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
          if (u == v) continue;
          EXPECT_EQ(exists_rainbow_geodesic(d, dt, c, kind, u, v),
                    oracle::rainbow_geodesic_exists(d, c, kind, u, v))
              << kind_name(kind) << " pair " << u << "," << v;
        }
    }
  }
}

TEST(ExistsRainbowGeodesic, SingleArcAlwaysRainbow) {
  Digraph d = tournament_T53();
  Rng rng(1);
  Coloring c = random_coloring(d, Domain::total, 1, rng);
  for (const auto& [u, v] : d.arcs()) {
    EXPECT_TRUE(exists_rainbow_geodesic(d, c, ParamKind::STRC, u, v));
    EXPECT_TRUE(exists_rainbow_path(d, c, ParamKind::TRC, u, v));
  }
}

TEST(CheckConnected, SingleColorCycleFailsAtFirstLexPair) {
  Digraph d = dicycle(4);
  Coloring c = Coloring::total_coloring(d, {0, 0, 0, 0}, {0, 0, 0, 0});
  CheckReport report = check_connected(d, c, ParamKind::TRC);
  EXPECT_FALSE(report.ok);
  // (0,1) is adjacent; (0,2) is the least pair whose unique path repeats.
  EXPECT_EQ(report.failing_pair, std::make_pair(0, 2));
}

TEST(CheckConnected, RequiresStrongConnectivity) {
  Digraph d = dipath(3);
  Coloring c = Coloring::total_coloring(d, {0, 1}, {2, 3, 4});
  EXPECT_THROW(check_connected(d, c, ParamKind::TRC), Error);
}

TEST(CheckConnected, StrongImpliesWeakKinds) {
  Rng rng(41);
  int strong_hits = 0;
  for (int round = 0; round < 200; ++round) {
    int n = 3 + rng.uniform(3);
    Digraph d = random_strongly_connected_digraph(n, 45, rng);
    Coloring c = random_coloring(d, Domain::total, 2 + rng.uniform(5), rng);
    if (check_connected(d, c, ParamKind::STRC).ok) {
      ++strong_hits;
      EXPECT_TRUE(check_connected(d, c, ParamKind::TRC).ok);
    }
    if (check_connected(d, c, ParamKind::SRC).ok) {
      EXPECT_TRUE(check_connected(d, c, ParamKind::RC).ok);
    }
    if (check_connected(d, c, ParamKind::SRVC).ok) {
      EXPECT_TRUE(check_connected(d, c, ParamKind::RVC).ok);
    }
    // Total-rainbow paths stay rainbow for the weaker kinds.
    if (check_connected(d, c, ParamKind::TRC).ok) {
      EXPECT_TRUE(check_connected(d, c, ParamKind::RC).ok);
      EXPECT_TRUE(check_connected(d, c, ParamKind::RVC).ok);
    }
  }
  EXPECT_GT(strong_hits, 0);
}

TEST(CheckConnected, TooManyColorsRejected) {
  Digraph d = dicycle(3);
  std::vector<int> arcs{0, 1, 2};
  std::vector<int> verts{3, 4, 5};
  Coloring c = Coloring::total_coloring(d, arcs, verts);
  EXPECT_TRUE(check_connected(d, c, ParamKind::TRC).ok);
  // 65 distinct colors cannot fit the bit set; build a large star coloring.
  Digraph star = bio_star(33);
  std::vector<int> arc_colors(star.arc_count());
  for (int i = 0; i < star.arc_count(); ++i) arc_colors[i] = i;
  Coloring big = Coloring::arc_coloring(star, arc_colors);
  EXPECT_GT(big.color_count(), 64);
  EXPECT_THROW(check_connected(star, big, ParamKind::RC), Error);
}

}  // namespace
}  // namespace rainbow
