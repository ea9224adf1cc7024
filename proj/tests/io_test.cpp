#include "rainbow/io.hpp"

#include <gtest/gtest.h>

#include "rainbow/families.hpp"
#include "rainbow/generate.hpp"

namespace rainbow {
namespace {

TEST(DigraphFormat, ParseArcsAndEdges) {
  ParsedDigraph p = parse_digraph(
      "# a triangle plus one symmetric pair\n"
      "n 4\n"
      "a 0 1\n"
      "a 1 2\n"
      "a 2 0\n"
      "e 2 3\n");
  EXPECT_FALSE(p.used_labels);
  EXPECT_EQ(p.graph.vertex_count(), 4);
  EXPECT_EQ(p.graph.arc_count(), 5);
  EXPECT_TRUE(p.graph.has_arc(3, 2));
}

TEST(DigraphFormat, LabelsMapByFirstAppearance) {
  ParsedDigraph p = parse_digraph("n 3\na x y\na y z\na z x\n");
  EXPECT_TRUE(p.used_labels);
  ASSERT_EQ(p.labels.size(), 3u);
  EXPECT_EQ(p.labels[0], "x");
  EXPECT_EQ(p.labels[2], "z");
  EXPECT_TRUE(p.graph.has_arc(0, 1));
  EXPECT_TRUE(p.graph.has_arc(2, 0));
}

TEST(DigraphFormat, Errors) {
  EXPECT_THROW(parse_digraph("a 0 1\n"), Error);
  EXPECT_THROW(parse_digraph("n 2\na 0 1\na 0 1\n"), Error);
  EXPECT_THROW(parse_digraph("n 2\ne 0 1\na 1 0\n"), Error);
  EXPECT_THROW(parse_digraph("n 2\nq 0 1\n"), Error);
  EXPECT_THROW(parse_digraph("n 1\na u v\n"), Error);
}

TEST(DigraphFormat, EmitReparsesByteIdentical) {
  Rng rng(99);
  for (int round = 0; round < 30; ++round) {
    Digraph d = random_strongly_connected_digraph(2 + rng.uniform(6), 40, rng);
    std::string text = emit_digraph(d);
    ParsedDigraph p = parse_digraph(text);
    EXPECT_EQ(p.graph, d);
    EXPECT_EQ(emit_digraph(p.graph), text);
  }
}

TEST(ColoringFormat, TotalRoundTrip) {
  Digraph d = dicycle(3);
  Coloring c = Coloring::total_coloring(d, {0, 1, 2}, {2, 0, 1});
  std::string text = emit_coloring(d, c);
  Coloring back = parse_coloring(text, d);
  EXPECT_EQ(back, c);
  EXPECT_EQ(emit_coloring(d, back), text);
}

TEST(ColoringFormat, DomainInference) {
  Digraph d = dicycle(3);
  Coloring arcs = parse_coloring("colors 2\na 0 1 0\na 1 2 1\na 2 0 0\n", d);
  EXPECT_EQ(arcs.domain(), Domain::arc);
  Coloring verts = parse_coloring("colors 1\nv 0 0\nv 1 0\nv 2 0\n", d);
  EXPECT_EQ(verts.domain(), Domain::vertex);
}

TEST(ColoringFormat, Errors) {
  Digraph d = dicycle(3);
  // Missing an element of the inferred domain.
  EXPECT_THROW(parse_coloring("colors 1\nv 0 0\nv 1 0\n", d), Error);
  // Color id out of declared range.
  EXPECT_THROW(parse_coloring("colors 1\nv 0 0\nv 1 1\nv 2 0\n", d), Error);
  // Declared more colors than used.
  EXPECT_THROW(parse_coloring("colors 3\nv 0 0\nv 1 1\nv 2 0\n", d), Error);
  // Arc not present.
  EXPECT_THROW(parse_coloring("colors 1\na 0 2 0\n", d), Error);
  // Element colored twice.
  EXPECT_THROW(parse_coloring("colors 1\nv 0 0\nv 0 0\nv 1 0\nv 2 0\n", d),
               Error);
}

TEST(ColoringFormat, RandomRoundTrips) {
  Rng rng(5);
  for (int round = 0; round < 20; ++round) {
    Digraph d = random_strongly_connected_digraph(3 + rng.uniform(4), 40, rng);
    Domain domain = static_cast<Domain>(rng.uniform(3));
    Coloring c = random_coloring(d, domain, 1 + rng.uniform(4), rng);
    Coloring back = parse_coloring(emit_coloring(d, c), d);
    EXPECT_EQ(back, c);
  }
}

}  // namespace
}  // namespace rainbow
