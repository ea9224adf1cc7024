#pragma once

#include <string>
#include <vector>

#include "rainbow/digraph.hpp"

namespace rainbow {

enum class Domain { arc, vertex, total };

// The six connection parameters. The strong variants quantify over
// geodesics instead of arbitrary paths; the RC pair constrains arc colors,
// the RVC pair internal-vertex colors, the TRC pair both.
enum class ParamKind { RC, SRC, RVC, SRVC, TRC, STRC };

const char* kind_name(ParamKind kind);
bool parse_kind(const std::string& text, ParamKind& out);

bool is_strong(ParamKind kind);
bool constrains_arcs(ParamKind kind);
bool constrains_vertices(ParamKind kind);
Domain required_domain(ParamKind kind);
bool domain_covers(Domain have, Domain need);

// A coloring of the arcs and/or vertices of a digraph, depending on domain.
// Arc colors are indexed by the digraph's arc order. Color ids are dense:
// 0..color_count-1 with every id used; factories renumber order-preserving.
class Coloring {
 public:
  Coloring() = default;

  static Coloring arc_coloring(const Digraph& d, std::vector<int> arc_colors);
  static Coloring vertex_coloring(const Digraph& d,
                                  std::vector<int> vertex_colors);
  static Coloring total_coloring(const Digraph& d, std::vector<int> arc_colors,
                                 std::vector<int> vertex_colors);

  Domain domain() const { return domain_; }
  int color_count() const { return color_count_; }

  bool has_arc_colors() const { return domain_ != Domain::vertex; }
  bool has_vertex_colors() const { return domain_ != Domain::arc; }

  int arc_color(int arc_index) const { return arc_colors_[arc_index]; }
  int vertex_color(Vertex v) const { return vertex_colors_[v]; }

  const std::vector<int>& arc_colors() const { return arc_colors_; }
  const std::vector<int>& vertex_colors() const { return vertex_colors_; }

  bool operator==(const Coloring& other) const = default;

 private:
  Domain domain_ = Domain::total;
  int color_count_ = 0;
  std::vector<int> arc_colors_;
  std::vector<int> vertex_colors_;
};

}  // namespace rainbow
