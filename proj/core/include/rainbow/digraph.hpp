#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;

inline constexpr int kInfDist = std::numeric_limits<int>::max();

// Immutable simple digraph on vertices 0..n-1. No loops, no duplicate arcs.
// Arcs are kept sorted lexicographically; the arc index of (u,v) in that
// order is stable and used to key arc colorings.
class Digraph {
 public:
  Digraph() = default;

  static Digraph build(int n, std::vector<Arc> arcs);

  // Biorientation: every undirected edge {u,v} becomes the two arcs uv, vu.
  static Digraph biorient(int n, const std::vector<Arc>& edges);

  int vertex_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int index) const { return arcs_[index]; }

  const std::vector<Vertex>& out_neighbors(Vertex u) const;
  const std::vector<Vertex>& in_neighbors(Vertex u) const;

  bool has_arc(Vertex u, Vertex v) const { return arc_index(u, v) >= 0; }
  int arc_index(Vertex u, Vertex v) const;  // -1 when absent

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && arcs_ == other.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

struct DistanceTable {
  int n = 0;
  std::vector<int> dist;  // row-major n*n, kInfDist when unreachable
  bool strongly_connected = false;
  int diameter = kInfDist;  // max entry; kInfDist unless strongly connected

  int at(Vertex u, Vertex v) const {
    return dist[static_cast<size_t>(u) * n + v];
  }
};

enum class Direction { out, in };

bool is_strongly_connected(const Digraph& d);
DistanceTable distances(const Digraph& d);
std::vector<Vertex> neighbors(const Digraph& d, Vertex u, Direction dir);

// Replace vertex u of d by a copy of h. Former arcs xu fan in to every
// vertex of h, former arcs ux fan out from every vertex of h. Vertex ids:
// vertices of d other than u keep their ids, vertex 0 of h takes id u, and
// vertex j>0 of h takes id n(d)+j-1.
Digraph expand(const Digraph& d, Vertex u, const Digraph& h);

// Expansion of every vertex of d into h; vertex (x,y) has id x*n(h)+y.
Digraph lex_product(const Digraph& d, const Digraph& h);

struct ArcClassification {
  std::vector<Arc> symmetric_pairs;  // (u,v) with u<v, both arcs present
  std::vector<Arc> asymmetric_arcs;
  bool is_oriented = false;
  bool is_tournament = false;
};

ArcClassification classify(const Digraph& d);

// n(h) == n(d) and every arc of h is an arc of d.
bool is_spanning_subdigraph(const Digraph& h, const Digraph& d);

}  // namespace rainbow
