#pragma once

#include <optional>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/digraph.hpp"
#include "rainbow/solver.hpp"

namespace rainbow {

// A cactus is a strongly connected oriented digraph in which every arc lies
// in exactly one directed cycle; equivalently every block is a directed
// cycle, and every ordered pair is joined by exactly one directed path.
struct CactusDecomposition {
  // H_1..H_q, ordered so each later cycle shares exactly one vertex with the
  // union of the earlier ones. Each cycle is listed from its least vertex.
  std::vector<std::vector<Vertex>> cycles;
  std::vector<Vertex> cut_vertices;               // sorted
  std::vector<std::pair<int, int>> block_edges;   // block graph, i < j
  std::vector<int> arc_cycle;                     // arc index -> cycle index

  int q() const { return static_cast<int>(cycles.size()); }
};

// Throws NotOriented / NotStronglyConnected / ArcInNoCycle /
// ArcInMultipleCycles (naming the least offending arc) when d is not a
// cactus.
CactusDecomposition decompose(const Digraph& d);

// The unique directed u-v path. When u and v lie in different cycles the
// path is checked to factor through cut vertices as uHz..z'H'v.
std::vector<Vertex> unique_path(const Digraph& d, const CactusDecomposition& q,
                                Vertex u, Vertex v);

struct CactusProfile {
  bool is_special_path = false;  // block graph a path, cut vertices a dipath
  int min_cut_distance = kInfDist;  // min over ordered cut-vertex pairs
  bool kq_independent = true;
};

CactusProfile profile(const Digraph& d, const CactusDecomposition& q);

enum class RvcMode { upper, optimal };

// upper: n-2 colors via two end-blocks sharing colors 1 and 2.
// optimal: n-2q+2 colors via shared colors around each cut vertex; requires
// all cut-vertex distances >= 3.
Coloring rvc_coloring(const Digraph& d, const CactusDecomposition& q,
                      RvcMode mode);

// Arc part from the exact RC solve, vertex part from rvc_coloring, on
// disjoint palettes. Uses the optimal vertex scheme when cut vertices are
// pairwise at distance >= 3 (then exactly 2n-3q+3 colors).
Coloring trc_coloring(const Digraph& d, const CactusDecomposition& q,
                      SolveBudget budget = {});

// Lower bound by peeling end-blocks (largest cycle first): each peel of a
// cycle with h vertices adds h-3 (RVC) or 2h-5 (TRC); bases are the single
// cycle values and the q=2 long-path bounds.
int lower_bounds(const Digraph& d, const CactusDecomposition& q,
                 ParamKind kind);

enum class QnqlVariant { base, odd, mod2 };

// Chain of l triangles, a long cycle and q-l-1 extra triangles at the chain
// head; the odd variant subdivides the first chain arc, the mod2 variant the
// first two. Carries the vertex scheme (base/odd) and total scheme proving
// the achievable color counts.
struct QnqlResult {
  Digraph d;
  std::optional<Coloring> rvc;  // n-2q+k colors (k = 2l or 2l-1)
  std::optional<Coloring> trc;  // 2n-3q+k colors (k = 3l, 3l-2 or 3l-4)
  int rvc_value = 0;
  int trc_value = 0;
};

QnqlResult build_Qnql(int n, int q, int l, QnqlVariant variant);

}  // namespace rainbow
