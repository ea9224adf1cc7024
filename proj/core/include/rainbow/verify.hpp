#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/digraph.hpp"

namespace rainbow {

struct CheckReport {
  bool ok = true;
  std::optional<std::pair<Vertex, Vertex>> failing_pair;
};

// Colors of the elements the kind constrains along the path, in traversal
// order: arcs for RC/SRC, internal vertices for RVC/SRVC, both for TRC/STRC.
// The path is rainbow for the kind iff the returned multiset has no repeats.
std::vector<int> rainbow_elements(const Digraph& d, const Coloring& c,
                                  ParamKind kind,
                                  const std::vector<Vertex>& path);

bool is_rainbow_path(const Digraph& d, const Coloring& c, ParamKind kind,
                     const std::vector<Vertex>& path);

bool exists_rainbow_path(const Digraph& d, const Coloring& c, ParamKind kind,
                         Vertex u, Vertex v);

bool exists_rainbow_geodesic(const Digraph& d, const DistanceTable& dt,
                             const Coloring& c, ParamKind kind, Vertex u,
                             Vertex v);
bool exists_rainbow_geodesic(const Digraph& d, const Coloring& c,
                             ParamKind kind, Vertex u, Vertex v);

// ok iff every ordered pair of distinct vertices has a rainbow path
// (RC/RVC/TRC) or rainbow geodesic (SRC/SRVC/STRC) for the kind. On failure
// reports the lexicographically least failing pair.
CheckReport check_connected(const Digraph& d, const Coloring& c,
                            ParamKind kind);

namespace detail {

inline constexpr int kMaxColors = 64;
inline constexpr int kUncolored = -1;

// Shared search core. Element colors may be kUncolored; such elements are
// wildcards that could still take any of `palette` colors, each fresh.
// Decides whether some u-v path (geodesic when dt is given) can still be
// rainbow under the best completion of the wildcards.
struct PartialColors {
  const int* arc_colors = nullptr;     // by arc index; null = unconstrained
  const int* vertex_colors = nullptr;  // by vertex id; null = unconstrained
  int palette = 0;
};

// Reusable search state: the solver calls feasible() once per search node
// and pair, so the memo buffers are recycled via epochs instead of being
// reallocated.
class PairSearcher {
 public:
  PairSearcher(const Digraph& d, const DistanceTable* dt);

  bool feasible(const PartialColors& pc, Vertex u, Vertex v);

 private:
  bool dfs(Vertex x, std::uint64_t set, int wild);
  bool visited(Vertex x, int wild, std::uint64_t set);

  const Digraph& d_;
  const DistanceTable* dt_;
  PartialColors pc_;
  Vertex source_ = 0;
  Vertex target_ = 0;
  struct Bucket {
    std::vector<std::uint64_t> sets;
    std::uint64_t epoch = 0;
  };
  std::vector<Bucket> buckets_;
  std::uint64_t epoch_ = 0;
};

bool pair_feasible(const Digraph& d, const DistanceTable* dt,
                   const PartialColors& pc, Vertex u, Vertex v);

}  // namespace detail

}  // namespace rainbow
