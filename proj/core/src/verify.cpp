#include "rainbow/verify.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace rainbow {

namespace detail {

PairSearcher::PairSearcher(const Digraph& d, const DistanceTable* dt)
    : d_(d), dt_(dt) {
  buckets_.resize(static_cast<size_t>(d.vertex_count()) * (kMaxColors + 1));
}

bool PairSearcher::visited(Vertex x, int wild, std::uint64_t set) {
  auto& bucket = buckets_[static_cast<size_t>(x) * (kMaxColors + 1) + wild];
  if (bucket.epoch != epoch_) {
    bucket.epoch = epoch_;
    bucket.sets.clear();
  }
  if (std::find(bucket.sets.begin(), bucket.sets.end(), set) !=
      bucket.sets.end())
    return true;
  bucket.sets.push_back(set);
  return false;
}

bool PairSearcher::dfs(Vertex x, std::uint64_t set, int wild) {
  for (Vertex y : d_.out_neighbors(x)) {
    if (dt_ != nullptr) {
      // Stay on the geodesic DAG of the (source, target) pair.
      int dy_v = dt_->at(y, target_);
      if (dy_v == kInfDist) continue;
      if (dt_->at(source_, x) + 1 != dt_->at(source_, y)) continue;
      if (dy_v != dt_->at(x, target_) - 1) continue;
    }
    std::uint64_t next_set = set;
    int next_wild = wild;
    bool clash = false;
    if (pc_.arc_colors != nullptr) {
      int color = pc_.arc_colors[d_.arc_index(x, y)];
      if (color == kUncolored) {
        ++next_wild;
      } else if (next_set >> color & 1) {
        clash = true;
      } else {
        next_set |= std::uint64_t{1} << color;
      }
    }
    if (!clash && y != target_ && pc_.vertex_colors != nullptr) {
      int color = pc_.vertex_colors[y];
      if (color == kUncolored) {
        ++next_wild;
      } else if (next_set >> color & 1) {
        clash = true;
      } else {
        next_set |= std::uint64_t{1} << color;
      }
    }
    if (clash) continue;
    if (std::popcount(next_set) + next_wild > pc_.palette) continue;
    if (y == target_) return true;
    if (visited(y, next_wild, next_set)) continue;
    if (dfs(y, next_set, next_wild)) return true;
  }
  return false;
}

bool PairSearcher::feasible(const PartialColors& pc, Vertex u, Vertex v) {
  if (pc.palette > kMaxColors)
    throw Error(ErrorKind::TooManyColors,
                std::to_string(pc.palette) + " colors exceed bit-set capacity");
  if (dt_ != nullptr && dt_->at(u, v) == kInfDist)
    throw Error(ErrorKind::Unreachable, "no path from " + std::to_string(u) +
                                            " to " + std::to_string(v));
  pc_ = pc;
  source_ = u;
  target_ = v;
  ++epoch_;
  return dfs(u, 0, 0);
}

bool pair_feasible(const Digraph& d, const DistanceTable* dt,
                   const PartialColors& pc, Vertex u, Vertex v) {
  PairSearcher searcher(d, dt);
  return searcher.feasible(pc, u, v);
}

}  // namespace detail

namespace {

void require_domain(const Coloring& c, ParamKind kind) {
  if (constrains_arcs(kind) && !c.has_arc_colors())
    throw Error(ErrorKind::InvalidColoring,
                std::string(kind_name(kind)) + " needs arc colors");
  if (constrains_vertices(kind) && !c.has_vertex_colors())
    throw Error(ErrorKind::InvalidColoring,
                std::string(kind_name(kind)) + " needs vertex colors");
}

detail::PartialColors view_of(const Coloring& c, ParamKind kind) {
  detail::PartialColors pc;
  if (constrains_arcs(kind)) pc.arc_colors = c.arc_colors().data();
  if (constrains_vertices(kind)) pc.vertex_colors = c.vertex_colors().data();
  pc.palette = c.color_count();
  return pc;
}

}  // namespace

std::vector<int> rainbow_elements(const Digraph& d, const Coloring& c,
                                  ParamKind kind,
                                  const std::vector<Vertex>& path) {
  require_domain(c, kind);
  if (path.empty()) throw Error(ErrorKind::NotAPath, "empty vertex sequence");
  std::vector<char> used(d.vertex_count(), 0);
  for (Vertex v : path) {
    if (v < 0 || v >= d.vertex_count())
      throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
    if (used[v]) throw Error(ErrorKind::NotAPath, "repeated vertex");
    used[v] = 1;
  }
  std::vector<int> colors;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    int index = d.arc_index(path[i], path[i + 1]);
    if (index < 0)
      throw_arc_error(ErrorKind::NotAPath, path[i], path[i + 1],
                      "missing arc");
    if (constrains_arcs(kind)) colors.push_back(c.arc_color(index));
    if (constrains_vertices(kind) && i + 2 < path.size())
      colors.push_back(c.vertex_color(path[i + 1]));
  }
  return colors;
}

bool is_rainbow_path(const Digraph& d, const Coloring& c, ParamKind kind,
                     const std::vector<Vertex>& path) {
  auto colors = rainbow_elements(d, c, kind, path);
  std::sort(colors.begin(), colors.end());
  return std::adjacent_find(colors.begin(), colors.end()) == colors.end();
}

bool exists_rainbow_path(const Digraph& d, const Coloring& c, ParamKind kind,
                         Vertex u, Vertex v) {
  require_domain(c, kind);
  return detail::pair_feasible(d, nullptr, view_of(c, kind), u, v);
}

bool exists_rainbow_geodesic(const Digraph& d, const DistanceTable& dt,
                             const Coloring& c, ParamKind kind, Vertex u,
                             Vertex v) {
  require_domain(c, kind);
  return detail::pair_feasible(d, &dt, view_of(c, kind), u, v);
}

bool exists_rainbow_geodesic(const Digraph& d, const Coloring& c,
                             ParamKind kind, Vertex u, Vertex v) {
  DistanceTable dt = distances(d);
  return exists_rainbow_geodesic(d, dt, c, kind, u, v);
}

CheckReport check_connected(const Digraph& d, const Coloring& c,
                            ParamKind kind) {
  require_domain(c, kind);
  DistanceTable dt = distances(d);
  if (!dt.strongly_connected)
    throw Error(ErrorKind::NotStronglyConnected,
                "digraph is not strongly connected");
  detail::PartialColors pc = view_of(c, kind);
  detail::PairSearcher searcher(d, is_strong(kind) ? &dt : nullptr);
  int n = d.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if (d.has_arc(u, v)) continue;  // a single arc is always rainbow
      if (!searcher.feasible(pc, u, v))
        return CheckReport{false, std::make_pair(u, v)};
    }
  }
  return CheckReport{};
}

}  // namespace rainbow
