#include "rainbow/cactus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "rainbow/verify.hpp"

namespace rainbow {

namespace {

// Count directed u-v paths, stopping at the cap.
int count_paths(const Digraph& d, Vertex from, Vertex to, int cap) {
  std::vector<char> on_path(d.vertex_count(), 0);
  int found = 0;
  std::function<void(Vertex)> dfs = [&](Vertex x) {
    if (found >= cap) return;
    if (x == to) {
      ++found;
      return;
    }
    on_path[x] = 1;
    for (Vertex y : d.out_neighbors(x)) {
      if (!on_path[y]) dfs(y);
      if (found >= cap) break;
    }
    on_path[x] = 0;
  };
  dfs(from);
  return found;
}

// The unique directed v-u path of a cactus, via BFS parents.
std::vector<Vertex> bfs_path(const Digraph& d, Vertex from, Vertex to) {
  std::vector<Vertex> parent(d.vertex_count(), -1);
  std::vector<Vertex> queue{from};
  parent[from] = from;
  for (size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    if (x == to) break;
    for (Vertex y : d.out_neighbors(x))
      if (parent[y] < 0) {
        parent[y] = x;
        queue.push_back(y);
      }
  }
  std::vector<Vertex> path;
  for (Vertex x = to; x != from; x = parent[x]) path.push_back(x);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
  auto least = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), least, cycle.end());
  return cycle;
}

int distinct_vertex_count(const std::vector<std::vector<Vertex>>& cycles) {
  std::set<Vertex> all;
  for (const auto& cycle : cycles) all.insert(cycle.begin(), cycle.end());
  return static_cast<int>(all.size());
}

}  // namespace

CactusDecomposition decompose(const Digraph& d) {
  ArcClassification cls = classify(d);
  if (!cls.is_oriented) {
    auto [u, v] = cls.symmetric_pairs.front();
    throw_arc_error(ErrorKind::NotOriented, u, v,
                    "symmetric arc pair (" + std::to_string(u) + "," +
                        std::to_string(v) + ")");
  }
  if (!is_strongly_connected(d))
    throw Error(ErrorKind::NotStronglyConnected,
                "digraph is not strongly connected");

  // Each arc closes to its unique cycle through the unique return path.
  std::vector<std::vector<Vertex>> cycles;
  std::map<std::vector<Vertex>, int> cycle_index;
  std::vector<int> arc_cycle(d.arc_count(), -1);
  for (int i = 0; i < d.arc_count(); ++i) {
    auto [u, v] = d.arc(i);
    int paths = count_paths(d, v, u, 2);
    if (paths == 0)
      throw_arc_error(ErrorKind::ArcInNoCycle, u, v,
                      "arc (" + std::to_string(u) + "," + std::to_string(v) +
                          ") lies on no directed cycle");
    if (paths > 1)
      throw_arc_error(ErrorKind::ArcInMultipleCycles, u, v,
                      "arc (" + std::to_string(u) + "," + std::to_string(v) +
                          ") lies on more than one directed cycle");
    std::vector<Vertex> cycle = canonical_cycle(bfs_path(d, v, u));
    auto [it, inserted] =
        cycle_index.emplace(cycle, static_cast<int>(cycles.size()));
    if (inserted) cycles.push_back(cycle);
    arc_cycle[i] = it->second;
  }

  CactusDecomposition result;
  int q = static_cast<int>(cycles.size());
  if (q != d.arc_count() - d.vertex_count() + 1)
    throw std::logic_error("cycle count disagrees with m - n + 1");

  // Order cycles so each one attaches to the union of its predecessors at
  // exactly one vertex; start from the least canonical cycle.
  std::vector<int> order;
  std::vector<char> used(q, 0);
  std::vector<char> present(d.vertex_count(), 0);
  {
    int first = 0;
    for (int i = 1; i < q; ++i)
      if (cycles[i] < cycles[first]) first = i;
    order.push_back(first);
    used[first] = 1;
    for (Vertex v : cycles[first]) present[v] = 1;
  }
  while (static_cast<int>(order.size()) < q) {
    int pick = -1;
    for (int i = 0; i < q; ++i) {
      if (used[i]) continue;
      int shared = 0;
      for (Vertex v : cycles[i]) shared += present[v];
      if (shared == 1 && (pick < 0 || cycles[i] < cycles[pick])) pick = i;
      if (shared > 1) throw std::logic_error("cycles sharing two vertices");
    }
    if (pick < 0) throw std::logic_error("disconnected cycle structure");
    order.push_back(pick);
    used[pick] = 1;
    for (Vertex v : cycles[pick]) present[v] = 1;
  }
  std::vector<int> position(q);
  for (int i = 0; i < q; ++i) position[order[i]] = i;
  result.cycles.resize(q);
  for (int i = 0; i < q; ++i) result.cycles[position[i]] = cycles[i];
  for (int& c : arc_cycle) c = position[c];
  result.arc_cycle = std::move(arc_cycle);

  std::vector<int> cycles_holding(d.vertex_count(), 0);
  for (const auto& cycle : result.cycles)
    for (Vertex v : cycle) ++cycles_holding[v];
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    if (cycles_holding[v] >= 2) result.cut_vertices.push_back(v);

  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      bool meet = false;
      for (Vertex v : result.cycles[j])
        if (std::find(result.cycles[i].begin(), result.cycles[i].end(), v) !=
            result.cycles[i].end()) {
          meet = true;
          break;
        }
      if (meet) result.block_edges.emplace_back(i, j);
    }
  return result;
}

std::vector<Vertex> unique_path(const Digraph& d, const CactusDecomposition& q,
                                Vertex u, Vertex v) {
  if (u == v) throw Error(ErrorKind::PreconditionViolated, "u equals v");
  std::vector<Vertex> path = bfs_path(d, u, v);

  auto cycle_of_arc = [&](Vertex x, Vertex y) {
    return q.arc_cycle[d.arc_index(x, y)];
  };
  int first_cycle = cycle_of_arc(path[0], path[1]);
  int last_cycle = cycle_of_arc(path[path.size() - 2], path.back());
  if (first_cycle == last_cycle) return path;

  // Lemma-shaped factorization: a prefix inside the first cycle up to a cut
  // vertex z, a middle segment avoiding both end cycles, and a suffix inside
  // the last cycle from a cut vertex z'.
  size_t prefix_end = 0;
  while (prefix_end + 1 < path.size() &&
         cycle_of_arc(path[prefix_end], path[prefix_end + 1]) == first_cycle)
    ++prefix_end;
  size_t suffix_start = path.size() - 1;
  while (suffix_start > 0 &&
         cycle_of_arc(path[suffix_start - 1], path[suffix_start]) == last_cycle)
    --suffix_start;
  Vertex z = path[prefix_end];
  Vertex zp = path[suffix_start];
  auto is_cut = [&](Vertex x) {
    return std::binary_search(q.cut_vertices.begin(), q.cut_vertices.end(), x);
  };
  if (!is_cut(z) || !is_cut(zp) || prefix_end > suffix_start)
    throw std::logic_error("path does not factor through cut vertices");
  const auto& first_vertices = q.cycles[first_cycle];
  const auto& last_vertices = q.cycles[last_cycle];
  for (size_t i = prefix_end; i <= suffix_start; ++i) {
    bool interior = i > prefix_end && i < suffix_start;
    if (!interior) continue;
    if (std::find(first_vertices.begin(), first_vertices.end(), path[i]) !=
            first_vertices.end() ||
        std::find(last_vertices.begin(), last_vertices.end(), path[i]) !=
            last_vertices.end())
      throw std::logic_error("middle segment reenters an end cycle");
  }
  for (size_t i = prefix_end; i < suffix_start; ++i) {
    int c = cycle_of_arc(path[i], path[i + 1]);
    if (c == first_cycle || c == last_cycle)
      throw std::logic_error("middle segment uses an end-cycle arc");
  }
  return path;
}

CactusProfile profile(const Digraph& d, const CactusDecomposition& q) {
  CactusProfile result;
  DistanceTable dt = distances(d);
  for (Vertex u : q.cut_vertices)
    for (Vertex v : q.cut_vertices) {
      if (u == v) continue;
      result.min_cut_distance = std::min(result.min_cut_distance, dt.at(u, v));
      if (d.has_arc(u, v)) result.kq_independent = false;
    }

  // Block graph a path and the cut vertices inducing a directed path.
  int blocks = q.q();
  std::vector<int> degree(blocks, 0);
  for (auto [i, j] : q.block_edges) {
    ++degree[i];
    ++degree[j];
  }
  bool block_path = static_cast<int>(q.block_edges.size()) == blocks - 1;
  int leaves = 0;
  for (int deg : degree) {
    if (deg > 2) block_path = false;
    if (deg == 1) ++leaves;
  }
  if (blocks >= 2 && leaves != 2) block_path = false;

  bool cut_path = true;
  int p = static_cast<int>(q.cut_vertices.size());
  std::vector<int> in_deg(p, 0), out_deg(p, 0);
  int induced_arcs = 0;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      if (i == j) continue;
      if (d.has_arc(q.cut_vertices[i], q.cut_vertices[j])) {
        ++induced_arcs;
        ++out_deg[i];
        ++in_deg[j];
      }
    }
  if (induced_arcs != std::max(p - 1, 0)) cut_path = false;
  int sources = 0, sinks = 0;
  for (int i = 0; i < p; ++i) {
    if (in_deg[i] > 1 || out_deg[i] > 1) cut_path = false;
    if (in_deg[i] == 0) ++sources;
    if (out_deg[i] == 0) ++sinks;
  }
  if (p >= 1 && (sources != 1 || sinks != 1)) cut_path = false;

  result.is_special_path = block_path && cut_path;
  return result;
}

namespace {

Vertex successor_in_cycle(const std::vector<Vertex>& cycle, Vertex u) {
  for (size_t i = 0; i < cycle.size(); ++i)
    if (cycle[i] == u) return cycle[(i + 1) % cycle.size()];
  throw std::logic_error("vertex not on cycle");
}

Vertex predecessor_in_cycle(const std::vector<Vertex>& cycle, Vertex u) {
  for (size_t i = 0; i < cycle.size(); ++i)
    if (cycle[i] == u) return cycle[(i + cycle.size() - 1) % cycle.size()];
  throw std::logic_error("vertex not on cycle");
}

std::vector<int> end_blocks(const CactusDecomposition& q) {
  std::vector<int> result;
  for (int i = 0; i < q.q(); ++i) {
    int cuts = 0;
    for (Vertex v : q.cycles[i])
      if (std::binary_search(q.cut_vertices.begin(), q.cut_vertices.end(), v))
        ++cuts;
    if (cuts <= 1) result.push_back(i);
  }
  return result;
}

}  // namespace

Coloring rvc_coloring(const Digraph& d, const CactusDecomposition& q,
                      RvcMode mode) {
  if (q.q() < 2)
    throw Error(ErrorKind::PreconditionViolated, "needs at least two blocks");
  int n = d.vertex_count();
  std::vector<int> colors(n, -1);

  if (mode == RvcMode::upper) {
    auto ends = end_blocks(q);
    if (ends.size() < 2) throw std::logic_error("fewer than two end blocks");
    std::sort(ends.begin(), ends.end(), [&](int a, int b) {
      return q.cycles[a] < q.cycles[b];
    });
    for (int pick = 0; pick < 2; ++pick) {
      const auto& cycle = q.cycles[ends[pick]];
      Vertex u = -1;
      for (Vertex v : cycle)
        if (std::binary_search(q.cut_vertices.begin(), q.cut_vertices.end(),
                               v)) {
          u = v;
          break;
        }
      colors[successor_in_cycle(cycle, u)] = 0;
      colors[predecessor_in_cycle(cycle, u)] = 1;
    }
    int next = 2;
    for (Vertex v = 0; v < n; ++v)
      if (colors[v] < 0) colors[v] = next++;
    if (next != n - 2) throw std::logic_error("upper scheme color count");
    return Coloring::vertex_coloring(d, std::move(colors));
  }

  CactusProfile prof = profile(d, q);
  if (prof.min_cut_distance < 3)
    throw Error(ErrorKind::PreconditionViolated,
                "optimal scheme needs cut vertices pairwise at distance >= 3");
  int next = 0;
  for (Vertex u : q.cut_vertices) {
    int in_color = next++;
    int out_color = next++;
    for (Vertex w : d.in_neighbors(u)) colors[w] = in_color;
    for (Vertex w : d.out_neighbors(u)) colors[w] = out_color;
  }
  for (Vertex v = 0; v < n; ++v)
    if (colors[v] < 0) colors[v] = next++;
  if (next != n - 2 * q.q() + 2)
    throw std::logic_error("optimal scheme color count");
  return Coloring::vertex_coloring(d, std::move(colors));
}

Coloring trc_coloring(const Digraph& d, const CactusDecomposition& q,
                      SolveBudget budget) {
  if (q.q() < 2)
    throw Error(ErrorKind::PreconditionViolated, "needs at least two blocks");
  CactusProfile prof = profile(d, q);
  SolveResult rc = exact(d, ParamKind::RC, budget);
  if (prof.min_cut_distance >= 3 &&
      rc.value != d.vertex_count() - q.q() + 1)
    throw std::logic_error("independent cut set did not give rc = n-q+1");
  Coloring vertex_part = rvc_coloring(
      d, q, prof.min_cut_distance >= 3 ? RvcMode::optimal : RvcMode::upper);
  std::vector<int> vertex_colors(d.vertex_count());
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    vertex_colors[v] = rc.value + vertex_part.vertex_color(v);
  return Coloring::total_coloring(d, rc.witness.arc_colors(),
                                  std::move(vertex_colors));
}

namespace {

int single_cycle_bound(int n, bool total) {
  if (total) {
    if (n == 3) return 3;
    if (n == 4) return 6;
    return 2 * n;
  }
  return n <= 4 ? n - 2 : n;
}

int peel_bound(std::vector<std::vector<Vertex>> cycles, bool total) {
  int q = static_cast<int>(cycles.size());
  int n = distinct_vertex_count(cycles);
  if (q == 1)
    return single_cycle_bound(static_cast<int>(cycles[0].size()), total);

  std::map<Vertex, int> holding;
  for (const auto& cycle : cycles)
    for (Vertex v : cycle) ++holding[v];
  int best = -1;
  for (int i = 0; i < q; ++i) {
    int cuts = 0;
    for (Vertex v : cycles[i])
      if (holding[v] >= 2) ++cuts;
    if (cuts > 1) continue;
    if (best < 0 || cycles[i].size() > cycles[best].size() ||
        (cycles[i].size() == cycles[best].size() && cycles[i] < cycles[best]))
      best = i;
  }
  if (best < 0) throw std::logic_error("no end block");
  int h = static_cast<int>(cycles[best].size());
  cycles.erase(cycles.begin() + best);
  int peeled = peel_bound(std::move(cycles), total) +
               (total ? 2 * h - 5 : h - 3);
  if (q == 2) return std::max(total ? 2 * n - 3 : n - 2, peeled);
  return peeled;
}

}  // namespace

int lower_bounds(const Digraph& d, const CactusDecomposition& q,
                 ParamKind kind) {
  bool total;
  if (kind == ParamKind::TRC || kind == ParamKind::STRC)
    total = true;
  else if (kind == ParamKind::RVC || kind == ParamKind::SRVC)
    total = false;
  else
    throw Error(ErrorKind::PreconditionViolated,
                "lower bound recursion covers the vertex and total kinds");
  (void)d;
  return peel_bound(q.cycles, total);
}

namespace {

struct QnqlShape {
  Digraph d;
  Vertex u = 0;
  std::vector<Vertex> v, w;  // v[i], w[i] for chain triangles, 1-based
  Vertex x1 = -1, x2 = -1;
  std::vector<Vertex> gamma_out, gamma_in;  // of u
};

QnqlShape build_shape(int n, int q, int l, QnqlVariant variant) {
  switch (variant) {
    case QnqlVariant::base:
      if (!(q >= 2 && l >= 1 && l <= q - 1 && n >= 2 * q + 1))
        throw Error(ErrorKind::InvalidFamilyParams,
                    "base variant needs 1 <= l <= q-1 and n >= 2q+1");
      break;
    case QnqlVariant::odd:
      if (!(q >= 3 && l >= 2 && l <= q - 1 && n >= 2 * q + 2))
        throw Error(ErrorKind::InvalidFamilyParams,
                    "odd variant needs 2 <= l <= q-1 and n >= 2q+2");
      break;
    case QnqlVariant::mod2:
      if (!(q >= 4 && l >= 3 && l <= q - 1 && n >= 2 * q + 3))
        throw Error(ErrorKind::InvalidFamilyParams,
                    "mod2 variant needs 3 <= l <= q-1 and n >= 2q+3");
      break;
  }
  QnqlShape shape;
  shape.v.assign(l + 1, -1);
  shape.w.assign(l + 1, -1);
  for (int i = 1; i <= l; ++i) {
    shape.v[i] = 2 * i - 1;
    shape.w[i] = 2 * i;
  }
  int next = 2 * l + 1;
  std::vector<Arc> arcs;
  // Chain triangle 1, possibly with subdivided entry arcs.
  if (variant == QnqlVariant::base) {
    arcs.emplace_back(0, shape.v[1]);
  } else {
    shape.x1 = next++;
    arcs.emplace_back(0, shape.x1);
    arcs.emplace_back(shape.x1, shape.v[1]);
  }
  arcs.emplace_back(shape.v[1], shape.w[1]);
  arcs.emplace_back(shape.w[1], 0);
  for (int i = 2; i <= l; ++i) {
    if (i == 2 && variant == QnqlVariant::mod2) {
      shape.x2 = next++;
      arcs.emplace_back(shape.v[1], shape.x2);
      arcs.emplace_back(shape.x2, shape.v[2]);
    } else {
      arcs.emplace_back(shape.v[i - 1], shape.v[i]);
    }
    arcs.emplace_back(shape.v[i], shape.w[i]);
    arcs.emplace_back(shape.w[i], shape.v[i - 1]);
  }
  int big_len = n - 2 * q + 2;
  if (variant == QnqlVariant::odd) big_len = n - 2 * q + 1;
  if (variant == QnqlVariant::mod2) big_len = n - 2 * q;
  std::vector<Vertex> big{0};
  for (int i = 1; i < big_len; ++i) big.push_back(next++);
  for (int i = 0; i < big_len; ++i)
    arcs.emplace_back(big[i], big[(i + 1) % big_len]);
  for (int t = 0; t < q - l - 1; ++t) {
    Vertex a = next++;
    Vertex b = next++;
    arcs.emplace_back(0, a);
    arcs.emplace_back(a, b);
    arcs.emplace_back(b, 0);
  }
  if (next != n) throw std::logic_error("vertex budget mismatch");
  shape.d = Digraph::build(n, std::move(arcs));
  shape.gamma_out = shape.d.out_neighbors(0);
  shape.gamma_in = shape.d.in_neighbors(0);
  return shape;
}

// Fill every uncolored element with fresh ascending colors, vertices first.
int fill_rest(std::vector<int>& arc_colors,
              std::vector<int>& vertex_colors, int next) {
  for (int& c : vertex_colors)
    if (c < 0) c = next++;
  for (int& c : arc_colors)
    if (c < 0) c = next++;
  return next;
}

}  // namespace

QnqlResult build_Qnql(int n, int q, int l, QnqlVariant variant) {
  QnqlShape shape = build_shape(n, q, l, variant);
  const Digraph& d = shape.d;
  QnqlResult result;

  auto arc = [&](Vertex a, Vertex b) { return d.arc_index(a, b); };

  // Vertex schemes (base and odd variants).
  if (variant == QnqlVariant::base) {
    std::vector<int> colors(n, -1);
    for (Vertex z : shape.gamma_out)
      if (z != shape.v[1]) colors[z] = 0;
    colors[shape.v[l]] = 0;
    for (Vertex z : shape.gamma_in)
      if (z != shape.w[1]) colors[z] = 1;
    colors[shape.w[l]] = 1;
    int next = 2;
    for (int& c : colors)
      if (c < 0) c = next++;
    result.rvc_value = n - 2 * q + 2 * l;
    if (next != result.rvc_value)
      throw std::logic_error("vertex scheme color count");
    result.rvc = Coloring::vertex_coloring(d, std::move(colors));
  } else if (variant == QnqlVariant::odd) {
    std::vector<int> colors(n, -1);
    for (Vertex z : shape.gamma_out) colors[z] = 0;
    for (Vertex z : shape.gamma_in)
      if (z != shape.w[1]) colors[z] = 1;
    colors[shape.w[l]] = 1;
    colors[shape.v[l]] = 2;
    colors[shape.w[l - 1]] = 2;
    int next = 3;
    for (int& c : colors)
      if (c < 0) c = next++;
    result.rvc_value = n - 2 * q + 2 * l - 1;
    if (next != result.rvc_value)
      throw std::logic_error("vertex scheme color count");
    result.rvc = Coloring::vertex_coloring(d, std::move(colors));
  }

  // Total schemes; group rules first, named rules overwrite.
  std::vector<int> ac(d.arc_count(), -1);
  std::vector<int> vc(n, -1);
  int k = 0;
  if (variant == QnqlVariant::base) {
    k = 3 * l;
    for (int i = 1; i <= l - 1; ++i) {
      ac[arc(shape.v[i], shape.w[i])] = i;
      ac[arc(shape.v[i], shape.v[i + 1])] = i;
    }
    for (Vertex z : shape.gamma_out) ac[arc(0, z)] = l;
    for (Vertex z : shape.gamma_in) ac[arc(z, 0)] = l + 1;
    for (Vertex z : shape.gamma_out)
      if (z != shape.v[1]) vc[z] = l + 2;
    vc[shape.v[l]] = l + 2;
    for (Vertex z : shape.gamma_in)
      if (z != shape.w[1]) vc[z] = l + 3;
    vc[shape.w[l]] = l + 3;
    fill_rest(ac, vc, l + 4);
  } else if (variant == QnqlVariant::odd) {
    k = 3 * l - 2;
    for (int i = 1; i <= l - 1; ++i) {
      ac[arc(shape.v[i], shape.w[i])] = i;
      ac[arc(shape.v[i], shape.v[i + 1])] = i;
    }
    ac[arc(shape.x1, shape.v[1])] = l;
    ac[arc(shape.w[2], shape.v[1])] = l;
    vc[shape.w[1]] = l + 1;
    vc[shape.v[l]] = l + 1;
    for (Vertex z : shape.gamma_out) ac[arc(0, z)] = l + 2;
    for (Vertex z : shape.gamma_in) ac[arc(z, 0)] = l + 3;
    for (Vertex z : shape.gamma_out) vc[z] = l + 4;
    for (Vertex z : shape.gamma_in)
      if (z != shape.w[1]) vc[z] = l + 5;
    vc[shape.w[l]] = l + 5;
    fill_rest(ac, vc, l + 6);
  } else {
    k = 3 * l - 4;
    ac[arc(shape.x2, shape.v[2])] = 1;
    ac[arc(shape.w[3], shape.v[2])] = 1;
    for (int i = 2; i <= l - 1; ++i) {
      ac[arc(shape.v[i], shape.w[i])] = i;
      ac[arc(shape.v[i], shape.v[i + 1])] = i;
    }
    ac[arc(shape.x1, shape.v[1])] = l;
    ac[arc(shape.w[2], shape.v[1])] = l;
    ac[arc(shape.v[1], shape.w[1])] = l + 1;
    vc[shape.v[l]] = l + 1;
    vc[shape.x1] = l + 2;
    vc[shape.w[2]] = l + 2;
    vc[shape.x2] = l + 3;
    vc[shape.w[l]] = l + 3;
    for (Vertex z : shape.gamma_out) ac[arc(0, z)] = l + 4;
    for (Vertex z : shape.gamma_in) ac[arc(z, 0)] = l + 5;
    for (Vertex z : shape.gamma_out)
      if (z != shape.x1) vc[z] = l + 6;
    ac[arc(shape.v[1], shape.x2)] = l + 6;
    for (Vertex z : shape.gamma_in) vc[z] = l + 7;
    fill_rest(ac, vc, l + 8);
  }
  result.trc_value = 2 * n - 3 * q + k;
  Coloring total = Coloring::total_coloring(d, std::move(ac), std::move(vc));
  if (total.color_count() != result.trc_value)
    throw std::logic_error("total scheme color count");
  result.trc = std::move(total);
  result.d = shape.d;
  return result;
}

}  // namespace rainbow
