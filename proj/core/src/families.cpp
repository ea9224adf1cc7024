#include "rainbow/families.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <string>

#include "rainbow/generate.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

namespace {

[[noreturn]] void bad_params(const std::string& what) {
  throw Error(ErrorKind::InvalidFamilyParams, what);
}

void require(bool ok, const std::string& what) {
  if (!ok) bad_params(what);
}

std::vector<Arc> path_edges(int n) {
  std::vector<Arc> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return edges;
}

std::vector<Arc> cycle_edges(int n) {
  auto edges = path_edges(n);
  edges.emplace_back(n - 1, 0);
  return edges;
}

}  // namespace

Digraph dipath(int n) {
  require(n >= 1, "dipath needs n >= 1");
  std::vector<Arc> arcs = path_edges(n);
  return Digraph::build(n, std::move(arcs));
}

Digraph dicycle(int n) {
  require(n >= 3, "dicycle needs n >= 3");
  return Digraph::build(n, cycle_edges(n));
}

Digraph bio_path(int n) {
  require(n >= 1, "bio_path needs n >= 1");
  return Digraph::biorient(n, path_edges(n));
}

Digraph bio_cycle(int n) {
  require(n >= 3, "bio_cycle needs n >= 3");
  return Digraph::biorient(n, cycle_edges(n));
}

Digraph bio_star(int leaves) {
  require(leaves >= 1, "bio_star needs at least one leaf");
  std::vector<Arc> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Digraph::biorient(leaves + 1, edges);
}

Digraph bio_wheel(int rim) {
  require(rim >= 3, "bio_wheel needs a rim of length >= 3");
  std::vector<Arc> edges;
  for (int i = 1; i <= rim; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i == rim ? 1 : i + 1);
  }
  return Digraph::biorient(rim + 1, edges);
}

Digraph bio_multipartite(const std::vector<int>& class_sizes) {
  require(class_sizes.size() >= 2, "need at least two classes");
  int n = 0;
  std::vector<int> cls;
  for (size_t i = 0; i < class_sizes.size(); ++i) {
    require(class_sizes[i] >= 1, "class sizes must be positive");
    for (int j = 0; j < class_sizes[i]; ++j) cls.push_back(static_cast<int>(i));
    n += class_sizes[i];
  }
  std::vector<Arc> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (cls[u] != cls[v]) edges.emplace_back(u, v);
  return Digraph::biorient(n, edges);
}

namespace {

// Outer cycle 0..4, inner 5..9; the inner 5-cycle visits 5,7,9,6,8.
const std::array<int, 5> kPetersenInner = {5, 7, 9, 6, 8};

std::vector<Arc> petersen_edges() {
  std::vector<Arc> edges;
  for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i)
    edges.emplace_back(kPetersenInner[i], kPetersenInner[(i + 1) % 5]);
  for (int i = 0; i < 5; ++i) edges.emplace_back(i, i + 5);
  return edges;
}

// Edge colors cycling 1,2,3 around a 5-cycle with vertex colors chosen off
// the two incident edge colors make the bioriented cycle strongly total
// rainbow connected with three colors. The inner pattern is rotated so the
// first inner vertex carries color 1: expanding it into a clique keeps
// every geodesic coloring intact when the clique is colored 1.
const std::array<int, 5> kOuterEdge = {1, 2, 3, 1, 2};
const std::array<int, 5> kOuterVertex = {3, 3, 1, 2, 3};
const std::array<int, 5> kInnerEdge = {2, 3, 1, 2, 3};
const std::array<int, 5> kInnerVertex = {1, 1, 2, 3, 1};

}  // namespace

Digraph petersen() { return Digraph::biorient(10, petersen_edges()); }

Coloring petersen_strc_coloring() {
  Digraph d = petersen();
  std::vector<int> arc_colors(d.arc_count(), 0);
  std::vector<int> vertex_colors(10, 0);
  auto color_edge = [&](int u, int v, int color) {
    arc_colors[d.arc_index(u, v)] = color;
    arc_colors[d.arc_index(v, u)] = color;
  };
  for (int i = 0; i < 5; ++i) {
    color_edge(i, (i + 1) % 5, kOuterEdge[i]);
    vertex_colors[i] = kOuterVertex[i];
    color_edge(kPetersenInner[i], kPetersenInner[(i + 1) % 5], kInnerEdge[i]);
    vertex_colors[kPetersenInner[i]] = kInnerVertex[i];
    color_edge(i, i + 5, 4);
  }
  return Coloring::total_coloring(d, std::move(arc_colors),
                                  std::move(vertex_colors));
}

Digraph petersen_expanded(int n) {
  require(n >= 11, "expanded Petersen needs n >= 11");
  Digraph clique = bio_multipartite(std::vector<int>(n - 9, 1));
  return expand(petersen(), 5, clique);
}

Coloring petersen_expanded_coloring(int n) {
  Digraph d = petersen_expanded(n);
  Digraph base = petersen();
  Coloring base_coloring = petersen_strc_coloring();
  auto in_clique = [&](Vertex v) { return v == 5 || v >= 10; };
  auto preimage = [&](Vertex v) { return in_clique(v) ? 5 : v; };
  // Clique members all inherit the expanded vertex's color, so geodesic
  // colorings carry over verbatim; clique arcs reuse it too.
  int clique_color = base_coloring.vertex_color(5);
  std::vector<int> arc_colors(d.arc_count());
  for (int i = 0; i < d.arc_count(); ++i) {
    auto [x, y] = d.arc(i);
    if (in_clique(x) && in_clique(y)) {
      arc_colors[i] = clique_color;
    } else {
      arc_colors[i] =
          base_coloring.arc_color(base.arc_index(preimage(x), preimage(y)));
    }
  }
  std::vector<int> vertex_colors(d.vertex_count());
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    vertex_colors[v] =
        in_clique(v) ? clique_color : base_coloring.vertex_color(v);
  return Coloring::total_coloring(d, std::move(arc_colors),
                                  std::move(vertex_colors));
}

Digraph tournament_T4() {
  return Digraph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
}

Digraph tournament_T53() {
  return Digraph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                            {0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 0}});
}

Coloring t53_strc_coloring() {
  SolveResult r = exact(tournament_T53(), ParamKind::TRC);
  return r.witness;
}

Digraph tournament_TNk(int k) {
  require(k >= 5 && k % 2 == 1, "k must be odd and >= 5");
  int n = (k + 3) / 2;
  std::vector<Arc> arcs;
  for (int i = 1; i < n; ++i) arcs.emplace_back(i - 1, i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j + 2 <= i; ++j) arcs.emplace_back(i, j);
  return Digraph::build(n, std::move(arcs));
}

namespace {

// Raw (unnormalized) chain-tournament colors: forward arc into v_i has color
// i-1, back arcs share the last forward color, vertex palette starts at N-1.
struct ChainColors {
  int n = 0;
  int arc_color(Vertex u, Vertex v) const {
    return v == u + 1 ? u : n - 2;
  }
  int vertex_color(Vertex v) const {
    return (v == 0 || v == n - 1) ? n - 1 : n - 2 + v;
  }
};

}  // namespace

Coloring tnk_coloring(int k) {
  Digraph d = tournament_TNk(k);
  ChainColors colors{d.vertex_count()};
  std::vector<int> arc_colors(d.arc_count());
  for (int i = 0; i < d.arc_count(); ++i)
    arc_colors[i] = colors.arc_color(d.arc(i).first, d.arc(i).second);
  std::vector<int> vertex_colors(d.vertex_count());
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    vertex_colors[v] = colors.vertex_color(v);
  return Coloring::total_coloring(d, std::move(arc_colors),
                                  std::move(vertex_colors));
}

namespace {

// Total coloring of t that is strongly total rainbow connected, with arcs
// colored from arc_ids and vertices from vertex_ids only. Backtracking with
// the shared pair-feasibility pruning; ids are kept raw for embedding.
struct SplitColors {
  std::vector<int> arc_colors;
  std::vector<int> vertex_colors;
};

std::optional<SplitColors> split_palette_strc(const Digraph& t,
                                              const std::vector<int>& arc_ids,
                                              const std::vector<int>& vertex_ids) {
  DistanceTable dt = distances(t);
  detail::PairSearcher searcher(t, &dt);
  int n = t.vertex_count();
  int m = t.arc_count();
  int palette = 0;
  for (int id : arc_ids) palette = std::max(palette, id + 1);
  for (int id : vertex_ids) palette = std::max(palette, id + 1);

  std::vector<int> arc_colors(m, detail::kUncolored);
  std::vector<int> vertex_colors(n, detail::kUncolored);
  detail::PartialColors pc{arc_colors.data(), vertex_colors.data(), palette};
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && !t.has_arc(u, v)) pairs.emplace_back(u, v);
  auto pairs_ok = [&] {
    for (auto [u, v] : pairs)
      if (!searcher.feasible(pc, u, v)) return false;
    return true;
  };
  // Vertices first, then arcs, mirroring the solver's canonical order.
  int total = n + m;
  auto assign = [&](int index, int color) {
    if (index < n)
      vertex_colors[index] = color;
    else
      arc_colors[index - n] = color;
  };
  auto options = [&](int index) -> const std::vector<int>& {
    return index < n ? vertex_ids : arc_ids;
  };
  std::function<bool(int)> dfs = [&](int index) -> bool {
    if (index == total) return true;
    for (int color : options(index)) {
      assign(index, color);
      if (pairs_ok() && dfs(index + 1)) return true;
    }
    assign(index, detail::kUncolored);
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  return SplitColors{std::move(arc_colors), std::move(vertex_colors)};
}

// Tournament on m >= 6 vertices admitting a rainbow connected arc coloring
// with two colors (hence both total parameters equal 3). Deterministic
// seeded search; cached per m.
struct Rc2Tournament {
  Digraph t;
  std::vector<int> arc_colors;  // two colors
};

const Rc2Tournament& rc2_tournament(int m) {
  static std::map<int, Rc2Tournament> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  auto try_one = [&](const Digraph& t) -> bool {
    if (!is_strongly_connected(t)) return false;
    SolveBudget budget;
    budget.max_elements = t.arc_count();
    auto witness = feasible_coloring(t, ParamKind::RC, 2, budget);
    if (!witness) return false;
    cache.emplace(m, Rc2Tournament{t, witness->arc_colors()});
    return true;
  };

  if (m % 2 == 1) {
    // Circulant candidate: i beats i+1..i+(m-1)/2.
    std::vector<Arc> arcs;
    for (int i = 0; i < m; ++i)
      for (int j = 1; j <= (m - 1) / 2; ++j) arcs.emplace_back(i, (i + j) % m);
    if (try_one(Digraph::build(m, std::move(arcs)))) return cache.at(m);
  }
  Rng rng(0xC0FFEEULL + static_cast<std::uint64_t>(m));
  for (int attempt = 0; attempt < 2000; ++attempt) {
    if (try_one(random_tournament(m, rng))) return cache.at(m);
  }
  bad_params("no 2-color rainbow connected tournament found for m = " +
             std::to_string(m));
}

// tournament_T4 is the chain tournament on four vertices relabelled by
// +2 mod 4; transport the chain colors through that relabelling.
struct T4Colors {
  ChainColors chain{4};
  int arc_color(Vertex u, Vertex v) const {
    return chain.arc_color((u + 2) % 4, (v + 2) % 4);
  }
  int vertex_color(Vertex v) const {
    return chain.vertex_color((v + 2) % 4);
  }
};

Coloring t4_strc_coloring() {
  Digraph d = tournament_T4();
  T4Colors colors;
  std::vector<int> arc_colors(d.arc_count());
  for (int i = 0; i < d.arc_count(); ++i)
    arc_colors[i] = colors.arc_color(d.arc(i).first, d.arc(i).second);
  std::vector<int> vertex_colors(d.vertex_count());
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    vertex_colors[v] = colors.vertex_color(v);
  return Coloring::total_coloring(d, std::move(arc_colors),
                                  std::move(vertex_colors));
}

}  // namespace

DigraphColoring tournament_Tnk(int n, int k) {
  require(k % 2 == 1, "k must be odd");
  require(k >= 5, "k must be at least 5");
  require(k <= 2 * n - 3, "k must be at most 2n-3");
  int chain_n = (k + 3) / 2;
  require(chain_n <= n, "n too small for the chain construction");
  if (n == chain_n) return DigraphColoring{tournament_TNk(k), tnk_coloring(k)};

  int m = n - chain_n + 1;
  Digraph base = tournament_TNk(k);
  ChainColors base_colors{chain_n};
  int alpha1 = chain_n - 1;

  Digraph part;
  std::vector<int> part_arc_colors;
  std::vector<int> part_vertex_colors;
  switch (m) {
    case 2: {
      part = Digraph::build(2, {{0, 1}});
      part_arc_colors = {0};
      part_vertex_colors = {alpha1, alpha1};
      break;
    }
    case 3: {
      part = dicycle(3);
      part_arc_colors.assign(3, 0);
      part_arc_colors[part.arc_index(0, 1)] = 0;
      part_arc_colors[part.arc_index(1, 2)] = 1;
      part_arc_colors[part.arc_index(2, 0)] = 2;
      part_vertex_colors = {alpha1, alpha1, alpha1};
      break;
    }
    case 4: {
      part = tournament_T4();
      T4Colors t4;
      part_arc_colors.resize(part.arc_count());
      for (int i = 0; i < part.arc_count(); ++i)
        part_arc_colors[i] = t4.arc_color(part.arc(i).first, part.arc(i).second);
      // The small scheme's vertex palette {3, 4} lands on alpha_1, alpha_2.
      part_vertex_colors.resize(4);
      for (Vertex v = 0; v < 4; ++v)
        part_vertex_colors[v] = t4.vertex_color(v) - 3 + alpha1;
      break;
    }
    case 5: {
      part = tournament_T53();
      auto split = split_palette_strc(part, {0, 1, 2}, {alpha1});
      if (!split) bad_params("no split-palette coloring for the 5-vertex part");
      part_arc_colors = std::move(split->arc_colors);
      part_vertex_colors = std::move(split->vertex_colors);
      break;
    }
    default: {
      const Rc2Tournament& rc2 = rc2_tournament(m);
      part = rc2.t;
      part_arc_colors = rc2.arc_colors;
      part_vertex_colors.assign(m, alpha1);
      break;
    }
  }

  Digraph big = expand(base, 0, part);
  auto in_part = [&](Vertex v) { return v == 0 || v >= chain_n; };
  auto part_id = [&](Vertex v) { return v == 0 ? 0 : v - chain_n + 1; };

  std::vector<int> arc_colors(big.arc_count());
  for (int i = 0; i < big.arc_count(); ++i) {
    auto [x, y] = big.arc(i);
    bool xin = in_part(x);
    bool yin = in_part(y);
    if (xin && yin) {
      arc_colors[i] = part_arc_colors[part.arc_index(part_id(x), part_id(y))];
    } else if (xin) {
      arc_colors[i] = base_colors.arc_color(0, y);
    } else if (yin) {
      arc_colors[i] = base_colors.arc_color(x, 0);
    } else {
      arc_colors[i] = base_colors.arc_color(x, y);
    }
  }
  std::vector<int> vertex_colors(big.vertex_count());
  for (Vertex v = 0; v < big.vertex_count(); ++v)
    vertex_colors[v] = in_part(v) ? part_vertex_colors[part_id(v)]
                                  : base_colors.vertex_color(v);
  Coloring coloring = Coloring::total_coloring(big, std::move(arc_colors),
                                               std::move(vertex_colors));
  if (coloring.color_count() != k)
    throw std::logic_error("chain expansion coloring count mismatch");
  return DigraphColoring{std::move(big), std::move(coloring)};
}

Digraph ky_gs(int s) {
  require(s >= 1, "ky_gs needs s >= 1");
  std::vector<Arc> edges;
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) edges.emplace_back(i, j);
  for (int i = 0; i < s; ++i) {
    int v = s + 2 * i;
    int w = s + 2 * i + 1;
    edges.emplace_back(i, v);
    edges.emplace_back(v, w);
    edges.emplace_back(w, i);
  }
  return Digraph::biorient(3 * s, edges);
}

namespace {

std::vector<Arc> hs_edges(int s) {
  std::vector<Arc> edges;
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) edges.emplace_back(i, j);
  auto v_of = [&](int i) { return s + 2 * i; };
  auto w_of = [&](int i) { return s + 2 * i + 1; };
  auto z_of = [&](int i) { return 3 * s + i; };
  for (int i = 0; i < s; ++i) {
    edges.emplace_back(i, v_of(i));
    edges.emplace_back(v_of(i), w_of(i));
    edges.emplace_back(w_of(i), i);
    edges.emplace_back(i, z_of(i));
    edges.emplace_back((i + 1) % s, z_of(i));
    edges.emplace_back(v_of(i), z_of(i));
    edges.emplace_back(w_of(i), z_of((i + 4) % s));
  }
  return edges;
}

}  // namespace

Digraph hs(int s) {
  require(s >= 13, "hs needs s >= 13");
  return Digraph::biorient(4 * s, hs_edges(s));
}

Coloring hs_strc_coloring(int s) {
  Digraph d = hs(s);
  auto v_of = [&](int i) { return s + 2 * i; };
  auto w_of = [&](int i) { return s + 2 * i + 1; };
  auto z_of = [&](int i) { return 3 * s + i; };
  auto cyc = [&](int x) { return ((x % s) + s) % s; };

  std::vector<int> arc_colors(d.arc_count(), -1);
  std::vector<int> vertex_colors(d.vertex_count(), -1);
  auto edge = [&](int u, int v, int color) {
    arc_colors[d.arc_index(u, v)] = color;
    arc_colors[d.arc_index(v, u)] = color;
  };
  for (int i = 0; i < s; ++i) {
    vertex_colors[i] = cyc(i);
    edge(w_of(i), z_of(cyc(i + 4)), cyc(i));
    edge(i, v_of(i), cyc(i + 1));
    vertex_colors[v_of(i)] = cyc(i + 2);
    edge(v_of(i), w_of(i), cyc(i + 3));
    edge(cyc(i + 1), z_of(i), cyc(i + 3));
    vertex_colors[w_of(i)] = cyc(i + 4);
    vertex_colors[z_of(i)] = cyc(i + 4);
    edge(w_of(i), i, cyc(i + 5));
    edge(i, z_of(i), cyc(i + 5));
    edge(v_of(i), z_of(i), cyc(i + 5));
  }
  // Clique edges avoid the six-color windows of both endpoints.
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) {
      std::vector<char> banned(s, 0);
      for (int t = 0; t < 6; ++t) {
        banned[cyc(i + t)] = 1;
        banned[cyc(j + t)] = 1;
      }
      int color = -1;
      for (int c = 0; c < s; ++c)
        if (!banned[c]) {
          color = c;
          break;
        }
      if (color < 0) bad_params("no free clique color; s too small");
      edge(i, j, color);
    }
  return Coloring::total_coloring(d, std::move(arc_colors),
                                  std::move(vertex_colors));
}

Digraph fs(int s) {
  require(s >= 2, "fs needs s >= 2");
  std::vector<Arc> edges;
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) edges.emplace_back(i, j);
  for (int i = 0; i < s; ++i) edges.emplace_back(i, s + i);
  return Digraph::biorient(2 * s, edges);
}

Coloring fs_src_coloring(int s) {
  Digraph d = fs(s);
  std::vector<int> arc_colors(d.arc_count(), 0);
  for (int i = 0; i < s; ++i) {
    arc_colors[d.arc_index(i, s + i)] = 1;
    arc_colors[d.arc_index(s + i, i)] = 2;
  }
  return Coloring::arc_coloring(d, std::move(arc_colors));
}

Digraph triangle_fan(int t) {
  require(t >= 1, "triangle_fan needs t >= 1");
  std::vector<Arc> arcs;
  for (int i = 0; i < t; ++i) {
    int x = 2 * i + 1;
    int y = 2 * i + 2;
    arcs.emplace_back(0, x);
    arcs.emplace_back(x, y);
    arcs.emplace_back(y, 0);
  }
  return Digraph::build(2 * t + 1, std::move(arcs));
}

namespace {

void require_tournament(const Digraph& t) {
  if (!classify(t).is_tournament)
    throw Error(ErrorKind::NotATournament, "not a tournament");
}

// Deterministic geodesic: smallest next id among distance-decreasing
// out-neighbors.
std::vector<Vertex> least_geodesic(const Digraph& d, const DistanceTable& dt,
                                   Vertex from, Vertex to) {
  std::vector<Vertex> path{from};
  Vertex x = from;
  while (x != to) {
    for (Vertex y : d.out_neighbors(x)) {
      if (dt.at(y, to) == dt.at(x, to) - 1) {
        path.push_back(y);
        x = y;
        break;
      }
    }
  }
  return path;
}

}  // namespace

Coloring tournament_trc_coloring(const Digraph& t) {
  require_tournament(t);
  DistanceTable dt = distances(t);
  if (!dt.strongly_connected)
    throw Error(ErrorKind::NotStronglyConnected, "tournament not strongly connected");
  int n = t.vertex_count();
  if (n < 5)
    throw Error(ErrorKind::PreconditionViolated, "needs n >= 5");
  int d = dt.diameter;

  Vertex a = -1, b = -1;
  for (Vertex u = 0; u < n && a < 0; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && dt.at(u, v) == d) {
        a = u;
        b = v;
        break;
      }
  std::vector<Vertex> geo = least_geodesic(t, dt, a, b);

  auto f = [&](Vertex v) -> int {
    if (v == b) return n - 1;
    if (v == n - 1) return b;
    return v;
  };
  std::vector<int> arc_colors(t.arc_count());
  for (int i = 0; i < t.arc_count(); ++i) {
    auto [u, v] = t.arc(i);
    if (u != b)
      arc_colors[i] = f(u);
    else
      arc_colors[i] = (v == a) ? f(geo[1]) : f(a);
  }

  std::vector<int> vertex_colors(n);
  if (d == 2) {
    // The n-1 color arc scheme can break exactly when the only geodesic
    // from geo[1] back to a runs through b; fall back to coloring every
    // arc by its tail (n colors, every length-2 geodesic rainbow).
    if (!check_connected(t, Coloring::arc_coloring(t, arc_colors),
                         ParamKind::SRC)
             .ok) {
      for (int i = 0; i < t.arc_count(); ++i)
        arc_colors[i] = t.arc(i).first;
    }
    std::fill(vertex_colors.begin(), vertex_colors.end(), n);
  } else {
    Vertex a1 = geo[1];
    Vertex a_last = geo[d - 1];
    int next = n + 1;
    for (Vertex v = 0; v < n; ++v) {
      if (v == a || v == a_last)
        vertex_colors[v] = n - 1;
      else if (v == a1 || v == b)
        vertex_colors[v] = n;
      else
        vertex_colors[v] = next++;
    }
  }
  return Coloring::total_coloring(t, std::move(arc_colors),
                                  std::move(vertex_colors));
}

Coloring tournament_diam_coloring(const Digraph& t,
                                  TournamentLayers* layers_out) {
  require_tournament(t);
  DistanceTable dt = distances(t);
  if (!dt.strongly_connected)
    throw Error(ErrorKind::NotStronglyConnected, "tournament not strongly connected");
  int n = t.vertex_count();
  int d = dt.diameter;
  if (d < 2)
    throw Error(ErrorKind::PreconditionViolated, "needs diameter >= 2");

  Vertex a = -1;
  for (Vertex u = 0; u < n && a < 0; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (dt.at(u, v) == d) {
        a = u;
        break;
      }
  std::vector<std::vector<Vertex>> layer(d + 1);
  std::vector<int> layer_of(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    int dist = dt.at(a, v);
    layer_of[v] = dist;
    if (dist >= 1) layer[dist].push_back(v);
  }

  TournamentLayers info;
  info.base = a;
  info.layers.assign(layer.begin() + 1, layer.end());

  std::vector<int> arc_colors(t.arc_count());
  std::vector<int> vertex_colors(n);

  if (d == 2) {
    for (int i = 0; i < t.arc_count(); ++i) {
      auto [u, v] = t.arc(i);
      if (v == a)
        arc_colors[i] = 2;
      else if (u == a || layer_of[u] == layer_of[v])
        arc_colors[i] = 0;
      else
        arc_colors[i] = 1;
    }
    for (Vertex v = 0; v < n; ++v) vertex_colors[v] = v == a ? 3 : 4;
    if (layers_out != nullptr) *layers_out = std::move(info);
    return Coloring::total_coloring(t, std::move(arc_colors),
                                    std::move(vertex_colors));
  }

  // Arc palette: underline colors 1..d+4 as 0..d+3. Vertex palette:
  // 1..d+3 as d+4..2d+6.
  auto arc_id = [&](int c) { return c - 1; };
  auto vertex_id = [&](int c) { return d + 3 + c; };

  auto in_degree_in = [&](Vertex v, const std::vector<Vertex>& set) {
    int deg = 0;
    for (Vertex u : set)
      if (u != v && t.has_arc(u, v)) ++deg;
    return deg;
  };
  auto out_degree_in = [&](Vertex v, const std::vector<Vertex>& set) {
    int deg = 0;
    for (Vertex u : set)
      if (u != v && t.has_arc(v, u)) ++deg;
    return deg;
  };
  Vertex p = layer[1][0];
  for (Vertex v : layer[1])
    if (in_degree_in(v, layer[1]) > in_degree_in(p, layer[1])) p = v;
  Vertex q = layer[d][0];
  for (Vertex v : layer[d])
    if (out_degree_in(v, layer[d]) > out_degree_in(q, layer[d])) q = v;
  info.deep_in = p;
  info.deep_out = q;

  for (int i = 0; i < t.arc_count(); ++i) {
    auto [u, v] = t.arc(i);
    int lu = layer_of[u];
    int lv = layer_of[v];
    if (lu < lv) {
      arc_colors[i] = arc_id(lv);  // forward arcs climb one layer
    } else if (lu > lv) {
      arc_colors[i] = arc_id(d + 1);
    } else if (lu == d) {
      arc_colors[i] = u == q ? arc_id(d - 1) : arc_id(d + 1);
    } else {
      arc_colors[i] = v == p ? arc_id(1) : arc_id(d + 2);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    int lv = layer_of[v];
    if (v == a || v == q)
      vertex_colors[v] = vertex_id(d + 1);
    else if (v == p)
      vertex_colors[v] = vertex_id(d);
    else if (lv == 1)
      vertex_colors[v] = vertex_id(1);
    else if (lv == d)
      vertex_colors[v] = vertex_id(d - 2);
    else
      vertex_colors[v] = vertex_id(lv);
  }

  // Update along a p-q geodesic.
  std::vector<Vertex> geo = least_geodesic(t, dt, p, q);
  info.geodesic = geo;
  int len = static_cast<int>(geo.size()) - 1;
  Vertex r = -1, s = -1;
  if (len == d - 1) {
    info.update_case = 1;
    for (Vertex v : geo)
      if (layer_of[v] == d - 2) r = v;
  } else {
    info.update_case = 2;
    int level_at = -1;
    for (int i = 0; i + 1 < static_cast<int>(geo.size()); ++i)
      if (layer_of[geo[i]] == layer_of[geo[i + 1]]) level_at = i;
    int level_layer = layer_of[geo[level_at]];
    s = geo[level_at];
    if (level_layer == d - 2) {
      r = geo[level_at + 1];
    } else {
      for (Vertex v : geo)
        if (layer_of[v] == d - 2) r = v;
    }
    arc_colors[t.arc_index(geo[level_at], geo[level_at + 1])] = arc_id(d + 4);
    vertex_colors[s] = vertex_id(d + 3);
    info.recolored_s = s;
  }
  vertex_colors[r] = vertex_id(d + 2);
  info.recolored_r = r;
  for (size_t i = 0; i + 1 < geo.size(); ++i)
    if (geo[i] == r)
      arc_colors[t.arc_index(r, geo[i + 1])] = arc_id(d + 3);

  if (layers_out != nullptr) *layers_out = std::move(info);
  return Coloring::total_coloring(t, std::move(arc_colors),
                                  std::move(vertex_colors));
}

int formula(FormulaName name, int n) {
  switch (name) {
    case FormulaName::bio_cycle_trc:
      if (n < 3) throw Error(ErrorKind::OutOfRange, "needs n >= 3");
      if (n == 3 || n == 5) return n - 2;
      if (n == 4 || (n >= 6 && n <= 10) || n == 12) return n - 1;
      return n;
    case FormulaName::dicycle_trc:
      if (n < 3) throw Error(ErrorKind::OutOfRange, "needs n >= 3");
      if (n == 3) return 3;
      if (n == 4) return 6;
      return 2 * n;
    case FormulaName::bio_path_trc:
      if (n < 2) throw Error(ErrorKind::OutOfRange, "needs n >= 2");
      return 2 * n - 3;
    case FormulaName::dicycle_rvc:
      if (n < 3) throw Error(ErrorKind::OutOfRange, "needs n >= 3");
      return n <= 4 ? n - 2 : n;
    case FormulaName::dicycle_rc:
      if (n < 3) throw Error(ErrorKind::OutOfRange, "needs n >= 3");
      return n;
  }
  throw Error(ErrorKind::OutOfRange, "unknown formula");
}

BacktrackReport petersen_trc3_search() {
  Digraph d = petersen();
  // Non-adjacent ordered pairs all lie at distance 2 with a unique middle
  // vertex; collect the (arc, vertex, arc) triples that must be rainbow.
  struct Triple {
    int arc_in;
    Vertex mid;
    int arc_out;
  };
  std::vector<Triple> triples;
  for (Vertex x = 0; x < 10; ++x)
    for (Vertex y = 0; y < 10; ++y) {
      if (x == y || d.has_arc(x, y)) continue;
      int count = 0;
      Triple triple{};
      for (Vertex w : d.out_neighbors(x))
        if (d.has_arc(w, y)) {
          triple = Triple{d.arc_index(x, w), w, d.arc_index(w, y)};
          ++count;
        }
      if (count != 1)
        throw std::logic_error("length-2 paths not unique in the Petersen graph");
      triples.push_back(triple);
    }

  int n = d.vertex_count();
  int m = d.arc_count();
  std::vector<int> element_color(n + m, -1);
  // Constraints indexed by element: vertices 0..n-1, arcs n..n+m-1.
  std::vector<std::vector<int>> involving(n + m);
  for (size_t i = 0; i < triples.size(); ++i) {
    involving[triples[i].mid].push_back(static_cast<int>(i));
    involving[n + triples[i].arc_in].push_back(static_cast<int>(i));
    involving[n + triples[i].arc_out].push_back(static_cast<int>(i));
  }
  auto violated = [&](int triple_index) {
    const Triple& tr = triples[triple_index];
    int ca = element_color[n + tr.arc_in];
    int cv = element_color[tr.mid];
    int cb = element_color[n + tr.arc_out];
    if (ca >= 0 && ca == cv) return true;
    if (cb >= 0 && cb == cv) return true;
    if (ca >= 0 && ca == cb) return true;
    return false;
  };

  BacktrackReport report;
  std::function<bool(int, int)> dfs = [&](int index, int used) -> bool {
    if (index == n + m) return true;
    int limit = std::min(used, 2);
    for (int color = 0; color <= limit; ++color) {
      element_color[index] = color;
      ++report.nodes;
      bool ok = true;
      for (int tri : involving[index])
        if (violated(tri)) {
          ok = false;
          break;
        }
      if (ok && dfs(index + 1, used + (color == used ? 1 : 0))) return true;
    }
    element_color[index] = -1;
    return false;
  };
  report.satisfiable = dfs(0, 0);
  return report;
}

const char* family_name(Family family) {
  switch (family) {
    case Family::dipath: return "dipath";
    case Family::dicycle: return "dicycle";
    case Family::bio_path: return "bio_path";
    case Family::bio_cycle: return "bio_cycle";
    case Family::bio_star: return "bio_star";
    case Family::bio_wheel: return "bio_wheel";
    case Family::bio_multipartite: return "bio_multipartite";
    case Family::petersen: return "petersen";
    case Family::petersen_expanded: return "petersen_expanded";
    case Family::tournament_T4: return "tournament_T4";
    case Family::tournament_T53: return "tournament_T53";
    case Family::tournament_TNk: return "tournament_TNk";
    case Family::tournament_Tnk: return "tournament_Tnk";
    case Family::ky_gs: return "ky_gs";
    case Family::hs: return "hs";
    case Family::fs: return "fs";
    case Family::triangle_fan: return "triangle_fan";
  }
  return "?";
}

bool parse_family(const std::string& text, Family& out) {
  static const Family all[] = {
      Family::dipath,          Family::dicycle,
      Family::bio_path,        Family::bio_cycle,
      Family::bio_star,        Family::bio_wheel,
      Family::bio_multipartite, Family::petersen,
      Family::petersen_expanded, Family::tournament_T4,
      Family::tournament_T53,  Family::tournament_TNk,
      Family::tournament_Tnk,  Family::ky_gs,
      Family::hs,              Family::fs,
      Family::triangle_fan,
  };
  for (Family f : all)
    if (text == family_name(f)) {
      out = f;
      return true;
    }
  return false;
}

namespace {

int param(const FamilySpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) bad_params("missing parameter " + key);
  return it->second;
}

std::vector<int> multipartite_sizes(const FamilySpec& spec) {
  std::vector<int> sizes;
  for (int i = 1;; ++i) {
    auto it = spec.params.find("n" + std::to_string(i));
    if (it == spec.params.end()) break;
    sizes.push_back(it->second);
  }
  if (sizes.empty()) bad_params("bio_multipartite needs n1, n2, ...");
  return sizes;
}

}  // namespace

Digraph make(const FamilySpec& spec) {
  switch (spec.name) {
    case Family::dipath: return dipath(param(spec, "n"));
    case Family::dicycle: return dicycle(param(spec, "n"));
    case Family::bio_path: return bio_path(param(spec, "n"));
    case Family::bio_cycle: return bio_cycle(param(spec, "n"));
    case Family::bio_star: return bio_star(param(spec, "n"));
    case Family::bio_wheel: return bio_wheel(param(spec, "n"));
    case Family::bio_multipartite: return bio_multipartite(multipartite_sizes(spec));
    case Family::petersen: return petersen();
    case Family::petersen_expanded: return petersen_expanded(param(spec, "n"));
    case Family::tournament_T4: return tournament_T4();
    case Family::tournament_T53: return tournament_T53();
    case Family::tournament_TNk: return tournament_TNk(param(spec, "k"));
    case Family::tournament_Tnk:
      return tournament_Tnk(param(spec, "n"), param(spec, "k")).d;
    case Family::ky_gs: return ky_gs(param(spec, "s"));
    case Family::hs: return hs(param(spec, "s"));
    case Family::fs: return fs(param(spec, "s"));
    case Family::triangle_fan: return triangle_fan(param(spec, "t"));
  }
  bad_params("unknown family");
}

bool has_coloring_scheme(Family family) {
  switch (family) {
    case Family::bio_wheel:
    case Family::bio_multipartite:
    case Family::petersen:
    case Family::petersen_expanded:
    case Family::tournament_T4:
    case Family::tournament_T53:
    case Family::tournament_TNk:
    case Family::tournament_Tnk:
    case Family::hs:
    case Family::fs:
      return true;
    default:
      return false;
  }
}

Coloring coloring_for(const FamilySpec& spec) {
  switch (spec.name) {
    case Family::bio_wheel: {
      Digraph d = bio_wheel(param(spec, "n"));
      std::vector<int> arc_colors(d.arc_count(), 0);
      for (int i = 0; i < d.arc_count(); ++i) {
        auto [u, v] = d.arc(i);
        if (v == 0) arc_colors[i] = 0;
        else if (u == 0) arc_colors[i] = 1;
        else arc_colors[i] = 0;
      }
      std::vector<int> vertex_colors(d.vertex_count(), 1);
      vertex_colors[0] = 2;
      return Coloring::total_coloring(d, std::move(arc_colors),
                                      std::move(vertex_colors));
    }
    case Family::bio_multipartite: {
      auto sizes = multipartite_sizes(spec);
      Digraph d = bio_multipartite(sizes);
      std::vector<int> cls;
      for (size_t i = 0; i < sizes.size(); ++i)
        for (int j = 0; j < sizes[i]; ++j) cls.push_back(static_cast<int>(i));
      std::vector<int> arc_colors(d.arc_count());
      for (int i = 0; i < d.arc_count(); ++i) {
        auto [u, v] = d.arc(i);
        arc_colors[i] = cls[u] < cls[v] ? 0 : 1;
      }
      std::vector<int> vertex_colors(d.vertex_count(), 2);
      return Coloring::total_coloring(d, std::move(arc_colors),
                                      std::move(vertex_colors));
    }
    case Family::petersen: return petersen_strc_coloring();
    case Family::petersen_expanded:
      return petersen_expanded_coloring(param(spec, "n"));
    case Family::tournament_T4: return t4_strc_coloring();
    case Family::tournament_T53: return t53_strc_coloring();
    case Family::tournament_TNk: return tnk_coloring(param(spec, "k"));
    case Family::tournament_Tnk:
      return tournament_Tnk(param(spec, "n"), param(spec, "k")).c;
    case Family::hs: return hs_strc_coloring(param(spec, "s"));
    case Family::fs: return fs_src_coloring(param(spec, "s"));
    default:
      throw Error(ErrorKind::NoSchemeForFamily,
                  std::string("no coloring scheme for ") +
                      family_name(spec.name));
  }
}

bool parse_formula_name(const std::string& text, FormulaName& out) {
  if (text == "bio_cycle_trc") out = FormulaName::bio_cycle_trc;
  else if (text == "dicycle_trc") out = FormulaName::dicycle_trc;
  else if (text == "bio_path_trc") out = FormulaName::bio_path_trc;
  else if (text == "dicycle_rvc") out = FormulaName::dicycle_rvc;
  else if (text == "dicycle_rc") out = FormulaName::dicycle_rc;
  else return false;
  return true;
}

}  // namespace rainbow
