#include "rainbow/generate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rainbow {

Digraph random_tournament(int n, Rng& rng) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      arcs.emplace_back(rng.uniform(2) == 0 ? Arc{u, v} : Arc{v, u});
  return Digraph::build(n, std::move(arcs));
}

Digraph random_strongly_connected_tournament(int n, Rng& rng) {
  if (n < 3)
    throw Error(ErrorKind::InvalidFamilyParams,
                "no strongly connected tournament below 3 vertices");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Digraph t = random_tournament(n, rng);
    if (is_strongly_connected(t)) return t;
  }
  throw Error(ErrorKind::InvalidFamilyParams,
              "failed to sample a strongly connected tournament");
}

Digraph random_strongly_connected_digraph(int n, int extra_arc_percent,
                                          Rng& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.uniform(i + 1)]);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    arcs.emplace_back(perm[i], perm[(i + 1) % n]);
  std::sort(arcs.begin(), arcs.end());
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      Arc a{u, v};
      if (std::binary_search(arcs.begin(), arcs.end(), a)) continue;
      if (rng.chance_percent(extra_arc_percent))
        arcs.insert(std::lower_bound(arcs.begin(), arcs.end(), a), a);
    }
  return Digraph::build(n, std::move(arcs));
}

SpanningPair random_spanning_pair(int n, Rng& rng) {
  Digraph h = random_strongly_connected_digraph(n, 20, rng);
  std::vector<Arc> arcs = h.arcs();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || h.has_arc(u, v)) continue;
      if (rng.chance_percent(30)) arcs.emplace_back(u, v);
    }
  return SpanningPair{h, Digraph::build(n, std::move(arcs))};
}

std::vector<Arc> random_connected_graph(int n, int extra_edge_percent,
                                        Rng& rng) {
  std::vector<Arc> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(rng.uniform(v), v);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (std::find(edges.begin(), edges.end(), Arc{u, v}) != edges.end())
        continue;
      if (rng.chance_percent(extra_edge_percent)) edges.emplace_back(u, v);
    }
  return edges;
}

Digraph random_cactus(int n, int q, Rng& rng) {
  if (q < 1 || n < 2 * q + 1)
    throw Error(ErrorKind::InvalidFamilyParams,
                "cactus needs q >= 1 and n >= 2q+1");
  // Cycle 0 brings len_0 >= 3 vertices; each later cycle reuses one existing
  // vertex and brings len_i - 1 >= 2 new ones. Partition n accordingly.
  std::vector<int> added(q);
  int first_max = n - 2 * (q - 1);
  added[0] = q == 1 ? n : 3 + rng.uniform(first_max - 2);
  int remaining = n - added[0];
  for (int i = 1; i < q; ++i) {
    int slack_max = remaining - 2 * (q - 1 - i);
    added[i] = (i == q - 1) ? remaining : 2 + rng.uniform(slack_max - 1);
    remaining -= added[i];
  }
  std::vector<Arc> arcs;
  int next_id = 0;
  auto add_cycle = [&](int attach, int new_vertices) {
    std::vector<int> cycle;
    if (attach >= 0) cycle.push_back(attach);
    for (int i = 0; i < new_vertices; ++i) cycle.push_back(next_id++);
    for (size_t i = 0; i < cycle.size(); ++i)
      arcs.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
  };
  add_cycle(-1, added[0]);
  for (int i = 1; i < q; ++i) add_cycle(rng.uniform(next_id), added[i]);
  return Digraph::build(n, std::move(arcs));
}

Coloring random_coloring(const Digraph& d, Domain domain, int k, Rng& rng) {
  auto pick = [&](int count) {
    std::vector<int> colors(count);
    for (int& c : colors) c = rng.uniform(k);
    return colors;
  };
  switch (domain) {
    case Domain::arc:
      return Coloring::arc_coloring(d, pick(d.arc_count()));
    case Domain::vertex:
      return Coloring::vertex_coloring(d, pick(d.vertex_count()));
    case Domain::total:
      return Coloring::total_coloring(d, pick(d.arc_count()),
                                      pick(d.vertex_count()));
  }
  throw Error(ErrorKind::InvalidColoring, "bad domain");
}

void enumerate_digraphs(int n, const std::function<void(const Digraph&)>& fn) {
  std::vector<Arc> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  int p = static_cast<int>(pairs.size());
  std::uint64_t total = 1;
  for (int i = 0; i < p; ++i) total *= 4;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Arc> arcs;
    std::uint64_t c = code;
    for (int i = 0; i < p; ++i, c /= 4) {
      auto [u, v] = pairs[i];
      switch (c % 4) {
        case 0: break;
        case 1: arcs.emplace_back(u, v); break;
        case 2: arcs.emplace_back(v, u); break;
        case 3:
          arcs.emplace_back(u, v);
          arcs.emplace_back(v, u);
          break;
      }
    }
    fn(Digraph::build(n, std::move(arcs)));
  }
}

}  // namespace rainbow
