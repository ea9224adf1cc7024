#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/digraph.hpp"

namespace rainbow {

// Deterministic across platforms (splitmix64); seeds printed in reports so
// every instance is reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in 0..n-1.
  int uniform(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  bool chance_percent(int percent) { return uniform(100) < percent; }

 private:
  std::uint64_t state_;
};

// Uniform orientation of K_n.
Digraph random_tournament(int n, Rng& rng);
Digraph random_strongly_connected_tournament(int n, Rng& rng);

// A Hamiltonian cycle through a random permutation plus random extra arcs.
Digraph random_strongly_connected_digraph(int n, int extra_arc_percent,
                                          Rng& rng);

// H strongly connected and spanning inside D.
struct SpanningPair {
  Digraph h;
  Digraph d;
};
SpanningPair random_spanning_pair(int n, Rng& rng);

// Random connected simple graph: random spanning tree plus extra edges.
std::vector<Arc> random_connected_graph(int n, int extra_edge_percent,
                                        Rng& rng);

// Random (n,q)-cactus: a first directed cycle, then q-1 further cycles each
// attached at a uniformly chosen existing vertex.
Digraph random_cactus(int n, int q, Rng& rng);

// Random coloring with at most k colors (ids renumbered dense).
Coloring random_coloring(const Digraph& d, Domain domain, int k, Rng& rng);

// All digraphs on n vertices: each unordered pair independently carries
// no arc, one arc (either way), or both. 4^(n(n-1)/2) callbacks.
void enumerate_digraphs(int n, const std::function<void(const Digraph&)>& fn);

}  // namespace rainbow
