#include "rainbow/digraph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace rainbow {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopArc: return "LoopArc";
    case ErrorKind::DuplicateArc: return "DuplicateArc";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::NotAPath: return "NotAPath";
    case ErrorKind::TooManyColors: return "TooManyColors";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorKind::NotOriented: return "NotOriented";
    case ErrorKind::ArcInMultipleCycles: return "ArcInMultipleCycles";
    case ErrorKind::ArcInNoCycle: return "ArcInNoCycle";
    case ErrorKind::InvalidFamilyParams: return "InvalidFamilyParams";
    case ErrorKind::NoSchemeForFamily: return "NoSchemeForFamily";
    case ErrorKind::NotATournament: return "NotATournament";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidColoring: return "InvalidColoring";
  }
  return "Error";
}

void throw_arc_error(ErrorKind kind, int u, int v, const std::string& what) {
  Error e(kind, what);
  e.u = u;
  e.v = v;
  throw e;
}

Digraph Digraph::build(int n, std::vector<Arc> arcs) {
  if (n < 0) throw Error(ErrorKind::VertexOutOfRange, "negative vertex count");
  std::sort(arcs.begin(), arcs.end());
  for (size_t i = 0; i < arcs.size(); ++i) {
    auto [u, v] = arcs[i];
    if (u == v) {
      throw_arc_error(ErrorKind::LoopArc, u, v,
                      "loop arc (" + std::to_string(u) + "," +
                          std::to_string(v) + ")");
    }
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw_arc_error(ErrorKind::VertexOutOfRange, u, v,
                      "arc (" + std::to_string(u) + "," + std::to_string(v) +
                          ") outside 0.." + std::to_string(n - 1));
    }
    if (i > 0 && arcs[i] == arcs[i - 1]) {
      throw_arc_error(ErrorKind::DuplicateArc, u, v,
                      "duplicate arc (" + std::to_string(u) + "," +
                          std::to_string(v) + ")");
    }
  }
  Digraph d;
  d.n_ = n;
  d.arcs_ = std::move(arcs);
  d.out_.assign(n, {});
  d.in_.assign(n, {});
  for (const auto& [u, v] : d.arcs_) {
    d.out_[u].push_back(v);
    d.in_[v].push_back(u);
  }
  for (auto& nb : d.in_) std::sort(nb.begin(), nb.end());
  return d;
}

Digraph Digraph::biorient(int n, const std::vector<Arc>& edges) {
  std::vector<Arc> arcs;
  arcs.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return build(n, std::move(arcs));
}

const std::vector<Vertex>& Digraph::out_neighbors(Vertex u) const {
  if (u < 0 || u >= n_)
    throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(u));
  return out_[u];
}

const std::vector<Vertex>& Digraph::in_neighbors(Vertex u) const {
  if (u < 0 || u >= n_)
    throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(u));
  return in_[u];
}

int Digraph::arc_index(Vertex u, Vertex v) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{u, v});
  if (it == arcs_.end() || *it != Arc{u, v}) return -1;
  return static_cast<int>(it - arcs_.begin());
}

namespace {

void bfs_from(const Digraph& d, Vertex src, std::vector<int>& dist) {
  dist.assign(d.vertex_count(), kInfDist);
  dist[src] = 0;
  std::queue<Vertex> queue;
  queue.push(src);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : d.out_neighbors(u)) {
      if (dist[w] == kInfDist) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
    }
  }
}

}  // namespace

bool is_strongly_connected(const Digraph& d) {
  int n = d.vertex_count();
  if (n == 0) return false;
  std::vector<int> dist;
  bfs_from(d, 0, dist);
  for (int v = 0; v < n; ++v)
    if (dist[v] == kInfDist) return false;
  // Reverse reachability of vertex 0.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : d.in_neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) return false;
  return true;
}

DistanceTable distances(const Digraph& d) {
  DistanceTable t;
  int n = d.vertex_count();
  t.n = n;
  t.dist.assign(static_cast<size_t>(n) * n, kInfDist);
  bool all_finite = n > 0;
  int max_finite = 0;
  std::vector<int> row;
  for (int u = 0; u < n; ++u) {
    bfs_from(d, u, row);
    for (int v = 0; v < n; ++v) {
      t.dist[static_cast<size_t>(u) * n + v] = row[v];
      if (row[v] == kInfDist)
        all_finite = false;
      else
        max_finite = std::max(max_finite, row[v]);
    }
  }
  t.strongly_connected = all_finite;
  t.diameter = all_finite ? max_finite : kInfDist;
  return t;
}

std::vector<Vertex> neighbors(const Digraph& d, Vertex u, Direction dir) {
  return dir == Direction::out ? d.out_neighbors(u) : d.in_neighbors(u);
}

Digraph expand(const Digraph& d, Vertex u, const Digraph& h) {
  int nd = d.vertex_count();
  int nh = h.vertex_count();
  if (u < 0 || u >= nd)
    throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(u));
  if (nh == 0)
    throw Error(ErrorKind::VertexOutOfRange, "cannot expand into empty digraph");
  auto image = [&](Vertex j) { return j == 0 ? u : nd + j - 1; };
  std::vector<Arc> arcs;
  for (const auto& [x, y] : d.arcs()) {
    if (x != u && y != u) {
      arcs.emplace_back(x, y);
    } else if (x == u && y != u) {
      for (int j = 0; j < nh; ++j) arcs.emplace_back(image(j), y);
    } else if (x != u && y == u) {
      for (int j = 0; j < nh; ++j) arcs.emplace_back(x, image(j));
    }
  }
  for (const auto& [x, y] : h.arcs()) arcs.emplace_back(image(x), image(y));
  return Digraph::build(nd + nh - 1, std::move(arcs));
}

Digraph lex_product(const Digraph& d, const Digraph& h) {
  int nd = d.vertex_count();
  int nh = h.vertex_count();
  if (nd == 0 || nh == 0)
    throw Error(ErrorKind::VertexOutOfRange, "lex product of empty digraph");
  std::vector<Arc> arcs;
  for (const auto& [x, y] : d.arcs())
    for (int a = 0; a < nh; ++a)
      for (int b = 0; b < nh; ++b)
        arcs.emplace_back(x * nh + a, y * nh + b);
  for (int x = 0; x < nd; ++x)
    for (const auto& [a, b] : h.arcs())
      arcs.emplace_back(x * nh + a, x * nh + b);
  return Digraph::build(nd * nh, std::move(arcs));
}

ArcClassification classify(const Digraph& d) {
  ArcClassification c;
  for (const auto& [u, v] : d.arcs()) {
    if (d.has_arc(v, u)) {
      if (u < v) c.symmetric_pairs.emplace_back(u, v);
    } else {
      c.asymmetric_arcs.emplace_back(u, v);
    }
  }
  c.is_oriented = c.symmetric_pairs.empty();
  int n = d.vertex_count();
  c.is_tournament =
      c.is_oriented &&
      d.arc_count() == n * (n - 1) / 2 &&
      [&] {
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v)
            if (!d.has_arc(u, v) && !d.has_arc(v, u)) return false;
        return true;
      }();
  return c;
}

bool is_spanning_subdigraph(const Digraph& h, const Digraph& d) {
  if (h.vertex_count() != d.vertex_count()) return false;
  for (const auto& [u, v] : h.arcs())
    if (!d.has_arc(u, v)) return false;
  return true;
}

}  // namespace rainbow
