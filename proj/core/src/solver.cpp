#include "rainbow/solver.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "rainbow/verify.hpp"

namespace rainbow {

int default_element_cap(ParamKind kind) {
  return constrains_arcs(kind) ? 16 : 12;
}

int lower_bound(const Digraph& d, ParamKind kind) {
  DistanceTable dt = distances(d);
  if (!dt.strongly_connected)
    throw Error(ErrorKind::NotStronglyConnected,
                "digraph is not strongly connected");
  int diam = dt.diameter;
  switch (kind) {
    case ParamKind::RC:
    case ParamKind::SRC:
      return diam;
    case ParamKind::RVC:
    case ParamKind::SRVC:
      return std::max(diam - 1, 0);
    case ParamKind::TRC:
    case ParamKind::STRC:
      return std::max(2 * diam - 1, 1);
  }
  return 0;
}

namespace {

using Clock = std::chrono::steady_clock;

// One colorable element: a vertex, an arc, or a symmetric arc pair sharing
// a color (undirected mode).
struct Element {
  Vertex vertex = -1;
  int arc_a = -1;
  int arc_b = -1;
};

class Search {
 public:
  Search(const Digraph& d, ParamKind kind, std::vector<Element> elements,
         const SolveBudget& budget)
      : d_(d),
        kind_(kind),
        elements_(std::move(elements)),
        dt_(distances(d)),
        searcher_(d, is_strong(kind) ? &dt_ : nullptr),
        budget_(budget),
        start_(Clock::now()) {
    arc_colors_.assign(d.arc_count(), detail::kUncolored);
    vertex_colors_.assign(d.vertex_count(), detail::kUncolored);
    for (Vertex u = 0; u < d.vertex_count(); ++u)
      for (Vertex v = 0; v < d.vertex_count(); ++v)
        if (u != v && !d.has_arc(u, v)) pairs_.emplace_back(u, v);
  }

  const DistanceTable& table() const { return dt_; }
  int element_count() const { return static_cast<int>(elements_.size()); }

  bool try_level(int k) {
    palette_ = k;
    std::fill(arc_colors_.begin(), arc_colors_.end(), detail::kUncolored);
    std::fill(vertex_colors_.begin(), vertex_colors_.end(),
              detail::kUncolored);
    if (elements_.empty()) return pairs_.empty();
    return dfs(0, 0);
  }

  Coloring witness() const {
    switch (required_domain(kind_)) {
      case Domain::arc:
        return Coloring::arc_coloring(d_, arc_colors_);
      case Domain::vertex:
        return Coloring::vertex_coloring(d_, vertex_colors_);
      case Domain::total:
        return Coloring::total_coloring(d_, arc_colors_, vertex_colors_);
    }
    return Coloring();
  }

  SolveStats stats() const {
    SolveStats s;
    s.nodes = nodes_;
    s.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return s;
  }

 private:
  void assign(const Element& e, int color) {
    if (e.vertex >= 0) vertex_colors_[e.vertex] = color;
    if (e.arc_a >= 0) arc_colors_[e.arc_a] = color;
    if (e.arc_b >= 0) arc_colors_[e.arc_b] = color;
  }

  void check_budget() {
    ++nodes_;
    if (nodes_ > budget_.max_nodes)
      throw BudgetExceededError("node budget exhausted", nodes_);
    if ((nodes_ & 0xfff) == 0) {
      double elapsed =
          std::chrono::duration<double>(Clock::now() - start_).count();
      if (elapsed > budget_.max_seconds)
        throw BudgetExceededError("time budget exhausted", nodes_);
    }
  }

  bool pairs_ok() {
    detail::PartialColors pc;
    if (constrains_arcs(kind_)) pc.arc_colors = arc_colors_.data();
    if (constrains_vertices(kind_)) pc.vertex_colors = vertex_colors_.data();
    pc.palette = palette_;
    for (size_t i = 0; i < pairs_.size(); ++i) {
      if (!searcher_.feasible(pc, pairs_[i].first, pairs_[i].second)) {
        // Move the refuting pair to the front: it tends to fail again on
        // the sibling branches.
        if (i > 0) std::rotate(pairs_.begin(), pairs_.begin() + i,
                               pairs_.begin() + i + 1);
        return false;
      }
    }
    return true;
  }

  bool dfs(size_t index, int used) {
    const Element& e = elements_[index];
    int limit = std::min(used, palette_ - 1);
    for (int color = 0; color <= limit; ++color) {
      assign(e, color);
      check_budget();
      if (pairs_ok()) {
        if (index + 1 == elements_.size()) return true;
        if (dfs(index + 1, used + (color == used ? 1 : 0))) return true;
      }
    }
    assign(e, detail::kUncolored);
    return false;
  }

  const Digraph& d_;
  ParamKind kind_;
  std::vector<Element> elements_;
  DistanceTable dt_;
  detail::PairSearcher searcher_;
  SolveBudget budget_;
  Clock::time_point start_;
  int palette_ = 0;
  std::vector<int> arc_colors_;
  std::vector<int> vertex_colors_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::uint64_t nodes_ = 0;
};

std::vector<Element> directed_elements(const Digraph& d, ParamKind kind) {
  std::vector<Element> elements;
  if (constrains_vertices(kind))
    for (Vertex v = 0; v < d.vertex_count(); ++v)
      elements.push_back(Element{v, -1, -1});
  if (constrains_arcs(kind))
    for (int i = 0; i < d.arc_count(); ++i)
      elements.push_back(Element{-1, i, -1});
  return elements;
}

std::vector<Element> paired_elements(const Digraph& bio, ParamKind kind) {
  std::vector<Element> elements;
  if (constrains_vertices(kind))
    for (Vertex v = 0; v < bio.vertex_count(); ++v)
      elements.push_back(Element{v, -1, -1});
  if (constrains_arcs(kind))
    for (int i = 0; i < bio.arc_count(); ++i) {
      auto [u, v] = bio.arc(i);
      if (u < v) elements.push_back(Element{-1, i, bio.arc_index(v, u)});
    }
  return elements;
}

SolveResult solve(const Digraph& d, ParamKind kind,
                  std::vector<Element> elements, const SolveBudget& budget) {
  int cap = budget.max_elements > 0 ? budget.max_elements
                                    : default_element_cap(kind);
  if (static_cast<int>(elements.size()) > cap)
    throw BudgetExceededError(
        std::to_string(elements.size()) + " elements exceed the cap of " +
            std::to_string(cap) + " for " + kind_name(kind),
        0);

  Search search(d, kind, std::move(elements), budget);
  if (!search.table().strongly_connected)
    throw Error(ErrorKind::NotStronglyConnected,
                "digraph is not strongly connected");

  SolveResult result;
  result.kind = kind;
  int lb = lower_bound(d, kind);

  // Vertex kinds are 0 on diameter <= 1 digraphs: no path needs an internal
  // vertex. Every vertex still carries a color, so the witness uses one.
  if (!constrains_arcs(kind) && search.table().diameter <= 1) {
    result.value = 0;
    result.witness = Coloring::vertex_coloring(
        d, std::vector<int>(d.vertex_count(), 0));
    result.searched_below = true;
    result.stats = search.stats();
    return result;
  }

  // Arc kinds on a single vertex: nothing to color.
  if (search.element_count() == 0) {
    result.value = 0;
    result.witness = Coloring::arc_coloring(d, {});
    result.searched_below = true;
    result.stats = search.stats();
    return result;
  }

  int start = std::max(lb, 1);
  int value = -1;
  for (int k = start;; ++k) {
    if (search.try_level(k)) {
      value = k;
      break;
    }
  }
  result.value = value;
  result.witness = search.witness();
  if (value > start) {
    result.searched_below = true;
  } else if (value == 1) {
    result.searched_below = true;  // zero colors cannot color anything
  } else {
    // The first level already succeeded; exhaust value-1 to certify.
    if (search.try_level(value - 1))
      throw std::logic_error("lower bound admitted a smaller coloring");
    result.searched_below = true;
  }
  result.stats = search.stats();
  if (result.witness.color_count() != value)
    throw std::logic_error("witness color count mismatch");
  return result;
}

}  // namespace

SolveResult exact(const Digraph& d, ParamKind kind, SolveBudget budget) {
  return solve(d, kind, directed_elements(d, kind), budget);
}

SolveResult exact_undirected(int n, const std::vector<Arc>& edges,
                             ParamKind kind, SolveBudget budget) {
  Digraph bio = Digraph::biorient(n, edges);
  return solve(bio, kind, paired_elements(bio, kind), budget);
}

std::optional<Coloring> feasible_coloring(const Digraph& d, ParamKind kind,
                                          int k, SolveBudget budget) {
  auto elements = directed_elements(d, kind);
  int cap = budget.max_elements > 0 ? budget.max_elements
                                    : default_element_cap(kind);
  if (static_cast<int>(elements.size()) > cap)
    throw BudgetExceededError(
        std::to_string(elements.size()) + " elements exceed the cap of " +
            std::to_string(cap) + " for " + kind_name(kind),
        0);
  Search search(d, kind, std::move(elements), budget);
  if (!search.table().strongly_connected)
    throw Error(ErrorKind::NotStronglyConnected,
                "digraph is not strongly connected");
  if (k < 1 || !search.try_level(k)) return std::nullopt;
  return search.witness();
}

}  // namespace rainbow
