#include "rainbow/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "rainbow/cactus.hpp"
#include "rainbow/families.hpp"
#include "rainbow/generate.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
  bool pass = true;
  std::ostringstream detail;
  int extra_failures = 0;  // only the first failure is spelled out

  template <typename... Args>
  void require(bool ok, Args&&... args) {
    if (ok) return;
    if (!pass) {
      ++extra_failures;
      return;
    }
    pass = false;
    (detail << ... << args);
  }

  CriterionResult finish(int id, const std::string& name, double seconds) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    r.pass = pass;
    r.detail = detail.str();
    if (extra_failures > 0)
      r.detail += " (+" + std::to_string(extra_failures) + " more)";
    r.seconds = seconds;
    return r;
  }
};

SolveBudget suite_budget(const SuiteOptions& options) {
  SolveBudget b;
  b.max_elements = options.max_elements > 0 ? options.max_elements : 64;
  return b;
}

std::vector<std::vector<Vertex>> geodesic_paths(const Digraph& d,
                                                const DistanceTable& dt,
                                                Vertex u, Vertex v) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur{u};
  std::function<void(Vertex)> dfs = [&](Vertex x) {
    if (x == v) {
      out.push_back(cur);
      return;
    }
    for (Vertex y : d.out_neighbors(x)) {
      if (dt.at(u, y) == kInfDist || dt.at(y, v) == kInfDist) continue;
      if (dt.at(u, x) + 1 != dt.at(u, y)) continue;
      if (dt.at(y, v) != dt.at(x, v) - 1) continue;
      cur.push_back(y);
      dfs(y);
      cur.pop_back();
    }
  };
  if (dt.at(u, v) != kInfDist) dfs(u);
  return out;
}

// Independent cactus check: enumerate all directed cycles and demand each
// arc lie in exactly one.
bool cactus_by_cycle_enumeration(const Digraph& d) {
  if (!classify(d).is_oriented) return false;
  if (!is_strongly_connected(d)) return false;
  std::vector<int> cover(d.arc_count(), 0);
  int n = d.vertex_count();
  std::vector<Vertex> current;
  std::vector<char> used(n, 0);
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex start, Vertex x) {
    for (Vertex y : d.out_neighbors(x)) {
      if (y == start) {
        for (size_t i = 0; i + 1 < current.size(); ++i)
          ++cover[d.arc_index(current[i], current[i + 1])];
        ++cover[d.arc_index(current.back(), start)];
        continue;
      }
      if (y < start || used[y]) continue;
      used[y] = 1;
      current.push_back(y);
      dfs(start, y);
      current.pop_back();
      used[y] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    current = {s};
    used.assign(n, 0);
    used[s] = 1;
    dfs(s, s);
  }
  return std::all_of(cover.begin(), cover.end(),
                     [](int c) { return c == 1; });
}

CriterionResult criterion_directed_cycles(const SuiteOptions& options) {
  auto t0 = Clock::now();
  Checker c;
  SolveBudget b = suite_budget(options);
  const int want[] = {3, 6, 10, 12};
  for (int n = 3; n <= 6; ++n) {
    SolveResult trc = exact(dicycle(n), ParamKind::TRC, b);
    SolveResult strc = exact(dicycle(n), ParamKind::STRC, b);
    c.require(trc.value == want[n - 3], "trc(C", n, ") = ", trc.value);
    c.require(strc.value == want[n - 3], "strc(C", n, ") = ", strc.value);
    c.require(trc.value == strc.value, "trc != strc at n=", n);
    c.require(trc.searched_below && strc.searched_below,
              "missing exhaustion certificate at n=", n);
  }
  return c.finish(1, "directed-cycle-totals",
                  std::chrono::duration<double>(Clock::now() - t0).count());
}

CriterionResult criterion_bioriented_paths_cycles(const SuiteOptions& options) {
  auto t0 = Clock::now();
  Checker c;
  SolveBudget b = suite_budget(options);
  const int path_want[] = {1, 3, 5};
  for (int n = 2; n <= 4; ++n) {
    int got = exact(bio_path(n), ParamKind::TRC, b).value;
    c.require(got == path_want[n - 2], "trc(bio path ", n, ") = ", got);
    c.require(got == formula(FormulaName::bio_path_trc, n),
              "formula mismatch at bio path ", n);
  }
  const int cycle_want[] = {1, 3, 3};
  for (int n = 3; n <= 5; ++n) {
    int got = exact(bio_cycle(n), ParamKind::TRC, b).value;
    c.require(got == cycle_want[n - 3], "trc(bio cycle ", n, ") = ", got);
    c.require(got == formula(FormulaName::bio_cycle_trc, n),
              "g(n) mismatch at n=", n);
  }
  return c.finish(2, "bioriented-paths-cycles",
                  std::chrono::duration<double>(Clock::now() - t0).count());
}

void partitions_with_repeat(
    int n, int max_part, std::vector<int>& current,
    const std::function<void(const std::vector<int>&)>& fn) {
  if (n == 0) {
    if (current.size() >= 2 &&
        std::any_of(current.begin(), current.end(),
                    [](int s) { return s >= 2; }))
      fn(current);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_with_repeat(n - part, part, current, fn);
    current.pop_back();
  }
}

CriterionResult criterion_wheels_multipartite(const SuiteOptions& options) {
  auto t0 = Clock::now();
  Checker c;
  for (int n = 4; n <= 8; ++n) {
    Coloring scheme = coloring_for({Family::bio_wheel, {{"n", n}}});
    c.require(scheme.color_count() == 3, "wheel ", n, " colors");
    c.require(check_connected(bio_wheel(n), scheme, ParamKind::STRC).ok,
              "wheel ", n, " scheme rejected");
  }
  for (int n = 3; n <= 8; ++n) {
    std::vector<int> current;
    partitions_with_repeat(n, n, current, [&](const std::vector<int>& sizes) {
      FamilySpec spec{Family::bio_multipartite, {}};
      for (size_t i = 0; i < sizes.size(); ++i)
        spec.params["n" + std::to_string(i + 1)] = sizes[i];
      Coloring scheme = coloring_for(spec);
      c.require(scheme.color_count() == 3, "multipartite colors at n=", n);
      c.require(
          check_connected(bio_multipartite(sizes), scheme, ParamKind::STRC).ok,
          "multipartite scheme failed at n=", n);
    });
  }
  SolveResult w4 = exact(bio_wheel(4), ParamKind::TRC, suite_budget(options));
  c.require(w4.value == 3, "exact trc of the 4-wheel = ", w4.value);
  return c.finish(3, "wheels-and-multipartite",
                  std::chrono::duration<double>(Clock::now() - t0).count());
}

CriterionResult criterion_fixed_tournaments(const SuiteOptions& options) {
  auto t0 = Clock::now();
  Checker c;
  SolveBudget b = suite_budget(options);
  SolveResult t4 = exact(tournament_T4(), ParamKind::TRC, b);
  c.require(t4.value == 5, "trc(T4) = ", t4.value);
  c.require(t4.searched_below, "T4 missing certificate");
  SolveResult t53 = exact(tournament_T53(), ParamKind::TRC, b);
  c.require(t53.value == 3, "trc(T53) = ", t53.value);
  c.require(t53.searched_below, "T53 missing certificate");
  return c.finish(4, "fixed-tournaments",
                  std::chrono::duration<double>(Clock::now() - t0).count());
}

CriterionResult criterion_chain_tournaments(const SuiteOptions&) {
  auto t0 = Clock::now();
  Checker c;
  for (int k : {5, 7, 9}) {
    int chain_n = (k + 3) / 2;
    for (int n = chain_n; n <= chain_n + 2; ++n) {
      DigraphColoring built = tournament_Tnk(n, k);
      c.require(built.c.color_count() == k, "n=", n, " k=", k,
                " colors=", built.c.color_count());
      c.require(check_connected(built.d, built.c, ParamKind::STRC).ok,
                "n=", n, " k=", k, " witness rejected");
      c.require(lower_bound(built.d, ParamKind::TRC) == k,
                "n=", n, " k=", k, " diameter bound off");
    }
  }
  return c.finish(5, "chain-tournament-certificates",
                  std::chrono::duration<double>(Clock::now() - t0).count());
}

CriterionResult criterion_tournament_colorings(const SuiteOptions& options) {
  auto t0 = Clock::now();
  Checker c;
  Rng rng(options.seed ^ 0x6a09e667f3bcc908ULL);
  int case2_seen = 0;
  for (int round = 0; round < 200; ++round) {
    int n = 5 + rng.uniform(6);
    Digraph t = random_strongly_connected_tournament(n, rng);
    int d = distances(t).diameter;
    Coloring trc = tournament_trc_coloring(t);
    c.require(trc.color_count() <= 2 * n - 3, "round ", round,
              ": strong scheme used ", trc.color_count(), " colors");
    c.require(check_connected(t, trc, ParamKind::STRC).ok, "round ", round,
              ": strong scheme rejected (n=", n, ")");
    TournamentLayers layers;
    Coloring diam = tournament_diam_coloring(t, &layers);
    int cap = d == 2 ? 5 : 2 * d + 7;
    c.require(diam.color_count() <= cap, "round ", round,
              ": diameter scheme used ", diam.color_count(), " colors");
    c.require(check_connected(t, diam, ParamKind::TRC).ok, "round ", round,
              ": diameter scheme rejected (n=", n, ", d=", d, ")");
    if (layers.update_case == 2) ++case2_seen;
  }
  c.require(case2_seen > 0, "geodesic update case (ii) never exercised");
  return c.finish(6, "tournament-coloring-properties",
                  std::chrono::duration<double>(Clock::now() - t0).count());
}

CriterionResult criterion_petersen(const SuiteOptions&) {
  auto t0 = Clock::now();
  Checker c;
  Digraph p = petersen();
  // Girth five gives every non-adjacent ordered pair exactly one length-2
  // path.
  for (Vertex x = 0; x < 10; ++x)
    for (Vertex y = 0; y < 10; ++y) {
      if (x == y || p.has_arc(x, y)) continue;
      int mids = 0;
      for (Vertex w : p.out_neighbors(x))
        if (p.has_arc(w, y)) ++mids;
      c.require(mids == 1, "pair (", x, ",", y, ") has ", mids,
                " middle vertices");
    }
  Coloring scheme = petersen_strc_coloring();
  c.require(scheme.color_count() == 4, "witness colors");
  c.require(check_connected(p, scheme, ParamKind::STRC).ok,
            "4-color witness rejected");
  BacktrackReport report = petersen_trc3_search();
  c.require(!report.satisfiable, "3-color system unexpectedly satisfiable");
  for (int n = 11; n <= 13; ++n) {
    Digraph d = petersen_expanded(n);
    c.require(distances(d).diameter == 2, "expanded n=", n, " diameter");
    c.require(
        check_connected(d, petersen_expanded_coloring(n), ParamKind::STRC).ok,
        "expanded witness rejected at n=", n);
  }
  return c.finish(7, "petersen-family",
                  std::chrono::duration<double>(Clock::now() - t0).count());
}

CriterionResult criterion_small_value_equivalences(
    const SuiteOptions& options) {
  auto t0 = Clock::now();
  Checker c;
  SolveBudget b = suite_budget(options);
  int n = std::min(options.max_n > 0 ? options.max_n : 4, 4);
  int scanned = 0;
  enumerate_digraphs(n, [&](const Digraph& d) {
    if (!is_strongly_connected(d)) return;
    ++scanned;
    int diam = distances(d).diameter;
    bool bio_complete = diam <= 1;
    int trc = exact(d, ParamKind::TRC, b).value;
    int strc = exact(d, ParamKind::STRC, b).value;
    int rc = exact(d, ParamKind::RC, b).value;
    c.require((trc == 1) == bio_complete, "trc=1 equivalence on m=",
              d.arc_count());
    c.require((strc == 1) == bio_complete, "strc=1 equivalence on m=",
              d.arc_count());
    c.require(bio_complete || trc >= 3, "trc=2 appeared on m=", d.arc_count());
    c.require((trc == 3) == (strc == 3), "trc/strc 3-equivalence");
    c.require((trc == 4) == (strc == 4), "trc/strc 4-equivalence");
    if (rc == 2) c.require(trc == 3, "rc=2 without trc=3");
    if (trc == 3 || trc == 4) c.require(diam == 2, "small trc with diam != 2");
  });
  c.require(scanned > 0, "no strongly connected digraphs scanned");
  return c.finish(8, "small-value-equivalences",
                  std::chrono::duration<double>(Clock::now() - t0).count());
}

CriterionResult criterion_monotonicity(const SuiteOptions& options) {
  auto t0 = Clock::now();
  Checker c;
  SolveBudget b = suite_budget(options);
  Rng rng(options.seed ^ 0xbb67ae8584caa73bULL);
  for (int round = 0; round < 100; ++round) {
    int n = 3 + rng.uniform(3);
    SpanningPair pair = random_spanning_pair(n, rng);
    int trc_d = exact(pair.d, ParamKind::TRC, b).value;
    int trc_h = exact(pair.h, ParamKind::TRC, b).value;
    c.require(trc_d <= trc_h, "round ", round, ": trc(D)=", trc_d,
              " > trc(H)=", trc_h);
    int rc = exact(pair.d, ParamKind::RC, b).value;
    int rvc = exact(pair.d, ParamKind::RVC, b).value;
    c.require(trc_d >= std::max(rc, rvc), "round ", round,
              ": total below max(rc, rvc)");
    int strc = exact(pair.d, ParamKind::STRC, b).value;
    int src = exact(pair.d, ParamKind::SRC, b).value;
    int srvc = exact(pair.d, ParamKind::SRVC, b).value;
    c.require(strc >= std::max(src, srvc), "round ", round,
              ": strong total below max(src, srvc)");
  }
  return c.finish(9, "monotonicity-and-max-bounds",
                  std::chrono::duration<double>(Clock::now() - t0).count());
}

CriterionResult criterion_biorientation(const SuiteOptions& options) {
  auto t0 = Clock::now();
  Checker c;
  SolveBudget b = suite_budget(options);
  Rng rng(options.seed ^ 0x3c6ef372fe94f82bULL);
  for (int round = 0; round < 50; ++round) {
    int n = 3 + rng.uniform(3);
    auto edges = random_connected_graph(n, 40, rng);
    Digraph bio = Digraph::biorient(n, edges);
    c.require(exact(bio, ParamKind::TRC, b).value <=
                  exact_undirected(n, edges, ParamKind::TRC, b).value,
              "round ", round, ": trc inequality");
    c.require(exact(bio, ParamKind::STRC, b).value <=
                  exact_undirected(n, edges, ParamKind::STRC, b).value,
              "round ", round, ": strc inequality");
    c.require(exact(bio, ParamKind::RVC, b).value ==
                  exact_undirected(n, edges, ParamKind::RVC, b).value,
              "round ", round, ": rvc equality");
  }
  return c.finish(10, "biorientation-inequalities",
                  std::chrono::duration<double>(Clock::now() - t0).count());
}

CriterionResult criterion_cacti(const SuiteOptions& options) {
  auto t0 = Clock::now();
  Checker c;
  SolveBudget b = suite_budget(options);
  Rng rng(options.seed ^ 0xa54ff53a5f1d36f1ULL);
  for (int round = 0; round < 300; ++round) {
    int q = 1 + rng.uniform(3);
    int minn = 2 * q + 1;
    int n = minn + rng.uniform(8 - minn + 1);
    Digraph d = random_cactus(n, q, rng);
    int m = d.arc_count();

    bool oracle_says = cactus_by_cycle_enumeration(d);
    CactusDecomposition dec;
    bool recognized = true;
    try {
      dec = decompose(d);
    } catch (const Error&) {
      recognized = false;
    }
    c.require(recognized == oracle_says, "round ", round,
              ": recognition disagrees with enumeration");
    if (!recognized) continue;
    c.require(dec.q() == m - n + 1, "round ", round, ": q != m-n+1");

    if (round % 3 == 0) {
      // One extra arc puts some arc on two cycles; both sides must agree
      // the mutation is not a cactus.
      std::vector<Arc> arcs = d.arcs();
      bool added = false;
      for (int u = 0; u < n && !added; ++u)
        for (int v = 0; v < n && !added; ++v) {
          if (u == v || d.has_arc(u, v) || d.has_arc(v, u)) continue;
          arcs.emplace_back(u, v);
          added = true;
        }
      if (added) {
        Digraph mutated = Digraph::build(n, arcs);
        bool mutated_oracle = cactus_by_cycle_enumeration(mutated);
        bool mutated_recognized = true;
        try {
          decompose(mutated);
        } catch (const Error&) {
          mutated_recognized = false;
        }
        c.require(mutated_recognized == mutated_oracle, "round ", round,
                  ": mutated recognition disagrees");
      }
    }

    int rc = exact(d, ParamKind::RC, b).value;
    int src = exact(d, ParamKind::SRC, b).value;
    c.require(rc == src, "round ", round, ": rc != src");
    int rvc = exact(d, ParamKind::RVC, b).value;
    int srvc = exact(d, ParamKind::SRVC, b).value;
    c.require(rvc == srvc, "round ", round, ": rvc != srvc");
    c.require(lower_bounds(d, dec, ParamKind::RVC) <= rvc, "round ", round,
              ": vertex lower bound exceeded exact");

    CactusProfile prof = profile(d, dec);
    if (dec.q() >= 2) {
      c.require(n - 2 * dec.q() + 2 <= rvc && rvc <= n - 2, "round ", round,
                ": vertex bracket");
      c.require((rvc == n - 2 * dec.q() + 2) == (prof.min_cut_distance >= 3),
                "round ", round, ": far-cut equivalence (vertex)");
      c.require((rvc == n - 2) == prof.is_special_path, "round ", round,
                ": special-path equivalence (vertex)");
    }

    if (n + m <= 16) {
      int trc = exact(d, ParamKind::TRC, b).value;
      if (n + m <= 12) {
        int strc = exact(d, ParamKind::STRC, b).value;
        c.require(trc == strc, "round ", round, ": trc != strc");
      }
      c.require(trc != 2 * n - 4, "round ", round, ": trc hit 2n-4");
      c.require(lower_bounds(d, dec, ParamKind::TRC) <= trc, "round ", round,
                ": total lower bound exceeded exact");
      if (dec.q() >= 2) {
        c.require(2 * n - 3 * dec.q() + 3 <= trc && trc <= 2 * n - 3,
                  "round ", round, ": total bracket");
        c.require((trc == 2 * n - 3 * dec.q() + 3) ==
                      (prof.min_cut_distance >= 3),
                  "round ", round, ": far-cut equivalence (total)");
        c.require((trc == 2 * n - 3) == prof.is_special_path, "round ", round,
                  ": special-path equivalence (total)");
      }
    }
  }
  return c.finish(11, "cactus-suite",
                  std::chrono::duration<double>(Clock::now() - t0).count());
}

CriterionResult criterion_cactus_constructions(const SuiteOptions&) {
  auto t0 = Clock::now();
  Checker c;
  for (int q = 2; q <= 4; ++q)
    for (int l = 1; l <= q - 1; ++l)
      for (QnqlVariant variant :
           {QnqlVariant::base, QnqlVariant::odd, QnqlVariant::mod2}) {
        int min_l = variant == QnqlVariant::base  ? 1
                    : variant == QnqlVariant::odd ? 2
                                                  : 3;
        if (l < min_l) continue;
        int min_n = variant == QnqlVariant::base  ? 2 * q + 1
                    : variant == QnqlVariant::odd ? 2 * q + 2
                                                  : 2 * q + 3;
        for (int n = min_n; n <= 12; ++n) {
          QnqlResult r = build_Qnql(n, q, l, variant);
          if (r.rvc) {
            c.require(r.rvc->color_count() == r.rvc_value,
                      "vertex count at n=", n, " q=", q, " l=", l);
            c.require(check_connected(r.d, *r.rvc, ParamKind::RVC).ok,
                      "vertex scheme rejected at n=", n, " q=", q, " l=", l);
          }
          if (r.trc) {
            c.require(r.trc->color_count() == r.trc_value,
                      "total count at n=", n, " q=", q, " l=", l);
            c.require(check_connected(r.d, *r.trc, ParamKind::TRC).ok,
                      "total scheme rejected at n=", n, " q=", q, " l=", l);
          }
        }
      }
  return c.finish(12, "cactus-constructions",
                  std::chrono::duration<double>(Clock::now() - t0).count());
}

CriterionResult criterion_separations(const SuiteOptions& options) {
  auto t0 = Clock::now();
  Checker c;
  SolveBudget b = suite_budget(options);
  for (int s = 4; s <= 8; ++s) {
    Digraph d = fs(s);
    c.require(distances(d).diameter == 3, "pendent-clique s=", s, " diameter");
    Coloring scheme = fs_src_coloring(s);
    c.require(scheme.color_count() == 3, "pendent-clique s=", s, " colors");
    c.require(check_connected(d, scheme, ParamKind::SRC).ok,
              "pendent-clique s=", s, " scheme rejected");
  }
  {
    int s = 13;
    Digraph d = hs(s);
    Coloring scheme = hs_strc_coloring(s);
    c.require(scheme.color_count() == s, "hub family colors");
    c.require(check_connected(d, scheme, ParamKind::STRC).ok,
              "hub family scheme rejected");
    DistanceTable dt = distances(d);
    auto v_of = [&](int i) { return s + 2 * (i - 1); };
    auto w_of = [&](int i) { return s + 2 * (i - 1) + 1; };
    for (int i = 2; i <= s; ++i) {
      Vertex from, to;
      if (i == 5 || i == 6) {
        from = v_of(1);
        to = w_of(i);
      } else if (i == s - 4 || i == s - 3) {
        from = w_of(1);
        to = v_of(i);
      } else {
        from = w_of(1);
        to = w_of(i);
      }
      auto paths = geodesic_paths(d, dt, from, to);
      c.require(paths.size() == 1, "hub premise i=", i, ": ", paths.size(),
                " geodesics");
      if (paths.size() == 1) {
        const auto& path = paths[0];
        bool through =
            std::find(path.begin() + 1, path.end() - 1, 0) != path.end() - 1 &&
            std::find(path.begin() + 1, path.end() - 1, i - 1) !=
                path.end() - 1;
        c.require(through, "hub premise i=", i,
                  ": geodesic misses the clique vertices");
      }
    }
  }
  {
    Digraph fan = triangle_fan(2);
    SolveResult trc = exact(fan, ParamKind::TRC, b);
    SolveResult strc = exact(fan, ParamKind::STRC, b);
    SolveResult rvc = exact(fan, ParamKind::RVC, b);
    SolveResult srvc = exact(fan, ParamKind::SRVC, b);
    c.require(trc.value == 7 && strc.value == 7, "fan totals ", trc.value, "/",
              strc.value);
    c.require(rvc.value == 3 && srvc.value == 3, "fan vertex values ",
              rvc.value, "/", srvc.value);
  }
  return c.finish(13, "separation-constructions",
                  std::chrono::duration<double>(Clock::now() - t0).count());
}

}  // namespace

std::vector<CriterionResult> run_check_suite(const SuiteOptions& options,
                                             std::ostream& log) {
  using Fn = CriterionResult (*)(const SuiteOptions&);
  const Fn criteria[] = {
      criterion_directed_cycles,
      criterion_bioriented_paths_cycles,
      criterion_wheels_multipartite,
      criterion_fixed_tournaments,
      criterion_chain_tournaments,
      criterion_tournament_colorings,
      criterion_petersen,
      criterion_small_value_equivalences,
      criterion_monotonicity,
      criterion_biorientation,
      criterion_cacti,
      criterion_cactus_constructions,
      criterion_separations,
  };
  std::vector<CriterionResult> results;
  for (size_t i = 0; i < std::size(criteria); ++i) {
    if (options.only != 0 && static_cast<int>(i) + 1 != options.only) continue;
    CriterionResult r = criteria[i](options);
    log << "criterion " << r.id << " " << (r.pass ? "PASS" : "FAIL") << " "
        << r.name << " time=" << r.seconds << "s";
    if (!r.detail.empty()) log << " detail=" << r.detail;
    log << "\n";
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace rainbow
