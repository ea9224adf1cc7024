#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/digraph.hpp"

namespace rainbow {

enum class Family {
  dipath,
  dicycle,
  bio_path,
  bio_cycle,
  bio_star,
  bio_wheel,
  bio_multipartite,
  petersen,
  petersen_expanded,
  tournament_T4,
  tournament_T53,
  tournament_TNk,
  tournament_Tnk,
  ky_gs,
  hs,
  fs,
  triangle_fan,
};

const char* family_name(Family family);
bool parse_family(const std::string& text, Family& out);

struct FamilySpec {
  Family name{};
  std::map<std::string, int> params;
};

// The digraph exactly as the construction defines it; labellings are
// documented per builder below.
Digraph make(const FamilySpec& spec);
// The explicit coloring scheme for the family, when one exists; throws
// NoSchemeForFamily otherwise. Color counts match the stated bounds.
Coloring coloring_for(const FamilySpec& spec);
bool has_coloring_scheme(Family family);

// Concrete builders. Directed path/cycle on v_0..v_{n-1} in order.
Digraph dipath(int n);
Digraph dicycle(int n);
Digraph bio_path(int n);
Digraph bio_cycle(int n);
Digraph bio_star(int leaves);  // center 0, leaves 1..n
Digraph bio_wheel(int rim);    // center 0, rim cycle 1..rim
Digraph bio_multipartite(const std::vector<int>& class_sizes);

// Petersen graph biorientation. Outer cycle u_i = 0..4, inner vertices
// v_i = 5..9 with pentagram v_0 v_2 v_4 v_1 v_3, spokes u_i v_i.
Digraph petersen();
Coloring petersen_strc_coloring();

// Expand inner vertex v_0 of the Petersen biorientation into a bioriented
// clique on n-9 vertices (n >= 11), with the extended 4-color scheme.
Digraph petersen_expanded(int n);
Coloring petersen_expanded_coloring(int n);

Digraph tournament_T4();
Digraph tournament_T53();
Coloring t53_strc_coloring();

// Chain tournament on N = (k+3)/2 vertices: forward arcs v_{i-1} v_i plus
// all back arcs v_i v_j with i - j >= 2; k odd >= 5.
Digraph tournament_TNk(int k);
Coloring tnk_coloring(int k);

struct DigraphColoring {
  Digraph d;
  Coloring c;
};

// Tournament on n vertices with both total parameters equal to k (k odd,
// 5 <= k <= 2n-3), built by expanding v_0 of the chain tournament, together
// with the extended k-color witness.
DigraphColoring tournament_Tnk(int n, int k);

// s disjoint triangles with a clique on one designated vertex per triangle,
// bioriented. Clique vertices u_i = 0..s-1, triangle partners of u_i are
// v_i = s+2i, w_i = s+2i+1.
Digraph ky_gs(int s);

// ky_gs plus hub vertices z_i (ids 3s..4s-1) with edges u_i z_i, u_{i+1} z_i,
// v_i z_i, w_i z_{i+4} (indices mod s), bioriented; s >= 13.
Digraph hs(int s);
Coloring hs_strc_coloring(int s);

// Clique with one pendent vertex per clique vertex, bioriented. Clique
// u_i = 0..s-1, pendent v_i = s+i.
Digraph fs(int s);
Coloring fs_src_coloring(int s);

// t directed triangles v -> x_i -> y_i -> v sharing v = 0; x_i = 2i+1,
// y_i = 2i+2.
Digraph triangle_fan(int t);

// Total coloring with at most 2n-3 colors that is strongly total rainbow
// connected, for any strongly connected tournament on n >= 5 vertices.
Coloring tournament_trc_coloring(const Digraph& t);

// Distance-layer decomposition from an eccentric vertex, used by the
// diameter-bounded coloring; exposed so tests can tell which update case
// fired.
struct TournamentLayers {
  Vertex base = 0;                         // eccentricity = diam
  std::vector<std::vector<Vertex>> layers;  // V_1..V_d
  Vertex deep_in = -1;   // max in-degree in T[V_1]
  Vertex deep_out = -1;  // max out-degree in T[V_d]
  std::vector<Vertex> geodesic;  // deep_in .. deep_out
  int update_case = 0;           // 1: geodesic length d-1, 2: length d
  Vertex recolored_r = -1;
  Vertex recolored_s = -1;
};

// Total rainbow connected coloring with at most 5 colors when diam = 2 and
// at most 2*diam+7 colors when diam >= 3.
Coloring tournament_diam_coloring(const Digraph& t,
                                  TournamentLayers* layers_out = nullptr);

enum class FormulaName {
  bio_cycle_trc,  // g(n)
  dicycle_trc,
  bio_path_trc,   // 2n-3
  dicycle_rvc,
  dicycle_rc,
};

int formula(FormulaName name, int n);
bool parse_formula_name(const std::string& text, FormulaName& out);

// Backtracker over the 3-colorings of the Petersen biorientation subject to
// the hard constraints that every ordered pair at distance 2 gets a rainbow
// length-2 geodesic (those geodesics are unique since the girth is 5).
// Exhausting it certifies that no 3-color total rainbow connected coloring
// exists.
struct BacktrackReport {
  bool satisfiable = false;
  std::uint64_t nodes = 0;
};
BacktrackReport petersen_trc3_search();

}  // namespace rainbow
