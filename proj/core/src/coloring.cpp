#include "rainbow/coloring.hpp"

#include <algorithm>
#include <map>

namespace rainbow {

const char* kind_name(ParamKind kind) {
  switch (kind) {
    case ParamKind::RC: return "RC";
    case ParamKind::SRC: return "SRC";
    case ParamKind::RVC: return "RVC";
    case ParamKind::SRVC: return "SRVC";
    case ParamKind::TRC: return "TRC";
    case ParamKind::STRC: return "STRC";
  }
  return "?";
}

bool parse_kind(const std::string& text, ParamKind& out) {
  std::string up;
  for (char c : text) up.push_back(static_cast<char>(std::toupper(c)));
  if (up == "RC") out = ParamKind::RC;
  else if (up == "SRC") out = ParamKind::SRC;
  else if (up == "RVC") out = ParamKind::RVC;
  else if (up == "SRVC") out = ParamKind::SRVC;
  else if (up == "TRC") out = ParamKind::TRC;
  else if (up == "STRC") out = ParamKind::STRC;
  else return false;
  return true;
}

bool is_strong(ParamKind kind) {
  return kind == ParamKind::SRC || kind == ParamKind::SRVC ||
         kind == ParamKind::STRC;
}

bool constrains_arcs(ParamKind kind) {
  return kind == ParamKind::RC || kind == ParamKind::SRC ||
         kind == ParamKind::TRC || kind == ParamKind::STRC;
}

bool constrains_vertices(ParamKind kind) {
  return kind == ParamKind::RVC || kind == ParamKind::SRVC ||
         kind == ParamKind::TRC || kind == ParamKind::STRC;
}

Domain required_domain(ParamKind kind) {
  bool arcs = constrains_arcs(kind);
  bool verts = constrains_vertices(kind);
  if (arcs && verts) return Domain::total;
  return arcs ? Domain::arc : Domain::vertex;
}

bool domain_covers(Domain have, Domain need) {
  return have == Domain::total || have == need;
}

namespace {

// Order-preserving renumber to dense 0..k-1 across both ranges.
int normalize(std::vector<int>& arc_colors, std::vector<int>& vertex_colors) {
  std::map<int, int> remap;
  for (int c : arc_colors) remap.emplace(c, 0);
  for (int c : vertex_colors) remap.emplace(c, 0);
  int next = 0;
  for (auto& [old_id, new_id] : remap) new_id = next++;
  for (int& c : arc_colors) c = remap[c];
  for (int& c : vertex_colors) c = remap[c];
  return next;
}

void require_nonnegative(const std::vector<int>& colors) {
  for (int c : colors)
    if (c < 0) throw Error(ErrorKind::InvalidColoring, "negative color id");
}

}  // namespace

Coloring Coloring::arc_coloring(const Digraph& d, std::vector<int> arc_colors) {
  if (static_cast<int>(arc_colors.size()) != d.arc_count())
    throw Error(ErrorKind::InvalidColoring,
                "arc color list does not match arc count");
  require_nonnegative(arc_colors);
  Coloring c;
  c.domain_ = Domain::arc;
  std::vector<int> none;
  c.color_count_ = normalize(arc_colors, none);
  c.arc_colors_ = std::move(arc_colors);
  return c;
}

Coloring Coloring::vertex_coloring(const Digraph& d,
                                   std::vector<int> vertex_colors) {
  if (static_cast<int>(vertex_colors.size()) != d.vertex_count())
    throw Error(ErrorKind::InvalidColoring,
                "vertex color list does not match vertex count");
  require_nonnegative(vertex_colors);
  Coloring c;
  c.domain_ = Domain::vertex;
  std::vector<int> none;
  c.color_count_ = normalize(none, vertex_colors);
  c.vertex_colors_ = std::move(vertex_colors);
  return c;
}

Coloring Coloring::total_coloring(const Digraph& d,
                                  std::vector<int> arc_colors,
                                  std::vector<int> vertex_colors) {
  if (static_cast<int>(arc_colors.size()) != d.arc_count())
    throw Error(ErrorKind::InvalidColoring,
                "arc color list does not match arc count");
  if (static_cast<int>(vertex_colors.size()) != d.vertex_count())
    throw Error(ErrorKind::InvalidColoring,
                "vertex color list does not match vertex count");
  require_nonnegative(arc_colors);
  require_nonnegative(vertex_colors);
  Coloring c;
  c.domain_ = Domain::total;
  c.color_count_ = normalize(arc_colors, vertex_colors);
  c.arc_colors_ = std::move(arc_colors);
  c.vertex_colors_ = std::move(vertex_colors);
  return c;
}

}  // namespace rainbow
