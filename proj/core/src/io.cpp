#include "rainbow/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace rainbow {

namespace {

std::vector<std::vector<std::string>> tokenize_lines(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

bool parse_int(const std::string& tok, int& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

int require_int(const std::string& tok, const char* what) {
  int value = 0;
  if (!parse_int(tok, value))
    throw Error(ErrorKind::ParseError,
                std::string("expected integer ") + what + ", got '" + tok + "'");
  return value;
}

}  // namespace

ParsedDigraph parse_digraph(const std::string& text) {
  auto lines = tokenize_lines(text);
  if (lines.empty() || lines[0][0] != "n" || lines[0].size() != 2)
    throw Error(ErrorKind::ParseError, "digraph file must start with 'n <N>'");
  int n = require_int(lines[0][1], "vertex count");
  if (n < 0) throw Error(ErrorKind::ParseError, "negative vertex count");

  // Files are in label mode as soon as one endpoint is not a plain
  // non-negative integer; numeric ids out of range stay validation errors.
  bool label_mode = false;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto& toks = lines[i];
    if (toks[0] != "a" && toks[0] != "e")
      throw Error(ErrorKind::ParseError, "unknown declaration '" + toks[0] + "'");
    if (toks.size() != 3)
      throw Error(ErrorKind::ParseError, "declaration needs two endpoints");
    for (int j = 1; j <= 2; ++j) {
      int v = 0;
      if (!parse_int(toks[j], v) || v < 0) label_mode = true;
    }
  }

  ParsedDigraph result;
  result.used_labels = label_mode;
  std::map<std::string, int> label_ids;
  auto endpoint = [&](const std::string& tok) -> int {
    if (!label_mode) return require_int(tok, "vertex id");
    auto it = label_ids.find(tok);
    if (it != label_ids.end()) return it->second;
    int id = static_cast<int>(label_ids.size());
    if (id >= n)
      throw Error(ErrorKind::ParseError,
                  "more labels than declared vertex count");
    label_ids.emplace(tok, id);
    result.labels.push_back(tok);
    return id;
  };

  std::vector<Arc> arcs;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto& toks = lines[i];
    int u = endpoint(toks[1]);
    int v = endpoint(toks[2]);
    arcs.emplace_back(u, v);
    if (toks[0] == "e") arcs.emplace_back(v, u);
  }
  result.graph = Digraph::build(n, std::move(arcs));
  return result;
}

std::string emit_digraph(const Digraph& d) {
  std::ostringstream out;
  out << "n " << d.vertex_count() << "\n";
  for (const auto& [u, v] : d.arcs()) out << "a " << u << " " << v << "\n";
  return out.str();
}

Coloring parse_coloring(const std::string& text, const Digraph& d) {
  auto lines = tokenize_lines(text);
  if (lines.empty() || lines[0][0] != "colors" || lines[0].size() != 2)
    throw Error(ErrorKind::ParseError,
                "coloring file must start with 'colors <k>'");
  int declared = require_int(lines[0][1], "color count");
  if (declared <= 0)
    throw Error(ErrorKind::ParseError, "color count must be positive");

  std::vector<int> vertex_colors(d.vertex_count(), -1);
  std::vector<int> arc_colors(d.arc_count(), -1);
  bool saw_vertex = false;
  bool saw_arc = false;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto& toks = lines[i];
    if (toks[0] == "v" && toks.size() == 3) {
      int v = require_int(toks[1], "vertex id");
      int color = require_int(toks[2], "color id");
      if (v < 0 || v >= d.vertex_count())
        throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
      if (color < 0 || color >= declared)
        throw Error(ErrorKind::InvalidColoring,
                    "color id " + std::to_string(color) + " out of range");
      if (vertex_colors[v] != -1)
        throw Error(ErrorKind::InvalidColoring,
                    "vertex " + std::to_string(v) + " colored twice");
      vertex_colors[v] = color;
      saw_vertex = true;
    } else if (toks[0] == "a" && toks.size() == 4) {
      int u = require_int(toks[1], "vertex id");
      int v = require_int(toks[2], "vertex id");
      int color = require_int(toks[3], "color id");
      int index = d.arc_index(u, v);
      if (index < 0)
        throw_arc_error(ErrorKind::InvalidColoring, u, v,
                        "arc (" + std::to_string(u) + "," + std::to_string(v) +
                            ") not in digraph");
      if (color < 0 || color >= declared)
        throw Error(ErrorKind::InvalidColoring,
                    "color id " + std::to_string(color) + " out of range");
      if (arc_colors[index] != -1)
        throw_arc_error(ErrorKind::InvalidColoring, u, v, "arc colored twice");
      arc_colors[index] = color;
      saw_arc = true;
    } else {
      throw Error(ErrorKind::ParseError, "bad coloring line");
    }
  }
  if (!saw_vertex && !saw_arc)
    throw Error(ErrorKind::ParseError, "coloring has no element lines");
  if (saw_vertex)
    for (int v = 0; v < d.vertex_count(); ++v)
      if (vertex_colors[v] == -1)
        throw Error(ErrorKind::InvalidColoring,
                    "vertex " + std::to_string(v) + " uncolored");
  if (saw_arc)
    for (int i = 0; i < d.arc_count(); ++i)
      if (arc_colors[i] == -1)
        throw_arc_error(ErrorKind::InvalidColoring, d.arc(i).first,
                        d.arc(i).second, "arc uncolored");

  Coloring c;
  if (saw_vertex && saw_arc)
    c = Coloring::total_coloring(d, std::move(arc_colors),
                                 std::move(vertex_colors));
  else if (saw_arc)
    c = Coloring::arc_coloring(d, std::move(arc_colors));
  else
    c = Coloring::vertex_coloring(d, std::move(vertex_colors));
  if (c.color_count() != declared)
    throw Error(ErrorKind::InvalidColoring,
                "declared " + std::to_string(declared) + " colors but " +
                    std::to_string(c.color_count()) + " distinct ids used");
  return c;
}

std::string emit_coloring(const Digraph& d, const Coloring& c) {
  std::ostringstream out;
  out << "colors " << c.color_count() << "\n";
  if (c.has_vertex_colors())
    for (int v = 0; v < d.vertex_count(); ++v)
      out << "v " << v << " " << c.vertex_color(v) << "\n";
  if (c.has_arc_colors())
    for (int i = 0; i < d.arc_count(); ++i)
      out << "a " << d.arc(i).first << " " << d.arc(i).second << " "
          << c.arc_color(i) << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << content;
}

}  // namespace rainbow
