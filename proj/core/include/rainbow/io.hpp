#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/digraph.hpp"

namespace rainbow {

// Digraph text format, one declaration per line:
//   n <N>        vertex count, required first declaration
//   a <u> <v>    arc
//   e <u> <v>    undirected edge, expanded to both arcs
//   # ...        comment
// Endpoints are either integer ids 0..N-1 throughout, or arbitrary labels
// mapped to ids by first appearance (mixed files use label mode as soon as
// one endpoint is non-numeric). Duplicate declarations are errors.
struct ParsedDigraph {
  Digraph graph;
  bool used_labels = false;
  std::vector<std::string> labels;  // id -> label, when used_labels
};

ParsedDigraph parse_digraph(const std::string& text);
std::string emit_digraph(const Digraph& d);

// Coloring text format:
//   colors <k>
//   v <id> <color>
//   a <u> <v> <color>
// Domain is inferred from which element lines appear (both => total).
// Color ids must be 0..k-1 with every id used.
Coloring parse_coloring(const std::string& text, const Digraph& d);
std::string emit_coloring(const Digraph& d, const Coloring& c);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace rainbow
