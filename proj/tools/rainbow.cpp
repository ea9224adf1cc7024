// Command line front end: compute exact rainbow connection parameters,
// verify colorings, emit family instances, inspect cacti, and run the
// theorem-check suite. Machine-readable records go to stdout, prose to
// stderr. Exit codes: 0 success / verified, 1 falsified property, 2 usage
// or budget error.
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rainbow/cactus.hpp"
#include "rainbow/families.hpp"
#include "rainbow/io.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/suite.hpp"
#include "rainbow/verify.hpp"

namespace {

using namespace rainbow;

int env_element_cap() {
  const char* raw = std::getenv("RAINBOW_BUDGET_ELEMENTS");
  if (raw == nullptr) return 0;
  return std::atoi(raw);
}

ParamKind parse_kind_or_die(const std::string& text) {
  ParamKind kind;
  if (!parse_kind(text, kind)) {
    std::cerr << "unknown kind '" << text << "' (RC, SRC, RVC, SRVC, TRC, STRC)\n";
    std::exit(2);
  }
  return kind;
}

ParsedDigraph load_digraph(const std::string& path) {
  ParsedDigraph parsed = parse_digraph(read_file(path));
  if (parsed.used_labels)
    for (size_t i = 0; i < parsed.labels.size(); ++i)
      std::cout << "label " << i << " " << parsed.labels[i] << "\n";
  return parsed;
}

struct BudgetFlags {
  int max_elements = 0;
  std::uint64_t max_nodes = 0;
  double max_seconds = 0;

  SolveBudget to_budget() const {
    SolveBudget b;
    b.max_elements = max_elements > 0 ? max_elements : env_element_cap();
    if (max_nodes > 0) b.max_nodes = max_nodes;
    if (max_seconds > 0) b.max_seconds = max_seconds;
    return b;
  }
};

int run_compute(const std::string& kind_text, const std::string& input,
                const BudgetFlags& flags, const std::string& witness_out) {
  ParamKind kind = parse_kind_or_die(kind_text);
  ParsedDigraph parsed = load_digraph(input);
  SolveResult r = exact(parsed.graph, kind, flags.to_budget());
  std::cout << "result " << kind_name(kind) << " " << r.value << " "
            << (r.searched_below ? "true" : "false") << " " << r.stats.nodes
            << "\n";
  std::string witness = emit_coloring(parsed.graph, r.witness);
  if (witness_out.empty())
    std::cout << witness;
  else
    write_file(witness_out, witness);
  return 0;
}

int run_verify(const std::string& kind_text, const std::string& input,
               const std::string& coloring_path) {
  ParamKind kind = parse_kind_or_die(kind_text);
  ParsedDigraph parsed = load_digraph(input);
  Coloring c = parse_coloring(read_file(coloring_path), parsed.graph);
  CheckReport report = check_connected(parsed.graph, c, kind);
  if (report.ok) {
    std::cout << "ok\n";
    return 0;
  }
  std::cout << "failing " << report.failing_pair->first << " "
            << report.failing_pair->second << "\n";
  return 1;
}

int run_family(const std::string& name, const std::string& params_text,
               bool with_coloring, const std::string& out,
               const std::string& coloring_out) {
  FamilySpec spec;
  if (!parse_family(name, spec.name)) {
    std::cerr << "unknown family '" << name << "'\n";
    return 2;
  }
  std::string token;
  std::istringstream in(params_text);
  while (std::getline(in, token, ',')) {
    auto eq = token.find('=');
    if (eq == std::string::npos) {
      std::cerr << "bad parameter '" << token << "' (expected key=value)\n";
      return 2;
    }
    spec.params[token.substr(0, eq)] = std::atoi(token.c_str() + eq + 1);
  }
  Digraph d = make(spec);
  std::string graph_text = emit_digraph(d);
  if (out.empty())
    std::cout << graph_text;
  else
    write_file(out, graph_text);
  if (with_coloring) {
    Coloring c = coloring_for(spec);
    std::string coloring_text = emit_coloring(d, c);
    if (coloring_out.empty())
      std::cout << coloring_text;
    else
      write_file(coloring_out, coloring_text);
  }
  return 0;
}

int run_cactus(const std::string& input, bool with_colorings,
               const BudgetFlags& flags) {
  ParsedDigraph parsed = load_digraph(input);
  const Digraph& d = parsed.graph;
  CactusDecomposition dec;
  try {
    dec = decompose(d);
  } catch (const Error& e) {
    std::cout << "is_cactus false\n";
    std::cout << "reason " << e.what() << "\n";
    return 0;
  }
  std::cout << "is_cactus true\n";
  std::cout << "q " << dec.q() << "\n";
  std::cout << "cut_vertices";
  for (Vertex v : dec.cut_vertices) std::cout << " " << v;
  std::cout << "\n";
  for (const auto& cycle : dec.cycles) {
    std::cout << "cycle";
    for (Vertex v : cycle) std::cout << " " << v;
    std::cout << "\n";
  }
  for (auto [i, j] : dec.block_edges)
    std::cout << "block_edge " << i << " " << j << "\n";
  CactusProfile prof = profile(d, dec);
  std::cout << "special_path " << (prof.is_special_path ? "true" : "false")
            << "\n";
  if (prof.min_cut_distance == kInfDist)
    std::cout << "min_cut_distance inf\n";
  else
    std::cout << "min_cut_distance " << prof.min_cut_distance << "\n";
  std::cout << "kq_independent " << (prof.kq_independent ? "true" : "false")
            << "\n";
  int n = d.vertex_count();
  int q = dec.q();
  if (q >= 2) {
    std::cout << "rvc_bracket " << n - 2 * q + 2 << " " << n - 2 << "\n";
    std::cout << "trc_bracket " << 2 * n - 3 * q + 3 << " " << 2 * n - 3
              << "\n";
  }
  std::cout << "rvc_lower_bound " << lower_bounds(d, dec, ParamKind::RVC)
            << "\n";
  std::cout << "trc_lower_bound " << lower_bounds(d, dec, ParamKind::TRC)
            << "\n";
  if (with_colorings && q >= 2) {
    Coloring upper = rvc_coloring(d, dec, RvcMode::upper);
    std::cout << "rvc_upper_coloring " << upper.color_count() << "\n";
    std::cout << emit_coloring(d, upper);
    Coloring total = trc_coloring(d, dec, flags.to_budget());
    std::cout << "trc_coloring " << total.color_count() << "\n";
    std::cout << emit_coloring(d, total);
  }
  return 0;
}

int run_check(std::uint64_t seed, int max_n, int max_elements, int only) {
  SuiteOptions options;
  options.seed = seed;
  options.max_n = max_n;
  options.max_elements =
      max_elements > 0 ? max_elements : env_element_cap();
  options.only = only;
  std::cout << "check seed=" << options.seed << " max_n=" << options.max_n
            << "\n";
  auto results = run_check_suite(options, std::cout);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  std::cout << "check " << (all ? "PASS" : "FAIL") << " " << results.size()
            << " criteria\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rainbow connection numbers of digraphs"};
  app.require_subcommand(1);

  std::string kind_text, input, coloring_path, witness_out;
  BudgetFlags flags;

  CLI::App* compute = app.add_subcommand(
      "compute", "exact parameter value with exhaustion certificate");
  compute->add_option("--kind", kind_text)->required();
  compute->add_option("--input", input)->required();
  compute->add_option("--max-elements", flags.max_elements);
  compute->add_option("--max-nodes", flags.max_nodes);
  compute->add_option("--max-seconds", flags.max_seconds);
  compute->add_option("--witness-out", witness_out);

  CLI::App* verify =
      app.add_subcommand("verify", "check a coloring for a kind");
  verify->add_option("--kind", kind_text)->required();
  verify->add_option("--input", input)->required();
  verify->add_option("--coloring", coloring_path)->required();

  std::string family_name_text, params_text, out_path, coloring_out;
  bool with_coloring = false;
  CLI::App* family = app.add_subcommand("family", "emit a named instance");
  family->add_option("--name", family_name_text)->required();
  family->add_option("--params", params_text);
  family->add_flag("--with-coloring", with_coloring);
  family->add_option("--out", out_path);
  family->add_option("--coloring-out", coloring_out);

  bool with_colorings = false;
  CLI::App* cactus =
      app.add_subcommand("cactus", "recognize and profile a cactus");
  cactus->add_option("--input", input)->required();
  cactus->add_flag("--with-colorings", with_colorings);
  cactus->add_option("--max-elements", flags.max_elements);

  std::uint64_t seed = 20240817;
  int max_n = 4;
  int max_elements = 0;
  int only = 0;
  CLI::App* check = app.add_subcommand("check", "run the theorem-check suite");
  check->add_option("--seed", seed);
  check->add_option("--max-n", max_n);
  check->add_option("--max-elements", max_elements);
  check->add_option("--only", only);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed())
      return run_compute(kind_text, input, flags, witness_out);
    if (verify->parsed()) return run_verify(kind_text, input, coloring_path);
    if (family->parsed())
      return run_family(family_name_text, params_text, with_coloring, out_path,
                        coloring_out);
    if (cactus->parsed()) return run_cactus(input, with_colorings, flags);
    if (check->parsed()) return run_check(seed, max_n, max_elements, only);
  } catch (const BudgetExceededError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
