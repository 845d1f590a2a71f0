// Command-line surface for the edge ring depth toolkit.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "edgering/json_io.hpp"

namespace {

using namespace edgering;

Graph load_graph(const std::string& edges_path, const std::string& g6) {
  if (!edges_path.empty() && !g6.empty())
    throw InvalidInput("give either --edges or --graph6, not both");
  if (!edges_path.empty()) {
    std::ifstream in(edges_path);
    if (!in) throw InvalidInput("cannot open " + edges_path);
    return parse_edge_list(in);
  }
  if (!g6.empty()) return parse_graph6(g6);
  throw InvalidInput("a graph is required: --edges FILE or --graph6 STR");
}

DegreeVec parse_degree_csv(const std::string& text) {
  DegreeVec s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      s.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw InvalidInput("degree vector: expected comma-separated integers");
    }
  }
  if (s.empty()) throw InvalidInput("degree vector: empty");
  return s;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::vector<Binomial> load_binomials(const std::string& path, std::size_t nvars,
                                     const MonomialOrder& order) {
  std::vector<Binomial> gens;
  for (const std::string& line : read_lines(path)) {
    if (line[0] == '#') continue;
    gens.push_back(parse_binomial(line, nvars, order));
  }
  return gens;
}

std::vector<ExponentVec> load_monomials(const std::string& path, std::size_t nvars) {
  std::vector<ExponentVec> gens;
  for (const std::string& line : read_lines(path)) {
    if (line[0] == '#') continue;
    gens.push_back(parse_monomial(line, nvars));
  }
  return gens;
}

void print_graph(const Graph& g, const std::string& format) {
  if (format == "g6")
    std::cout << encode_graph6(g) << '\n';
  else
    print_edge_list(std::cout, g);
}

int run(int argc, char** argv) {
  CLI::App app{"edgering: depth and Krull dimension of edge rings of finite graphs"};
  app.require_subcommand(1);

  std::string edges_path, g6, format = "edges", order_name = "lex", field_name = "q";
  int jobs = default_jobs();

  auto add_graph_opts = [&](CLI::App* cmd) {
    cmd->add_option("--edges", edges_path, "graph as an edge-list file (\"d r\" header)");
    cmd->add_option("--graph6", g6, "graph as a graph6 record");
  };

  // gen-family
  int k = 1;
  auto* gen_family = app.add_subcommand("gen-family", "print the family graph G_{k+6}");
  gen_family->add_option("--k", k, "family parameter")->required();
  gen_family->add_option("--format", format, "edges|g6");

  // gen-theorem
  int f = 7, d = 7;
  auto* gen_theorem = app.add_subcommand("gen-theorem", "print the graph with depth f, dimension d");
  gen_theorem->add_option("--f", f, "target depth")->required();
  gen_theorem->add_option("--d", d, "target Krull dimension")->required();
  gen_theorem->add_option("--format", format, "edges|g6");

  // toric
  auto* toric_cmd = app.add_subcommand("toric", "reduced Groebner basis of the toric ideal");
  add_graph_opts(toric_cmd);
  toric_cmd->add_option("--order", order_name, "lex|grevlex");

  // groebner
  std::string gens_path;
  std::size_t nvars = 0;
  auto* groebner_cmd = app.add_subcommand("groebner", "reduced Groebner basis of binomial generators");
  groebner_cmd->add_option("--gens", gens_path, "file with one binomial per line")->required();
  groebner_cmd->add_option("--nvars", nvars, "ambient variable count")->required();
  groebner_cmd->add_option("--order", order_name, "lex|grevlex");

  // initial
  auto* initial_cmd = app.add_subcommand("initial", "minimal generators of the initial ideal");
  add_graph_opts(initial_cmd);
  initial_cmd->add_option("--gens", gens_path, "file with one binomial per line");
  initial_cmd->add_option("--nvars", nvars, "ambient variable count (with --gens)");
  initial_cmd->add_option("--order", order_name, "lex|grevlex");

  // betti
  std::string ideal_path, method = "koszul";
  auto* betti_cmd = app.add_subcommand("betti", "multigraded Betti numbers of a monomial ideal");
  betti_cmd->add_option("--ideal", ideal_path, "file with one monomial per line")->required();
  betti_cmd->add_option("--nvars", nvars, "ambient variable count")->required();
  betti_cmd->add_option("--method", method, "koszul|gpw");
  betti_cmd->add_option("--field", field_name, "q|fp:P");
  betti_cmd->add_option("--jobs", jobs, "worker threads");

  // delta
  std::string degree_text;
  auto* delta_cmd = app.add_subcommand("delta", "the simplicial complex Delta_s of a degree");
  add_graph_opts(delta_cmd);
  delta_cmd->add_option("--degree", degree_text, "comma-separated degree vector")->required();

  // homology
  auto* homology_cmd = app.add_subcommand("homology", "reduced homology of Delta_s");
  add_graph_opts(homology_cmd);
  homology_cmd->add_option("--degree", degree_text, "comma-separated degree vector")->required();
  homology_cmd->add_option("--field", field_name, "q|fp:P");

  // depth
  auto* depth_cmd = app.add_subcommand("depth", "depth report for a graph");
  add_graph_opts(depth_cmd);
  depth_cmd->add_option("--order", order_name, "lex|grevlex");
  depth_cmd->add_option("--field", field_name, "q|fp:P");
  depth_cmd->add_option("--jobs", jobs, "worker threads");

  // verify-paper
  auto* verify_cmd = app.add_subcommand("verify-paper", "run the family pipeline checklist");
  verify_cmd->add_option("--k", k, "family parameter")->required();
  verify_cmd->add_option("--field", field_name, "q|fp:P");
  verify_cmd->add_option("--jobs", jobs, "worker threads");

  // scan
  std::string scan_path;
  bool with_timings = false;
  std::size_t max_pairs = 500000, max_lattice = 60000;
  auto* scan_cmd = app.add_subcommand("scan", "depth reports for a graph6 catalog");
  scan_cmd->add_option("--in", scan_path, "graph6 file, one record per line")->required();
  scan_cmd->add_option("--jobs", jobs, "worker threads");
  scan_cmd->add_option("--field", field_name, "q|fp:P");
  scan_cmd->add_flag("--timings", with_timings, "include timings (breaks byte determinism)");
  scan_cmd->add_option("--max-pairs", max_pairs, "Buchberger pair guard per graph");
  scan_cmd->add_option("--max-lattice", max_lattice, "lcm lattice guard per graph");

  CLI11_PARSE(app, argc, argv);

  if (gen_family->parsed()) {
    print_graph(family_gk6(k), format);
    return 0;
  }
  if (gen_theorem->parsed()) {
    print_graph(theorem_construction(f, d), format);
    return 0;
  }
  if (toric_cmd->parsed()) {
    Graph g = load_graph(edges_path, g6);
    BinomialBasis basis = toric_ideal(g, parse_order(order_name));
    for (const Binomial& b : basis.elements) std::cout << to_string(b) << '\n';
    return 0;
  }
  if (groebner_cmd->parsed()) {
    MonomialOrder order = parse_order(order_name);
    BinomialBasis basis = buchberger(load_binomials(gens_path, nvars, order), order, nvars);
    for (const Binomial& b : basis.elements) std::cout << to_string(b) << '\n';
    return 0;
  }
  if (initial_cmd->parsed()) {
    MonomialOrder order = parse_order(order_name);
    BinomialBasis basis;
    if (!gens_path.empty()) {
      if (nvars == 0) throw InvalidInput("--gens requires --nvars");
      basis = buchberger(load_binomials(gens_path, nvars, order), order, nvars);
    } else {
      basis = toric_ideal(load_graph(edges_path, g6), order);
    }
    for (const ExponentVec& m : initial_ideal(basis).gens()) std::cout << monomial_string(m) << '\n';
    return 0;
  }
  if (betti_cmd->parsed()) {
    MonomialIdeal ideal(nvars, load_monomials(ideal_path, nvars));
    FieldChoice field = parse_field(field_name);
    BettiTable table = method == "gpw" ? betti_gpw(ideal, field, jobs) : betti_table(ideal, field, jobs);
    table.print_triangular(std::cerr);
    std::cout << betti_to_json(table).dump() << '\n';
    return 0;
  }
  if (delta_cmd->parsed()) {
    Graph g = load_graph(edges_path, g6);
    DeltaComplex delta = delta_complex(g, parse_degree_csv(degree_text));
    std::cerr << delta.complex << '\n';
    nlohmann::json j = {{"degree", delta.degree},
                        {"void", delta.complex.is_void()},
                        {"dim", delta.complex.dim()},
                        {"face_count", delta.complex.face_count()},
                        {"facets", facets(delta)}};
    std::cout << j.dump() << '\n';
    return 0;
  }
  if (homology_cmd->parsed()) {
    Graph g = load_graph(edges_path, g6);
    DeltaComplex delta = delta_complex(g, parse_degree_csv(degree_text));
    HomologyDims dims = reduced_homology_dims(delta.complex, parse_field(field_name));
    std::cout << nlohmann::json({{"field", parse_field(field_name).name()},
                                 {"dims", homology_to_json(dims)}})
                     .dump()
              << '\n';
    return 0;
  }
  if (depth_cmd->parsed()) {
    Graph g = load_graph(edges_path, g6);
    DepthOptions opt;
    opt.order = parse_order(order_name);
    opt.field = parse_field(field_name);
    opt.jobs = jobs;
    DepthReport report = depth_report(g, opt);
    std::cout << report_to_json(report).dump() << '\n';
    return 0;
  }
  if (verify_cmd->parsed()) {
    DepthOptions opt;
    opt.field = parse_field(field_name);
    opt.jobs = jobs;
    std::vector<PaperCheckResult> checks = verify_paper(k, opt);
    bool all = true;
    for (const PaperCheckResult& c : checks) {
      std::cerr << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
      all = all && c.pass;
    }
    std::cout << checks_to_json(k, checks).dump() << '\n';
    return all ? 0 : 1;
  }
  if (scan_cmd->parsed()) {
    ScanOptions opts;
    opts.jobs = jobs;
    opts.include_timings = with_timings;
    opts.depth.field = parse_field(field_name);
    opts.depth.gb_limits.max_pairs = max_pairs;
    opts.depth.betti_limits.max_lattice = max_lattice;
    ScanResult result = scan_catalog(read_lines(scan_path), opts);
    for (const ScanRecord& rec : result.records)
      std::cout << record_to_json(rec, with_timings).dump() << '\n';
    std::cout << nlohmann::json({{"summary", summary_to_json(result.summary)}}).dump() << '\n';
    const ScanSummary& s = result.summary;
    std::cerr << "scanned " << s.scanned << " of " << s.lines << " lines (" << s.filtered
              << " filtered, " << s.guard_skipped << " guard-skipped, " << s.errors << " errors); "
              << "min depth_lower = " << (s.min_depth_lower ? std::to_string(*s.min_depth_lower) : "n/a")
              << ", min certified depth = "
              << (s.min_certified_depth ? std::to_string(*s.min_certified_depth) : "n/a") << '\n';
    if (s.errors > 0) return 2;
    if (s.min_certified_depth && *s.min_certified_depth < 7) return 1;
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const GuardLimit& e) {
    std::cerr << "guard limit: " << e.what() << '\n';
    return 3;
  } catch (const InvalidInput& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
