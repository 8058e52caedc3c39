#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sanecol/dimacs.hpp"
#include "sanecol/errors.hpp"
#include "sanecol/reduction.hpp"
#include "sanecol/sat_route.hpp"
#include "sanecol/solver.hpp"

namespace sanecol::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ArgumentError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw ArgumentError("failed writing '" + path + "'");
}

Graph load_graph(const std::string& path) { return parse_dimacs_col(read_file(path)); }

Budget to_budget(double seconds) { return Budget(seconds); }

struct Options {
  Color k = 0;
  std::string input;
  std::string output;
  std::string map;
  std::string witness;
  double timeout = kDefaultBudget.count();
  std::string model = "gnp";
  std::size_t n = 0;
  double p = 0;
  std::uint64_t seed = 0;
};

int do_reduce(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.input);
  const auto red = reduce(g, o.k);
  write_file(o.output, emit_dimacs_col(red.graph));
  write_file(o.map, reduction_map_to_json(red.map));
  out << summarize(size_report(g, red)) << "\n";
  return kSuccess;
}

int do_solve(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.input);
  const auto outcome = solve(g, o.k, to_budget(o.timeout));
  out << to_string(outcome.status) << " nodes=" << outcome.stats.nodes << "\n";
  switch (outcome.status) {
    case SolveStatus::colorable:
      if (!o.witness.empty()) write_file(o.witness, emit_witness(*outcome.witness));
      return kSuccess;
    case SolveStatus::uncolorable:
      return kNegative;
    case SolveStatus::timeout:
      break;
  }
  return kTimeout;
}

int do_verify(const Options& o, std::ostream& out) {
  if (o.k == 0) throw ArgumentError("palette size must be positive");
  const auto g = load_graph(o.input);
  std::istringstream text(read_file(o.witness));
  const auto colors = parse_witness(text, g.vertex_count());
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (colors[v] >= o.k) {
      out << "invalid: vertex " << v + 1 << " uses color " << colors[v] << " outside palette\n";
      return kNegative;
    }
  }
  if (!is_proper_coloring(g, Coloring(o.k, colors))) {
    out << "invalid: monochromatic edge\n";
    return kNegative;
  }
  out << "valid\n";
  return kSuccess;
}

int do_roundtrip(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.input);
  const auto red = reduce(g, o.k);
  const auto budget = to_budget(o.timeout);
  const auto source = solve(g, o.k, budget);
  const auto target = solve(red.graph, 3, budget);
  out << "source " << to_string(source.status) << ", reduced " << to_string(target.status) << "\n";
  if (source.status == SolveStatus::timeout || target.status == SolveStatus::timeout) {
    return kTimeout;
  }
  if (source.status != target.status) {
    out << "decisions disagree\n";
    return kNegative;
  }
  if (source.status == SolveStatus::colorable) {
    const auto lifted = lift_witness(g, *source.witness, red);
    const auto projected = project_witness(g, red, *target.witness);
    if (project_witness(g, red, lifted) != *source.witness) {
      throw InvariantViolation("projecting the lifted witness does not recover it");
    }
    out << "witnesses translate (lifted " << lifted.size() << " vertices, projected "
        << projected.size() << ")\n";
  }
  return kSuccess;
}

int do_compare(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.input);
  const auto cmp = compare_routes(g, o.k, kDefaultBudget);
  write_file(o.output, route_comparison_to_json(cmp));
  out << "sane " << cmp.sane.vertices << "/" << cmp.sane.edges << ", sat-route "
      << cmp.sat_route.vertices << "/" << cmp.sat_route.edges << " (vertices/edges)\n";
  return kSuccess;
}

int do_gen(const Options& o, std::ostream&) {
  if (o.model != "gnp") throw ArgumentError("unknown model '" + o.model + "'");
  write_file(o.output, emit_dimacs_col(gen_gnp(o.n, o.p, o.seed)));
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Direct k-COL to 3-COL reduction toolkit", "sanecol"};
  app.require_subcommand(1);
  Options o;

  auto* reduce_cmd = app.add_subcommand("reduce", "Build the 3-coloring instance for --k colors");
  reduce_cmd->add_option("--k", o.k, "palette size of the source question")->required();
  reduce_cmd->add_option("--input", o.input, "source graph (.col)")->required();
  reduce_cmd->add_option("--output", o.output, "reduced graph (.col)")->required();
  reduce_cmd->add_option("--map", o.map, "reduction map sidecar (.json)")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Decide --k colorability exactly");
  solve_cmd->add_option("--k", o.k)->required();
  solve_cmd->add_option("--input", o.input)->required();
  solve_cmd->add_option("--timeout", o.timeout, "seconds")->capture_default_str();
  solve_cmd->add_option("--witness", o.witness, "write a coloring when colorable");

  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring witness");
  verify_cmd->add_option("--k", o.k)->required();
  verify_cmd->add_option("--input", o.input)->required();
  verify_cmd->add_option("--witness", o.witness)->required();

  auto* roundtrip_cmd =
      app.add_subcommand("roundtrip", "Solve source and reduced instance, translate witnesses");
  roundtrip_cmd->add_option("--k", o.k)->required();
  roundtrip_cmd->add_option("--input", o.input)->required();
  roundtrip_cmd->add_option("--timeout", o.timeout, "seconds per solve")->capture_default_str();

  auto* compare_cmd = app.add_subcommand("compare", "Compare direct and SAT-detour reductions");
  compare_cmd->add_option("--k", o.k)->required();
  compare_cmd->add_option("--input", o.input)->required();
  compare_cmd->add_option("--output", o.output, "comparison record (.json)")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random graph");
  gen_cmd->add_option("--model", o.model)->capture_default_str();
  gen_cmd->add_option("--n", o.n)->required();
  gen_cmd->add_option("--p", o.p)->required();
  gen_cmd->add_option("--seed", o.seed)->required();
  gen_cmd->add_option("--output", o.output)->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (reduce_cmd->parsed()) return do_reduce(o, out);
    if (solve_cmd->parsed()) return do_solve(o, out);
    if (verify_cmd->parsed()) return do_verify(o, out);
    if (roundtrip_cmd->parsed()) return do_roundtrip(o, out);
    if (compare_cmd->parsed()) return do_compare(o, out);
    if (gen_cmd->parsed()) return do_gen(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariant;
  }
  return kUsage;
}

}  // namespace sanecol::cli
