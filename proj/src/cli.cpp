#include "ceamp/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ceamp/formula.hpp"
#include "ceamp/json_io.hpp"
#include "ceamp/merging_model.hpp"
#include "ceamp/reduction.hpp"
#include "ceamp/solver.hpp"
#include "ceamp/transform.hpp"
#include "ceamp/verifier.hpp"

namespace ceamp {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return read_file(path);
}

int cmd_reduce(const std::string& cnf_path, const std::string& out_path,
               const std::string& dot_path, const std::string& model_dot_path, bool stats,
               std::istream& in, std::ostream& out) {
  Formula f = normalize(parse_dimacs(read_input(cnf_path, in)));
  ReducedInstance reduced = reduce(f);
  write_file(out_path, instance_to_json(reduced.instance));
  if (!dot_path.empty()) write_file(dot_path, instance_to_dot(reduced.instance));
  if (!model_dot_path.empty())
    write_file(model_dot_path, model_to_dot(reduced.model, reduced.instance.cliques));
  if (stats) out << stats_to_json(reduced.instance, instance_stats(reduced.instance));
  return 0;
}

int cmd_verify(const std::string& instance_path, const std::string& solution_path,
               std::istream& in, std::ostream& out) {
  Instance inst = instance_from_json(read_input(instance_path, in));
  Report report = verify_packing(inst);
  Report structure = verify_structure(inst);
  report.checks.insert(report.checks.end(), structure.checks.begin(), structure.checks.end());
  if (!solution_path.empty()) {
    std::vector<Edit> edits = edits_from_json(inst, read_input(solution_path, in));
    Report solution = verify_solution(inst, edits);
    report.checks.insert(report.checks.end(), solution.checks.begin(), solution.checks.end());
  }
  out << report_to_json(report);
  return report.all_pass() ? 0 : 1;
}

int cmd_encode(const std::string& instance_path, const std::string& assignment_path,
               const std::string& out_path, std::istream& in) {
  Instance inst = instance_from_json(read_input(instance_path, in));
  int variables = 0;
  for (const CliqueId& c : inst.cliques)
    if (c.kind == CliqueKind::var) variables = std::max(variables, c.a + 1);
  Assignment a = assignment_from_text(read_input(assignment_path, in), variables);
  write_file(out_path, edits_to_json(inst, encode_solution(inst, a)));
  return 0;
}

int cmd_decode(const std::string& instance_path, const std::string& edits_path,
               std::istream& in, std::ostream& out) {
  Instance inst = instance_from_json(read_input(instance_path, in));
  std::vector<Edit> edits = edits_from_json(inst, read_input(edits_path, in));
  out << assignment_to_text(decode_assignment(inst, edits));
  return 0;
}

int cmd_solve(const std::string& instance_path, double time_limit, bool oracle,
              std::istream& in, std::ostream& out, std::ostream& err) {
  Instance inst = instance_from_json(read_input(instance_path, in));
  if (oracle) {
    auto edits = brute_force_partition_solve(inst.graph, inst.packing);
    if (!edits) {
      err << "infeasible\n";
      return 1;
    }
    out << edits_to_json(inst, *edits);
    return 0;
  }
  SolveResult result = solve_zero_excess(
      inst, time_limit > 0 ? std::optional<double>(time_limit) : std::nullopt);
  switch (result.status) {
    case SolveStatus::feasible: out << edits_to_json(inst, result.edits); return 0;
    case SolveStatus::infeasible: err << "infeasible\n"; return 1;
    case SolveStatus::timeout: err << "timeout\n"; return 3;
  }
  return 2;
}

int cmd_sat(const std::string& cnf_path, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Formula f = parse_dimacs(read_input(cnf_path, in));
  std::optional<Assignment> a = brute_force_sat(f);
  if (!a) {
    err << "unsatisfiable\n";
    return 1;
  }
  out << assignment_to_text(*a);
  return 0;
}

int cmd_normalize(const std::string& cnf_path, std::istream& in, std::ostream& out) {
  out << to_dimacs(normalize(parse_dimacs(read_input(cnf_path, in))));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"ceamp: cluster editing above modification-disjoint P3 packings"};
  app.require_subcommand(1);

  std::string cnf, instance, solution, assignment, edits, out_path, dot_path, model_dot_path;
  bool stats = false, oracle = false;
  double time_limit = 0;

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "compile a 3-CNF into a CEaMP instance");
  reduce_cmd->add_option("cnf", cnf, "DIMACS CNF file, '-' for stdin")->required();
  reduce_cmd->add_option("-o,--output", out_path, "instance JSON output")->required();
  reduce_cmd->add_option("--dot", dot_path, "DOT export of the instance graph");
  reduce_cmd->add_option("--dot-model", model_dot_path, "DOT export of the merging model");
  reduce_cmd->add_flag("--stats", stats, "print instance statistics");

  CLI::App* verify_cmd = app.add_subcommand("verify", "check structural invariants");
  verify_cmd->add_option("instance", instance, "instance JSON")->required();
  verify_cmd->add_option("--solution", solution, "edit-set JSON to validate");

  CLI::App* encode_cmd = app.add_subcommand("encode", "assignment -> zero-excess edit set");
  encode_cmd->add_option("instance", instance, "instance JSON")->required();
  encode_cmd->add_option("assignment", assignment, "assignment text ('x<i> true|false')")
      ->required();
  encode_cmd->add_option("-o,--output", out_path, "edit-set JSON output")->required();

  CLI::App* decode_cmd = app.add_subcommand("decode", "zero-excess edit set -> assignment");
  decode_cmd->add_option("instance", instance, "instance JSON")->required();
  decode_cmd->add_option("edits", edits, "edit-set JSON, '-' for stdin")->required();

  CLI::App* solve_cmd = app.add_subcommand("solve", "decide zero-excess feasibility");
  solve_cmd->add_option("instance", instance, "instance JSON")->required();
  solve_cmd->add_option("--time-limit", time_limit, "seconds before giving up");
  solve_cmd->add_flag("--oracle", oracle, "use the brute-force partition oracle");

  CLI::App* sat_cmd = app.add_subcommand("sat", "brute-force satisfiability oracle");
  sat_cmd->add_option("cnf", cnf, "DIMACS CNF file, '-' for stdin")->required();

  CLI::App* normalize_cmd = app.add_subcommand("normalize", "print the normalized formula");
  normalize_cmd->add_option("cnf", cnf, "DIMACS CNF file, '-' for stdin")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (reduce_cmd->parsed())
      return cmd_reduce(cnf, out_path, dot_path, model_dot_path, stats, in, out);
    if (verify_cmd->parsed()) return cmd_verify(instance, solution, in, out);
    if (encode_cmd->parsed()) return cmd_encode(instance, assignment, out_path, in);
    if (decode_cmd->parsed()) return cmd_decode(instance, edits, in, out);
    if (solve_cmd->parsed()) return cmd_solve(instance, time_limit, oracle, in, out, err);
    if (sat_cmd->parsed()) return cmd_sat(cnf, in, out, err);
    if (normalize_cmd->parsed()) return cmd_normalize(cnf, in, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ceamp
