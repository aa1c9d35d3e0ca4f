#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fuzzyopt/defuzzify.hpp"
#include "fuzzyopt/errors.hpp"
#include "fuzzyopt/io.hpp"
#include "fuzzyopt/level_calculus.hpp"
#include "fuzzyopt/newton.hpp"
#include "fuzzyopt/problems.hpp"
#include "report.hpp"

namespace fuzzyopt::cli {

namespace {

// Flags shared by every subcommand that builds and solves a problem. Unset
// optionals leave the problem's own settings alone.
struct SolverFlags {
  std::optional<double> x0;
  std::optional<double> eps;
  std::optional<std::size_t> max_iter;
  std::optional<std::size_t> alpha_grid;
  std::optional<std::string> quadrature;
  std::optional<double> fd_step;

  void add_to(CLI::App& app) {
    app.add_option("--x0", x0, "Initial approximation");
    app.add_option("--eps", eps, "Termination tolerance on |x(k+1) - x(k)|")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-iter", max_iter, "Iteration budget")->check(CLI::PositiveNumber);
    app.add_option("--alpha-grid", alpha_grid, "Number of alpha levels")
        ->check(CLI::Range(2, 1000001));
    app.add_option("--quadrature", quadrature, "trapezoid or simpson")
        ->check(CLI::IsMember({"trapezoid", "simpson"}));
    app.add_option("--fd-step", fd_step, "Relative finite-difference step")
        ->check(CLI::PositiveNumber);
  }

  void apply(ProblemSpec& spec) const {
    if (x0) spec.x0 = *x0;
    if (eps) spec.eps = *eps;
    if (max_iter) spec.max_iter = *max_iter;
    if (alpha_grid) spec.alpha_points = *alpha_grid;
    if (quadrature) spec.quadrature = *parse_quadrature_rule(*quadrature);
    if (fd_step) spec.fd_step = *fd_step;
  }
};

struct OutputFlags {
  std::string format = "text";
  std::string out;

  void add_to(CLI::App& app) {
    app.add_option("--format", format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--out", out, "Write the report to this path instead of stdout");
  }

  Format fmt() const { return *parse_format(format); }
};

struct ProblemFlags {
  std::string problem;
  std::optional<std::string> va;
  std::optional<std::string> rho;

  void add_to(CLI::App& app) {
    app.add_option("--problem", problem,
                   "Built-in problem (example_4_1, max_return_crisp, max_return_fuzzy) or a "
                   "problem config file")
        ->required();
    app.add_option("--Va", va, "Acceptable risk: a number or l,p,u");
    app.add_option("--rho", rho, "Risk weight: a number or l,p,u");
  }

  ProblemSpec resolve() const {
    ProblemSpec spec;
    if (const auto kind = parse_problem_kind(problem);
        kind && *kind != ProblemKind::fuzzy_polynomial) {
      spec = builtin_spec(*kind);
    } else if (std::ifstream(problem).good()) {
      spec = load_problem_spec(problem);
    } else {
      throw ParseError("unknown problem '" + problem + "' (not a built-in name or a readable file)");
    }
    if (va || rho) {
      if (spec.kind != ProblemKind::max_return_crisp && spec.kind != ProblemKind::max_return_fuzzy) {
        throw ParseError("--Va/--rho only apply to the max_return problems");
      }
      if (va) spec.params.Va = parse_param(*va);
      if (rho) spec.params.rho = parse_param(*rho);
    }
    return spec;
  }

  std::string label(const ProblemSpec& spec) const {
    return parse_problem_kind(problem) ? problem : std::string(to_string(spec.kind));
  }
};

// Writes through --out when given, else to `out`.
void emit(const OutputFlags& flags, std::ostream& out,
          const std::function<void(std::ostream&)>& body) {
  if (flags.out.empty()) {
    body(out);
    return;
  }
  std::ofstream file(flags.out, std::ios::binary);
  if (!file) throw ParseError("cannot open '" + flags.out + "' for writing");
  body(file);
  if (!file) throw ParseError("failed writing '" + flags.out + "'");
}

void validate_spec(const ProblemSpec& spec) {
  try {
    spec.validate();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

RunReport run_solve(const ProblemSpec& spec, const std::string& label, const VerifyOptions& vopts) {
  const auto start = std::chrono::steady_clock::now();
  const FuzzyFunction f = build_function(spec);
  const NewtonConfig cfg = spec.newton_config();

  RunReport rep;
  rep.problem = label;
  rep.config = spec;
  rep.result = solve(f, cfg);
  rep.objective = rep.result.F / 2.0;
  try {
    rep.centroid = centroid(eval_fuzzy(f, rep.result.xstar, spec.alpha_points));
  } catch (const Error&) {
    rep.centroid = std::numeric_limits<double>::quiet_NaN();
  }
  if (rep.result.converged()) rep.verification = verify_solution(f, rep.result, cfg, vopts);
  rep.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// Each row starts from the built-in spec of its kind, so fuzzy rows keep
// their own fd_step unless the flags override it.
TableRow run_row(std::size_t index, const SweepRow& row, const SolverFlags& flags) {
  const ProblemKind kind =
      row.params.is_crisp() ? ProblemKind::max_return_crisp : ProblemKind::max_return_fuzzy;
  ProblemSpec spec = builtin_spec(kind);
  flags.apply(spec);
  spec.params = row.params;
  if (row.x0) spec.x0 = *row.x0;
  validate_spec(spec);

  const FuzzyFunction f = build_function(spec);
  TableRow out;
  out.index = index;
  out.params = row.params;
  out.kind = spec.kind;
  out.result = solve(f, spec.newton_config());
  out.value = centroid(eval_fuzzy(f, out.result.xstar, spec.alpha_points));
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Newton's method for non-dominated solutions of single-variable fuzzy optimization problems",
               "fuzzyopt"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Solve one problem and print the iteration table");
  ProblemFlags solve_problem;
  SolverFlags solve_solver;
  OutputFlags solve_output;
  VerifyOptions solve_verify;
  solve_problem.add_to(*solve_cmd);
  solve_solver.add_to(*solve_cmd);
  solve_output.add_to(*solve_cmd);
  solve_cmd->add_option("--nbhd", solve_verify.nbhd, "Non-dominance neighbourhood radius")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--samples", solve_verify.samples, "Samples for the audits")
      ->check(CLI::PositiveNumber);

  // table
  auto* table_cmd = app.add_subcommand("table", "Solve a sweep of max-return instances");
  std::string sweep_path;
  SolverFlags table_solver;
  OutputFlags table_output;
  table_cmd->add_option("--sweep", sweep_path, "Sweep file (JSON rows of Va, rho[, x0])")
      ->required();
  table_solver.add_to(*table_cmd);
  table_output.add_to(*table_cmd);

  // check
  auto* check_cmd = app.add_subcommand("check", "Audit a candidate point for non-dominance");
  ProblemFlags check_problem;
  double xstar = 0.0;
  VerifyOptions check_verify;
  std::optional<double> check_eps;
  std::optional<std::size_t> check_grid;
  OutputFlags check_output;
  check_problem.add_to(*check_cmd);
  check_cmd->add_option("--xstar", xstar, "Candidate solution")->required();
  check_cmd->add_option("--nbhd", check_verify.nbhd, "Neighbourhood radius")
      ->check(CLI::PositiveNumber);
  check_cmd->add_option("--samples", check_verify.samples, "Number of sample points")
      ->check(CLI::PositiveNumber);
  check_cmd->add_option("--eps", check_eps, "Tolerance scale for the stationarity test")
      ->check(CLI::PositiveNumber);
  check_cmd->add_option("--alpha-grid", check_grid, "Number of alpha levels")
      ->check(CLI::Range(2, 1000001));
  check_output.add_to(*check_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*solve_cmd) {
      ProblemSpec spec = solve_problem.resolve();
      solve_solver.apply(spec);
      validate_spec(spec);
      const RunReport rep = run_solve(spec, solve_problem.label(spec), solve_verify);
      emit(solve_output, out, [&](std::ostream& os) { write_report(os, rep, solve_output.fmt()); });
      return rep.result.converged() ? kOk : kNotConverged;
    }

    if (*table_cmd) {
      const std::vector<SweepRow> sweep = load_sweep(sweep_path);
      // Rows are independent solves; results are collected in input order.
      std::vector<std::future<TableRow>> pending;
      pending.reserve(sweep.size());
      for (std::size_t i = 0; i < sweep.size(); ++i) {
        pending.push_back(std::async(std::launch::async, run_row, i, sweep[i], std::cref(table_solver)));
      }
      std::vector<TableRow> rows;
      rows.reserve(pending.size());
      for (auto& p : pending) rows.push_back(p.get());
      emit(table_output, out, [&](std::ostream& os) { write_table(os, rows, table_output.fmt()); });
      for (const auto& r : rows) {
        if (!r.result.converged()) return kNotConverged;
      }
      return kOk;
    }

    if (*check_cmd) {
      ProblemSpec spec = check_problem.resolve();
      if (check_eps) spec.eps = *check_eps;
      if (check_grid) spec.alpha_points = *check_grid;
      spec.x0 = xstar;
      validate_spec(spec);
      const FuzzyFunction f = build_function(spec);
      CheckReport rep{check_problem.label(spec), spec,
                      verify_point(f, xstar, spec.newton_config(), check_verify)};
      emit(check_output, out, [&](std::ostream& os) { write_check(os, rep, check_output.fmt()); });
      return rep.verification.passed() ? kOk : kCheckFailed;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace fuzzyopt::cli
