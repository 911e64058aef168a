// Command-line harness: solve built-in problems, run convergence studies,
// and verify the inequality suite.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sincsolve/study.hpp"

namespace {

using namespace sincsolve;

std::string fmt(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

int cmd_problems() {
  std::cout << "built-in problems:\n";
  for (const auto& [name, p] : builtin_problems()) {
    std::cout << "  " << name << "  (m=" << p.dimension
              << ", se: alpha=" << p.se.alpha << " beta=" << p.se.beta
              << " d=" << p.se.d << "; de: alpha=" << p.de.alpha
              << " beta=" << p.de.beta << " d=" << p.de.d << ")\n";
  }
  std::cout << "built-in scalar targets (for *-approx / *-indef studies):\n";
  for (const auto& [name, t] : builtin_targets()) {
    std::cout << "  " << name << "  " << t.description << '\n';
  }
  return 0;
}

int cmd_solve(const std::string& method_name_str, const std::string& problem_name,
              int n, std::optional<double> alpha, std::optional<double> beta,
              std::optional<double> d, std::vector<double> eval_points) {
  const Method method = parse_method(method_name_str);
  if (!is_solver_method(method)) {
    throw std::invalid_argument("solve: method must be one of the nystrom/collocation methods");
  }
  ProblemSpec problem = find_problem(problem_name);
  const TransformKind kind = method_kind(method);
  TransformParams& params = kind == TransformKind::se ? problem.se : problem.de;
  if (alpha) params.alpha = *alpha;
  if (beta) params.beta = *beta;
  if (d) params.d = *d;

  const DiscreteSolution sol = solve_nystrom(problem, n, kind);
  const bool collocation =
      method == Method::se_collocation || method == Method::de_collocation;
  CollocationSolution col;
  if (collocation) col = build_collocation(sol);

  std::cout << "method=" << method_name_str << " problem=" << problem_name
            << " n=" << n << " l=" << sol.mesh.size() << " h=" << fmt(sol.mesh.h)
            << " M=" << sol.mesh.M << " N=" << sol.mesh.N
            << " inv_norm=" << fmt(sol.inv_norm_estimate) << '\n';

  if (eval_points.empty()) {
    eval_points = {0.0, 0.5, 1.0, 2.0, 5.0, 10.0,
                   std::numeric_limits<double>::infinity()};
  }
  for (double t : eval_points) {
    const Eigen::VectorXd y =
        collocation ? eval_collocation(col, t) : eval_nystrom(sol, t);
    std::cout << "t=" << fmt(t);
    for (int i = 0; i < y.size(); ++i) std::cout << ' ' << fmt(y(i));
    if (problem.exact) {
      const Eigen::VectorXd err = y - problem.exact(t);
      std::cout << "  |err|=" << fmt(err.cwiseAbs().maxCoeff());
    }
    std::cout << '\n';
  }
  return 0;
}

StudyConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  nlohmann::json j;
  in >> j;
  StudyConfig config;
  if (j.contains("method")) config.method = parse_method(j["method"].get<std::string>());
  if (j.contains("problem")) config.problem = j["problem"].get<std::string>();
  if (j.contains("n_list")) config.n_list = j["n_list"].get<std::vector<int>>();
  if (j.contains("alpha")) config.alpha = j["alpha"].get<double>();
  if (j.contains("beta")) config.beta = j["beta"].get<double>();
  if (j.contains("d")) config.d = j["d"].get<double>();
  if (j.contains("grid_points")) config.grid_points = j["grid_points"].get<int>();
  if (j.contains("out")) config.csv_path = j["out"].get<std::string>();
  if (j.contains("json")) config.json_path = j["json"].get<std::string>();
  return config;
}

int cmd_study(const StudyConfig& config) {
  const ConvergenceReport report = run_study(config);
  if (!config.csv_path.empty()) {
    std::ofstream out(config.csv_path);
    if (!out) throw std::runtime_error("cannot open " + config.csv_path);
    write_csv(report, out);
  }
  if (!config.json_path.empty()) {
    std::ofstream out(config.json_path);
    if (!out) throw std::runtime_error("cannot open " + config.json_path);
    write_json(report, out);
  }
  write_csv(report, std::cout);
  if (report.fit) {
    std::cout << "fit: slope=" << fmt(report.fit->slope)
              << " intercept=" << fmt(report.fit->intercept)
              << " r2=" << fmt(report.fit->r_squared) << '\n';
  } else {
    std::cout << "fit: undefined (fewer than 3 records above the round-off floor)\n";
  }
  return 0;
}

int cmd_verify(std::uint64_t seed, long long samples) {
  const LemmaReport report = verify_lemmas(seed, samples);
  for (const LemmaCheck& c : report.checks) {
    std::cout << (c.violations == 0 ? "pass" : "FAIL") << "  " << c.name
              << "  samples=" << c.samples << " violations=" << c.violations
              << " worst_margin=" << fmt(c.worst_margin);
    if (c.samples > 0) {
      std::cout << " at (" << fmt(c.worst_point[0]) << ", "
                << fmt(c.worst_point[1]) << ')';
    }
    std::cout << '\n';
  }
  std::cout << (report.passed() ? "all inequality checks passed"
                                : "inequality violations detected")
            << '\n';
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sinc-Nystrom and Sinc-collocation solvers for exponentially "
               "decaying linear IVPs on (0, inf)"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "solve one problem at one n");
  std::string method_str = "de-collocation", problem_str = "decay1";
  int n = 16;
  double alpha_v = 0, beta_v = 0, d_v = 0;
  std::vector<double> eval_points;
  solve->add_option("--method", method_str, "solver method")->required();
  solve->add_option("--problem", problem_str, "problem name")->required();
  solve->add_option("--n", n, "mesh parameter")->required();
  auto* sa = solve->add_option("--alpha", alpha_v, "override alpha");
  auto* sb = solve->add_option("--beta", beta_v, "override beta");
  auto* sd = solve->add_option("--d", d_v, "override strip width d");
  solve->add_option("--eval", eval_points, "evaluation points")->delimiter(',');

  // study
  auto* study = app.add_subcommand("study", "convergence study over an n list");
  std::string config_path;
  std::string st_method, st_problem, st_csv, st_json;
  std::vector<int> n_list;
  int grid_points = 0;
  double st_alpha = 0, st_beta = 0, st_d = 0;
  study->add_option("--config", config_path, "JSON config file");
  auto* om = study->add_option("--method", st_method, "method");
  auto* op = study->add_option("--problem", st_problem, "problem or target name");
  auto* on = study->add_option("--n-list", n_list, "ascending n values")->delimiter(',');
  auto* og = study->add_option("--grid", grid_points, "grid points (default 2001)");
  auto* oa = study->add_option("--alpha", st_alpha, "override alpha");
  auto* ob = study->add_option("--beta", st_beta, "override beta");
  auto* od = study->add_option("--d", st_d, "override strip width d");
  auto* oo = study->add_option("--out", st_csv, "CSV output path");
  auto* oj = study->add_option("--json", st_json, "JSON output path");

  // verify
  auto* verify = app.add_subcommand("verify", "run the inequality suite");
  std::uint64_t seed = 20240711;
  long long samples = 10000;
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--samples", samples, "samples per check");

  auto* problems = app.add_subcommand("problems", "list built-in problems");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      return cmd_solve(method_str, problem_str, n,
                       sa->count() ? std::optional<double>(alpha_v) : std::nullopt,
                       sb->count() ? std::optional<double>(beta_v) : std::nullopt,
                       sd->count() ? std::optional<double>(d_v) : std::nullopt,
                       eval_points);
    }
    if (study->parsed()) {
      StudyConfig config;
      if (!config_path.empty()) config = load_config_file(config_path);
      if (om->count()) config.method = parse_method(st_method);
      if (op->count()) config.problem = st_problem;
      if (on->count()) config.n_list = n_list;
      if (og->count()) config.grid_points = grid_points;
      if (oa->count()) config.alpha = st_alpha;
      if (ob->count()) config.beta = st_beta;
      if (od->count()) config.d = st_d;
      if (oo->count()) config.csv_path = st_csv;
      if (oj->count()) config.json_path = st_json;
      return cmd_study(config);
    }
    if (verify->parsed()) return cmd_verify(seed, samples);
    if (problems->parsed()) return cmd_problems();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
