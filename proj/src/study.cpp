#include "sincsolve/study.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace sincsolve {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kNan = std::numeric_limits<double>::quiet_NaN();
const double kInf = std::numeric_limits<double>::infinity();

struct MethodInfo {
  Method method;
  const char* name;
};

constexpr MethodInfo kMethods[] = {
    {Method::se_nystrom, "se-nystrom"},
    {Method::de_nystrom, "de-nystrom"},
    {Method::se_collocation, "se-collocation"},
    {Method::de_collocation, "de-collocation"},
    {Method::se_approx, "se-approx"},
    {Method::de_approx, "de-approx"},
    {Method::se_indef, "se-indef"},
    {Method::de_indef, "de-indef"},
};

std::string format_double(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

double elapsed_ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

void validate_config(const StudyConfig& config) {
  if (config.n_list.empty()) {
    throw std::invalid_argument("study: n_list must be nonempty");
  }
  if (!std::is_sorted(config.n_list.begin(), config.n_list.end()) ||
      std::adjacent_find(config.n_list.begin(), config.n_list.end()) !=
          config.n_list.end()) {
    throw std::invalid_argument("study: n_list must be strictly ascending");
  }
  if (config.grid_points < 3) {
    throw std::invalid_argument("study: grid_points must be >= 3");
  }
}

TransformParams apply_overrides(TransformParams base, const StudyConfig& config) {
  if (config.alpha) base.alpha = *config.alpha;
  if (config.beta) base.beta = *config.beta;
  if (config.d) base.d = *config.d;
  return base;
}

void finalize_report(ConvergenceReport& report) {
  report.abscissa = method_kind(report.method) == TransformKind::de
                        ? RateAbscissa::de_exponent
                        : RateAbscissa::sqrt_n;
  try {
    report.fit = fit_rate(report, report.abscissa);
  } catch (const insufficient_data_error&) {
    report.fit.reset();
  }
}

ConvergenceReport run_solver_study(const StudyConfig& config,
                                   const ProblemSpec& base_problem) {
  ProblemSpec problem = base_problem;
  const TransformKind kind = method_kind(config.method);
  TransformParams& params = kind == TransformKind::se ? problem.se : problem.de;
  params = apply_overrides(params, config);
  if (!problem.exact) {
    throw std::invalid_argument("study: problem has no exact solution to measure against");
  }

  ConvergenceReport report;
  report.method = config.method;
  report.problem = problem.name;
  report.alpha = params.alpha;
  report.beta = params.beta;
  report.d = params.d;
  report.mu = std::min(params.alpha, params.beta);

  const bool collocation = config.method == Method::se_collocation ||
                           config.method == Method::de_collocation;
  for (int n : config.n_list) {
    StudyRecord rec;
    rec.n = n;
    const auto start = std::chrono::steady_clock::now();
    try {
      const DiscreteSolution sol = solve_nystrom(problem, n, kind);
      VectorEvaluator approx;
      if (collocation) {
        const CollocationSolution col = build_collocation(sol);
        approx = [col](double t) { return eval_collocation(col, t); };
      } else {
        approx = [sol](double t) { return eval_nystrom(sol, t); };
      }
      rec.l = sol.mesh.size();
      rec.h = sol.mesh.h;
      rec.M = sol.mesh.M;
      rec.N = sol.mesh.N;
      rec.inv_norm = sol.inv_norm_estimate;
      rec.sup_error =
          sup_error(approx, problem.exact, sol.mesh, config.grid_points);
    } catch (const singular_matrix_error&) {
      rec.failed = true;
      rec.sup_error = kNan;
    }
    rec.elapsed_ms = elapsed_ms_since(start);
    report.records.push_back(std::move(rec));
  }
  finalize_report(report);
  return report;
}

ConvergenceReport run_target_study(const StudyConfig& config,
                                   const ApproxTarget& target) {
  const TransformKind kind = method_kind(config.method);
  const TransformParams params =
      apply_overrides(kind == TransformKind::se ? target.se : target.de, config);
  const double mu = std::min(params.alpha, params.beta);
  const bool indef = is_indef_method(config.method);
  if (indef && !target.antiderivative) {
    throw std::invalid_argument("study: target '" + target.name +
                                "' has no antiderivative for an indefinite study");
  }

  ConvergenceReport report;
  report.method = config.method;
  report.problem = target.name;
  report.alpha = params.alpha;
  report.beta = params.beta;
  report.d = params.d;
  report.mu = mu;

  // The certified growth constant only covers the target's own exponents;
  // overriding alpha/beta voids it, overriding d does not.
  const bool exponents_overridden = config.alpha || config.beta;
  for (int n : config.n_list) {
    StudyRecord rec;
    rec.n = n;
    const auto start = std::chrono::steady_clock::now();

    Mesh mesh;
    VectorEvaluator approx;
    VectorEvaluator exact;
    if (indef) {
      mesh = kind == TransformKind::se
                 ? se_mesh(params.alpha, params.beta, params.d, n)
                 : de_mesh_indef(params.alpha, params.beta, params.d, n);
      const IndefiniteApproximant q = kind == TransformKind::se
                                          ? build_se_indefinite(target.f, mesh)
                                          : build_de_indefinite(target.f, mesh);
      approx = [q](double t) {
        return Eigen::VectorXd::Constant(1, evaluate_indefinite(q, t));
      };
      const ScalarFunction anti = target.antiderivative;
      exact = [anti](double t) { return Eigen::VectorXd::Constant(1, anti(t)); };
    } else {
      mesh = kind == TransformKind::se
                 ? se_mesh(params.alpha, params.beta, params.d, n)
                 : de_mesh_symmetric(mu, params.d, n);
      Approximant a;
      if (target.boundary) {
        a = kind == TransformKind::se
                ? build_se_boundary(target.f, target.p_infinity, target.q_zero, mesh)
                : build_de_boundary(target.f, target.p_infinity, target.q_zero, mesh);
      } else {
        a = kind == TransformKind::se ? build_se(target.f, mesh)
                                      : build_de(target.f, mesh);
      }
      approx = [a](double t) { return Eigen::VectorXd::Constant(1, evaluate(a, t)); };
      const ScalarFunction f = target.f;
      exact = [f](double t) { return Eigen::VectorXd::Constant(1, f(t)); };

      if (config.method == Method::de_approx && !exponents_overridden) {
        if (target.boundary && target.de_holder) {
          const double growth =
              de_growth_from_holder(target.de_holder(params.d), mu, params.d);
          rec.bound = de_error_bound(n, growth, mu, params.d);
        } else if (!target.boundary && target.de_growth_constant > 0) {
          rec.bound = de_error_bound(n, target.de_growth_constant, mu, params.d);
        }
      }
    }

    rec.l = mesh.size();
    rec.h = mesh.h;
    rec.M = mesh.M;
    rec.N = mesh.N;
    rec.sup_error = sup_error(approx, exact, mesh, config.grid_points);
    rec.elapsed_ms = elapsed_ms_since(start);
    report.records.push_back(std::move(rec));
  }
  finalize_report(report);
  return report;
}

}  // namespace

Method parse_method(const std::string& name) {
  for (const auto& info : kMethods) {
    if (name == info.name) return info.method;
  }
  std::ostringstream msg;
  msg << "unknown method '" << name << "'; available:";
  for (const auto& info : kMethods) msg << ' ' << info.name;
  throw std::invalid_argument(msg.str());
}

std::string method_name(Method m) {
  for (const auto& info : kMethods) {
    if (info.method == m) return info.name;
  }
  return "?";
}

bool is_solver_method(Method m) {
  return m == Method::se_nystrom || m == Method::de_nystrom ||
         m == Method::se_collocation || m == Method::de_collocation;
}

bool is_indef_method(Method m) {
  return m == Method::se_indef || m == Method::de_indef;
}

TransformKind method_kind(Method m) {
  switch (m) {
    case Method::se_nystrom:
    case Method::se_collocation:
    case Method::se_approx:
    case Method::se_indef:
      return TransformKind::se;
    default:
      return TransformKind::de;
  }
}

double sup_error(const VectorEvaluator& approx, const VectorEvaluator& exact,
                 const Mesh& mesh, int grid_points) {
  if (grid_points < 3) {
    throw std::invalid_argument("sup_error: grid_points must be >= 3");
  }
  const double lo = -mesh.M * mesh.h - 5.0;
  const double hi = mesh.N * mesh.h + 5.0;
  double worst = 0.0;
  const auto probe = [&](double t) {
    const Eigen::VectorXd diff = approx(t) - exact(t);
    worst = std::max(worst, diff.cwiseAbs().maxCoeff());
  };
  for (int k = 0; k < grid_points; ++k) {
    const double x = lo + (hi - lo) * k / (grid_points - 1);
    probe(mesh.kind == TransformKind::se ? se_forward(x) : de_forward(x));
  }
  probe(0.0);
  probe(kInf);
  return worst;
}

ConvergenceReport run_study(const StudyConfig& config) {
  validate_config(config);
  if (is_solver_method(config.method)) {
    return run_solver_study(config, find_problem(config.problem));
  }
  return run_target_study(config, find_target(config.problem));
}

ConvergenceReport run_study(const StudyConfig& config, const ProblemSpec& problem) {
  validate_config(config);
  if (!is_solver_method(config.method)) {
    throw std::invalid_argument("run_study: explicit problems need a solver method");
  }
  return run_solver_study(config, problem);
}

RateFit fit_rate(const ConvergenceReport& report, RateAbscissa abscissa) {
  std::vector<double> xs, ys;
  for (const StudyRecord& rec : report.records) {
    if (rec.failed || !(rec.sup_error > kRoundoffFloor)) continue;
    const double x = abscissa == RateAbscissa::sqrt_n
                         ? std::sqrt(static_cast<double>(rec.n))
                         : kPi * report.d * rec.n /
                               std::asinh(report.d * rec.n / report.mu);
    xs.push_back(x);
    ys.push_back(std::log(rec.sup_error));
  }
  if (xs.size() < 3) {
    throw insufficient_data_error(
        "fit_rate: need at least 3 records above the round-off floor");
  }
  const auto n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0) {
    throw insufficient_data_error("fit_rate: degenerate abscissa values");
  }
  RateFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  const double mean_y = sy / n;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss_res += e * e;
    ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
  }
  fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

void write_csv(const ConvergenceReport& report, std::ostream& out) {
  out << "method,problem,n,l,h,M,N,sup_error,bound,inv_norm,elapsed_ms\n";
  for (const StudyRecord& rec : report.records) {
    out << method_name(report.method) << ',' << report.problem << ',' << rec.n
        << ',' << rec.l << ',' << format_double(rec.h) << ',' << rec.M << ','
        << rec.N << ',' << format_double(rec.sup_error) << ','
        << format_double(rec.bound.value_or(kNan)) << ','
        << format_double(rec.inv_norm.value_or(kNan)) << ','
        << format_double(rec.elapsed_ms) << '\n';
  }
}

void write_json(const ConvergenceReport& report, std::ostream& out) {
  nlohmann::ordered_json j;
  j["method"] = method_name(report.method);
  j["problem"] = report.problem;
  j["alpha"] = report.alpha;
  j["beta"] = report.beta;
  j["d"] = report.d;
  j["mu"] = report.mu;
  j["abscissa"] =
      report.abscissa == RateAbscissa::sqrt_n ? "sqrt_n" : "de_exponent";
  j["records"] = nlohmann::ordered_json::array();
  for (const StudyRecord& rec : report.records) {
    nlohmann::ordered_json r;
    r["n"] = rec.n;
    r["l"] = rec.l;
    r["h"] = rec.h;
    r["M"] = rec.M;
    r["N"] = rec.N;
    r["sup_error"] = rec.sup_error;
    if (rec.bound) r["bound"] = *rec.bound;
    if (rec.inv_norm) r["inv_norm"] = *rec.inv_norm;
    r["elapsed_ms"] = rec.elapsed_ms;
    r["failed"] = rec.failed;
    j["records"].push_back(std::move(r));
  }
  if (report.fit) {
    j["fit"] = {{"slope", report.fit->slope},
                {"intercept", report.fit->intercept},
                {"r_squared", report.fit->r_squared}};
  } else {
    j["fit"] = nullptr;
  }
  out << j.dump(2) << '\n';
}

}  // namespace sincsolve
