#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sincsolve/approximation.hpp"
#include "sincsolve/indefinite.hpp"
#include "sincsolve/solver.hpp"

namespace sincsolve {

enum class Method {
  se_nystrom,
  de_nystrom,
  se_collocation,
  de_collocation,
  se_approx,
  de_approx,
  se_indef,
  de_indef,
};

Method parse_method(const std::string& name);  // throws on unknown name
std::string method_name(Method m);
bool is_solver_method(Method m);
bool is_indef_method(Method m);
TransformKind method_kind(Method m);

// Built-in initial value problems with analytically certified parameters.
const std::map<std::string, ProblemSpec>& builtin_problems();
const ProblemSpec& find_problem(const std::string& name);  // error lists names

// Scalar targets for the approximation and indefinite-integration studies.
struct ApproxTarget {
  std::string name;
  ScalarFunction f;
  double p_infinity = 0.0;
  double q_zero = 0.0;
  bool boundary = false;           // approximate with the boundary treatment
  ScalarFunction antiderivative;   // int_0^t f, empty if not an indef target
  TransformParams se;
  TransformParams de;
  double de_growth_constant = 0.0; // certified c for |f| <= c|z|^mu|e^-z|^mu
  // Certified Hoelder constant as a function of the strip width d, for
  // boundary-treated targets; empty when not certified.
  std::function<double(double)> de_holder;
  std::string description;
};
const std::map<std::string, ApproxTarget>& builtin_targets();
const ApproxTarget& find_target(const std::string& name);

using VectorEvaluator = std::function<Eigen::VectorXd(double)>;

// Sup-norm error over the measurement grid t = transform(x_k), x_k equispaced
// on [-Mh - 5, Nh + 5], plus the endpoints t = 0 and t = +inf.
double sup_error(const VectorEvaluator& approx, const VectorEvaluator& exact,
                 const Mesh& mesh, int grid_points);

struct StudyConfig {
  Method method = Method::se_nystrom;
  std::string problem;
  std::vector<int> n_list;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> d;
  int grid_points = 2001;
  std::string csv_path;   // empty = no file output
  std::string json_path;
};

struct StudyRecord {
  int n = 0;
  int l = 0;
  double h = 0.0;
  int M = 0;
  int N = 0;
  double sup_error = 0.0;
  std::optional<double> bound;
  std::optional<double> inv_norm;
  double elapsed_ms = 0.0;
  bool failed = false;  // solver singularity; sup_error is meaningless
};

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

enum class RateAbscissa { sqrt_n, de_exponent };

struct insufficient_data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConvergenceReport {
  Method method = Method::se_nystrom;
  std::string problem;
  double alpha = 1.0, beta = 1.0, d = 1.0, mu = 1.0;
  std::vector<StudyRecord> records;
  std::optional<RateFit> fit;
  RateAbscissa abscissa = RateAbscissa::sqrt_n;
};

// Records below this sup error are dominated by round-off and excluded from
// rate fits.
inline constexpr double kRoundoffFloor = 1e-13;

ConvergenceReport run_study(const StudyConfig& config);
// Overload for problems not in the registry (used by tests).
ConvergenceReport run_study(const StudyConfig& config, const ProblemSpec& problem);

// Least squares of log(sup_error) against sqrt(n) or pi d n/arsinh(d n/mu).
// Throws insufficient_data_error with fewer than 3 usable records.
RateFit fit_rate(const ConvergenceReport& report, RateAbscissa abscissa);

void write_csv(const ConvergenceReport& report, std::ostream& out);
void write_json(const ConvergenceReport& report, std::ostream& out);

// ---------------------------------------------------------------------------
// Numerical verification of the inequalities the error analysis rests on.
// ---------------------------------------------------------------------------

struct LemmaCheck {
  std::string name;
  long long samples = 0;
  long long violations = 0;
  double worst_margin = 0.0;  // max relative (lhs - rhs)/rhs; <= 0 passes
  double worst_point[2] = {0.0, 0.0};  // sample coordinates at the worst margin
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;
  bool passed() const;
};

// Deterministic given the seed. strip_constant_scale multiplies the
// c_d-derived right-hand sides (a scale < 1 is the negative-control hook and
// must produce violations).
LemmaReport verify_lemmas(std::uint64_t seed, long long samples,
                          double strip_constant_scale = 1.0);

}  // namespace sincsolve
