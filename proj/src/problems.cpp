#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sincsolve/study.hpp"

namespace sincsolve {

namespace {

constexpr double kPi = 3.14159265358979323846;

Eigen::VectorXd vec1(double a) {
  Eigen::VectorXd v(1);
  v << a;
  return v;
}

Eigen::VectorXd vec2(double a, double b) {
  Eigen::VectorXd v(2);
  v << a, b;
  return v;
}

// Default analyticity certifications for the built-in problems: solutions and
// forcings are entire with simple exponential decay, so alpha = beta = 1 and
// any strip width below the transform's own limit is admissible. d_SE = pi/2
// and d_DE = 1 are conservative defaults.
TransformParams default_se() { return {1.0, 1.0, kPi / 2}; }
TransformParams default_de() { return {1.0, 1.0, 1.0}; }

std::map<std::string, ProblemSpec> make_problems() {
  std::map<std::string, ProblemSpec> reg;

  {
    ProblemSpec p;
    p.name = "decay1";
    p.dimension = 1;
    p.coefficient = [](double) { return Eigen::MatrixXd::Constant(1, 1, -1.0); };
    p.forcing = [](double) { return Eigen::VectorXd::Zero(1); };
    p.initial = vec1(1.0);
    p.se = default_se();
    p.de = default_de();
    p.exact = [](double t) { return vec1(std::exp(-t)); };
    reg.emplace(p.name, std::move(p));
  }
  {
    ProblemSpec p;
    p.name = "forced1";
    p.dimension = 1;
    p.coefficient = [](double) { return Eigen::MatrixXd::Constant(1, 1, -2.0); };
    p.forcing = [](double t) { return vec1(std::exp(-t)); };
    p.initial = vec1(0.0);
    p.se = default_se();
    p.de = default_de();
    p.exact = [](double t) { return vec1(std::exp(-t) - std::exp(-2.0 * t)); };
    reg.emplace(p.name, std::move(p));
  }
  {
    // Symmetric coupling with eigenvalues -1 and -3; the exact solution is
    // the matrix exponential applied to r = (1, 0).
    ProblemSpec p;
    p.name = "coupled2";
    p.dimension = 2;
    p.coefficient = [](double) {
      Eigen::MatrixXd k(2, 2);
      k << -2.0, 1.0, 1.0, -2.0;
      return k;
    };
    p.forcing = [](double) { return Eigen::VectorXd::Zero(2); };
    p.initial = vec2(1.0, 0.0);
    p.se = default_se();
    p.de = default_de();
    p.exact = [](double t) {
      const double a = std::exp(-t), b = std::exp(-3.0 * t);
      return vec2((a + b) / 2, (a - b) / 2);
    };
    reg.emplace(p.name, std::move(p));
  }
  {
    // Triangular coupling with eigenvalues -1 and -500.
    ProblemSpec p;
    p.name = "stiff2";
    p.dimension = 2;
    p.coefficient = [](double) {
      Eigen::MatrixXd k(2, 2);
      k << -1.0, 0.5, 0.0, -500.0;
      return k;
    };
    p.forcing = [](double) { return Eigen::VectorXd::Zero(2); };
    p.initial = vec2(1.0, 1.0);
    p.se = default_se();
    p.de = default_de();
    p.exact = [](double t) {
      const double a = std::exp(-t), b = std::exp(-500.0 * t);
      return vec2(a + (a - b) / 998.0, b);
    };
    reg.emplace(p.name, std::move(p));
  }
  return reg;
}

std::map<std::string, ApproxTarget> make_targets() {
  std::map<std::string, ApproxTarget> reg;

  {
    // |z e^{-z}| = |z| |e^{-z}| everywhere, so the DE growth bound holds
    // with constant exactly 1 and mu = 1 on any admissible strip.
    ApproxTarget t;
    t.name = "texp";
    t.f = [](double s) { return std::isinf(s) ? 0.0 : s * std::exp(-s); };
    t.se = {1.0, 0.75, kPi / 2};  // |t e^{-t}| <= C |e^{-z}|^0.75 on the strip
    t.de = {1.0, 1.0, 1.0};
    t.de_growth_constant = 1.0;
    t.description = "t e^{-t}, vanishing at both ends";
    reg.emplace(t.name, std::move(t));
  }
  {
    // Boundary values p = 0, q = 1. On the DE strip image
    // |e^{-z} - 1| <= (c_d/log(1+c_d)) |z|, so H = c_d/log(1+c_d) (>= 1)
    // certifies both Hoelder conditions with mu = 1.
    ApproxTarget t;
    t.name = "expdecay";
    t.f = [](double s) { return std::exp(-s); };
    t.q_zero = 1.0;
    t.boundary = true;
    t.antiderivative = [](double s) { return -std::expm1(-s); };  // 1 - e^{-t}
    t.se = {1.0, 1.0, kPi / 2};
    t.de = {1.0, 1.0, 1.0};
    t.de_holder = [](double d) {
      const double cd = de_strip_constant(d);
      return std::max(1.0, cd / std::log1p(cd));
    };
    t.description = "e^{-t}, boundary values q=1, p=0";
    reg.emplace(t.name, std::move(t));
  }
  {
    // 2e^{-t} - e^{-2t}: p = 0, q = 1, and the boundary treatment is not
    // exact, so this target genuinely exercises it. With C_d = c_d/log(1+c_d)
    // and |e^{-z}| <= c_d - 1:
    //   |f - 1| = |2(e^{-z}-1) - (e^{-2z}-1)| <= C_d (2 + c_d) |z|,
    //   |f|     = |e^{-z}| |2 - e^{-z}|       <= (1 + c_d) |e^{-z}|,
    // so H = max(C_d (2 + c_d), 1 + c_d) with mu = 1.
    ApproxTarget t;
    t.name = "mix2";
    t.f = [](double s) { return 2.0 * std::exp(-s) - std::exp(-2.0 * s); };
    t.q_zero = 1.0;
    t.boundary = true;
    t.antiderivative = [](double s) {
      return -2.0 * std::expm1(-s) + 0.5 * std::expm1(-2.0 * s);
    };
    t.se = {1.0, 1.0, kPi / 2};
    t.de = {1.0, 1.0, 1.0};
    t.de_holder = [](double d) {
      const double cd = de_strip_constant(d);
      const double big_cd = cd / std::log1p(cd);
      return std::max(big_cd * (2.0 + cd), 1.0 + cd);
    };
    t.description = "2e^{-t} - e^{-2t}, boundary values q=1, p=0";
    reg.emplace(t.name, std::move(t));
  }
  return reg;
}

template <typename Map>
const typename Map::mapped_type& find_in(const Map& reg, const std::string& name,
                                         const char* what) {
  auto it = reg.find(name);
  if (it == reg.end()) {
    std::ostringstream msg;
    msg << "unknown " << what << " '" << name << "'; available:";
    for (const auto& [key, value] : reg) msg << ' ' << key;
    throw std::invalid_argument(msg.str());
  }
  return it->second;
}

}  // namespace

const std::map<std::string, ProblemSpec>& builtin_problems() {
  static const std::map<std::string, ProblemSpec> reg = make_problems();
  return reg;
}

const ProblemSpec& find_problem(const std::string& name) {
  return find_in(builtin_problems(), name, "problem");
}

const std::map<std::string, ApproxTarget>& builtin_targets() {
  static const std::map<std::string, ApproxTarget> reg = make_targets();
  return reg;
}

const ApproxTarget& find_target(const std::string& name) {
  return find_in(builtin_targets(), name, "target");
}

}  // namespace sincsolve
