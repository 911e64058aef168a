#include "sincsolve/approximation.hpp"

#include <cmath>
#include <stdexcept>

#include "sincsolve/special_functions.hpp"

namespace sincsolve {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_kind(const Mesh& mesh, TransformKind kind, const char* who) {
  if (mesh.kind != kind) {
    throw std::invalid_argument(std::string(who) + ": mesh has the wrong transform kind");
  }
}

void require_symmetric(const Mesh& mesh, const char* who) {
  if (mesh.M != mesh.N) {
    throw std::invalid_argument(std::string(who) + ": DE approximation needs M == N");
  }
}

// (q + p e^u)/(1 + e^u) written as q + (p - q) sigmoid(u). The difference
// form makes constant functions (p == q) blend to exactly q, so their node
// coefficients vanish identically.
double boundary_blend(double p, double q, double u) {
  return q + (p - q) * stable_sigmoid(u);
}

void check_bound_params(double c_growth, double mu, double d, const char* who) {
  if (!(c_growth > 0) || !std::isfinite(c_growth)) {
    throw std::domain_error(std::string(who) + ": growth constant must be positive");
  }
  if (!(mu > 0 && mu <= 1)) {
    throw std::domain_error(std::string(who) + ": mu must be in (0, 1]");
  }
  if (!(d > 0 && d < kPi / 2)) {
    throw std::domain_error(std::string(who) + ": d must be in (0, pi/2)");
  }
}

}  // namespace

Approximant build_se(const ScalarFunction& f, const Mesh& mesh) {
  require_kind(mesh, TransformKind::se, "build_se");
  Approximant a;
  a.mesh = mesh;
  a.coeffs.resize(mesh.size());
  for (int i = 0; i < mesh.size(); ++i) {
    a.coeffs[i] = f(se_forward(mesh.node_x(i)));
  }
  return a;
}

Approximant build_se_boundary(const ScalarFunction& f, double p_infinity,
                              double q_zero, const Mesh& mesh) {
  require_kind(mesh, TransformKind::se, "build_se_boundary");
  Approximant a;
  a.mesh = mesh;
  a.boundary_treated = true;
  a.value_at_infinity = p_infinity;
  a.value_at_zero = q_zero;
  a.coeffs.resize(mesh.size());
  for (int i = 0; i < mesh.size(); ++i) {
    const double x = mesh.node_x(i);
    a.coeffs[i] = f(se_forward(x)) - boundary_blend(p_infinity, q_zero, x);
  }
  return a;
}

Approximant build_de(const ScalarFunction& f, const Mesh& mesh) {
  require_kind(mesh, TransformKind::de, "build_de");
  require_symmetric(mesh, "build_de");
  Approximant a;
  a.mesh = mesh;
  a.coeffs.resize(mesh.size());
  for (int i = 0; i < mesh.size(); ++i) {
    a.coeffs[i] = f(de_forward(mesh.node_x(i)));
  }
  return a;
}

Approximant build_de_boundary(const ScalarFunction& f, double p_infinity,
                              double q_zero, const Mesh& mesh) {
  require_kind(mesh, TransformKind::de, "build_de_boundary");
  require_symmetric(mesh, "build_de_boundary");
  Approximant a;
  a.mesh = mesh;
  a.boundary_treated = true;
  a.value_at_infinity = p_infinity;
  a.value_at_zero = q_zero;
  a.coeffs.resize(mesh.size());
  for (int i = 0; i < mesh.size(); ++i) {
    const double x = mesh.node_x(i);
    const double u = kPi * std::sinh(x);
    a.coeffs[i] = f(de_forward(x)) - boundary_blend(p_infinity, q_zero, u);
  }
  return a;
}

double evaluate(const Approximant& a, double t) {
  if (std::isnan(t) || t < 0) {
    throw std::domain_error("evaluate: t must be >= 0");
  }
  // Exact boundary limits: every sinc term vanishes at the sentinels.
  if (t == 0.0) return a.boundary_treated ? a.value_at_zero : 0.0;
  if (std::isinf(t)) return a.boundary_treated ? a.value_at_infinity : 0.0;

  const double x = a.mesh.kind == TransformKind::se ? se_inverse(t) : de_inverse(t);
  double sum = 0.0;
  for (int i = 0; i < a.mesh.size(); ++i) {
    sum += a.coeffs[i] * sinc_basis(a.mesh.j_min() + i, a.mesh.h, x);
  }
  if (a.boundary_treated) {
    // q e^{-t} + p (1 - e^{-t}), cancellation-free for small t
    sum += a.value_at_zero -
           (a.value_at_infinity - a.value_at_zero) * std::expm1(-t);
  }
  return sum;
}

double de_strip_constant(double d) {
  if (!(d > 0 && d < kPi / 2)) {
    throw std::domain_error("de_strip_constant: d must be in (0, pi/2)");
  }
  return 1.0 + 1.0 / std::cos((kPi / 2) * std::sin(d));
}

double se_strip_constant(double d) {
  if (!(d > 0 && d < kPi)) {
    throw std::domain_error("se_strip_constant: d must be in (0, pi)");
  }
  return 1.0 + 1.0 / std::cos(d / 2);
}

double de_error_constant(double c_growth, double mu, double d) {
  check_bound_params(c_growth, mu, d, "de_error_constant");
  const double a1 = std::asinh(d / mu);
  const double cos_strip = std::cos((kPi / 2) * std::sin(d));
  const double discretization =
      2.0 / (kPi * d * (1.0 - std::exp(-2.0 * kPi * d / a1)) *
             std::pow(cos_strip, 2.0 * mu) * std::pow(std::cos(d), 1.0 + mu));
  const double truncation = std::exp(-kPi * d * (a1 - 1.0) / a1) /
                            (a1 * std::pow(1.0 + d / mu, (1.0 - mu) / 2.0));
  return 2.0 * c_growth / (mu * std::pow(kPi, 1.0 - mu)) *
         (discretization + truncation);
}

double de_error_bound(int n, double c_growth, double mu, double d) {
  if (n < 1) throw std::domain_error("de_error_bound: n must be >= 1");
  check_bound_params(c_growth, mu, d, "de_error_bound");
  return de_error_constant(c_growth, mu, d) *
         std::exp(-kPi * d * n / std::asinh(d * n / mu));
}

double de_discretization_bound(double h, double c_growth, double mu, double d) {
  if (!(h > 0)) throw std::domain_error("de_discretization_bound: h must be positive");
  check_bound_params(c_growth, mu, d, "de_discretization_bound");
  const double cos_strip = std::cos((kPi / 2) * std::sin(d));
  return 4.0 * c_growth * std::exp(-kPi * d / h) /
         (std::pow(kPi, 2.0 - mu) * d * mu * (1.0 - std::exp(-2.0 * kPi * d / h)) *
          std::pow(cos_strip, 2.0 * mu) * std::pow(std::cos(d), 1.0 + mu));
}

double de_truncation_bound(int n, double h, double c_growth, double mu) {
  if (n < 1) throw std::domain_error("de_truncation_bound: n must be >= 1");
  if (!(h > 0)) throw std::domain_error("de_truncation_bound: h must be positive");
  if (!(c_growth > 0) || !(mu > 0 && mu <= 1)) {
    throw std::domain_error("de_truncation_bound: bad growth parameters");
  }
  return 2.0 * c_growth * std::pow(kPi, mu - 1.0) *
         std::exp(-kPi * mu * std::sinh(n * h)) /
         (mu * h * std::pow(std::cosh(n * h), 1.0 - mu));
}

double de_growth_from_holder(double holder, double mu, double d) {
  check_bound_params(holder, mu, d, "de_growth_from_holder");
  const double cd = de_strip_constant(d);
  const double cos_strip = std::cos((kPi / 2) * std::sin(d));
  return holder * (std::pow(cd / std::log1p(cd), mu) + 1.0) /
         std::pow(cos_strip, 1.0 - mu);
}

double se_growth_from_holder(double holder, double alpha, double beta, double d) {
  if (!(holder > 0) || !std::isfinite(holder)) {
    throw std::domain_error("se_growth_from_holder: holder must be positive");
  }
  if (!(alpha > 0 && alpha <= 1) || !(beta > 0 && beta <= 1)) {
    throw std::domain_error("se_growth_from_holder: alpha, beta must be in (0, 1]");
  }
  if (!(d > 0 && d < kPi)) {
    throw std::domain_error("se_growth_from_holder: d must be in (0, pi)");
  }
  const double cd = se_strip_constant(d);
  const double log_cd = std::log1p(cd);
  const double cos_half = std::cos(d / 2);
  return holder * (std::pow((1.0 + log_cd) / log_cd * cd, alpha) /
                       std::pow(cos_half, 1.0 - alpha) +
                   1.0 / std::pow(cos_half, 1.0 - beta));
}

double exponent_scale(double x) {
  if (!(x > 0)) throw std::domain_error("exponent_scale: x must be positive");
  return x / std::asinh(x);
}

double truncation_scale(double x) {
  if (!(x > 0)) throw std::domain_error("truncation_scale: x must be positive");
  return std::asinh(x) * std::sqrt(1.0 + x * x) / x;
}

double truncation_envelope(double x) {
  if (!(x > 0)) throw std::domain_error("truncation_envelope: x must be positive");
  return (1.0 + x * x) * std::exp(-2.0 * kPi * x * (1.0 - 1.0 / std::asinh(x)));
}

}  // namespace sincsolve
