#include "sincsolve/basis.hpp"

#include <cmath>
#include <stdexcept>

#include "sincsolve/special_functions.hpp"

namespace sincsolve {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_positive(double v, const char* who, const char* what) {
  if (!(v > 0) || !std::isfinite(v)) {
    throw std::domain_error(std::string(who) + ": " + what + " must be positive");
  }
}

void require_positive_n(int n, const char* who) {
  if (n < 1) {
    throw std::domain_error(std::string(who) + ": n must be >= 1");
  }
}

// Smallest k with sinh(k h) >= ratio * sinh(n h), i.e. the exact integer
// ceiling of arsinh(ratio sinh(nh))/h. Starting below the rounded value and
// re-checking the defining inequality keeps ties (ratio = 1) at exactly n.
int ceil_de_index(double ratio, int n, double h) {
  const double target = std::asinh(ratio * std::sinh(n * h)) / h;
  long long k = static_cast<long long>(std::floor(target)) - 1;
  if (k < 0) k = 0;
  while (std::sinh(static_cast<double>(k) * h) < ratio * std::sinh(n * h)) ++k;
  return static_cast<int>(k);
}

// Smallest k with k*denom >= num*n (exact ceiling of num*n/denom).
int ceil_ratio_index(double num, double denom, int n) {
  const double target = num * n / denom;
  long long k = static_cast<long long>(std::floor(target)) - 1;
  if (k < 0) k = 0;
  while (static_cast<double>(k) * denom < num * static_cast<double>(n)) ++k;
  return static_cast<int>(k);
}

}  // namespace

double sinc_basis(int j, double h, double x) {
  require_positive(h, "sinc_basis", "h");
  if (std::isinf(x)) return 0.0;
  const double u = kPi * (x - j * h) / h;
  if (std::abs(u) < 1e-6) {
    // series around the removable singularity
    const double u2 = u * u;
    return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
  }
  return std::sin(u) / u;
}

double indef_basis(int j, double h, double x) {
  require_positive(h, "indef_basis", "h");
  if (std::isinf(x)) return x > 0 ? h : 0.0;
  return h * (0.5 + sine_integral(kPi * (x - j * h) / h) / kPi);
}

Mesh se_mesh(double alpha, double beta, double d, int n) {
  require_positive(alpha, "se_mesh", "alpha");
  require_positive(beta, "se_mesh", "beta");
  require_positive(d, "se_mesh", "d");
  if (!(d < kPi)) throw std::domain_error("se_mesh: d must be < pi");
  require_positive_n(n, "se_mesh");

  Mesh mesh;
  mesh.kind = TransformKind::se;
  mesh.n = n;
  const double mu = std::min(alpha, beta);
  mesh.h = std::sqrt(kPi * d / (mu * n));
  if (alpha <= beta) {
    mesh.M = n;
    mesh.N = ceil_ratio_index(alpha, beta, n);
  } else {
    mesh.N = n;
    mesh.M = ceil_ratio_index(beta, alpha, n);
  }
  return mesh;
}

Mesh de_mesh_symmetric(double mu, double d, int n) {
  require_positive(mu, "de_mesh_symmetric", "mu");
  if (!(mu <= 1)) throw std::domain_error("de_mesh_symmetric: mu must be <= 1");
  require_positive(d, "de_mesh_symmetric", "d");
  if (!(d < kPi / 2)) throw std::domain_error("de_mesh_symmetric: d must be < pi/2");
  require_positive_n(n, "de_mesh_symmetric");

  Mesh mesh;
  mesh.kind = TransformKind::de;
  mesh.n = n;
  mesh.h = std::asinh(d * n / mu) / n;
  mesh.M = mesh.N = n;
  return mesh;
}

Mesh de_mesh_indef(double alpha, double beta, double d, int n) {
  require_positive(alpha, "de_mesh_indef", "alpha");
  if (!(alpha <= 1)) throw std::domain_error("de_mesh_indef: alpha must be <= 1");
  require_positive(beta, "de_mesh_indef", "beta");
  require_positive(d, "de_mesh_indef", "d");
  if (!(d < kPi / 2)) throw std::domain_error("de_mesh_indef: d must be < pi/2");
  require_positive_n(n, "de_mesh_indef");

  Mesh mesh;
  mesh.kind = TransformKind::de;
  mesh.n = n;
  const double mu = std::min(alpha, beta);
  mesh.h = std::asinh(d * n / mu) / n;
  if (alpha <= beta) {
    mesh.M = n;
    mesh.N = ceil_de_index(alpha / beta, n, mesh.h);
  } else {
    mesh.N = n;
    mesh.M = ceil_de_index(beta / alpha, n, mesh.h);
  }
  return mesh;
}

double lebesgue_sum(int n, double h, double x) {
  if (n < 0) throw std::domain_error("lebesgue_sum: n must be >= 0");
  require_positive(h, "lebesgue_sum", "h");
  double sum = 0.0;
  for (int j = -n; j <= n; ++j) {
    sum += std::abs(sinc_basis(j, h, x));
  }
  return sum;
}

}  // namespace sincsolve
