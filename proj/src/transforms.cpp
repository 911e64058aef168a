#include "sincsolve/transforms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sincsolve/special_functions.hpp"

namespace sincsolve {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kInf = std::numeric_limits<double>::infinity();

void require_nonnegative(double t, const char* who) {
  if (std::isnan(t) || t < 0) {
    throw std::domain_error(std::string(who) + ": t must be >= 0");
  }
}

// log(1 + z) keeping precision for small |z|.
std::complex<double> clog1p(std::complex<double> z) {
  const double x = z.real();
  const double y = z.imag();
  // |1+z|^2 - 1 = 2x + x^2 + y^2
  return {0.5 * std::log1p(2.0 * x + x * x + y * y), std::atan2(y, 1.0 + x)};
}

// Principal log(1 + e^w). Rejects arguments on the branch cut.
std::complex<double> log1p_exp_complex(std::complex<double> w) {
  if (w.real() > 36.0) {
    // 1 + e^w = e^w (1 + e^{-w}) with |e^{-w}| < 3e-16. The principal branch
    // needs Im reduced into (-pi, pi]; exp itself handles the periodicity.
    const std::complex<double> base(w.real(), std::remainder(w.imag(), 2 * kPi));
    return base + clog1p(std::exp(-w));
  }
  const std::complex<double> ew = std::exp(w);
  const std::complex<double> zp1 = 1.0 + ew;
  if (zp1.imag() == 0.0 && zp1.real() <= 0.0) {
    throw std::domain_error("log1p_exp_complex: argument on the branch cut");
  }
  return clog1p(ew);
}

}  // namespace

double se_forward(double x) { return log1p_exp(x); }

double se_derivative(double x) { return stable_sigmoid(x); }

double se_inverse(double t) {
  require_nonnegative(t, "se_inverse");
  if (t == 0.0) return -kInf;
  if (std::isinf(t)) return kInf;
  if (t > 36.0) return t + std::log1p(-std::exp(-t));  // avoids expm1 overflow
  return std::log(std::expm1(t));
}

double de_forward(double x) {
  if (std::isinf(x)) return x > 0 ? kInf : 0.0;
  return log1p_exp(kPi * std::sinh(x));  // saturates instead of overflowing
}

double de_derivative(double x) {
  const double u = kPi * std::sinh(x);
  if (std::isinf(u)) return u > 0 ? kInf : 0.0;
  return kPi * std::cosh(x) * stable_sigmoid(u);
}

double de_inverse(double t) {
  require_nonnegative(t, "de_inverse");
  if (t == 0.0) return -kInf;
  if (std::isinf(t)) return kInf;
  return std::asinh(se_inverse(t) / kPi);
}

std::complex<double> se_forward_complex(std::complex<double> zeta) {
  if (!(std::abs(zeta.imag()) < kPi)) {
    throw std::domain_error("se_forward_complex: |Im zeta| must be < pi");
  }
  return log1p_exp_complex(zeta);
}

std::complex<double> de_forward_complex(std::complex<double> zeta) {
  if (!(std::abs(zeta.imag()) < kPi / 2)) {
    throw std::domain_error("de_forward_complex: |Im zeta| must be < pi/2");
  }
  return log1p_exp_complex(kPi * std::sinh(zeta));
}

}  // namespace sincsolve
