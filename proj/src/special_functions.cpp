#include "sincsolve/special_functions.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace sincsolve {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Chebyshev-Pade approximations of the auxiliary functions in
// Si(x) = pi/2 - f(x)cos(x) - g(x)sin(x), valid for x > 4 with relative
// error below 1e-16. The coefficient sets are the published ones listed on
// the trigonometric-integral page of Wikipedia (computed by M. Jarvis).
double aux_f(double x) {
  const double y = 1.0 / (x * x);
  const double num =
      1. + y * (7.44437068161936700618e2 +
           y * (1.96396372895146869801e5 +
            y * (2.37750310125431834034e7 +
             y * (1.43073403821274636888e9 +
              y * (4.33736238870432522765e10 +
               y * (6.40533830574022022911e11 +
                y * (4.20968180571076940208e12 +
                 y * (1.00795182980368574617e13 +
                  y * (4.94816688199951963482e12 +
                   y * (-4.94701168645415959931e11))))))))));
  const double den =
      1. + y * (7.46437068161927678031e2 +
           y * (1.97865247031583951450e5 +
            y * (2.41535670165126845144e7 +
             y * (1.47478952192985464958e9 +
              y * (4.58595115847765779830e10 +
               y * (7.08501308149515401563e11 +
                y * (5.06084464593475076774e12 +
                 y * (1.43468549171581016479e13 +
                  y * (1.11535493509914254097e13)))))))));
  return num / (x * den);
}

double aux_g(double x) {
  const double y = 1.0 / (x * x);
  const double num =
      1. + y * (8.1359520115168615e2 +
           y * (2.35239181626478200e5 +
            y * (3.12557570795778731e7 +
             y * (2.06297595146763354e9 +
              y * (6.83052205423625007e10 +
               y * (1.09049528450362786e12 +
                y * (7.57664583257834349e12 +
                 y * (1.81004487464664575e13 +
                  y * (6.43291613143049485e12 +
                   y * (-1.36517137670871689e12))))))))));
  const double den =
      1. + y * (8.19595201151451564e2 +
           y * (2.40036752835578777e5 +
            y * (3.26026661647090822e7 +
             y * (2.23355543278099360e9 +
              y * (7.87465017341829930e10 +
               y * (1.39866710696414565e12 +
                y * (1.17164723371736605e13 +
                 y * (4.01839087307656620e13 +
                  y * (3.99653257887490811e13)))))))));
  return y * num / den;
}

// Maclaurin series sum_k (-1)^k x^{2k+1} / ((2k+1)(2k+1)!), terminated at
// relative term below 1e-17. Converges in < 25 terms for x <= 4.
double si_series(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int k = 1; k < 64; ++k) {
    const double tk = 2.0 * k;
    term *= -x2 * (tk - 1.0) / ((tk + 1.0) * (tk + 1.0) * tk);
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

double sine_integral(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("sine_integral: argument must be finite");
  }
  const double ax = std::abs(x);
  double r;
  if (ax <= 4.0) {
    r = si_series(ax);
  } else {
    r = kPi / 2 - aux_f(ax) * std::cos(ax) - aux_g(ax) * std::sin(ax);
  }
  return x < 0 ? -r : r;
}

double arsinh(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("arsinh: argument must be finite");
  }
  return std::asinh(x);
}

double stable_sigmoid(double u) {
  if (u >= 0) {
    return 1.0 / (1.0 + std::exp(-u));  // exp(-u) <= 1, no overflow
  }
  const double e = std::exp(u);
  return e / (1.0 + e);
}

double log1p_exp(double u) {
  if (std::isinf(u)) return u > 0 ? u : 0.0;
  if (u > 0) return u + std::log1p(std::exp(-u));
  return std::log1p(std::exp(u));
}

std::shared_ptr<const std::vector<double>> sine_integral_pi_table(int max_k) {
  if (max_k < 0) {
    throw std::domain_error("sine_integral_pi_table: max_k must be >= 0");
  }
  static std::mutex mutex;
  static std::shared_ptr<const std::vector<double>> cache =
      std::make_shared<const std::vector<double>>();

  std::lock_guard<std::mutex> lock(mutex);
  if (static_cast<int>(cache->size()) <= max_k) {
    // Copy-on-grow so snapshots handed out earlier stay valid.
    auto grown = std::make_shared<std::vector<double>>(*cache);
    grown->reserve(max_k + 1);
    for (int k = static_cast<int>(grown->size()); k <= max_k; ++k) {
      grown->push_back(sine_integral(kPi * k));
    }
    cache = std::move(grown);
  }
  return cache;
}

}  // namespace sincsolve
