#include <cmath>
#include <complex>
#include <limits>
#include <random>

#include "sincsolve/study.hpp"

namespace sincsolve {

namespace {

constexpr double kPi = 3.14159265358979323846;
// Slack for comparisons whose exact form admits equality (the inequalities
// are proven non-strict; rounding must not turn equality into a violation).
constexpr double kRelTolerance = 1e-12;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // uniform in [0, 1)
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }
  int pick(std::initializer_list<int> values) {
    const auto idx = static_cast<std::size_t>(unit() * values.size());
    return values.begin()[std::min(idx, values.size() - 1)];
  }

 private:
  std::mt19937_64 rng_;
};

class Check {
 public:
  explicit Check(std::string name) {
    result_.name = std::move(name);
    result_.worst_margin = -std::numeric_limits<double>::infinity();
  }

  void compare(double lhs, double rhs, double px, double py) {
    ++result_.samples;
    const double margin = (lhs - rhs) / std::max(std::abs(rhs), 1e-300);
    if (margin > result_.worst_margin) {
      result_.worst_margin = margin;
      result_.worst_point[0] = px;
      result_.worst_point[1] = py;
    }
    if (margin > kRelTolerance) ++result_.violations;
  }

  LemmaCheck result() const { return result_; }

 private:
  LemmaCheck result_;
};

// Lebesgue bound for the truncated cardinal expansion:
// sum |S(j,h)(x)| <= (2/pi)(3/2 + gamma + log(n+1)).
LemmaCheck check_lebesgue(Sampler& rng, long long samples) {
  constexpr double kEulerGamma = 0.5772156649015329;
  Check check("lebesgue-sum");
  for (long long s = 0; s < samples; ++s) {
    const int n = rng.pick({1, 10, 100, 1000});
    const double h = rng.uniform(1e-3, 2.0);
    const double x = rng.uniform(-(n + 2) * h, (n + 2) * h);
    check.compare(lebesgue_sum(n, h, x),
                  (2.0 / kPi) * (1.5 + kEulerGamma + std::log(n + 1.0)), n, x);
  }
  return check.result();
}

LemmaCheck check_sinc_bounded(Sampler& rng, long long samples) {
  Check check("sinc-bounded-by-one");
  for (long long s = 0; s < samples; ++s) {
    const int j = static_cast<int>(rng.uniform(-50.0, 51.0));
    const double h = rng.uniform(1e-3, 2.0);
    const double x = rng.uniform(-120.0, 120.0);
    check.compare(std::abs(sinc_basis(j, h, x)), 1.0, j, x);
  }
  return check.result();
}

// |log(1 + e^{pi sinh(x+iy)})| against the cosh envelope, |y| < pi/2.
LemmaCheck check_de_log_envelope(Sampler& rng, long long samples) {
  Check check("de-strip-log-envelope");
  for (long long s = 0; s < samples; ++s) {
    const double x = rng.uniform(-3.0, 3.0);
    const double y = rng.uniform(-1.0, 1.0) * (kPi / 2 - 1e-4);
    std::complex<double> value;
    try {
      value = de_forward_complex({x, y});
    } catch (const std::domain_error&) {
      continue;  // branch-cut point; skip (count stays accurate via samples)
    }
    const double rhs = kPi * std::cosh(x) /
                       ((1.0 + std::exp(-kPi * std::sinh(x) * std::cos(y))) *
                        std::cos((kPi / 2) * std::sin(y)) * std::cos(y));
    check.compare(std::abs(value), rhs, x, y);
  }
  return check.result();
}

// |1/(1 +- e^{pi sinh zeta})| bounds on the DE strip.
LemmaCheck check_de_exp_bounds(Sampler& rng, long long samples) {
  Check check("de-strip-reciprocal");
  for (long long s = 0; s < samples; ++s) {
    const double x = rng.uniform(-3.0, 3.0);
    const double y = rng.uniform(-1.0, 1.0) * (kPi / 2 - 1e-4);
    const std::complex<double> w = kPi * std::sinh(std::complex<double>(x, y));
    const double cos_fac = std::cos((kPi / 2) * std::sin(y));
    const double re = kPi * std::sinh(x) * std::cos(y);
    check.compare(std::abs(1.0 / (1.0 + std::exp(w))),
                  1.0 / ((1.0 + std::exp(re)) * cos_fac), x, y);
    check.compare(std::abs(1.0 / (1.0 + std::exp(-w))),
                  1.0 / ((1.0 + std::exp(-re)) * cos_fac), x, y);
  }
  return check.result();
}

// SE analogue: |1/(1 +- e^zeta)| <= 1/((1 + e^{+-x}) cos(y/2)), |y| < pi.
LemmaCheck check_se_exp_bounds(Sampler& rng, long long samples) {
  Check check("se-strip-reciprocal");
  for (long long s = 0; s < samples; ++s) {
    const double x = rng.uniform(-30.0, 30.0);
    const double y = rng.uniform(-1.0, 1.0) * (kPi - 1e-4);
    const std::complex<double> zeta(x, y);
    const double cos_fac = std::cos(y / 2);
    check.compare(std::abs(1.0 / (1.0 + std::exp(zeta))),
                  1.0 / ((1.0 + std::exp(x)) * cos_fac), x, y);
    check.compare(std::abs(1.0 / (1.0 + std::exp(-zeta))),
                  1.0 / ((1.0 + std::exp(-x)) * cos_fac), x, y);
  }
  return check.result();
}

// |1 - e^{-z}| <= (c_d/log(1+c_d)) |z| for z in the DE strip image.
LemmaCheck check_de_expm_linear(Sampler& rng, long long samples, double scale) {
  Check check("de-expm-linear-in-z");
  for (long long s = 0; s < samples; ++s) {
    const double d = rng.uniform(0.05, kPi / 2 - 0.05);
    const double x = rng.uniform(-3.0, 3.0);
    const double y = rng.uniform(-1.0, 1.0) * d * 0.9999;
    std::complex<double> z;
    try {
      z = de_forward_complex({x, y});
    } catch (const std::domain_error&) {
      continue;
    }
    const double cd = de_strip_constant(d);
    check.compare(std::abs(1.0 - std::exp(-z)),
                  scale * cd / std::log1p(cd) * std::abs(z), x, y);
  }
  return check.result();
}

// SE analogue with the z/(1+z) weight.
LemmaCheck check_se_expm_linear(Sampler& rng, long long samples, double scale) {
  Check check("se-expm-linear-in-z");
  for (long long s = 0; s < samples; ++s) {
    const double d = rng.uniform(0.05, kPi - 0.05);
    const double x = rng.uniform(-30.0, 30.0);
    const double y = rng.uniform(-1.0, 1.0) * d * 0.9999;
    const std::complex<double> z = se_forward_complex({x, y});
    const double cd = se_strip_constant(d);
    const double factor = (1.0 + std::log1p(cd)) / std::log1p(cd) * cd;
    check.compare(std::abs(1.0 - std::exp(-z)),
                  scale * factor * std::abs(z / (1.0 + z)), x, y);
  }
  return check.result();
}

LemmaCheck check_monotone(Sampler& rng, long long samples, const char* name,
                          double (*fn)(double), bool nondecreasing) {
  Check check(name);
  for (long long s = 0; s < samples; ++s) {
    double x1 = rng.log_uniform(1e-6, 1e3);
    double x2 = rng.log_uniform(1e-6, 1e3);
    if (x1 > x2) std::swap(x1, x2);
    const double lo = fn(x1), hi = fn(x2);
    if (nondecreasing) {
      check.compare(lo, hi, x1, x2);
    } else {
      check.compare(hi, lo, x1, x2);
    }
  }
  return check.result();
}

}  // namespace

bool LemmaReport::passed() const {
  for (const LemmaCheck& c : checks) {
    if (c.violations > 0) return false;
  }
  return true;
}

LemmaReport verify_lemmas(std::uint64_t seed, long long samples,
                          double strip_constant_scale) {
  if (samples < 0) throw std::invalid_argument("verify_lemmas: samples must be >= 0");
  Sampler rng(seed);
  LemmaReport report;
  report.checks.push_back(check_sinc_bounded(rng, samples));
  report.checks.push_back(check_lebesgue(rng, samples));
  report.checks.push_back(check_de_log_envelope(rng, samples));
  report.checks.push_back(check_de_exp_bounds(rng, samples));
  report.checks.push_back(check_se_exp_bounds(rng, samples));
  report.checks.push_back(check_de_expm_linear(rng, samples, strip_constant_scale));
  report.checks.push_back(check_se_expm_linear(rng, samples, strip_constant_scale));
  report.checks.push_back(check_monotone(rng, samples, "monotone-exponent-scale",
                                         &exponent_scale, true));
  report.checks.push_back(check_monotone(rng, samples, "monotone-truncation-scale",
                                         &truncation_scale, true));
  report.checks.push_back(check_monotone(rng, samples,
                                         "monotone-truncation-envelope",
                                         &truncation_envelope, false));
  return report;
}

}  // namespace sincsolve
