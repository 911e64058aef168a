#pragma once

#include <memory>
#include <vector>

namespace sincsolve {

// Sine integral Si(x) = int_0^x sin(t)/t dt.
// Maclaurin series for |x| <= 4, auxiliary-function form
// Si(x) = pi/2 - f(x)cos(x) - g(x)sin(x) for |x| > 4.
// Absolute error below 1e-14 over the real line.
double sine_integral(double x);

// Inverse hyperbolic sine, log(x + sqrt(1 + x^2)).
double arsinh(double x);

// 1/(1 + e^{-u}), saturating without overflow for any u including +-inf.
double stable_sigmoid(double u);

// log(1 + e^u) without overflow. Limits: +inf -> +inf, -inf -> 0.
double log1p_exp(double u);

// Si(pi*k) for k = 0..max_k. Grows a process-wide cache; the returned
// snapshot is immutable and safe to read from any thread.
std::shared_ptr<const std::vector<double>> sine_integral_pi_table(int max_k);

}  // namespace sincsolve
