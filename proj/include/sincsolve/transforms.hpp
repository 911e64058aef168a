#pragma once

#include <complex>

namespace sincsolve {

enum class TransformKind { se, de };

// Single-exponential map t = log(1 + e^x), a bijection from R onto (0, inf).
double se_forward(double x);
double se_derivative(double x);   // e^x / (1 + e^x)
// Inverse map x = log(e^t - 1). t = 0 maps to -inf, t = +inf to +inf.
// Throws std::domain_error for t < 0.
double se_inverse(double t);

// Double-exponential map t = log(1 + e^{pi sinh x}).
double de_forward(double x);
double de_derivative(double x);   // pi cosh(x) * sigmoid(pi sinh x)
double de_inverse(double t);      // arsinh(log(e^t - 1)/pi), same boundary conventions

// Strip evaluations with the principal logarithm. Valid for |Im zeta| < pi
// (SE) resp. |Im zeta| < pi/2 (DE); arguments outside the strip, or DE
// points where 1 + e^{pi sinh zeta} lands on the branch cut, raise
// std::domain_error.
std::complex<double> se_forward_complex(std::complex<double> zeta);
std::complex<double> de_forward_complex(std::complex<double> zeta);

}  // namespace sincsolve
