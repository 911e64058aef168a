#pragma once

#include <functional>
#include <vector>

#include "sincsolve/basis.hpp"

namespace sincsolve {

using ScalarFunction = std::function<double(double)>;

// Node coefficients of a (possibly boundary-treated) Sinc expansion on
// (0, inf). For boundary-treated approximants the blend
// q e^{-t} + p (1 - e^{-t}) is added on evaluation, with q the value at
// t -> 0 and p the value at t -> inf.
struct Approximant {
  Mesh mesh;
  std::vector<double> coeffs;        // one per node, j = -M..N
  double value_at_infinity = 0.0;    // p
  double value_at_zero = 0.0;        // q
  bool boundary_treated = false;
};

// coeffs[j] = f(psi(jh)). Requires an SE mesh.
Approximant build_se(const ScalarFunction& f, const Mesh& mesh);

// coeffs[j] = f(psi(jh)) - (q + p e^{jh})/(1 + e^{jh}). The caller supplies
// the boundary values p = lim_{t->inf} f, q = lim_{t->0} f.
Approximant build_se_boundary(const ScalarFunction& f, double p_infinity,
                              double q_zero, const Mesh& mesh);

// coeffs[j] = f(phi(jh)). Requires a symmetric DE mesh (M == N).
Approximant build_de(const ScalarFunction& f, const Mesh& mesh);

// DE analogue of build_se_boundary with weights at pi sinh(jh).
Approximant build_de_boundary(const ScalarFunction& f, double p_infinity,
                              double q_zero, const Mesh& mesh);

// Evaluates the expansion at t >= 0 (t = 0 and t = +inf give the exact
// boundary limits). Throws std::domain_error for t < 0.
double evaluate(const Approximant& a, double t);

// ---------------------------------------------------------------------------
// Error-bound evaluators for the DE approximation. All bounds are outright
// upper bounds on the sup error over (0, inf) for a function satisfying
// |f(z)| <= c_growth |z|^mu |e^{-z}|^mu on the image of the width-d strip,
// with the symmetric DE mesh.
// ---------------------------------------------------------------------------

// c_d = 1 + 1/cos((pi/2) sin d), 0 < d < pi/2.
double de_strip_constant(double d);
// Analogue on the SE strip: 1 + 1/cos(d/2), 0 < d < pi.
double se_strip_constant(double d);

// The explicit constant multiplying e^{-pi d n / arsinh(d n/mu)}.
double de_error_constant(double c_growth, double mu, double d);

// de_error_constant * e^{-pi d n / arsinh(d n/mu)}.
double de_error_bound(int n, double c_growth, double mu, double d);

// The two components the constant is assembled from, exposed so the
// combination can be cross-checked numerically: the discretization part as a
// function of the step size, and the tail truncation part.
double de_discretization_bound(double h, double c_growth, double mu, double d);
double de_truncation_bound(int n, double h, double c_growth, double mu);

// Effective growth constant certified by Hoelder-type boundary conditions
// |f(z) - q| <= holder |z|^mu and |f(z) - p| <= holder |e^{-z}|^mu on the DE
// strip image. Feeding the result to de_error_bound bounds the
// boundary-treated DE approximation error.
double de_growth_from_holder(double holder, double mu, double d);

// SE analogue for |f(z) - q| <= holder |z/(1+z)|^alpha,
// |f(z) - p| <= holder |e^{-z}|^beta with alpha, beta <= 1, 0 < d < pi.
double se_growth_from_holder(double holder, double alpha, double beta,
                             double d);

// Monotone factors used when collapsing the step-size relation into the
// n-explicit bound; exposed for the monotonicity property checks.
double exponent_scale(double x);       // x / arsinh(x), nondecreasing
double truncation_scale(double x);     // arsinh(x) sqrt(1+x^2)/x, nondecreasing
double truncation_envelope(double x);  // (1+x^2) e^{-2 pi x (1 - 1/arsinh x)}, nonincreasing

}  // namespace sincsolve
