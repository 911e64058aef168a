#pragma once

#include "sincsolve/transforms.hpp"

namespace sincsolve {

// Node set {jh : j = -M..N} together with the variable transformation it
// belongs to. n is the governing integer the selection rules were fed.
struct Mesh {
  double h = 1.0;
  int M = 0;  // left truncation index
  int N = 0;  // right truncation index
  TransformKind kind = TransformKind::se;
  int n = 1;

  int size() const { return M + N + 1; }
  int j_min() const { return -M; }
  int j_max() const { return N; }
  double node_x(int i) const { return (i - M) * h; }  // i = 0..size()-1
};

// S(j,h)(x) = sin[pi(x - jh)/h] / (pi(x - jh)/h). Sentinels +-inf give 0.
double sinc_basis(int j, double h, double x);

// J(j,h)(x) = h{1/2 + Si(pi(x - jh)/h)/pi}. Sentinels: -inf -> 0, +inf -> h.
double indef_basis(int j, double h, double x);

// Mesh selection for the SE transform: h = sqrt(pi d/(mu n)) with
// mu = min(alpha, beta), and the truncation indices balanced so the slower
// decay side keeps n points.
Mesh se_mesh(double alpha, double beta, double d, int n);

// Symmetric DE mesh: M = N = n, h = arsinh(d n/mu)/n. Requires 0 < mu <= 1,
// 0 < d < pi/2.
Mesh de_mesh_symmetric(double mu, double d, int n);

// DE mesh for indefinite integration: h as in the symmetric rule with
// mu = min(alpha, beta); the opposite side index solves
// sinh(k h) >= (alpha/beta) sinh(n h). Requires 0 < alpha <= 1.
Mesh de_mesh_indef(double alpha, double beta, double d, int n);

// sum_{j=-n}^{n} |S(j,h)(x)|.
double lebesgue_sum(int n, double h, double x);

}  // namespace sincsolve
