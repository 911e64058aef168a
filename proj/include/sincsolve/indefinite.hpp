#pragma once

#include <vector>

#include "sincsolve/approximation.hpp"
#include "sincsolve/basis.hpp"

namespace sincsolve {

// Discrete indefinite-integration operator: int_0^t f approximated by
// sum_j w_j J(j,h)(x) with w_j = f(transform(jh)) * transform'(jh).
struct IndefiniteApproximant {
  Mesh mesh;
  std::vector<double> weights;
};

IndefiniteApproximant build_se_indefinite(const ScalarFunction& f,
                                          const Mesh& mesh);
IndefiniteApproximant build_de_indefinite(const ScalarFunction& f,
                                          const Mesh& mesh);

// t = 0 gives exactly 0; t = +inf gives h * sum w_j, the full-integral
// approximation. Throws std::domain_error for t < 0.
double evaluate_indefinite(const IndefiniteApproximant& q, double t);

}  // namespace sincsolve
