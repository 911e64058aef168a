#include "sincsolve/indefinite.hpp"

#include <cmath>
#include <stdexcept>

namespace sincsolve {

namespace {

IndefiniteApproximant build(const ScalarFunction& f, const Mesh& mesh,
                            TransformKind kind, const char* who) {
  if (mesh.kind != kind) {
    throw std::invalid_argument(std::string(who) + ": mesh has the wrong transform kind");
  }
  IndefiniteApproximant q;
  q.mesh = mesh;
  q.weights.resize(mesh.size());
  for (int i = 0; i < mesh.size(); ++i) {
    const double x = mesh.node_x(i);
    double w = kind == TransformKind::se ? f(se_forward(x)) * se_derivative(x)
                                         : f(de_forward(x)) * de_derivative(x);
    if (std::abs(w) < 1e-300) w = 0.0;  // denormal tails carry no information
    q.weights[i] = w;
  }
  return q;
}

}  // namespace

IndefiniteApproximant build_se_indefinite(const ScalarFunction& f, const Mesh& mesh) {
  return build(f, mesh, TransformKind::se, "build_se_indefinite");
}

IndefiniteApproximant build_de_indefinite(const ScalarFunction& f, const Mesh& mesh) {
  return build(f, mesh, TransformKind::de, "build_de_indefinite");
}

double evaluate_indefinite(const IndefiniteApproximant& q, double t) {
  if (std::isnan(t) || t < 0) {
    throw std::domain_error("evaluate_indefinite: t must be >= 0");
  }
  if (t == 0.0) return 0.0;  // J(j,h)(-inf) = 0 for every j
  if (std::isinf(t)) {
    double sum = 0.0;
    for (double w : q.weights) sum += w;
    return q.mesh.h * sum;  // J(j,h)(+inf) = h: the full-integral value
  }
  const double x = q.mesh.kind == TransformKind::se ? se_inverse(t) : de_inverse(t);
  double sum = 0.0;
  for (int i = 0; i < q.mesh.size(); ++i) {
    sum += q.weights[i] * indef_basis(q.mesh.j_min() + i, q.mesh.h, x);
  }
  return sum;
}

}  // namespace sincsolve
