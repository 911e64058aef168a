#include "sincsolve/solver.hpp"

#include <cmath>
#include <sstream>

#include "sincsolve/special_functions.hpp"

namespace sincsolve {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPivotFloor = 1e-300;

double transform_forward(TransformKind kind, double x) {
  return kind == TransformKind::se ? se_forward(x) : de_forward(x);
}

double transform_derivative(TransformKind kind, double x) {
  return kind == TransformKind::se ? se_derivative(x) : de_derivative(x);
}

double transform_inverse(TransformKind kind, double t) {
  return kind == TransformKind::se ? se_inverse(t) : de_inverse(t);
}

void validate_problem(const ProblemSpec& p, TransformKind kind) {
  if (p.dimension < 1) throw std::invalid_argument("problem: dimension must be >= 1");
  if (!p.coefficient || !p.forcing) {
    throw std::invalid_argument("problem: coefficient and forcing must be set");
  }
  if (p.initial.size() != p.dimension) {
    throw std::invalid_argument("problem: initial value has the wrong dimension");
  }
  const TransformParams& tp = kind == TransformKind::se ? p.se : p.de;
  const double d_max = kind == TransformKind::se ? kPi : kPi / 2;
  if (!(tp.alpha > 0 && tp.alpha <= 1) || !(tp.beta > 0) ||
      !(tp.d > 0 && tp.d < d_max)) {
    throw std::invalid_argument("problem: transform parameters out of range");
  }
}

Eigen::PartialPivLU<Eigen::MatrixXd> factorize(const Eigen::MatrixXd& A) {
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  if (lu.matrixLU().diagonal().cwiseAbs().minCoeff() < kPivotFloor) {
    throw singular_matrix_error("lu_solve: matrix is singular to working precision");
  }
  return lu;
}

double inverse_inf_norm(const Eigen::PartialPivLU<Eigen::MatrixXd>& lu, Eigen::Index n) {
  const Eigen::MatrixXd inv = lu.solve(Eigen::MatrixXd::Identity(n, n));
  return inv.cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace

Eigen::MatrixXd integration_matrix(const Mesh& mesh) {
  const int l = mesh.size();
  const auto si = sine_integral_pi_table(l > 0 ? l - 1 : 0);
  Eigen::VectorXd deriv(l);
  for (int c = 0; c < l; ++c) {
    deriv(c) = transform_derivative(mesh.kind, mesh.node_x(c));
  }
  Eigen::MatrixXd W(l, l);
  for (int r = 0; r < l; ++r) {
    for (int c = 0; c < l; ++c) {
      const int k = r - c;
      const double si_k = k >= 0 ? (*si)[k] : -(*si)[-k];  // Si is odd
      W(r, c) = mesh.h * (0.5 + si_k / kPi) * deriv(c);
    }
  }
  return W;
}

LinearSystem assemble_system(const ProblemSpec& p, const Mesh& mesh) {
  const int m = p.dimension;
  const int l = mesh.size();
  const Eigen::MatrixXd W = integration_matrix(mesh);

  std::vector<Eigen::MatrixXd> K(l);
  std::vector<Eigen::VectorXd> g(l);
  for (int c = 0; c < l; ++c) {
    const double t = transform_forward(mesh.kind, mesh.node_x(c));
    K[c] = p.coefficient(t);
    g[c] = p.forcing(t);
    if (K[c].rows() != m || K[c].cols() != m || g[c].size() != m) {
      throw std::invalid_argument("assemble_system: coefficient/forcing dimension mismatch");
    }
  }

  LinearSystem sys;
  sys.matrix = Eigen::MatrixXd::Identity(l * m, l * m);
  sys.rhs.resize(l * m);
  Eigen::VectorXd column(l);
  for (int i = 0; i < m; ++i) {
    for (int c = 0; c < l; ++c) column(c) = g[c](i);
    sys.rhs.segment(i * l, l) =
        Eigen::VectorXd::Constant(l, p.initial(i)) + W * column;
    for (int j = 0; j < m; ++j) {
      for (int c = 0; c < l; ++c) column(c) = K[c](i, j);
      sys.matrix.block(i * l, j * l, l, l) -= W * column.asDiagonal();
    }
  }
  return sys;
}

Eigen::VectorXd lu_solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
  if (A.rows() != A.cols() || A.rows() != b.size()) {
    throw std::invalid_argument("lu_solve: dimension mismatch");
  }
  return factorize(A).solve(b);
}

double inf_norm_inverse(const Eigen::MatrixXd& A) {
  if (A.rows() != A.cols()) {
    throw std::invalid_argument("inf_norm_inverse: matrix must be square");
  }
  return inverse_inf_norm(factorize(A), A.rows());
}

Eigen::VectorXd DiscreteSolution::node_vector(int node) const {
  const int m = problem.dimension;
  const int l = mesh.size();
  Eigen::VectorXd y(m);
  for (int i = 0; i < m; ++i) y(i) = node_values(i * l + node);
  return y;
}

DiscreteSolution solve_nystrom(const ProblemSpec& p, int n, TransformKind kind) {
  validate_problem(p, kind);
  const TransformParams& tp = kind == TransformKind::se ? p.se : p.de;
  const Mesh mesh = kind == TransformKind::se
                        ? se_mesh(tp.alpha, tp.beta, tp.d, n)
                        : de_mesh_indef(tp.alpha, tp.beta, tp.d, n);
  const int m = p.dimension;
  const int l = mesh.size();

  LinearSystem sys = assemble_system(p, mesh);
  DiscreteSolution s;
  s.mesh = mesh;
  s.problem = p;
  try {
    const auto lu = factorize(sys.matrix);
    s.node_values = lu.solve(sys.rhs);
    s.inv_norm_estimate = inverse_inf_norm(lu, sys.matrix.rows());
  } catch (const singular_matrix_error&) {
    std::ostringstream msg;
    msg << "solve_nystrom: singular system for problem '" << p.name << "' (n=" << n
        << ", kind=" << (kind == TransformKind::se ? "se" : "de") << ", l=" << l
        << ", h=" << mesh.h << ")";
    throw singular_matrix_error(msg.str());
  }

  s.eval_weights.resize(m, l);
  for (int c = 0; c < l; ++c) {
    const double x = mesh.node_x(c);
    const double t = transform_forward(kind, x);
    s.eval_weights.col(c) = (p.coefficient(t) * s.node_vector(c) + p.forcing(t)) *
                            transform_derivative(kind, x);
  }
  s.limit_at_infinity = p.initial + mesh.h * s.eval_weights.rowwise().sum();
  if (!s.limit_at_infinity.allFinite()) {
    throw std::runtime_error("solve_nystrom: non-finite solution limit for '" +
                             p.name + "'");
  }
  return s;
}

Eigen::VectorXd eval_nystrom(const DiscreteSolution& s, double t) {
  if (std::isnan(t) || t < 0) {
    throw std::domain_error("eval_nystrom: t must be >= 0");
  }
  if (t == 0.0) return s.problem.initial;       // all J terms vanish
  if (std::isinf(t)) return s.limit_at_infinity;

  const double x = transform_inverse(s.mesh.kind, t);
  Eigen::VectorXd basis(s.mesh.size());
  for (int c = 0; c < s.mesh.size(); ++c) {
    basis(c) = indef_basis(s.mesh.j_min() + c, s.mesh.h, x);
  }
  return s.problem.initial + s.eval_weights * basis;
}

CollocationSolution build_collocation(const DiscreteSolution& s) {
  const int m = s.problem.dimension;
  const int l = s.mesh.size();
  CollocationSolution c;
  c.mesh = s.mesh;
  c.initial = s.problem.initial;
  c.limit_at_infinity = s.limit_at_infinity;
  c.node_values = s.node_values;
  c.inv_norm_estimate = s.inv_norm_estimate;
  c.coeffs.resize(m, l);
  for (int node = 0; node < l; ++node) {
    const double x = s.mesh.node_x(node);
    const double u = s.mesh.kind == TransformKind::se ? x : kPi * std::sinh(x);
    const double sig = stable_sigmoid(u);
    for (int i = 0; i < m; ++i) {
      const double blend = c.initial(i) + (c.limit_at_infinity(i) - c.initial(i)) * sig;
      c.coeffs(i, node) = s.node_values(i * l + node) - blend;
    }
  }
  return c;
}

Eigen::VectorXd eval_collocation(const CollocationSolution& c, double t) {
  if (std::isnan(t) || t < 0) {
    throw std::domain_error("eval_collocation: t must be >= 0");
  }
  if (t == 0.0) return c.initial;               // sinc terms vanish, blend -> r
  if (std::isinf(t)) return c.limit_at_infinity;

  const double x = transform_inverse(c.mesh.kind, t);
  Eigen::VectorXd basis(c.mesh.size());
  for (int node = 0; node < c.mesh.size(); ++node) {
    basis(node) = sinc_basis(c.mesh.j_min() + node, c.mesh.h, x);
  }
  // r e^{-t} + p (1 - e^{-t}) plus the sinc correction
  return c.initial - (c.limit_at_infinity - c.initial) * std::expm1(-t) +
         c.coeffs * basis;
}

}  // namespace sincsolve
