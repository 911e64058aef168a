#pragma once

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>
#include <string>

#include "sincsolve/basis.hpp"

namespace sincsolve {

struct TransformParams {
  double alpha = 1.0;
  double beta = 1.0;
  double d = 1.0;
};

// Linear initial value problem y' = K(t) y + g(t), y(0) = r, on (0, inf),
// with solutions decaying exponentially. The analyticity parameters are the
// caller's certification; the library cannot verify them.
struct ProblemSpec {
  int dimension = 1;
  std::function<Eigen::MatrixXd(double)> coefficient;  // K(t), m x m
  std::function<Eigen::VectorXd(double)> forcing;      // g(t), m
  Eigen::VectorXd initial;                             // r
  TransformParams se;  // 0 < alpha <= 1, beta > 0, 0 < d < pi
  TransformParams de;  // 0 < alpha <= 1, beta > 0, 0 < d < pi/2
  std::function<Eigen::VectorXd(double)> exact;        // empty when unknown
  std::string name;
};

struct singular_matrix_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// h * I^(-1) * D: the collocated indefinite-integration operator, where
// I^(-1)_{rc} = 1/2 + Si(pi(r - c))/pi and D holds the transform derivative
// at the nodes.
Eigen::MatrixXd integration_matrix(const Mesh& mesh);

struct LinearSystem {
  Eigen::MatrixXd matrix;  // lm x lm, blocks delta_ij I - W diag(k_ij(nodes))
  Eigen::VectorXd rhs;     // replicated r plus W applied to g at the nodes
};

LinearSystem assemble_system(const ProblemSpec& p, const Mesh& mesh);

// Dense LU with partial pivoting. Throws singular_matrix_error when a pivot
// underflows (the discrete system is not invertible).
Eigen::VectorXd lu_solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b);

// ||A^{-1}||_inf, computed exactly by solving against every unit vector.
double inf_norm_inverse(const Eigen::MatrixXd& A);

// Node solution of the quadrature-discretized integral equation.
struct DiscreteSolution {
  Mesh mesh;
  Eigen::VectorXd node_values;       // Y, component-major (all nodes of y_1, ...)
  Eigen::MatrixXd eval_weights;      // m x l: {K y + g} * transform'(jh) per node
  Eigen::VectorXd limit_at_infinity; // p = r + h * row sums of eval_weights
  double inv_norm_estimate = 0.0;
  ProblemSpec problem;

  Eigen::VectorXd node_vector(int node) const;  // m-vector at one node
};

DiscreteSolution solve_nystrom(const ProblemSpec& p, int n, TransformKind kind);

// r + sum_j {K y + g}(node_j) transform'(jh) J(j,h)(inverse(t)).
// t = 0 returns exactly r; t = +inf returns exactly the stored limit.
Eigen::VectorXd eval_nystrom(const DiscreteSolution& s, double t);

// Re-expansion of the node values in the boundary-treated Sinc basis; no new
// linear solve. Evaluation needs no sine integral.
struct CollocationSolution {
  Mesh mesh;
  Eigen::MatrixXd coeffs;            // m x l blended node coefficients
  Eigen::VectorXd initial;           // r
  Eigen::VectorXd limit_at_infinity; // p
  Eigen::VectorXd node_values;       // shared Y, kept for node agreement
  double inv_norm_estimate = 0.0;
};

CollocationSolution build_collocation(const DiscreteSolution& s);
Eigen::VectorXd eval_collocation(const CollocationSolution& c, double t);

}  // namespace sincsolve
