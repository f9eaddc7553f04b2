#ifndef DGSEM_BASIS_HPP
#define DGSEM_BASIS_HPP

#include <Eigen/Dense>

namespace dgsem {

/// One-dimensional Legendre-Gauss-Lobatto collocation operators on [-1,1].
///
/// Immutable after construction; safe to share across threads.
struct LglBasis {
  int degree = 0;                   // polynomial degree N, nodes.size() == N+1
  Eigen::VectorXd nodes;            // strictly increasing, nodes(0) = -1, nodes(N) = +1
  Eigen::VectorXd weights;          // positive, sum == 2
  Eigen::VectorXd barycentric_weights;
  Eigen::MatrixXd diff_matrix;      // collocation derivative, rows sum to 0

  int num_nodes() const { return degree + 1; }
};

/// Build the degree-N LGL basis. Nodes are the roots of (1-x^2) P_N'(x),
/// weights are 2 / (N (N+1) P_N(x_j)^2). Requires N >= 1.
LglBasis build_basis(int degree);

/// Legendre polynomial value and first derivative at x (recurrence).
std::pair<double, double> legendre_and_derivative(int n, double x);

/// Apply the collocation derivative to nodal values.
Eigen::VectorXd differentiate(const LglBasis& basis, const Eigen::VectorXd& values);

/// Barycentric Lagrange evaluation of the interpolant at xi in [-1,1].
double interpolate(const LglBasis& basis, const Eigen::VectorXd& values, double xi);

}  // namespace dgsem

#endif
