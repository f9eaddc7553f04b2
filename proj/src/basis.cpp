#include "dgsem/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace dgsem {

std::pair<double, double> legendre_and_derivative(int n, double x) {
  if (n == 0) return {1.0, 0.0};
  double p_prev = 1.0;  // P_0
  double p = x;         // P_1
  for (int k = 2; k <= n; ++k) {
    const double p_next = ((2 * k - 1) * x * p - (k - 1) * p_prev) / k;
    p_prev = p;
    p = p_next;
  }
  // P_n'(x) = n (P_{n-1}(x) - x P_n(x)) / (1 - x^2); endpoints via the known
  // closed form P_n'(+-1) = (+-1)^{n-1} n (n+1) / 2.
  double dp;
  if (std::abs(1.0 - x * x) < 1e-14) {
    const double sign = (x > 0.0) ? 1.0 : ((n % 2 == 0) ? -1.0 : 1.0);
    dp = sign * 0.5 * n * (n + 1);
  } else {
    dp = n * (p_prev - x * p) / (1.0 - x * x);
  }
  return {p, dp};
}

LglBasis build_basis(int degree) {
  if (degree < 1) {
    throw std::invalid_argument("build_basis: degree must be >= 1");
  }
  const int n = degree;
  const int npts = n + 1;

  LglBasis basis;
  basis.degree = n;
  basis.nodes.resize(npts);
  basis.weights.resize(npts);
  basis.barycentric_weights.resize(npts);
  basis.diff_matrix.resize(npts, npts);

  basis.nodes(0) = -1.0;
  basis.nodes(n) = 1.0;

  // Interior nodes: Newton on f(x) = (1-x^2) P_N'(x), f'(x) = -N(N+1) P_N(x),
  // seeded with Chebyshev-Gauss-Lobatto points.
  for (int j = 1; j < n; ++j) {
    double x = -std::cos(M_PI * j / n);
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre_and_derivative(n, x);
      const double f = (1.0 - x * x) * dp;
      const double df = -static_cast<double>(n) * (n + 1) * p;
      const double dx = f / df;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw std::runtime_error("build_basis: Newton iteration for LGL nodes did not converge");
    }
    basis.nodes(j) = x;
  }

  // Symmetrize about 0 to remove round-off drift.
  for (int j = 0; j <= n / 2; ++j) {
    const double s = 0.5 * (basis.nodes(j) - basis.nodes(n - j));
    basis.nodes(j) = s;
    basis.nodes(n - j) = -s;
  }
  if (npts % 2 == 1) basis.nodes(n / 2) = 0.0;

  for (int j = 0; j < npts; ++j) {
    const auto [p, dp] = legendre_and_derivative(n, basis.nodes(j));
    (void)dp;
    basis.weights(j) = 2.0 / (n * (n + 1) * p * p);
  }

  // Barycentric weights b_j = 1 / prod_{k != j} (x_j - x_k), normalized.
  for (int j = 0; j < npts; ++j) {
    double b = 1.0;
    for (int k = 0; k < npts; ++k) {
      if (k != j) b *= (basis.nodes(j) - basis.nodes(k));
    }
    basis.barycentric_weights(j) = 1.0 / b;
  }
  basis.barycentric_weights /= basis.barycentric_weights.cwiseAbs().maxCoeff();

  // Differentiation matrix from barycentric weights with the negative-sum trick.
  for (int i = 0; i < npts; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < npts; ++j) {
      if (i == j) continue;
      const double d = (basis.barycentric_weights(j) / basis.barycentric_weights(i)) /
                       (basis.nodes(i) - basis.nodes(j));
      basis.diff_matrix(i, j) = d;
      row_sum += d;
    }
    basis.diff_matrix(i, i) = -row_sum;
  }

  return basis;
}

Eigen::VectorXd differentiate(const LglBasis& basis, const Eigen::VectorXd& values) {
  if (values.size() != basis.num_nodes()) {
    throw std::invalid_argument("differentiate: values length does not match basis");
  }
  return basis.diff_matrix * values;
}

double interpolate(const LglBasis& basis, const Eigen::VectorXd& values, double xi) {
  if (values.size() != basis.num_nodes()) {
    throw std::invalid_argument("interpolate: values length does not match basis");
  }
  if (xi < -1.0 || xi > 1.0) {
    throw std::invalid_argument("interpolate: xi outside [-1,1]");
  }
  double num = 0.0;
  double den = 0.0;
  for (int j = 0; j < basis.num_nodes(); ++j) {
    const double diff = xi - basis.nodes(j);
    if (diff == 0.0) return values(j);
    const double t = basis.barycentric_weights(j) / diff;
    num += t * values(j);
    den += t;
  }
  return num / den;
}

}  // namespace dgsem
