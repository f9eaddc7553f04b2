#ifndef DGSEM_MODELS_HPP
#define DGSEM_MODELS_HPP

#include <Eigen/Dense>
#include <vector>

#include "dgsem/mesh.hpp"

namespace dgsem {

enum class ModelKind { scalar_advection, acoustic_1d, acoustic_2d };

int n_components(ModelKind kind);
int dimension(ModelKind kind);

/// Coefficient matrices A_j of u_t + sum_j A_j du/dx_j = 0 for one material.
/// scalar: { [a] }. acoustic_1d: state (p,u). acoustic_2d: state (p,u,v).
std::vector<Eigen::MatrixXd> coefficient_matrices(ModelKind kind, const Material& m);

/// Diagonal symmetrizer S with S^-1 A_j S symmetric, and its inverse.
struct Symmetrizer {
  Eigen::VectorXd S;      // diagonal entries
  Eigen::VectorXd S_inv;  // 1 / diagonal entries
};
Symmetrizer symmetrizer(ModelKind kind, const Material& m);

/// Eigendecomposition of the normal coefficient matrix A_n = sum_j n_j A_j.
///
/// P holds right eigenvectors of A_n (scaled so P = S * P_sym), P_inv its
/// inverse; lambda is sorted decreasing. P_sym is the orthonormal eigenvector
/// matrix of the symmetrized matrix A_n^s = S^-1 A_n S (P_sym^T P_sym = I);
/// for the acoustic models P_sym is independent of the material. The
/// characteristic variables of the energy analysis are W = P_sym^T S^-1 u.
struct EigenStructure {
  Eigen::MatrixXd P;
  Eigen::MatrixXd P_inv;
  Eigen::VectorXd lambda;  // decreasing
  Eigen::MatrixXd P_sym;   // orthonormal
  int n_plus = 0;
  int n_zero = 0;

  int n_minus() const { return static_cast<int>(lambda.size()) - n_plus - n_zero; }
};

/// Closed-form eigendecomposition; n must be a unit vector (|n| = 1 to 1e-12).
EigenStructure normal_eigenstructure(ModelKind kind, const Material& m,
                                     const Eigen::Vector2d& n);

/// A_n = sum_j n_j A_j for convenience.
Eigen::MatrixXd normal_matrix(ModelKind kind, const Material& m, const Eigen::Vector2d& n);

}  // namespace dgsem

#endif
