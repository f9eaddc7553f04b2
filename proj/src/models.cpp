#include "dgsem/models.hpp"

#include <cmath>
#include <stdexcept>

namespace dgsem {

int n_components(ModelKind kind) {
  switch (kind) {
    case ModelKind::scalar_advection: return 1;
    case ModelKind::acoustic_1d: return 2;
    case ModelKind::acoustic_2d: return 3;
  }
  return 0;
}

int dimension(ModelKind kind) {
  return kind == ModelKind::acoustic_2d ? 2 : 1;
}

std::vector<Eigen::MatrixXd> coefficient_matrices(ModelKind kind, const Material& m) {
  switch (kind) {
    case ModelKind::scalar_advection: {
      Eigen::MatrixXd a(1, 1);
      a(0, 0) = m.c;
      return {a};
    }
    case ModelKind::acoustic_1d: {
      Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2, 2);
      a(0, 1) = m.rho * m.c * m.c;
      a(1, 0) = 1.0 / m.rho;
      return {a};
    }
    case ModelKind::acoustic_2d: {
      Eigen::MatrixXd a1 = Eigen::MatrixXd::Zero(3, 3);
      a1(0, 1) = m.rho * m.c * m.c;
      a1(1, 0) = 1.0 / m.rho;
      Eigen::MatrixXd a2 = Eigen::MatrixXd::Zero(3, 3);
      a2(0, 2) = m.rho * m.c * m.c;
      a2(2, 0) = 1.0 / m.rho;
      return {a1, a2};
    }
  }
  throw std::logic_error("coefficient_matrices: unknown model");
}

Symmetrizer symmetrizer(ModelKind kind, const Material& m) {
  const int nc = n_components(kind);
  Symmetrizer s;
  s.S.resize(nc);
  if (kind == ModelKind::scalar_advection) {
    s.S(0) = 1.0;
  } else {
    s.S(0) = m.c;
    for (int i = 1; i < nc; ++i) s.S(i) = 1.0 / m.rho;
  }
  s.S_inv = s.S.cwiseInverse();
  return s;
}

Eigen::MatrixXd normal_matrix(ModelKind kind, const Material& m, const Eigen::Vector2d& n) {
  const auto mats = coefficient_matrices(kind, m);
  Eigen::MatrixXd an = n(0) * mats[0];
  if (mats.size() > 1) an += n(1) * mats[1];
  return an;
}

EigenStructure normal_eigenstructure(ModelKind kind, const Material& m,
                                     const Eigen::Vector2d& n) {
  if (std::abs(n.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("normal_eigenstructure: normal is not a unit vector");
  }
  EigenStructure es;
  const auto sym = symmetrizer(kind, m);

  switch (kind) {
    case ModelKind::scalar_advection: {
      // A_n^s = A_n = [a n_x]; 1D model, only the x-component of n acts.
      const double an = m.c * n(0);
      es.lambda.resize(1);
      es.lambda(0) = an;
      es.P_sym = Eigen::MatrixXd::Identity(1, 1);
      es.n_plus = an > 0.0 ? 1 : 0;
      es.n_zero = an == 0.0 ? 1 : 0;
      break;
    }
    case ModelKind::acoustic_1d: {
      // A_n^s = c n_x [[0,1],[1,0]]; eigenvectors (1, s)/sqrt(2) for lambda = s c n_x.
      const double nx = n(0);
      es.lambda.resize(2);
      es.lambda << m.c, -m.c;
      es.P_sym.resize(2, 2);
      const double r = 1.0 / std::sqrt(2.0);
      // Column order follows decreasing lambda; the +c eigenvector of
      // c*nx*[[0,1],[1,0]] is (1, sign(nx)).
      es.P_sym << r, r, r * nx, -r * nx;
      es.n_plus = 1;
      es.n_zero = 0;
      break;
    }
    case ModelKind::acoustic_2d: {
      // A_n^s = c [[0,nx,ny],[nx,0,0],[ny,0,0]]: lambda = {c, 0, -c} with
      // orthonormal eigenvectors (1,nx,ny)/sqrt(2), (0,-ny,nx), (1,-nx,-ny)/sqrt(2).
      const double nx = n(0), ny = n(1);
      es.lambda.resize(3);
      es.lambda << m.c, 0.0, -m.c;
      es.P_sym.resize(3, 3);
      const double r = 1.0 / std::sqrt(2.0);
      es.P_sym << r, 0.0, r,
                  r * nx, -ny, -r * nx,
                  r * ny, nx, -r * ny;
      es.n_plus = 1;
      es.n_zero = 1;
      break;
    }
  }

  es.P = sym.S.asDiagonal() * es.P_sym;
  es.P_inv = es.P_sym.transpose() * sym.S_inv.asDiagonal();
  return es;
}

}  // namespace dgsem
