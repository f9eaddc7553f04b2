#include "dgsem/coupling.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace dgsem {

namespace {

// Columns lambda_j * (S p_sym_j) of the requested sign class, in slot order.
Eigen::MatrixXd flux_columns(const EigenStructure& es, const Symmetrizer& sym,
                             int first, int count) {
  const int m = static_cast<int>(es.lambda.size());
  Eigen::MatrixXd cols(m, count);
  for (int j = 0; j < count; ++j) {
    const int slot = first + j;
    cols.col(j) = es.lambda(slot) * (sym.S.asDiagonal() * es.P_sym.col(slot));
  }
  return cols;
}

}  // namespace

bool CouplingOperator::is_material_jump() const {
  return mat_L.rho != mat_R.rho || mat_L.c != mat_R.c;
}

CouplingOperator build_coupling(ModelKind kind, const Material& m_L,
                                const Material& m_R, const Eigen::Vector2d& n) {
  CouplingOperator op;
  op.kind = kind;
  op.mat_L = m_L;
  op.mat_R = m_R;
  op.normal = n;
  op.eig_L = normal_eigenstructure(kind, m_L, n);
  op.eig_R = normal_eigenstructure(kind, m_R, n);
  op.sym_L = symmetrizer(kind, m_L);
  op.sym_R = symmetrizer(kind, m_R);
  op.A_L = normal_matrix(kind, m_L, n);
  op.A_R = normal_matrix(kind, m_R, n);

  if (op.eig_L.n_plus != op.eig_R.n_plus || op.eig_L.n_zero != op.eig_R.n_zero) {
    throw std::invalid_argument(
        "build_coupling: eigenvalue sign counts differ across the interface");
  }
  op.eigenvectors_preserved =
      (op.eig_L.P_sym - op.eig_R.P_sym).cwiseAbs().maxCoeff() < 1e-12;

  const int m = static_cast<int>(op.eig_L.lambda.size());
  const int np = op.n_plus();
  const int nm = op.n_minus();
  const int k = np + nm;
  const int minus_first = np + op.n_zero();

  // Unknown side (M^-_L - M^+_R): plus columns -lambda^+_R (S_R p_R),
  // minus columns +lambda^-_L (S_L p_L). Data side (M^-_R - M^+_L) analogous.
  Eigen::MatrixXd unknown(m, k), data(m, k);
  unknown.leftCols(np) = -flux_columns(op.eig_R, op.sym_R, 0, np);
  unknown.rightCols(nm) = flux_columns(op.eig_L, op.sym_L, minus_first, nm);
  data.leftCols(np) = -flux_columns(op.eig_L, op.sym_L, 0, np);
  data.rightCols(nm) = flux_columns(op.eig_R, op.sym_R, minus_first, nm);

  Eigen::MatrixXd lhs, rhs;
  if (k == m) {
    lhs = unknown;
    rhs = data;
  } else {
    // Zero eigenvalues present: both sides of the RH equation live in the
    // k-dimensional span of the nonzero-lambda flux columns. Project there.
    Eigen::MatrixXd stack(m, 2 * k);
    stack << unknown, data;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(stack);
    if (qr.rank() != k) {
      std::ostringstream msg;
      msg << "build_coupling: ill-posed interface (flux range has rank " << qr.rank()
          << ", expected " << k << ") for materials (rho=" << m_L.rho << ",c=" << m_L.c
          << ") | (rho=" << m_R.rho << ",c=" << m_R.c << "), normal (" << n(0) << ","
          << n(1) << ")";
      throw std::invalid_argument(msg.str());
    }
    const Eigen::MatrixXd basis =
        qr.householderQ() * Eigen::MatrixXd::Identity(m, k);
    lhs = basis.transpose() * unknown;
    rhs = basis.transpose() * data;
  }

  op.M_LR = lhs;
  op.M_RL = rhs;

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(lhs, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double s_max = svd.singularValues()(0);
  const double s_min = svd.singularValues()(k - 1);
  op.condition_estimate = (s_min > 0.0) ? s_max / s_min
                                        : std::numeric_limits<double>::infinity();
  if (!(s_min > s_max * 1e-13)) {
    std::ostringstream msg;
    msg << "build_coupling: singular coupling system (ill-posed) for materials (rho="
        << m_L.rho << ",c=" << m_L.c << ") | (rho=" << m_R.rho << ",c=" << m_R.c
        << "), normal (" << n(0) << "," << n(1) << ")";
    throw std::invalid_argument(msg.str());
  }

  op.M = lhs.fullPivLu().solve(rhs);
  op.M_plus_bar = op.M.topLeftCorner(np, np);
  op.M_minus_bar = op.M.bottomRightCorner(nm, nm);

  double off_diag = 0.0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) off_diag = std::max(off_diag, std::abs(op.M(i, j)));
  op.diag_flag = off_diag <= 1e-11 * op.M.cwiseAbs().maxCoeff();

  return op;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> solve_starred_states(
    const CouplingOperator& op, const Eigen::VectorXd& w_l_plus,
    const Eigen::VectorXd& w_r_minus) {
  const int np = op.n_plus();
  const int nm = op.n_minus();
  Eigen::VectorXd stacked(np + nm);
  stacked.head(np) = w_l_plus;
  stacked.tail(nm) = w_r_minus;
  const Eigen::VectorXd starred = op.M * stacked;
  return {starred.head(np), starred.tail(nm)};
}

InterfaceTrace make_trace(const CouplingOperator& op, const Eigen::VectorXd& u_l,
                          const Eigen::VectorXd& u_r) {
  InterfaceTrace tr;
  tr.U_L = u_l;
  tr.U_R = u_r;
  tr.normal = op.normal;
  tr.W_L = op.eig_L.P_sym.transpose() * (op.sym_L.S_inv.asDiagonal() * u_l);
  tr.W_R = op.eig_R.P_sym.transpose() * (op.sym_R.S_inv.asDiagonal() * u_r);

  const int np = op.n_plus();
  const int nm = op.n_minus();
  auto [w_star_plus, w_star_minus] =
      solve_starred_states(op, tr.W_L.head(np), tr.W_R.tail(nm));
  tr.W_star_plus = std::move(w_star_plus);
  tr.W_star_minus = std::move(w_star_minus);

  // F* from the left reconstruction: sum of lambda_j w_j (S_L p_j) over the
  // left-side upwind characteristic vector (W_L^+, *, W*^-).
  const int m = static_cast<int>(op.eig_L.lambda.size());
  Eigen::VectorXd w(m);
  w.setZero();
  w.head(np) = tr.W_L.head(np);
  w.tail(nm) = tr.W_star_minus;
  tr.F_star = op.eig_L.P * (op.eig_L.lambda.asDiagonal() * w);
  return tr;
}

Eigen::VectorXd upwind_flux(const CouplingOperator& op, const Eigen::VectorXd& u_l,
                            const Eigen::VectorXd& u_r) {
  return make_trace(op, u_l, u_r).F_star;
}

Eigen::VectorXd upwind_flux(ModelKind kind, const Material& m_L, const Material& m_R,
                            const Eigen::VectorXd& u_l, const Eigen::VectorXd& u_r,
                            const Eigen::Vector2d& n) {
  return upwind_flux(build_coupling(kind, m_L, m_R, n), u_l, u_r);
}

Eigen::VectorXd upwind_flux_right(const CouplingOperator& op, const InterfaceTrace& trace) {
  const int m = static_cast<int>(op.eig_R.lambda.size());
  const int np = op.n_plus();
  const int nm = op.n_minus();
  Eigen::VectorXd w(m);
  w.setZero();
  w.head(np) = trace.W_star_plus;
  w.tail(nm) = trace.W_R.tail(nm);
  return op.eig_R.P * (op.eig_R.lambda.asDiagonal() * w);
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> starred_side_states(
    const CouplingOperator& op, const InterfaceTrace& trace) {
  const int m = static_cast<int>(op.eig_L.lambda.size());
  const int np = op.n_plus();
  const int nz = op.n_zero();
  const int nm = op.n_minus();

  Eigen::VectorXd w_l(m), w_r(m);
  w_l.head(np) = trace.W_L.head(np);
  w_r.head(np) = trace.W_star_plus;
  if (nz > 0) {
    const Eigen::VectorXd avg =
        0.5 * (trace.W_L.segment(np, nz) + trace.W_R.segment(np, nz));
    w_l.segment(np, nz) = avg;
    w_r.segment(np, nz) = avg;
  }
  w_l.tail(nm) = trace.W_star_minus;
  w_r.tail(nm) = trace.W_R.tail(nm);

  Eigen::VectorXd u_l = op.sym_L.S.asDiagonal() * (op.eig_L.P_sym * w_l);
  Eigen::VectorXd u_r = op.sym_R.S.asDiagonal() * (op.eig_R.P_sym * w_r);
  return {u_l, u_r};
}

std::string coupling_report(const CouplingOperator& op) {
  std::ostringstream os;
  os << "coupling (rho=" << op.mat_L.rho << ",c=" << op.mat_L.c << ") | (rho="
     << op.mat_R.rho << ",c=" << op.mat_R.c << "), normal (" << op.normal(0) << ","
     << op.normal(1) << ")\n";
  os << "  M =\n" << op.M << "\n";
  os << "  diag_flag = " << (op.diag_flag ? "true" : "false")
     << ", eigenvectors_preserved = " << (op.eigenvectors_preserved ? "true" : "false")
     << ", cond(M_LR) = " << op.condition_estimate << "\n";
  return os.str();
}

}  // namespace dgsem
