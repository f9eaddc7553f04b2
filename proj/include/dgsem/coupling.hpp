#ifndef DGSEM_COUPLING_HPP
#define DGSEM_COUPLING_HPP

#include <Eigen/Dense>
#include <string>

#include "dgsem/mesh.hpp"
#include "dgsem/models.hpp"

namespace dgsem {

/// Rankine-Hugoniot characteristic coupling at one (possibly material) face.
///
/// The starred characteristics solve A_L u*_L = A_R u*_R, written in the
/// symmetrized characteristic variables W = P_sym^T S^-1 u. Columns with zero
/// eigenvalue carry no flux and are eliminated from the linear system, so M
/// acts on the stacked (W_L^+, W_R^-) of size n_plus + n_minus.
struct CouplingOperator {
  ModelKind kind = ModelKind::scalar_advection;
  Material mat_L, mat_R;
  Eigen::Vector2d normal = Eigen::Vector2d::UnitX();

  EigenStructure eig_L, eig_R;
  Symmetrizer sym_L, sym_R;
  Eigen::MatrixXd A_L, A_R;  // normal coefficient matrices per side

  Eigen::MatrixXd M_LR;  // reduced (M^-_L - M^+_R), unknown side
  Eigen::MatrixXd M_RL;  // reduced (M^-_R - M^+_L), data side
  Eigen::MatrixXd M;     // M_LR^-1 M_RL
  Eigen::MatrixXd M_plus_bar;   // upper-left n_plus x n_plus block of M
  Eigen::MatrixXd M_minus_bar;  // lower-right n_minus x n_minus block of M
  double condition_estimate = 0.0;
  bool diag_flag = false;              // off-diagonal of M below 1e-11 * |M|
  bool eigenvectors_preserved = false; // P_sym agrees on both sides

  int n_plus() const { return eig_L.n_plus; }
  int n_zero() const { return eig_L.n_zero; }
  int n_minus() const { return eig_L.n_minus(); }
  bool is_material_jump() const;
};

/// Left/right nodal states, characteristic variables, upwind starred state,
/// and the numerical flux at one interface node.
struct InterfaceTrace {
  Eigen::VectorXd U_L, U_R;
  Eigen::VectorXd W_L, W_R;          // full characteristic vectors per side
  Eigen::VectorXd W_star_plus;       // size n_plus
  Eigen::VectorXd W_star_minus;      // size n_minus
  Eigen::VectorXd F_star;            // physical numerical flux along the normal
  Eigen::Vector2d normal = Eigen::Vector2d::UnitX();
};

/// Assemble and factor the coupling for a material pair and unit normal.
/// Throws if the reduced M_LR is singular (ill-posed configuration).
CouplingOperator build_coupling(ModelKind kind, const Material& m_L,
                                const Material& m_R, const Eigen::Vector2d& n);

/// Starred characteristics (W*^+, W*^-) = M (W_L^+, W_R^-).
std::pair<Eigen::VectorXd, Eigen::VectorXd> solve_starred_states(
    const CouplingOperator& op, const Eigen::VectorXd& w_l_plus,
    const Eigen::VectorXd& w_r_minus);

/// Full trace at one face node: characteristics, starred states, flux.
InterfaceTrace make_trace(const CouplingOperator& op, const Eigen::VectorXd& u_l,
                          const Eigen::VectorXd& u_r);

/// Upwind numerical flux. For m_L == m_R this is the characteristic flux
/// A^+ U_L + A^- U_R; across a material jump it enforces the RH condition.
Eigen::VectorXd upwind_flux(const CouplingOperator& op, const Eigen::VectorXd& u_l,
                            const Eigen::VectorXd& u_r);
Eigen::VectorXd upwind_flux(ModelKind kind, const Material& m_L, const Material& m_R,
                            const Eigen::VectorXd& u_l, const Eigen::VectorXd& u_r,
                            const Eigen::Vector2d& n);

/// Flux evaluated from the right-side reconstruction; equals upwind_flux up to
/// round-off (the equality is the RH condition). Used in verification mode.
Eigen::VectorXd upwind_flux_right(const CouplingOperator& op, const InterfaceTrace& trace);

/// Starred side states u*_L, u*_R (zero characteristics averaged across).
std::pair<Eigen::VectorXd, Eigen::VectorXd> starred_side_states(
    const CouplingOperator& op, const InterfaceTrace& trace);

/// Per-face text report: M, diagonality, condition estimate.
std::string coupling_report(const CouplingOperator& op);

}  // namespace dgsem

#endif
