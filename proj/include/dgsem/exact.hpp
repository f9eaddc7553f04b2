#ifndef DGSEM_EXACT_HPP
#define DGSEM_EXACT_HPP

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <functional>
#include <utility>

#include "dgsem/mesh.hpp"

namespace dgsem {

/// Gaussian wave packet psi(s) = exp(-s^2 / (omega sigma)^2) with
/// sigma^2 = -(M T)^2 / (4 ln 1e-4), T = 2 pi / omega. The packet spans
/// M periods at the 1e-4 level.
double gaussian_sigma(double omega, double m_periods);
double gaussian_psi(double s, double omega, double sigma);

/// Plane-wave packet parameters for the 2D scattering problem.
struct PlaneWaveParams {
  double amplitude = 1.0;
  double omega = 4.0 * M_PI;
  double kx = 0.5;              // incident direction components as given
  double ky = std::sqrt(1.5);
  double t0 = 3.0;
  double m_periods = 4.0;
  // The wave ansatz requires a unit propagation direction (the velocity
  // components divide by |k| and the dispersion relation is omega = c |k|).
  // When true the (kx, ky) pair is normalized before use.
  bool normalize_direction = true;

  double sigma() const { return gaussian_sigma(omega, m_periods); }
  double direction_norm2() const { return kx * kx + ky * ky; }
  Eigen::Vector2d unit_direction() const;
};

/// Wavevectors and amplitude ratios of the reflected/transmitted waves.
/// refl_ratio and trans_ratio solve the interface flux-continuity conditions
/// [rho c^2 u_n] = 0, [p / rho] = 0; the *_printed variants evaluate the
/// published closed forms for comparison (they differ in trans_ratio).
struct ScatterCoefficients {
  Eigen::Vector2d dir_inc, dir_ref, dir_trans;  // unit directions
  Eigen::Vector2d k_inc, k_ref, k_trans;        // full wavevectors
  double refl_ratio = 0.0;
  double trans_ratio = 1.0;
  double refl_ratio_printed = 0.0;
  double trans_ratio_printed = 1.0;
};

/// Throws when the transmitted root is not real (total internal reflection).
ScatterCoefficients scatter_coefficients(const PlaneWaveParams& params,
                                         const Material& m_L, const Material& m_R);

/// One plane-wave packet state (p, u, v) at (x, y, t).
Eigen::Vector3d plane_wave_state(double x, double y, double t, double amplitude,
                                 double omega, double t0, double sigma,
                                 const Eigen::Vector2d& k_full,
                                 const Eigen::Vector2d& dir, const Material& m);

/// Exact scattering solution: incident + reflected for x <= 0, transmitted
/// for x > 0, with the material interface along x = 0.
Eigen::Vector3d plane_wave_scatter_2d(double x, double y, double t,
                                      const PlaneWaveParams& params,
                                      const Material& m_L, const Material& m_R);
Eigen::Vector3d plane_wave_scatter_2d(double x, double y, double t,
                                      const PlaneWaveParams& params,
                                      const ScatterCoefficients& sc,
                                      const Material& m_L, const Material& m_R);

/// Scalar advection across a jump at x = 0 by the method of characteristics;
/// the pulse must be compactly supported left of 0 at t = 0.
double scalar_exact(double x, double t, double a_L, double a_R,
                    const std::function<double(double)>& pulse);

/// 1D Gaussian pulse description for the acoustic scattering solution.
struct Pulse1d {
  double amplitude = 1.0;
  double omega = 4.0 * M_PI;
  double m_periods = 4.0;
  double t0 = 1.0;

  double sigma() const { return gaussian_sigma(omega, m_periods); }
};

/// Exact (p, u) of a right-going pulse scattering off the interface at x = 0.
Eigen::Vector2d acoustic_1d_scatter(double x, double t, const Material& m_L,
                                    const Material& m_R, const Pulse1d& pulse);

/// Closed-form amplitude ratios at normal incidence.
std::pair<double, double> acoustic_1d_amplitude_ratios(const Material& m_L,
                                                       const Material& m_R);

/// Integral of u^T u over the domain by composite Gauss quadrature split at
/// the interface, refined until the relative change drops below rel_tol.
/// Throws after 12 refinement levels without convergence.
double exact_l2_energy_2d(double t, const PlaneWaveParams& params,
                          const Material& m_L, const Material& m_R,
                          const std::array<double, 2>& x_range,
                          const std::array<double, 2>& y_range,
                          double rel_tol = 1e-8);
double exact_l2_energy_1d(double t, const Pulse1d& pulse, const Material& m_L,
                          const Material& m_R, const std::array<double, 2>& x_range,
                          double rel_tol = 1e-8);
double exact_scalar_l2_energy(double t, double a_L, double a_R,
                              const std::function<double(double)>& pulse,
                              const std::array<double, 2>& x_range,
                              double rel_tol = 1e-8);

/// Gauss-Legendre rule on [-1,1] (oracle quadrature helper).
void gauss_legendre_rule(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights);

}  // namespace dgsem

#endif
