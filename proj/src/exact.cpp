#include "dgsem/exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dgsem/basis.hpp"

namespace dgsem {

double gaussian_sigma(double omega, double m_periods) {
  const double period = 2.0 * M_PI / omega;
  return std::sqrt(-(m_periods * period) * (m_periods * period) /
                   (4.0 * std::log(1e-4)));
}

double gaussian_psi(double s, double omega, double sigma) {
  const double arg = s / (omega * sigma);
  return std::exp(-arg * arg);
}

Eigen::Vector2d PlaneWaveParams::unit_direction() const {
  Eigen::Vector2d d(kx, ky);
  if (normalize_direction) d.normalize();
  return d;
}

ScatterCoefficients scatter_coefficients(const PlaneWaveParams& params,
                                         const Material& m_L, const Material& m_R) {
  ScatterCoefficients sc;
  sc.dir_inc = params.unit_direction();
  if (!(sc.dir_inc(0) > 0.0)) {
    throw std::invalid_argument("scatter_coefficients: incident wave must travel toward the interface (kx > 0)");
  }
  sc.dir_ref = Eigen::Vector2d(-sc.dir_inc(0), sc.dir_inc(1));

  const double speed_ratio = m_R.c / m_L.c;
  const double ky_t = speed_ratio * sc.dir_inc(1);
  const double under_root = 1.0 - ky_t * ky_t;
  if (under_root < 0.0) {
    throw std::invalid_argument("scatter_coefficients: total internal reflection regime is not supported");
  }
  sc.dir_trans = Eigen::Vector2d(std::sqrt(under_root), ky_t);

  sc.k_inc = (params.omega / m_L.c) * sc.dir_inc;
  sc.k_ref = (params.omega / m_L.c) * sc.dir_ref;
  sc.k_trans = (params.omega / m_R.c) * sc.dir_trans;

  const double z_l = m_L.rho * m_L.c;
  const double z_r = m_R.rho * m_R.c;
  const double kx_i = sc.dir_inc(0);
  const double kx_t = sc.dir_trans(0);

  // Flux continuity across x = 0: [rho c^2 u_n] = 0 and [p / rho] = 0.
  const double denom = z_l * kx_i + z_r * kx_t;
  sc.refl_ratio = (z_l * kx_i - z_r * kx_t) / denom;
  sc.trans_ratio = 2.0 * m_R.rho * m_L.c * kx_i / denom;

  // Published closed forms (kx_r = -kx_i).
  const double kx_r = -kx_i;
  const double d = -z_r * kx_t + z_l * kx_r;
  sc.refl_ratio_printed = (z_r * kx_t - z_l * kx_i) / d;
  sc.trans_ratio_printed = (z_l * kx_r - m_R.rho * m_L.c * kx_i) / d;
  return sc;
}

Eigen::Vector3d plane_wave_state(double x, double y, double t, double amplitude,
                                 double omega, double t0, double sigma,
                                 const Eigen::Vector2d& k_full,
                                 const Eigen::Vector2d& dir, const Material& m) {
  const double s = k_full(0) * x + k_full(1) * y - omega * (t - t0);
  const double p = amplitude * gaussian_psi(s, omega, sigma);
  const double z = m.rho * m.c;
  return Eigen::Vector3d(p, p * dir(0) / z, p * dir(1) / z);
}

Eigen::Vector3d plane_wave_scatter_2d(double x, double y, double t,
                                      const PlaneWaveParams& params,
                                      const Material& m_L, const Material& m_R) {
  return plane_wave_scatter_2d(x, y, t, params, scatter_coefficients(params, m_L, m_R),
                               m_L, m_R);
}

Eigen::Vector3d plane_wave_scatter_2d(double x, double y, double t,
                                      const PlaneWaveParams& params,
                                      const ScatterCoefficients& sc,
                                      const Material& m_L, const Material& m_R) {
  const double sigma = params.sigma();
  const double a = params.amplitude;
  if (x <= 0.0) {
    return plane_wave_state(x, y, t, a, params.omega, params.t0, sigma, sc.k_inc,
                            sc.dir_inc, m_L) +
           plane_wave_state(x, y, t, a * sc.refl_ratio, params.omega, params.t0,
                            sigma, sc.k_ref, sc.dir_ref, m_L);
  }
  return plane_wave_state(x, y, t, a * sc.trans_ratio, params.omega, params.t0,
                          sigma, sc.k_trans, sc.dir_trans, m_R);
}

double scalar_exact(double x, double t, double a_L, double a_R,
                    const std::function<double(double)>& pulse) {
  if (x <= 0.0) return pulse(x - a_L * t);
  // Right of the jump: trace back through the interface; the transmitted
  // value scales by a_L / a_R (conservation of a u).
  return (a_L / a_R) * pulse(a_L * (x / a_R - t));
}

std::pair<double, double> acoustic_1d_amplitude_ratios(const Material& m_L,
                                                       const Material& m_R) {
  PlaneWaveParams normal_incidence;
  normal_incidence.kx = 1.0;
  normal_incidence.ky = 0.0;
  const auto sc = scatter_coefficients(normal_incidence, m_L, m_R);
  return {sc.refl_ratio, sc.trans_ratio};
}

Eigen::Vector2d acoustic_1d_scatter(double x, double t, const Material& m_L,
                                    const Material& m_R, const Pulse1d& pulse) {
  const auto [r, tau] = acoustic_1d_amplitude_ratios(m_L, m_R);
  const double sigma = pulse.sigma();
  const double w = pulse.omega;
  const double a = pulse.amplitude;
  if (x <= 0.0) {
    const double z_l = m_L.rho * m_L.c;
    const double p_inc = a * gaussian_psi((w / m_L.c) * x - w * (t - pulse.t0), w, sigma);
    const double p_ref =
        a * r * gaussian_psi(-(w / m_L.c) * x - w * (t - pulse.t0), w, sigma);
    return Eigen::Vector2d(p_inc + p_ref, (p_inc - p_ref) / z_l);
  }
  const double z_r = m_R.rho * m_R.c;
  const double p_tr =
      a * tau * gaussian_psi((w / m_R.c) * x - w * (t - pulse.t0), w, sigma);
  return Eigen::Vector2d(p_tr, p_tr / z_r);
}

void gauss_legendre_rule(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre_rule: n must be >= 1");
  nodes.resize(n);
  weights.resize(n);
  for (int j = 0; j < n; ++j) {
    double x = -std::cos(M_PI * (j + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre_and_derivative(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const auto [p, dp] = legendre_and_derivative(n, x);
    (void)p;
    nodes(j) = x;
    weights(j) = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

namespace {

// Composite Gauss quadrature of f over [a, b] with n_cells cells, 8 points each.
double composite_quad_1d(const std::function<double(double)>& f, double a, double b,
                         int n_cells, const Eigen::VectorXd& gx,
                         const Eigen::VectorXd& gw) {
  if (!(b > a)) return 0.0;
  const double h = (b - a) / n_cells;
  double total = 0.0;
  for (int c = 0; c < n_cells; ++c) {
    const double mid = a + (c + 0.5) * h;
    double cell = 0.0;
    for (int q = 0; q < gx.size(); ++q) {
      cell += gw(q) * f(mid + 0.5 * h * gx(q));
    }
    total += 0.5 * h * cell;
  }
  return total;
}

double composite_quad_2d(const std::function<double(double, double)>& f, double ax,
                         double bx, double ay, double by, int n_cells,
                         const Eigen::VectorXd& gx, const Eigen::VectorXd& gw) {
  if (!(bx > ax) || !(by > ay)) return 0.0;
  const double hx = (bx - ax) / n_cells;
  const double hy = (by - ay) / n_cells;
  double total = 0.0;
  for (int cx = 0; cx < n_cells; ++cx) {
    const double mx = ax + (cx + 0.5) * hx;
    for (int cy = 0; cy < n_cells; ++cy) {
      const double my = ay + (cy + 0.5) * hy;
      double cell = 0.0;
      for (int qx = 0; qx < gx.size(); ++qx) {
        for (int qy = 0; qy < gx.size(); ++qy) {
          cell += gw(qx) * gw(qy) * f(mx + 0.5 * hx * gx(qx), my + 0.5 * hy * gx(qy));
        }
      }
      total += 0.25 * hx * hy * cell;
    }
  }
  return total;
}

double refine_until(const std::function<double(int)>& level_value, double rel_tol) {
  double prev = level_value(0);
  for (int level = 1; level <= 12; ++level) {
    const double cur = level_value(level);
    const double scale = std::max({std::abs(cur), std::abs(prev), 1e-300});
    if (std::abs(cur - prev) <= rel_tol * scale) return cur;
    prev = cur;
  }
  throw std::runtime_error("exact_l2_energy: quadrature refinement did not converge in 12 levels");
}

}  // namespace

double exact_l2_energy_2d(double t, const PlaneWaveParams& params,
                          const Material& m_L, const Material& m_R,
                          const std::array<double, 2>& x_range,
                          const std::array<double, 2>& y_range, double rel_tol) {
  Eigen::VectorXd gx, gw;
  gauss_legendre_rule(8, gx, gw);
  const double split = std::clamp(0.0, x_range[0], x_range[1]);
  const auto sc = scatter_coefficients(params, m_L, m_R);
  auto density = [&](double x, double y) {
    const Eigen::Vector3d u = plane_wave_scatter_2d(x, y, t, params, sc, m_L, m_R);
    return u.squaredNorm();
  };
  auto level_value = [&](int level) {
    const int n_cells = 10 << level;
    return composite_quad_2d(density, x_range[0], split, y_range[0], y_range[1],
                             n_cells, gx, gw) +
           composite_quad_2d(density, split, x_range[1], y_range[0], y_range[1],
                             n_cells, gx, gw);
  };
  return refine_until(level_value, rel_tol);
}

double exact_l2_energy_1d(double t, const Pulse1d& pulse, const Material& m_L,
                          const Material& m_R, const std::array<double, 2>& x_range,
                          double rel_tol) {
  Eigen::VectorXd gx, gw;
  gauss_legendre_rule(8, gx, gw);
  const double split = std::clamp(0.0, x_range[0], x_range[1]);
  auto density = [&](double x) {
    const Eigen::Vector2d u = acoustic_1d_scatter(x, t, m_L, m_R, pulse);
    return u.squaredNorm();
  };
  auto level_value = [&](int level) {
    const int n_cells = 32 << level;
    return composite_quad_1d(density, x_range[0], split, n_cells, gx, gw) +
           composite_quad_1d(density, split, x_range[1], n_cells, gx, gw);
  };
  return refine_until(level_value, rel_tol);
}

double exact_scalar_l2_energy(double t, double a_L, double a_R,
                              const std::function<double(double)>& pulse,
                              const std::array<double, 2>& x_range, double rel_tol) {
  Eigen::VectorXd gx, gw;
  gauss_legendre_rule(8, gx, gw);
  const double split = std::clamp(0.0, x_range[0], x_range[1]);
  auto density = [&](double x) {
    const double u = scalar_exact(x, t, a_L, a_R, pulse);
    return u * u;
  };
  auto level_value = [&](int level) {
    const int n_cells = 32 << level;
    return composite_quad_1d(density, x_range[0], split, n_cells, gx, gw) +
           composite_quad_1d(density, split, x_range[1], n_cells, gx, gw);
  };
  return refine_until(level_value, rel_tol);
}

}  // namespace dgsem
