#pragma once

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "qhjb/types.hpp"

namespace qhjb {

// Finite-difference stencil: spatial spacing h with the time step tied to it
// as h/c, refined by halving refinement_levels times.
struct StencilConfig {
  double h = 0.01;
  int refinement_levels = 3;

  void validate() const {
    if (!(h > 0.0) || !std::isfinite(h)) throw ConfigError("StencilConfig: h must be positive and finite");
    if (refinement_levels < 2) throw ConfigError("StencilConfig: at least 2 refinement levels required");
  }
};

// Residual magnitudes per refinement level, plus the observed order
//   order = log2(coarsest / finest) / (levels - 1).
// per_level is sorted by decreasing h.  max_abs and l2 describe the finest
// level; for a single-point report both equal the pointwise magnitude, for a
// merged batch max_abs is the maximum and l2 the root-mean-square over points.
// order_measurable is false when a level is exactly zero (no ratio to take).
struct ResidualReport {
  double max_abs = 0.0;
  double l2 = 0.0;
  std::vector<std::pair<double, double>> per_level;
  double convergence_order = 0.0;
  bool order_measurable = false;
};

// Build a single-point report from per-level magnitudes (h decreasing).
ResidualReport finalize_report(std::vector<std::pair<double, double>> per_level);

// Aggregate pointwise reports: per-level maxima across points, l2 over the
// finest level, order re-estimated from the aggregated levels.
ResidualReport merge_reports(const std::vector<ResidualReport>& reports);

// External potential pair (U, A) entering the field-version QHJ equation.
struct ExternalFieldSample {
  double U = 0.0;
  Eigen::Vector3d A = Eigen::Vector3d::Zero();
};

// Gradient-based energy and momentum, complex in general near the core.
struct ComplexEnergyMomentum {
  Complex energy{0.0, 0.0};
  Eigen::Vector3cd momentum = Eigen::Vector3cd::Zero();

  // E^2 - c^2 p.p - m^2 c^4 (zero exactly on the classical shell).
  Complex dispersion_defect(const PhysParams& params = {}) const {
    const Complex p2 = momentum.x() * momentum.x() + momentum.y() * momentum.y() +
                       momentum.z() * momentum.z();
    const double mc2 = params.rest_energy();
    return energy * energy - params.c * params.c * p2 - mc2 * mc2;
  }
};

struct SpectrumReport {
  double peak_frequency = 0.0;  // angular frequency of the dominant folded bin
  double harmonic_ratio = 0.0;  // power at 2 w0 over power at w0
  bool zero_signal = false;     // input samples were identically zero
};

struct BoundaryMismatch {
  double dt_mismatch = 0.0;
  double dx_mismatch = 0.0;
};

namespace detail {

// The 9-point cross stencil: center plus +-h along each spatial axis and
// +-h/c in time.
template <class F>
struct StencilSamples {
  Complex c, tp, tm, xp, xm, yp, ym, zp, zm;
};

template <class F>
StencilSamples<F> sample_stencil(F&& f, const SpacetimePoint& at, double h,
                                 const PhysParams& params) {
  const double ht = h / params.c;
  StencilSamples<F> s;
  s.c = f(at);
  s.tp = f(SpacetimePoint{at.t + ht, at.x});
  s.tm = f(SpacetimePoint{at.t - ht, at.x});
  s.xp = f(SpacetimePoint{at.t, at.x + Eigen::Vector3d(h, 0, 0)});
  s.xm = f(SpacetimePoint{at.t, at.x - Eigen::Vector3d(h, 0, 0)});
  s.yp = f(SpacetimePoint{at.t, at.x + Eigen::Vector3d(0, h, 0)});
  s.ym = f(SpacetimePoint{at.t, at.x - Eigen::Vector3d(0, h, 0)});
  s.zp = f(SpacetimePoint{at.t, at.x + Eigen::Vector3d(0, 0, h)});
  s.zm = f(SpacetimePoint{at.t, at.x - Eigen::Vector3d(0, 0, h)});
  return s;
}

// Central second differences; with the time step h/c the scaled time term
// (1/c^2) d^2/dt^2 and the Laplacian share the common divisor h^2.
template <class S>
Complex fd_box(const S& s, double h) {
  return (s.tp + s.tm - s.xp - s.xm - s.yp - s.ym - s.zp - s.zm + 4.0 * s.c) / (h * h);
}

constexpr Complex kImag{0.0, 1.0};

template <class F>
Complex kg_residual_at(F&& field, const SpacetimePoint& at, double h, const PhysParams& params) {
  const auto s = sample_stencil(field, at, h, params);
  const double kappa = params.compton_wavenumber();
  return fd_box(s, h) + kappa * kappa * s.c;
}

template <class F, class G>
Complex qhj_field_residual_at(F&& action, G&& potentials, const SpacetimePoint& at, double h,
                              const PhysParams& params) {
  const auto s = sample_stencil(action, at, h, params);
  const double ht = h / params.c;
  const Complex st = (s.tp - s.tm) / (2.0 * ht);
  const Complex sx = (s.xp - s.xm) / (2.0 * h);
  const Complex sy = (s.yp - s.ym) / (2.0 * h);
  const Complex sz = (s.zp - s.zm) / (2.0 * h);
  const ExternalFieldSample ua = potentials(at);
  const Complex et = st + ua.U;
  const Complex gx = sx - ua.A.x() / params.c;
  const Complex gy = sy - ua.A.y() / params.c;
  const Complex gz = sz - ua.A.z() / params.c;
  const double mc = params.m * params.c;
  return et * et / (params.c * params.c) - (gx * gx + gy * gy + gz * gz) -
         kImag * params.hbar * fd_box(s, h) - mc * mc;
}

inline ExternalFieldSample zero_potentials(const SpacetimePoint&) { return {}; }

template <class G>
double lorenz_gauge_residual_at(G&& potentials, const SpacetimePoint& at, double h,
                                const PhysParams& params) {
  const double ht = h / params.c;
  const auto at_t = [&](double dt) { return SpacetimePoint{at.t + dt, at.x}; };
  const auto at_x = [&](int axis, double dx) {
    Eigen::Vector3d x = at.x;
    x[axis] += dx;
    return SpacetimePoint{at.t, x};
  };
  const double du = (potentials(at_t(ht)).U - potentials(at_t(-ht)).U) / (2.0 * ht);
  double div_a = 0.0;
  for (int axis = 0; axis < 3; ++axis)
    div_a += (potentials(at_x(axis, h)).A[axis] - potentials(at_x(axis, -h)).A[axis]) / (2.0 * h);
  return du / params.c + div_a;
}

// Run a pointwise residual over the halving refinement ladder.
template <class R>
ResidualReport refine(R&& residual_at, const StencilConfig& cfg) {
  std::vector<std::pair<double, double>> per_level;
  per_level.reserve(cfg.refinement_levels);
  double h = cfg.h;
  for (int level = 0; level < cfg.refinement_levels; ++level, h *= 0.5)
    per_level.emplace_back(h, residual_at(h));
  return finalize_report(std::move(per_level));
}

}  // namespace detail

// Residual of the Klein-Gordon equation, box(Psi) + kappa^2 Psi, by central
// second differences, over the refinement ladder h, h/2, ...
template <class F>
ResidualReport kg_residual(F&& field, const SpacetimePoint& at, const StencilConfig& cfg = {},
                           const PhysParams& params = {}) {
  cfg.validate();
  params.validate();
  return detail::refine(
      [&](double h) { return std::abs(detail::kg_residual_at(field, at, h, params)); }, cfg);
}

// Residual of the QHJ equation,
//   (1/c^2)(dS/dt)^2 - (grad S)^2 - i hbar box(S) - m^2 c^2,
// first derivatives central, box by central second differences.
template <class F>
ResidualReport qhj_residual(F&& action, const SpacetimePoint& at, const StencilConfig& cfg = {},
                            const PhysParams& params = {}) {
  cfg.validate();
  params.validate();
  return detail::refine(
      [&](double h) {
        return std::abs(
            detail::qhj_field_residual_at(action, detail::zero_potentials, at, h, params));
      },
      cfg);
}

// Field-version QHJ residual,
//   (1/c^2)(dS/dt + U)^2 - (grad S - A/c)^2 - m^2 c^2 - i hbar box(S);
// with U = 0, A = 0 this is the same code path as qhj_residual.
template <class F, class G>
ResidualReport qhj_field_residual(F&& action, G&& potentials, const SpacetimePoint& at,
                                  const StencilConfig& cfg = {}, const PhysParams& params = {}) {
  cfg.validate();
  params.validate();
  return detail::refine(
      [&](double h) {
        return std::abs(detail::qhj_field_residual_at(action, potentials, at, h, params));
      },
      cfg);
}

// Residual of the Lorenz gauge condition (1/c) dU/dt + div A.
template <class G>
ResidualReport lorenz_gauge_residual(G&& potentials, const SpacetimePoint& at,
                                     const StencilConfig& cfg = {}, const PhysParams& params = {}) {
  cfg.validate();
  params.validate();
  return detail::refine(
      [&](double h) { return std::abs(detail::lorenz_gauge_residual_at(potentials, at, h, params)); },
      cfg);
}

// Gradient-based energy and momentum E = -dS/dt, p = grad S by central
// differences at the configured base spacing (no refinement).
template <class F>
ComplexEnergyMomentum energy_momentum_field(F&& action, const SpacetimePoint& at,
                                            const StencilConfig& cfg = {},
                                            const PhysParams& params = {}) {
  cfg.validate();
  params.validate();
  const auto s = detail::sample_stencil(action, at, cfg.h, params);
  const double ht = cfg.h / params.c;
  ComplexEnergyMomentum out;
  out.energy = -(s.tp - s.tm) / (2.0 * ht);
  out.momentum.x() = (s.xp - s.xm) / (2.0 * cfg.h);
  out.momentum.y() = (s.yp - s.ym) / (2.0 * cfg.h);
  out.momentum.z() = (s.zp - s.zm) / (2.0 * cfg.h);
  return out;
}

// Time average of -dS/dt over one rest period T = 2 pi / w0 at a fixed
// spatial point: trapezoidal mean of central differences on the uniform
// grid t_j = j T / N.  The periodic part of S telescopes out of the sum
// exactly, so the result equals m c^2 to rounding accuracy.
template <class F>
Complex average_energy(F&& action, const Eigen::Vector3d& at, const PhysParams& params = {},
                       int quadrature_nodes = 256) {
  params.validate();
  if (params.m <= 0.0)
    throw KinematicsError("average_energy: rest period undefined for m = 0");
  if (quadrature_nodes < 2) throw ConfigError("average_energy: need at least 2 quadrature nodes");
  const int n = quadrature_nodes;
  const double period = 2.0 * std::numbers::pi / params.rest_frequency();
  const double dt = period / n;
  Complex acc{0.0, 0.0};
  for (int j = 0; j < n; ++j) {
    acc += action(SpacetimePoint{(j + 1) * dt, at});
    acc -= action(SpacetimePoint{(j - 1) * dt, at});
  }
  return -acc / (2.0 * dt * n);
}

// Experimental volume average of -dS/dt over the ball r <= radius at fixed
// time, assuming a spherically symmetric action (sampled along the x-axis);
// radial trapezoid with 4 pi r^2 dr weight, time derivative by a central
// difference of half-width fd_step.
template <class F>
Complex average_energy_spatial(F&& action, double t, double radius, const PhysParams& params = {},
                               int radial_nodes = 256, double fd_step = 1e-4) {
  params.validate();
  if (!(radius > 0.0)) throw ConfigError("average_energy_spatial: radius must be positive");
  if (radial_nodes < 2) throw ConfigError("average_energy_spatial: need at least 2 radial nodes");
  const double dr = radius / radial_nodes;
  Complex acc{0.0, 0.0};
  double weight_sum = 0.0;
  for (int j = 0; j <= radial_nodes; ++j) {
    const double r = j * dr;
    const double w = (j == 0 || j == radial_nodes) ? 0.5 : 1.0;
    const Eigen::Vector3d x(r, 0.0, 0.0);
    const Complex st = (action(SpacetimePoint{t + fd_step, x}) -
                        action(SpacetimePoint{t - fd_step, x})) /
                       (2.0 * fd_step);
    acc += -st * (w * r * r);
    weight_sum += w * r * r;
  }
  return acc / weight_sum;
}

// Fourier analysis of w(t) = S(t) + m c^2 t at a fixed spatial point over
// n_periods rest periods: dominant folded frequency and the 2w0/w0 harmonic
// power ratio.  Implemented in verify.cpp (needs the DFT).
Eigen::VectorXcd sample_action_oscillation(const std::vector<Complex>& action_samples,
                                           double rest_energy, double dt);
SpectrumReport spectrum_from_samples(const Eigen::VectorXcd& w, int n_periods,
                                     const PhysParams& params);

template <class F>
SpectrumReport far_field_spectrum(F&& action, const Eigen::Vector3d& at,
                                  const PhysParams& params = {}, int n_periods = 16,
                                  int samples_per_period = 64) {
  params.validate();
  if (params.m <= 0.0)
    throw KinematicsError("far_field_spectrum: rest period undefined for m = 0");
  if (n_periods < 8) throw ConfigError("far_field_spectrum: need at least 8 periods");
  if (samples_per_period < 32)
    throw ConfigError("far_field_spectrum: need at least 32 samples per period");
  const int n = n_periods * samples_per_period;
  const double period = 2.0 * std::numbers::pi / params.rest_frequency();
  const double dt = period / samples_per_period;
  std::vector<Complex> samples(n);
  for (int j = 0; j < n; ++j) samples[j] = action(SpacetimePoint{j * dt, at});
  return spectrum_from_samples(sample_action_oscillation(samples, params.rest_energy(), dt),
                               n_periods, params);
}

// Mismatch of dS/dt and dS/dx between x = 0 and x = d at fixed (y, z, t),
// central differences at the configured base spacing.
template <class F>
BoundaryMismatch boundary_condition_check(F&& action, double d, double y, double z, double t,
                                          const StencilConfig& cfg = {},
                                          const PhysParams& params = {}) {
  cfg.validate();
  params.validate();
  if (!(d > 0.0)) throw ConfigError("boundary_condition_check: d must be positive");
  const double ht = cfg.h / params.c;
  const auto grad_tx = [&](double x0) {
    const Eigen::Vector3d x(x0, y, z);
    const Complex st = (action(SpacetimePoint{t + ht, x}) - action(SpacetimePoint{t - ht, x})) /
                       (2.0 * ht);
    const Complex sx = (action(SpacetimePoint{t, Eigen::Vector3d(x0 + cfg.h, y, z)}) -
                        action(SpacetimePoint{t, Eigen::Vector3d(x0 - cfg.h, y, z)})) /
                       (2.0 * cfg.h);
    return std::pair<Complex, Complex>{st, sx};
  };
  const auto [st0, sx0] = grad_tx(0.0);
  const auto [std_, sxd] = grad_tx(d);
  return BoundaryMismatch{std::abs(st0 - std_), std::abs(sx0 - sxd)};
}

}  // namespace qhjb
