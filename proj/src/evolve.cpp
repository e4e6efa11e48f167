#include "qhjb/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qhjb/fourier.hpp"
#include "qhjb/specfun.hpp"

namespace qhjb {

namespace {

void require_rest_mode(const BreatherSpec& spec, const char* who) {
  spec.validate();
  if (!spec.mode.spherical() || !spec.boost.is_identity() || spec.train_period)
    throw std::domain_error(std::string(who) +
                            ": evolution supports the rest-frame l = n = 0 single breather only");
}

// Leapfrog update of the interior plus boundary clamps, shared by step() and
// the trial step inside discrete_energy().
Eigen::VectorXcd advance(const EvolutionState& state, const RadialGrid& grid,
                         const PhysParams& params) {
  const int n = grid.cells;
  const double dr = grid.dr();
  const double dt = grid.dt(params);
  const double cdt2 = (params.c * dt) * (params.c * dt);
  const double kappa = params.compton_wavenumber();
  const Eigen::VectorXcd& u = state.u_curr;
  Eigen::VectorXcd next(n + 1);
  next[0] = Complex{0.0, 0.0};
  for (int i = 1; i < n; ++i) {
    const Complex u_rr = (u[i + 1] - 2.0 * u[i] + u[i - 1]) / (dr * dr);
    next[i] = 2.0 * u[i] - state.u_prev[i] + cdt2 * (u_rr - kappa * kappa * u[i]);
  }
  next[n] = reduced_mode(grid.outer_radius, state.time + dt, state.spec, params);
  return next;
}

}  // namespace

Complex reduced_mode(double r, double t, const BreatherSpec& spec, const PhysParams& params) {
  const double w0 = params.rest_frequency();
  const double q = std::sqrt(3.0) * params.compton_wavenumber();
  return r * spec.alpha * std::polar(1.0, -2.0 * w0 * t) * spherical_bessel_j(0, q * r);
}

double analytic_mode_energy(const BreatherSpec& spec, const RadialGrid& grid,
                            const PhysParams& params) {
  const double a = std::sqrt(3.0) * params.compton_wavenumber();
  const double r_max = grid.outer_radius;
  const double s = std::sin(2.0 * a * r_max) / (4.0 * a);
  const double alpha2 = std::norm(spec.alpha);
  return alpha2 * ((5.0 / 3.0) * (r_max / 2.0 - s) + (r_max / 2.0 + s));
}

EvolutionState init_from_breather(const BreatherSpec& spec, const RadialGrid& grid,
                                  const PhysParams& params) {
  require_rest_mode(spec, "init_from_breather");
  grid.validate();
  params.validate();
  if (params.m <= 0.0)
    throw KinematicsError("init_from_breather: massless mode has no breather structure");
  const int n = grid.cells;
  const double dr = grid.dr();
  const double dt = grid.dt(params);
  EvolutionState state;
  state.spec = spec;
  state.u_curr.resize(n + 1);
  state.u_prev.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    state.u_curr[i] = reduced_mode(i * dr, 0.0, spec, params);
    state.u_prev[i] = reduced_mode(i * dr, -dt, spec, params);
  }
  state.u_curr[0] = state.u_prev[0] = Complex{0.0, 0.0};
  return state;
}

void step(EvolutionState& state, const RadialGrid& grid, const PhysParams& params) {
  grid.validate();
  Eigen::VectorXcd next = advance(state, grid, params);
  state.u_prev = std::move(state.u_curr);
  state.u_curr = std::move(next);
  ++state.step_index;
  state.time += grid.dt(params);
}

double discrete_energy(const EvolutionState& state, const RadialGrid& grid,
                       const PhysParams& params) {
  const int n = grid.cells;
  const double dr = grid.dr();
  const double dt = grid.dt(params);
  const double kappa = params.compton_wavenumber();
  const Eigen::VectorXcd next = advance(state, grid, params);
  double kinetic = 0.0;
  double potential = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double w = (i == 0 || i == n) ? 0.5 : 1.0;
    const double ut2 = std::norm((next[i] - state.u_prev[i]) / (2.0 * dt));
    kinetic += w * ut2;
    potential += w * kappa * kappa * std::norm(state.u_curr[i]);
  }
  double gradient = 0.0;
  for (int i = 0; i < n; ++i)
    gradient += std::norm((state.u_curr[i + 1] - state.u_curr[i]) / dr);
  return (kinetic / (params.c * params.c) + gradient + potential) * dr;
}

double core_norm(const EvolutionState& state, const RadialGrid& grid, const PhysParams& params) {
  const double dr = grid.dr();
  const double r_core = 5.0 / params.compton_wavenumber();
  const int i_max = std::min(grid.cells, static_cast<int>(std::floor(r_core / dr)));
  double acc = 0.0;
  for (int i = 0; i <= i_max; ++i) {
    const double w = (i == 0 || i == i_max) ? 0.5 : 1.0;
    acc += w * std::norm(state.u_curr[i]);
  }
  return acc * dr;
}

EvolutionRecord evolve_breather(EvolutionState& state, const RadialGrid& grid, int n_periods,
                                const PhysParams& params) {
  grid.validate();
  params.validate();
  if (n_periods < 1) throw ConfigError("evolve_breather: need at least one period");
  const double t2 = std::numbers::pi / params.rest_frequency();  // mode period 2 pi / (2 w0)
  const double dt = grid.dt(params);
  const long steps = std::lround(std::ceil(n_periods * t2 / dt));
  const double kappa = params.compton_wavenumber();
  const int probe = std::min(grid.cells - 1,
                             static_cast<int>(std::lround((1.0 / kappa) / grid.dr())));
  EvolutionRecord record;
  record.probe_radius = probe * grid.dr();
  record.sample_dt = dt;
  record.time.reserve(steps + 1);
  record.core_norm.reserve(steps + 1);
  record.discrete_energy.reserve(steps + 1);
  record.probe.reserve(steps + 1);
  for (long k = 0; k <= steps; ++k) {
    record.time.push_back(state.time);
    record.core_norm.push_back(core_norm(state, grid, params));
    record.discrete_energy.push_back(discrete_energy(state, grid, params));
    record.probe.push_back(state.u_curr[probe]);
    if (k < steps) step(state, grid, params);
  }
  return record;
}

EvolutionDiagnostics run_diagnostics(const EvolutionRecord& record,
                                     const EvolutionState& final_state, const RadialGrid& grid,
                                     const PhysParams& params) {
  const std::size_t n = record.probe.size();
  if (n < 2 || record.sample_dt <= 0.0)
    throw DiagnosticsError("run_diagnostics: empty or unsampled record");
  const double t2 = std::numbers::pi / params.rest_frequency();
  const double duration = record.sample_dt * static_cast<double>(n - 1);
  const double samples_per_period = t2 / record.sample_dt;
  if (duration < 16.0 * t2 || samples_per_period < 32.0)
    throw DiagnosticsError(
        "run_diagnostics: need >= 16 recorded periods at >= 32 samples per period");

  EvolutionDiagnostics diag;

  Eigen::VectorXcd series(static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j < n; ++j) series[static_cast<Eigen::Index>(j)] = record.probe[j];
  if (series.cwiseAbs().maxCoeff() > 0.0) {
    const Eigen::VectorXd power = folded_power(dft(series));
    const double bin = 2.0 * std::numbers::pi / (record.sample_dt * static_cast<double>(n));
    diag.measured_frequency = static_cast<double>(dominant_bin(power)) * bin;
  }

  const double norm0 = record.core_norm.front();
  const double energy0 = record.discrete_energy.front();
  diag.core_norm_drift =
      norm0 > 0.0 ? std::abs(record.core_norm.back() - norm0) / norm0 : 0.0;
  diag.energy_drift =
      energy0 > 0.0 ? std::abs(record.discrete_energy.back() - energy0) / energy0 : 0.0;

  double err2 = 0.0;
  double ref2 = 0.0;
  for (int i = 0; i <= grid.cells; ++i) {
    const double r = i * grid.dr();
    const double envelope =
        std::abs(reduced_mode(r, 0.0, final_state.spec, params));
    const double diff = std::abs(final_state.u_curr[i]) - envelope;
    err2 += diff * diff;
    ref2 += envelope * envelope;
  }
  diag.profile_error = ref2 > 0.0 ? std::sqrt(err2 / ref2) : 0.0;
  return diag;
}

}  // namespace qhjb
