#pragma once

#include <vector>

#include <Eigen/Core>

#include "qhjb/types.hpp"

namespace qhjb {

// Uniform radial grid for the reduced field u = r Psi_2 on [0, R]:
// dr = R / cells, dt = cfl * dr / c.
struct RadialGrid {
  double outer_radius = 20.0;
  int cells = 1024;
  double cfl = 0.5;

  double dr() const { return outer_radius / cells; }
  double dt(const PhysParams& params = {}) const { return cfl * dr() / params.c; }

  void validate() const {
    if (!(outer_radius > 0.0)) throw ConfigError("RadialGrid: outer radius must be positive");
    if (cells < 8) throw ConfigError("RadialGrid: need at least 8 cells");
    if (!(cfl > 0.0) || cfl > 0.9)
      throw ConfigError("RadialGrid: CFL number must satisfy 0 < cfl <= 0.9");
  }
};

// Two time levels of u on the nodes r_i = i dr, i = 0..cells, plus the spec
// the run was initialized from (the outer boundary clamp needs it).
struct EvolutionState {
  Eigen::VectorXcd u_prev;  // time t - dt
  Eigen::VectorXcd u_curr;  // time t
  int step_index = 0;
  double time = 0.0;
  BreatherSpec spec;
};

// Per-step diagnostics history recorded while evolving.
struct EvolutionRecord {
  std::vector<double> time;
  std::vector<double> core_norm;        // int_0^{5/kappa} |u|^2 dr (trapezoid)
  std::vector<double> discrete_energy;  // leapfrog energy of the pair at each step
  std::vector<Complex> probe;           // u at the probe node
  double probe_radius = 0.0;
  double sample_dt = 0.0;
};

// Summary of a recorded run.
struct EvolutionDiagnostics {
  double measured_frequency = 0.0;  // dominant folded FFT frequency of the probe
  double core_norm_drift = 0.0;     // relative change of core_norm over the run
  double energy_drift = 0.0;        // relative change of discrete_energy
  double profile_error = 0.0;       // relative L2 error of the final |u| envelope
};

// Reduced analytic mode u(r, t) = r alpha e^{-2 i w0 t} j0(sqrt(3) kappa r);
// the uniform first breather term is excluded (it would make r Psi unbounded)
// and is re-added analytically by diagnostics that need the full action.
Complex reduced_mode(double r, double t, const BreatherSpec& spec, const PhysParams& params = {});

// Closed-form energy integral of the mode on [0, R]:
//   alpha^2 [ (5/3)(R/2 - s) + (R/2 + s) ],  s = sin(2 sqrt(3) kappa R) / (4 sqrt(3) kappa),
// the continuum value of the discrete energy below.
double analytic_mode_energy(const BreatherSpec& spec, const RadialGrid& grid,
                            const PhysParams& params = {});

// Initialize u at t = 0 and t = -dt from the analytic mode.  Requires the
// spherically symmetric rest-frame single-breather spec.
EvolutionState init_from_breather(const BreatherSpec& spec, const RadialGrid& grid,
                                  const PhysParams& params = {});

// One leapfrog update
//   u^{n+1} = 2 u^n - u^{n-1} + (c dt)^2 (u_rr - kappa^2 u^n),
// with u(0) = 0 and the Dirichlet clamp u(R) = analytic mode value.
void step(EvolutionState& state, const RadialGrid& grid, const PhysParams& params = {});

// Discrete energy of the current pair: |u_t|^2/c^2 + |u_r|^2 + kappa^2 |u|^2
// integrated over the grid, with u_t centered via one trial step ahead.
double discrete_energy(const EvolutionState& state, const RadialGrid& grid,
                       const PhysParams& params = {});

// Trapezoid integral of |u|^2 over r <= 5/kappa.
double core_norm(const EvolutionState& state, const RadialGrid& grid,
                 const PhysParams& params = {});

// Step the state for n_periods mode periods T2 = pi / w0, recording
// diagnostics every step; the probe sits at the node nearest 1/kappa.
EvolutionRecord evolve_breather(EvolutionState& state, const RadialGrid& grid, int n_periods,
                                const PhysParams& params = {});

// Summarize a run: FFT peak of the probe series, relative core-norm and
// energy drifts, and the final |u| envelope error against the analytic mode.
// Requires >= 16 recorded periods at >= 32 samples per period.
EvolutionDiagnostics run_diagnostics(const EvolutionRecord& record, const EvolutionState& final_state,
                                     const RadialGrid& grid, const PhysParams& params = {});

}  // namespace qhjb
