#pragma once

#include <Eigen/Core>

#include "qhjb/types.hpp"

namespace qhjb {

// A field sample is just the complex value: dimensionless for Psi, action
// units for S.
using ComplexSample = Complex;

// Spatial mode factor B_ln(x) = j_l(q r) P_l^n(cos theta) e^{i n phi} with
// radial wavenumber q (sqrt(3) * kappa for the exact breather).  Exposing q
// lets callers build detuned fields for negative-control experiments.  At
// r = 0 the convention theta = phi = 0 is used; it never changes a value
// because j_l(0) = 0 for l >= 1.
Complex mode_factor(const Eigen::Vector3d& x, const ModeIndex& mode, double q);

// Two-term rest-frame breather
//   Psi = e^{-i w0 t} + alpha e^{-2 i w0 t} B_ln(x),  w0 = m c^2 / hbar.
// Requires an unboosted, trainless spec.
Complex psi_rest(const SpacetimePoint& p, const BreatherSpec& spec,
                 const PhysParams& params = {});

// Rest-frame action-function
//   S = -m c^2 t - i hbar Log(1 + alpha e^{-i w0 t} B_ln(x))
// with the principal branch Log.  Throws BranchSafetyError if |alpha| >= 1 or
// the pointwise winding guard |alpha B_ln(x)| >= 1 fails.
Complex action_rest(const SpacetimePoint& p, const BreatherSpec& spec,
                    const PhysParams& params = {});

// Far-field asymptote of action_rest (first order in alpha B):
//   S = -m c^2 t - i alpha hbar e^{-i w0 t} B_ln(x).
// The discrepancy against action_rest is O(|alpha B|^2 hbar).
Complex action_far(const SpacetimePoint& p, const BreatherSpec& spec,
                   const PhysParams& params = {});

// Boosted fields: the rest-frame expressions evaluated at the Lorentz-mapped
// event, so the temporal factor becomes the de Broglie wave exp[i(-Et+px)/hbar]
// with (E, p) the classical energy and momentum of the boost.  action_moving
// shares the action_rest code path bit for bit.
Complex psi_moving(const SpacetimePoint& p, const BreatherSpec& spec,
                   const PhysParams& params = {});
Complex action_moving(const SpacetimePoint& p, const BreatherSpec& spec,
                      const PhysParams& params = {});

// Symmetric partial sum of the d-periodic copy lattice,
//   sum_{k=-K}^{K} j_0(sqrt(3) kappa r_k),
//   r_k = sqrt(gamma^2 (x - v t - k d)^2 + y^2 + z^2),
// which at v = 0 reduces to the standing lattice r_k = sqrt((x-kd)^2+y^2+z^2).
// The tail of the full series is O(1/(kappa d gamma K)).
double train_mode_sum(const SpacetimePoint& p, const BreatherSpec& spec,
                      const PhysParams& params = {});

// Action of the d-periodic breather train,
//   S = -E t + p x - i hbar Log(1 + alpha e^{i(-Et+px)/hbar} * train_mode_sum),
// covering both the standing (v = 0) and moving cases in one code path; the
// co-moving lattice spacing is the dilated period gamma d.  Throws
// BranchSafetyError when |alpha * sum| >= 1 at the requested point.
Complex action_train(const SpacetimePoint& p, const BreatherSpec& spec,
                     const PhysParams& params = {});

// Wave-function of the train, exp(i S_train / hbar) written in closed form:
//   Psi = e^{i phi} (1 + alpha e^{i phi} * train_mode_sum),  phi = (-Et+px)/hbar.
// Unlike the action it needs no branch guard, and the truncated sum is still
// an exact Klein-Gordon solution (a finite superposition of exact terms).
Complex psi_train(const SpacetimePoint& p, const BreatherSpec& spec,
                  const PhysParams& params = {});

// Bohr-Sommerfeld compatibility of interval length d and momentum p:
// nu = d p / (2 pi hbar), accepted as the integer n = round(nu) >= 1 when
// |nu - round(nu)| <= tol.
QuantizationReport quantization_check(double d, double p_momentum,
                                      const PhysParams& params = {}, double tol = 1e-9);

}  // namespace qhjb
