#include "qhjb/fields.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qhjb/kinematics.hpp"
#include "qhjb/specfun.hpp"

namespace qhjb {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_massive(const PhysParams& params, const char* who) {
  params.validate();
  if (params.m <= 0.0)
    throw KinematicsError(std::string(who) +
                          ": the massless limit m -> 0 at fixed E is not parameterized by "
                          "this construction; use m > 0");
}

void require_single(const BreatherSpec& spec, const char* who) {
  spec.validate();
  if (spec.train_period)
    throw std::domain_error(std::string(who) + ": spec describes a train; use the train constructors");
}

void require_rest(const BreatherSpec& spec, const char* who) {
  require_single(spec, who);
  if (!spec.boost.is_identity())
    throw std::domain_error(std::string(who) + ": spec is boosted; use the moving-frame constructors");
}

// Strip the boost so the rest-frame constructors accept the spec.
BreatherSpec rest_copy(const BreatherSpec& spec) {
  BreatherSpec rest = spec;
  rest.boost = Boost{};
  return rest;
}

void check_winding(const Complex& u, const char* who) {
  if (std::abs(u) >= 1.0)
    throw BranchSafetyError(std::string(who) +
                            ": |alpha * (mode sum)| >= 1 at the requested point; the "
                            "principal-branch logarithm would wind");
}

// Plane-wave phase (-E t + p x)/hbar of the boosted temporal factor; reduces
// to -w0 t at rest.
double de_broglie_phase(const SpacetimePoint& p, const BreatherSpec& spec,
                        const PhysParams& params) {
  const EnergyMomentum em = energy_momentum_classical(spec.boost, params);
  return (-em.energy * p.t + em.momentum * p.x.x()) / params.hbar;
}

}  // namespace

Complex mode_factor(const Eigen::Vector3d& x, const ModeIndex& mode, double q) {
  mode.validate();
  const double r = x.norm();
  const double jl = spherical_bessel_j(mode.l, q * r);
  if (mode.l == 0) return Complex{jl, 0.0};
  if (r == 0.0) return Complex{0.0, 0.0};  // j_l(0) = 0 for l >= 1
  const double cos_theta = x.z() / r;
  const double phi = std::atan2(x.y(), x.x());
  const double pln = assoc_legendre_p(mode.l, mode.n, cos_theta);
  return jl * pln * std::polar(1.0, mode.n * phi);
}

Complex psi_rest(const SpacetimePoint& p, const BreatherSpec& spec, const PhysParams& params) {
  require_rest(spec, "psi_rest");
  require_massive(params, "psi_rest");
  const double w0 = params.rest_frequency();
  const double q = std::sqrt(3.0) * params.compton_wavenumber();
  return std::polar(1.0, -w0 * p.t) +
         spec.alpha * std::polar(1.0, -2.0 * w0 * p.t) * mode_factor(p.x, spec.mode, q);
}

Complex action_rest(const SpacetimePoint& p, const BreatherSpec& spec, const PhysParams& params) {
  require_rest(spec, "action_rest");
  require_massive(params, "action_rest");
  if (std::abs(spec.alpha) >= 1.0)
    throw BranchSafetyError("action_rest: |alpha| must be < 1 for a winding-free logarithm");
  const double w0 = params.rest_frequency();
  const double q = std::sqrt(3.0) * params.compton_wavenumber();
  const Complex u =
      spec.alpha * std::polar(1.0, -w0 * p.t) * mode_factor(p.x, spec.mode, q);
  check_winding(u, "action_rest");
  return -params.rest_energy() * p.t - kI * params.hbar * std::log(1.0 + u);
}

Complex action_far(const SpacetimePoint& p, const BreatherSpec& spec, const PhysParams& params) {
  require_rest(spec, "action_far");
  require_massive(params, "action_far");
  if (std::abs(spec.alpha) >= 1.0)
    throw BranchSafetyError("action_far: |alpha| must be < 1 for a winding-free logarithm");
  const double w0 = params.rest_frequency();
  const double q = std::sqrt(3.0) * params.compton_wavenumber();
  const Complex u =
      spec.alpha * std::polar(1.0, -w0 * p.t) * mode_factor(p.x, spec.mode, q);
  return -params.rest_energy() * p.t - kI * params.hbar * u;
}

Complex psi_moving(const SpacetimePoint& p, const BreatherSpec& spec, const PhysParams& params) {
  require_single(spec, "psi_moving");
  return psi_rest(lorentz_map(p, spec.boost, params), rest_copy(spec), params);
}

Complex action_moving(const SpacetimePoint& p, const BreatherSpec& spec,
                      const PhysParams& params) {
  require_single(spec, "action_moving");
  return action_rest(lorentz_map(p, spec.boost, params), rest_copy(spec), params);
}

double train_mode_sum(const SpacetimePoint& p, const BreatherSpec& spec,
                      const PhysParams& params) {
  spec.validate();
  require_massive(params, "train_mode_sum");
  if (!spec.train_period)
    throw std::domain_error("train_mode_sum: spec has no train period d");
  if (!spec.mode.spherical())
    throw std::domain_error("train_mode_sum: trains are defined for the l = n = 0 mode only");
  const double d = *spec.train_period;
  const double g = spec.boost.gamma(params);
  const double q = std::sqrt(3.0) * params.compton_wavenumber();
  const double v = spec.boost.v;
  double sum = 0.0;
  for (int k = -spec.truncation; k <= spec.truncation; ++k) {
    const double xi = g * (p.x.x() - v * p.t - k * d);
    const double rk = std::sqrt(xi * xi + p.x.y() * p.x.y() + p.x.z() * p.x.z());
    sum += spherical_bessel_j(0, q * rk);
  }
  return sum;
}

Complex action_train(const SpacetimePoint& p, const BreatherSpec& spec,
                     const PhysParams& params) {
  const double sum = train_mode_sum(p, spec, params);
  const double phi = de_broglie_phase(p, spec, params);
  const Complex u = spec.alpha * std::polar(1.0, phi) * sum;
  check_winding(u, "action_train");
  return params.hbar * phi - kI * params.hbar * std::log(1.0 + u);
}

Complex psi_train(const SpacetimePoint& p, const BreatherSpec& spec, const PhysParams& params) {
  const double sum = train_mode_sum(p, spec, params);
  const double phi = de_broglie_phase(p, spec, params);
  const Complex plane = std::polar(1.0, phi);
  return plane * (1.0 + spec.alpha * plane * sum);
}

QuantizationReport quantization_check(double d, double p_momentum, const PhysParams& params,
                                      double tol) {
  params.validate();
  if (!(d > 0.0)) throw std::domain_error("quantization_check: d must be positive");
  if (!(p_momentum > 0.0)) throw std::domain_error("quantization_check: p must be positive");
  const double nu = d * p_momentum / (2.0 * std::numbers::pi * params.hbar);
  const double nearest = std::round(nu);
  QuantizationReport report;
  report.mismatch = std::abs(nu - nearest);
  if (report.mismatch <= tol && nearest >= 1.0) report.n_exact = static_cast<int>(nearest);
  return report;
}

}  // namespace qhjb
