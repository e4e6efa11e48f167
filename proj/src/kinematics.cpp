#include "qhjb/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace qhjb {

SpacetimePoint lorentz_map(const SpacetimePoint& p, const Boost& boost,
                           const PhysParams& params) {
  params.validate();
  const double g = boost.gamma(params);
  const double v = boost.v;
  const double c2 = params.c * params.c;
  SpacetimePoint out;
  out.t = g * (p.t - p.x.x() * v / c2);
  out.x = Eigen::Vector3d(g * (p.x.x() - v * p.t), p.x.y(), p.x.z());
  return out;
}

EnergyMomentum energy_momentum_classical(const Boost& boost, const PhysParams& params) {
  params.validate();
  if (params.m <= 0.0)
    throw KinematicsError("energy_momentum_classical: massless particle has no (E, p) "
                          "determined by velocity alone");
  const double g = boost.gamma(params);
  EnergyMomentum em;
  em.energy = g * params.m * params.c * params.c;
  em.momentum = g * params.m * boost.v;
  return em;
}

double dilated_train_period(double d, const Boost& boost) {
  if (!(d > 0.0)) throw std::domain_error("dilated_train_period: d must be positive");
  return boost.gamma() * d;
}

double boost_velocity_for_momentum(double p, const PhysParams& params) {
  params.validate();
  const double mc = params.m * params.c;
  double v = p * params.c / std::sqrt(p * p + mc * mc);
  // for |p| >> mc the quotient can round to +-c; keep the result strictly
  // subluminal so it is always a valid Boost
  if (std::abs(v) >= params.c) v = std::nextafter(params.c, 0.0) * (v > 0 ? 1.0 : -1.0);
  return v;
}

}  // namespace qhjb
