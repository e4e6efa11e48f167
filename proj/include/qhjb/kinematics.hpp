#pragma once

#include "qhjb/types.hpp"

namespace qhjb {

// Classical energy and momentum carried by a boosted breather.  Momentum is
// the x-component; the transverse components vanish for a boost along x.
struct EnergyMomentum {
  double energy = 0.0;
  double momentum = 0.0;
};

// Apply a Lorentz boost along +x with velocity `boost.v`:
//   t' = gamma (t - x v / c^2),  x' = gamma (x - v t),  y' = y,  z' = z.
// The returned point holds the primed (co-moving frame) coordinates of the
// given lab-frame event.  Throws KinematicsError for |v| >= c.
SpacetimePoint lorentz_map(const SpacetimePoint& p, const Boost& boost,
                           const PhysParams& params = {});

// E = gamma m c^2 and p = gamma m v for the given boost.
EnergyMomentum energy_momentum_classical(const Boost& boost, const PhysParams& params = {});

// Lattice spacing used in the co-moving coordinates of a moving train: the
// lab-frame period d must be dilated to gamma * d so that after the Lorentz
// contraction the train keeps its spatial period d.
double dilated_train_period(double d, const Boost& boost);

// Invert p = gamma m v:  v = p c / sqrt(p^2 + m^2 c^2).  Always |v| < c.
double boost_velocity_for_momentum(double p, const PhysParams& params = {});

}  // namespace qhjb
