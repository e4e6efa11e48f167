#include "qhjb/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Core>

namespace qhjb {

std::vector<SpacetimePoint> sample_shell_points(int count, double r_lo, double r_hi, double t_lo,
                                                double t_hi, std::uint64_t seed) {
  if (count < 1) throw std::domain_error("sample_shell_points: count must be positive");
  if (!(0.0 <= r_lo && r_lo <= r_hi))
    throw std::domain_error("sample_shell_points: need 0 <= r_lo <= r_hi");
  DeterministicRng rng(seed);
  std::vector<SpacetimePoint> points;
  points.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double r = rng.uniform(r_lo, r_hi);
    const double cos_theta = rng.uniform(-1.0, 1.0);
    const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
    const Eigen::Vector3d x(r * sin_theta * std::cos(phi), r * sin_theta * std::sin(phi),
                            r * cos_theta);
    points.push_back(SpacetimePoint{rng.uniform(t_lo, t_hi), x});
  }
  return points;
}

}  // namespace qhjb
