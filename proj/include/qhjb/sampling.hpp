#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qhjb/types.hpp"

namespace qhjb {

// Seeded mt19937_64 mapped to doubles via the top 53 bits; the sequence is
// fixed by the C++ standard, so sample sets are identical across platforms
// and library versions (std::uniform_real_distribution would not be).
class DeterministicRng {
public:
  explicit DeterministicRng(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
  std::mt19937_64 gen_;
};

// Random events with radius uniform in [r_lo, r_hi] (uniform in radius, not
// in volume, so near-core and far-field shells are probed equally), direction
// uniform on the sphere, and time uniform in [t_lo, t_hi].
std::vector<SpacetimePoint> sample_shell_points(int count, double r_lo, double r_hi, double t_lo,
                                                double t_hi, std::uint64_t seed);

}  // namespace qhjb
