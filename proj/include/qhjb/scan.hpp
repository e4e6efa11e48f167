#pragma once

#include <numbers>
#include <vector>

#include "qhjb/types.hpp"
#include "qhjb/verify.hpp"

namespace qhjb {

// One row of the Bohr-Sommerfeld scan: momentum, fractional mismatch of
// d p / (2 pi hbar) from the nearest integer, boundary-condition mismatches
// of the moving train at that momentum, and the accepted n when on-shell.
struct QuantizeRow {
  double p = 0.0;
  double mismatch = 0.0;
  double dt_mismatch = 0.0;
  double dx_mismatch = 0.0;
  std::optional<int> n{};
};

// Scan configuration.  The probe point (y, z, t) sits off the lattice line so
// the train sum has a smooth, non-degenerate gradient there.
struct QuantizeScanConfig {
  double p_min = 0.5;
  double p_max = 3.5;
  int steps = 61;
  double d = 2.0 * std::numbers::pi;
  Complex alpha{0.5, 0.0};
  int truncation = 64;
  double tol = 1e-9;
  double y = 0.5;
  double z = 0.0;
  double t = 0.1;
  StencilConfig stencil{};

  void validate() const {
    if (!(p_min > 0.0) || !(p_max > p_min))
      throw ConfigError("QuantizeScanConfig: need 0 < p_min < p_max");
    if (steps < 2) throw ConfigError("QuantizeScanConfig: need at least 2 scan steps");
    if (!(d > 0.0)) throw ConfigError("QuantizeScanConfig: d must be positive");
    if (truncation < 1) throw ConfigError("QuantizeScanConfig: truncation K must be >= 1");
    stencil.validate();
  }
};

// For each p on the uniform grid: build the moving train with velocity
// v = p c / sqrt(p^2 + m^2 c^2), measure the Eq.-style boundary mismatches
// between x = 0 and x = d, and test d p = 2 pi n hbar.
std::vector<QuantizeRow> quantize_scan(const QuantizeScanConfig& cfg,
                                       const PhysParams& params = {});

// Indices of strict local minima of the dx_mismatch column.
std::vector<std::size_t> mismatch_minima(const std::vector<QuantizeRow>& rows);

}  // namespace qhjb
