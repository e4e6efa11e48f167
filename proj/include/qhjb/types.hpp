#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace qhjb {

using Complex = std::complex<double>;

/// Superluminal boost velocity, or a massless spec where mass is required.
class KinematicsError : public std::domain_error {
public:
  explicit KinematicsError(const std::string& what) : std::domain_error(what) {}
};

/// The principal-branch logarithm inside an action would wind: |alpha * (mode sum)| >= 1
/// at the requested point.
class BranchSafetyError : public std::domain_error {
public:
  explicit BranchSafetyError(const std::string& what) : std::domain_error(what) {}
};

/// Invalid run configuration (CFL violation, bad grid, bad stencil).
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Recorded evolution history too short for the requested diagnostic.
class DiagnosticsError : public std::runtime_error {
public:
  explicit DiagnosticsError(const std::string& what) : std::runtime_error(what) {}
};

/// Physical constants and the derived Compton scales. Defaults are natural
/// units m = c = hbar = 1, in which kappa = omega0 = 1.
struct PhysParams {
  double m = 1.0;
  double c = 1.0;
  double hbar = 1.0;

  /// Compton wavenumber kappa = m c / hbar (0 for a massless particle).
  double compton_wavenumber() const { return m * c / hbar; }
  /// Rest frequency omega0 = m c^2 / hbar.
  double rest_frequency() const { return m * c * c / hbar; }
  double rest_energy() const { return m * c * c; }

  void validate() const {
    if (!(c > 0.0) || !std::isfinite(c)) throw std::domain_error("PhysParams: c must be positive and finite");
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw std::domain_error("PhysParams: hbar must be positive and finite");
    if (!(m >= 0.0) || !std::isfinite(m)) throw std::domain_error("PhysParams: m must be non-negative and finite");
  }
};

/// Event (t, x, y, z) in the fixed lab frame.
struct SpacetimePoint {
  double t = 0.0;
  Eigen::Vector3d x = Eigen::Vector3d::Zero();

  SpacetimePoint() = default;
  SpacetimePoint(double t_, Eigen::Vector3d x_) : t(t_), x(std::move(x_)) {}
  SpacetimePoint(double t_, double x_, double y_, double z_) : t(t_), x(x_, y_, z_) {}

  double r() const { return x.norm(); }

  bool finite() const {
    return std::isfinite(t) && std::isfinite(x[0]) && std::isfinite(x[1]) && std::isfinite(x[2]);
  }
};

/// Boost along the x-axis with velocity v, |v| < c.
struct Boost {
  double v = 0.0;

  double gamma(const PhysParams& par = {}) const {
    validate(par);
    const double beta = v / par.c;
    return 1.0 / std::sqrt(1.0 - beta * beta);
  }

  bool is_identity() const { return v == 0.0; }

  void validate(const PhysParams& par = {}) const {
    if (!std::isfinite(v) || std::abs(v) >= par.c)
      throw KinematicsError("Boost: |v| must be < c (got v = " + std::to_string(v) + ")");
  }
};

/// Angular mode (l, n): polar order l >= 0, azimuthal order |n| <= l.
/// l = n = 0 is the spherically symmetric mode.
struct ModeIndex {
  int l = 0;
  int n = 0;

  void validate() const {
    if (l < 0) throw std::domain_error("ModeIndex: l must be non-negative");
    if (std::abs(n) > l) throw std::domain_error("ModeIndex: |n| must not exceed l");
  }

  bool spherical() const { return l == 0 && n == 0; }
};

/// Full description of a breather configuration: complex amplitude, angular
/// mode, boost, and (for trains) the spatial period d with symmetric
/// truncation k in [-K, K].
struct BreatherSpec {
  Complex alpha{0.5, 0.0};
  ModeIndex mode{};
  Boost boost{};
  std::optional<double> train_period{};
  int truncation = 64;

  void validate() const {
    mode.validate();
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
      throw std::domain_error("BreatherSpec: alpha must be finite");
    if (train_period && !(*train_period > 0.0))
      throw std::domain_error("BreatherSpec: train period d must be positive");
    if (truncation < 1) throw std::domain_error("BreatherSpec: truncation K must be >= 1");
  }
};

/// Result of the Bohr-Sommerfeld compatibility check d*p = 2*pi*n*hbar.
/// n_exact is present iff the fractional mismatch is within tolerance.
struct QuantizationReport {
  std::optional<int> n_exact{};
  double mismatch = 0.0;
};

}  // namespace qhjb
