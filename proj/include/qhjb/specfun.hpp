#pragma once

namespace qhjb {

/// Highest supported spherical Bessel / Legendre order.
inline constexpr int kMaxOrder = 64;

/// Spherical Bessel function of the first kind j_l(x) for 0 <= l <= kMaxOrder,
/// x >= 0.
///
/// Evaluation strategy:
///  - x < 1e-3 * (l + 1): truncated ascending series, which handles the
///    removable singularity at x = 0 exactly and avoids the cancellation of
///    sin(x)/x - type forms near zero;
///  - x > l: upward recurrence from j_0, j_1;
///  - otherwise: downward (Miller) recurrence with normalization against
///    whichever of j_0(x), j_1(x) is larger in magnitude (upward recurrence
///    is unstable for x < l).
///
/// Throws std::domain_error for negative/non-finite x or unsupported l.
double spherical_bessel_j(int l, double x);

/// Associated Legendre polynomial P_l^n(u) on u in [-1, 1] with the
/// Condon-Shortley phase, for 0 <= l <= kMaxOrder and |n| <= l.
/// Negative n follows P_l^{-n} = (-1)^n (l-n)!/(l+n)! P_l^n.
///
/// Throws std::domain_error for |u| > 1 or |n| > l.
double assoc_legendre_p(int l, int n, double u);

}  // namespace qhjb
