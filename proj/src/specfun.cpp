#include "qhjb/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhjb {

namespace {

double j0_direct(double x) { return std::sin(x) / x; }
double j1_direct(double x) { return (std::sin(x) / x - std::cos(x)) / x; }

// Ascending series j_l(x) = x^l / (2l+1)!! * sum_i (-x^2/2)^i / (i! (2l+3)(2l+5)...(2l+1+2i)),
// summed to machine precision. Used only for small x, where a handful of terms suffice.
double jl_series(int l, double x) {
  double lead = 1.0;
  for (int k = 1; k <= l; ++k) lead *= x / static_cast<double>(2 * k + 1);
  const double y = 0.5 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int i = 1; i <= 40; ++i) {
    term *= -y / static_cast<double>(i * (2 * l + 2 * i + 1));
    sum += term;
    if (std::abs(term) <= std::numeric_limits<double>::epsilon() * std::abs(sum)) break;
  }
  return lead * sum;
}

double jl_upward(int l, double x) {
  double jm = j0_direct(x);
  if (l == 0) return jm;
  double jc = j1_direct(x);
  for (int k = 1; k < l; ++k) {
    const double jp = static_cast<double>(2 * k + 1) / x * jc - jm;
    jm = jc;
    jc = jp;
  }
  return jc;
}

double jl_downward(int l, double x) {
  // Start the recurrence well above l; the iterate is proportional to the true
  // j_k once the unwanted y_k component has decayed.
  const int start = l + static_cast<int>(std::ceil(std::sqrt(60.0 * (l + 1)))) + 10;
  double jp = 0.0;
  double jc = std::numeric_limits<double>::min() * 1e16;
  double saved = 0.0;
  double j1_acc = 0.0;
  double j0_acc = 0.0;
  for (int k = start; k >= 1; --k) {
    const double jm = static_cast<double>(2 * k + 1) / x * jc - jp;
    jp = jc;
    jc = jm;
    if (k - 1 == l) saved = jc;
    if (k - 1 == 1) j1_acc = jc;
    if (std::abs(jc) > 1e250) {
      const double scale = 1e-250;
      jc *= scale;
      jp *= scale;
      saved *= scale;
      j1_acc *= scale;
    }
  }
  j0_acc = jc;
  const double j0d = j0_direct(x);
  const double j1d = j1_direct(x);
  // j_0 and j_1 have no common zeros; normalize against the larger one.
  const double norm = (std::abs(j0d) >= std::abs(j1d)) ? j0d / j0_acc : j1d / j1_acc;
  return saved * norm;
}

}  // namespace

double spherical_bessel_j(int l, double x) {
  if (l < 0 || l > kMaxOrder)
    throw std::domain_error("spherical_bessel_j: order l must be in [0, " +
                            std::to_string(kMaxOrder) + "]");
  if (!(x >= 0.0) || !std::isfinite(x))
    throw std::domain_error("spherical_bessel_j: argument must be finite and >= 0");

  if (x < 1e-3 * static_cast<double>(l + 1)) return jl_series(l, x);
  if (x > static_cast<double>(l)) return jl_upward(l, x);
  return jl_downward(l, x);
}

double assoc_legendre_p(int l, int n, double u) {
  if (l < 0 || l > kMaxOrder)
    throw std::domain_error("assoc_legendre_p: order l must be in [0, " +
                            std::to_string(kMaxOrder) + "]");
  if (std::abs(n) > l) throw std::domain_error("assoc_legendre_p: |n| must not exceed l");
  if (!(std::abs(u) <= 1.0))
    throw std::domain_error("assoc_legendre_p: argument must satisfy |u| <= 1");

  const int m = std::abs(n);

  // P_m^m = (-1)^m (2m-1)!! (1-u^2)^{m/2}
  double pmm = 1.0;
  if (m > 0) {
    const double s = std::sqrt((1.0 - u) * (1.0 + u));
    double fact = 1.0;
    for (int i = 0; i < m; ++i) {
      pmm *= -fact * s;
      fact += 2.0;
    }
  }

  double result;
  if (l == m) {
    result = pmm;
  } else {
    double pmmp1 = u * static_cast<double>(2 * m + 1) * pmm;
    if (l == m + 1) {
      result = pmmp1;
    } else {
      double pll = 0.0;
      for (int ll = m + 2; ll <= l; ++ll) {
        pll = (u * static_cast<double>(2 * ll - 1) * pmmp1 -
               static_cast<double>(ll + m - 1) * pmm) /
              static_cast<double>(ll - m);
        pmm = pmmp1;
        pmmp1 = pll;
      }
      result = pll;
    }
  }

  if (n < 0) {
    // P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m
    double ratio = 1.0;
    for (int k = l - m + 1; k <= l + m; ++k) ratio *= static_cast<double>(k);
    result *= ((m % 2 == 0) ? 1.0 : -1.0) / ratio;
  }
  return result;
}

}  // namespace qhjb
