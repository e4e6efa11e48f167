#pragma once

#include <Eigen/Core>

#include "qhjb/types.hpp"

namespace qhjb {

// Forward DFT, X_k = sum_j x_j exp(-2 pi i j k / N), unnormalized.
Eigen::VectorXcd dft(const Eigen::VectorXcd& x);

// Power spectrum folded onto non-negative frequencies: for k in [0, N/2],
// P(k) = |X_k|^2 + |X_{N-k}|^2 (the DC and, for even N, Nyquist bins are
// counted once).  Complex inputs put e^{-i w t} content into the upper bins;
// folding makes "power at |w|" well defined.
Eigen::VectorXd folded_power(const Eigen::VectorXcd& spectrum);

// Index of the largest entry of p over [1, p.size()-1], i.e. ignoring DC.
Eigen::Index dominant_bin(const Eigen::VectorXd& p);

}  // namespace qhjb
