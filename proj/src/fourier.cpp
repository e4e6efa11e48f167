#include "qhjb/fourier.hpp"

#include <unsupported/Eigen/FFT>

namespace qhjb {

Eigen::VectorXcd dft(const Eigen::VectorXcd& x) {
  Eigen::FFT<double> fft;
  Eigen::VectorXcd out(x.size());
  fft.fwd(out, x);
  return out;
}

Eigen::VectorXd folded_power(const Eigen::VectorXcd& spectrum) {
  const Eigen::Index n = spectrum.size();
  const Eigen::Index half = n / 2;
  Eigen::VectorXd p = Eigen::VectorXd::Zero(half + 1);
  for (Eigen::Index k = 0; k <= half; ++k) {
    p[k] = std::norm(spectrum[k]);
    const Eigen::Index mirror = (n - k) % n;
    if (mirror != k) p[k] += std::norm(spectrum[mirror]);
  }
  return p;
}

Eigen::Index dominant_bin(const Eigen::VectorXd& p) {
  if (p.size() < 2) return 0;
  Eigen::Index best = 1;
  for (Eigen::Index k = 2; k < p.size(); ++k)
    if (p[k] > p[best]) best = k;
  return best;
}

}  // namespace qhjb
