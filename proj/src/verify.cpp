#include "qhjb/verify.hpp"

#include <algorithm>
#include <cmath>

#include "qhjb/fourier.hpp"

namespace qhjb {

ResidualReport finalize_report(std::vector<std::pair<double, double>> per_level) {
  ResidualReport report;
  report.per_level = std::move(per_level);
  if (report.per_level.empty()) return report;
  const double coarsest = report.per_level.front().second;
  const double finest = report.per_level.back().second;
  report.max_abs = finest;
  report.l2 = finest;
  report.order_measurable = coarsest > 0.0 && finest > 0.0 && std::isfinite(coarsest) &&
                            std::isfinite(finest) && report.per_level.size() > 1;
  if (report.order_measurable)
    report.convergence_order =
        std::log2(coarsest / finest) / static_cast<double>(report.per_level.size() - 1);
  return report;
}

ResidualReport merge_reports(const std::vector<ResidualReport>& reports) {
  ResidualReport merged;
  if (reports.empty()) return merged;
  const std::size_t levels = reports.front().per_level.size();
  merged.per_level.resize(levels);
  for (std::size_t i = 0; i < levels; ++i)
    merged.per_level[i] = {reports.front().per_level[i].first, 0.0};
  double sumsq = 0.0;
  for (const auto& r : reports) {
    if (r.per_level.size() != levels)
      throw ConfigError("merge_reports: reports have differing refinement ladders");
    for (std::size_t i = 0; i < levels; ++i) {
      if (r.per_level[i].first != merged.per_level[i].first)
        throw ConfigError("merge_reports: reports have differing refinement ladders");
      merged.per_level[i].second = std::max(merged.per_level[i].second, r.per_level[i].second);
    }
    sumsq += r.max_abs * r.max_abs;
  }
  ResidualReport out = finalize_report(std::move(merged.per_level));
  out.l2 = std::sqrt(sumsq / static_cast<double>(reports.size()));
  return out;
}

Eigen::VectorXcd sample_action_oscillation(const std::vector<Complex>& action_samples,
                                           double rest_energy, double dt) {
  Eigen::VectorXcd w(static_cast<Eigen::Index>(action_samples.size()));
  for (Eigen::Index j = 0; j < w.size(); ++j)
    w[j] = action_samples[static_cast<std::size_t>(j)] + rest_energy * (static_cast<double>(j) * dt);
  return w;
}

SpectrumReport spectrum_from_samples(const Eigen::VectorXcd& w, int n_periods,
                                     const PhysParams& params) {
  SpectrumReport report;
  if (w.size() == 0 || w.cwiseAbs().maxCoeff() == 0.0) {
    report.zero_signal = true;
    return report;
  }
  const Eigen::VectorXd power = folded_power(dft(w));
  const double w0 = params.rest_frequency();
  const double bin_width = w0 / static_cast<double>(n_periods);  // 2 pi / total duration
  const Eigen::Index peak = dominant_bin(power);
  report.peak_frequency = static_cast<double>(peak) * bin_width;
  const Eigen::Index fundamental = n_periods;
  const Eigen::Index harmonic = 2 * static_cast<Eigen::Index>(n_periods);
  if (harmonic >= power.size() || power[fundamental] == 0.0)
    throw ConfigError("spectrum_from_samples: harmonic bins unavailable for this sampling");
  report.harmonic_ratio = power[harmonic] / power[fundamental];
  return report;
}

}  // namespace qhjb
