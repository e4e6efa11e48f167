#include "qhjb/scan.hpp"

#include "qhjb/fields.hpp"
#include "qhjb/kinematics.hpp"

namespace qhjb {

std::vector<QuantizeRow> quantize_scan(const QuantizeScanConfig& cfg, const PhysParams& params) {
  cfg.validate();
  params.validate();
  const double dp = (cfg.p_max - cfg.p_min) / (cfg.steps - 1);
  std::vector<QuantizeRow> rows;
  rows.reserve(cfg.steps);
  for (int k = 0; k < cfg.steps; ++k) {
    QuantizeRow row;
    row.p = cfg.p_min + k * dp;
    BreatherSpec spec;
    spec.alpha = cfg.alpha;
    spec.boost = Boost{boost_velocity_for_momentum(row.p, params)};
    spec.train_period = cfg.d;
    spec.truncation = cfg.truncation;
    const auto action = [&](const SpacetimePoint& pt) { return action_train(pt, spec, params); };
    const BoundaryMismatch bm =
        boundary_condition_check(action, cfg.d, cfg.y, cfg.z, cfg.t, cfg.stencil, params);
    row.dt_mismatch = bm.dt_mismatch;
    row.dx_mismatch = bm.dx_mismatch;
    const QuantizationReport q = quantization_check(cfg.d, row.p, params, cfg.tol);
    row.mismatch = q.mismatch;
    row.n = q.n_exact;
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::size_t> mismatch_minima(const std::vector<QuantizeRow>& rows) {
  std::vector<std::size_t> minima;
  for (std::size_t i = 1; i + 1 < rows.size(); ++i)
    if (rows[i].dx_mismatch < rows[i - 1].dx_mismatch &&
        rows[i].dx_mismatch < rows[i + 1].dx_mismatch)
      minima.push_back(i);
  return minima;
}

}  // namespace qhjb
