// qhjb — breather construction and verification front end.
//
// Subcommands: sample, verify, quantize, evolve, spectrum, average-energy.
// Every command is deterministic: a fixed config yields identical output
// bytes.  Exit codes: 0 success, 1 verification failure, 2 usage/config error.

#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhjb/evolve.hpp"
#include "qhjb/fields.hpp"
#include "qhjb/fourier.hpp"
#include "qhjb/io.hpp"
#include "qhjb/kinematics.hpp"
#include "qhjb/sampling.hpp"
#include "qhjb/scan.hpp"
#include "qhjb/specfun.hpp"
#include "qhjb/types.hpp"
#include "qhjb/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qhjb;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-")
    std::cout << content;
  else
    write_text_file(path, content);
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// shared option bundles

struct UnitOpts {
  double m = 1.0;
  double c = 1.0;
  double hbar = 1.0;

  PhysParams params() const { return PhysParams{m, c, hbar}; }
};

struct SpecOpts {
  double alpha = 0.5;
  double alpha_imag = 0.0;
  int l = 0;
  int n = 0;
  double v = 0.0;
  double train_period = 0.0;  // 0 = single breather
  int truncation = 64;

  BreatherSpec spec() const {
    BreatherSpec s;
    s.alpha = Complex{alpha, alpha_imag};
    s.mode = ModeIndex{l, n};
    s.boost = Boost{v};
    if (train_period != 0.0) s.train_period = train_period;
    s.truncation = truncation;
    s.validate();
    return s;
  }
};

void add_unit_opts(CLI::App* cmd, UnitOpts& u) {
  cmd->add_option("--m", u.m, "particle mass (default natural units)")->capture_default_str();
  cmd->add_option("--c", u.c, "speed of light")->capture_default_str();
  cmd->add_option("--hbar", u.hbar, "reduced Planck constant")->capture_default_str();
}

void add_spec_opts(CLI::App* cmd, SpecOpts& s, bool with_train) {
  cmd->add_option("--alpha", s.alpha, "breather amplitude (real part)")->capture_default_str();
  cmd->add_option("--alpha-imag", s.alpha_imag, "breather amplitude (imaginary part)")
      ->capture_default_str();
  cmd->add_option("--l", s.l, "polar mode order l")->capture_default_str();
  cmd->add_option("--n", s.n, "azimuthal mode order n")->capture_default_str();
  cmd->add_option("--v", s.v, "boost velocity along x")->capture_default_str();
  if (with_train) {
    cmd->add_option("--d", s.train_period, "train period d (0 = single breather)")
        ->capture_default_str();
    cmd->add_option("--K", s.truncation, "train truncation half-width K")->capture_default_str();
  }
}

// ---------------------------------------------------------------------------
// sample

struct SampleOpts {
  UnitOpts units;
  SpecOpts spec;
  std::string field = "psi";
  double t0 = 0.0, t1 = 0.0;
  int nt = 1;
  double x0 = 0.0, x1 = 0.0;
  int nx = 1;
  double y0 = 0.0, y1 = 0.0;
  int ny = 1;
  double z0 = 0.0, z1 = 0.0;
  int nz = 1;
  std::string output = "-";
};

double grid_value(double lo, double hi, int count, int index) {
  if (count <= 1) return lo;
  return lo + (hi - lo) * index / (count - 1);
}

std::function<Complex(const SpacetimePoint&)> make_field(const std::string& name,
                                                         const BreatherSpec& spec,
                                                         const PhysParams& params) {
  if (name == "psi")
    return [=](const SpacetimePoint& p) { return psi_moving(p, spec, params); };
  if (name == "action")
    return [=](const SpacetimePoint& p) { return action_moving(p, spec, params); };
  if (name == "action-far")
    return [=](const SpacetimePoint& p) { return action_far(p, spec, params); };
  if (name == "psi-train")
    return [=](const SpacetimePoint& p) { return psi_train(p, spec, params); };
  if (name == "action-train")
    return [=](const SpacetimePoint& p) { return action_train(p, spec, params); };
  throw ConfigError("unknown field: " + name);
}

int run_sample(const SampleOpts& opt) {
  const PhysParams params = opt.units.params();
  params.validate();
  const BreatherSpec spec = opt.spec.spec();
  if (opt.nt < 1 || opt.nx < 1 || opt.ny < 1 || opt.nz < 1)
    throw ConfigError("sample: grid counts must be positive");
  const auto field = make_field(opt.field, spec, params);
  std::vector<std::vector<std::string>> rows;
  rows.reserve(static_cast<std::size_t>(opt.nt) * opt.nx * opt.ny * opt.nz);
  for (int it = 0; it < opt.nt; ++it)
    for (int ix = 0; ix < opt.nx; ++ix)
      for (int iy = 0; iy < opt.ny; ++iy)
        for (int iz = 0; iz < opt.nz; ++iz) {
          const SpacetimePoint p{grid_value(opt.t0, opt.t1, opt.nt, it),
                                 grid_value(opt.x0, opt.x1, opt.nx, ix),
                                 grid_value(opt.y0, opt.y1, opt.ny, iy),
                                 grid_value(opt.z0, opt.z1, opt.nz, iz)};
          const Complex value = field(p);
          rows.push_back({format_g17(p.t), format_g17(p.x.x()), format_g17(p.x.y()),
                          format_g17(p.x.z()), format_g17(value.real()),
                          format_g17(value.imag())});
        }
  std::ostringstream out;
  write_csv(out, {"t", "x", "y", "z", "re", "im"}, rows);
  emit(opt.output, out.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOpts {
  UnitOpts units;
  SpecOpts spec;
  std::string equation = "kg";
  double radial_q = std::sqrt(3.0);  // radial wavenumber in units of kappa
  int points = 20;
  double r_min = 0.2, r_max = 10.0;
  double t_min = -2.0, t_max = 2.0;
  std::uint64_t seed = 20240901;
  double h = 0.02;
  int levels = 3;
  double order_min = 1.8, order_max = 2.2;
  std::string output = "-";
};

int run_verify(const VerifyOpts& opt) {
  const PhysParams params = opt.units.params();
  params.validate();
  const BreatherSpec spec = opt.spec.spec();
  if (opt.points < 1) throw ConfigError("verify: point set must be nonempty");
  const bool detuned = opt.radial_q != std::sqrt(3.0);
  if (detuned && !spec.boost.is_identity())
    throw ConfigError("verify: detuned radial wavenumber is supported in the rest frame only");

  const double w0 = params.rest_frequency();
  const double q = opt.radial_q * params.compton_wavenumber();
  std::function<Complex(const SpacetimePoint&)> evaluator;
  if (opt.equation == "kg") {
    if (detuned)
      evaluator = [=](const SpacetimePoint& p) {
        return std::polar(1.0, -w0 * p.t) +
               spec.alpha * std::polar(1.0, -2.0 * w0 * p.t) * mode_factor(p.x, spec.mode, q);
      };
    else
      evaluator = [=](const SpacetimePoint& p) { return psi_moving(p, spec, params); };
  } else if (opt.equation == "qhj") {
    if (detuned)
      evaluator = [=](const SpacetimePoint& p) {
        const Complex u =
            spec.alpha * std::polar(1.0, -w0 * p.t) * mode_factor(p.x, spec.mode, q);
        return -params.rest_energy() * p.t - Complex{0.0, params.hbar} * std::log(1.0 + u);
      };
    else
      evaluator = [=](const SpacetimePoint& p) { return action_moving(p, spec, params); };
  } else {
    throw ConfigError("verify: equation must be kg or qhj");
  }

  const StencilConfig cfg{opt.h, opt.levels};
  const auto points =
      sample_shell_points(opt.points, opt.r_min, opt.r_max, opt.t_min, opt.t_max, opt.seed);

  std::vector<ResidualReport> reports;
  reports.reserve(points.size());
  ordered_json report = make_report("verify");
  report["equation"] = opt.equation;
  report["radial_q"] = opt.radial_q;
  report["h"] = opt.h;
  report["levels"] = opt.levels;
  report["order_band"] = {opt.order_min, opt.order_max};
  report["points"] = ordered_json::array();
  bool pass = true;
  for (const auto& p : points) {
    const ResidualReport r = opt.equation == "kg" ? kg_residual(evaluator, p, cfg, params)
                                                  : qhj_residual(evaluator, p, cfg, params);
    reports.push_back(r);
    const bool in_band = r.order_measurable && r.convergence_order >= opt.order_min &&
                         r.convergence_order <= opt.order_max;
    pass = pass && in_band;
    ordered_json jp;
    jp["t"] = p.t;
    jp["x"] = p.x.x();
    jp["y"] = p.x.y();
    jp["z"] = p.x.z();
    jp["per_level"] = ordered_json::array();
    for (const auto& [hh, res] : r.per_level) jp["per_level"].push_back({hh, res});
    jp["convergence_order"] = r.convergence_order;
    jp["order_in_band"] = in_band;
    report["points"].push_back(jp);
  }
  const ResidualReport agg = merge_reports(reports);
  ordered_json ja;
  ja["per_level"] = ordered_json::array();
  for (const auto& [hh, res] : agg.per_level) ja["per_level"].push_back({hh, res});
  ja["max_abs"] = agg.max_abs;
  ja["l2"] = agg.l2;
  ja["convergence_order"] = agg.convergence_order;
  report["aggregate"] = ja;
  const bool agg_in_band = agg.order_measurable && agg.convergence_order >= opt.order_min &&
                           agg.convergence_order <= opt.order_max;
  pass = pass && agg_in_band;
  report["pass"] = pass;
  emit(opt.output, dump_json(report));
  return pass ? kExitOk : kExitVerifyFail;
}

// ---------------------------------------------------------------------------
// quantize

struct QuantizeOpts {
  UnitOpts units;
  QuantizeScanConfig scan;
  std::string output = "-";
};

int run_quantize(const QuantizeOpts& opt) {
  const PhysParams params = opt.units.params();
  const auto rows = quantize_scan(opt.scan, params);
  std::vector<std::vector<std::string>> csv;
  csv.reserve(rows.size());
  for (const auto& row : rows)
    csv.push_back({format_g17(row.p), format_g17(row.mismatch), format_g17(row.dt_mismatch),
                   format_g17(row.dx_mismatch), row.n ? std::to_string(*row.n) : ""});
  std::ostringstream out;
  write_csv(out, {"p", "mismatch", "dt_mismatch", "dx_mismatch", "n"}, csv);
  emit(opt.output, out.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// evolve

struct EvolveOpts {
  UnitOpts units;
  SpecOpts spec;
  RadialGrid grid;
  int periods = 20;
  std::string output = "-";
  std::string summary;
};

int run_evolve(const EvolveOpts& opt) {
  const PhysParams params = opt.units.params();
  params.validate();
  opt.grid.validate();
  EvolutionState state = init_from_breather(opt.spec.spec(), opt.grid, params);
  const EvolutionRecord record = evolve_breather(state, opt.grid, opt.periods, params);

  std::vector<std::vector<std::string>> csv;
  csv.reserve(record.time.size());
  for (std::size_t k = 0; k < record.time.size(); ++k)
    csv.push_back({std::to_string(k), format_g17(record.time[k]),
                   format_g17(record.core_norm[k]), format_g17(record.discrete_energy[k]),
                   format_g17(record.probe[k].real()), format_g17(record.probe[k].imag())});
  std::ostringstream out;
  write_csv(out, {"step", "time", "core_norm", "discrete_energy", "probe_re", "probe_im"}, csv);
  emit(opt.output, out.str());

  if (!opt.summary.empty()) {
    ordered_json summary = make_report("evolve-summary");
    summary["outer_radius"] = opt.grid.outer_radius;
    summary["cells"] = opt.grid.cells;
    summary["cfl"] = opt.grid.cfl;
    summary["periods"] = opt.periods;
    summary["probe_radius"] = record.probe_radius;
    if (record.time.size() >= 2) {
      const EvolutionDiagnostics diag = run_diagnostics(record, state, opt.grid, params);
      summary["measured_frequency"] = diag.measured_frequency;
      summary["core_norm_drift"] = diag.core_norm_drift;
      summary["energy_drift"] = diag.energy_drift;
      summary["profile_error"] = diag.profile_error;
    }
    emit(opt.summary, dump_json(summary));
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// spectrum

struct SpectrumOpts {
  UnitOpts units;
  SpecOpts spec;
  double r = 50.0;
  int n_periods = 16;
  int samples_per_period = 64;
  std::string output = "-";
};

int run_spectrum(const SpectrumOpts& opt) {
  const PhysParams params = opt.units.params();
  params.validate();
  const BreatherSpec spec = opt.spec.spec();
  const auto action = [&](const SpacetimePoint& p) { return action_rest(p, spec, params); };
  const SpectrumReport sr = far_field_spectrum(action, Eigen::Vector3d(opt.r, 0.0, 0.0), params,
                                               opt.n_periods, opt.samples_per_period);
  ordered_json report = make_report("spectrum");
  report["r"] = opt.r;
  report["n_periods"] = opt.n_periods;
  report["samples_per_period"] = opt.samples_per_period;
  report["bin_width"] = params.rest_frequency() / opt.n_periods;
  report["peak_frequency"] = sr.peak_frequency;
  report["harmonic_ratio"] = sr.harmonic_ratio;
  report["zero_signal"] = sr.zero_signal;
  emit(opt.output, dump_json(report));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// average-energy

struct AverageOpts {
  UnitOpts units;
  SpecOpts spec;
  std::vector<double> radii{0.3, 0.7, 2.0};
  int nodes = 256;
  bool spatial = false;
  double spatial_radius = 10.0;
  int spatial_nodes = 256;
  double spatial_time = 0.0;
  std::string output = "-";
};

int run_average(const AverageOpts& opt) {
  const PhysParams params = opt.units.params();
  params.validate();
  const BreatherSpec spec = opt.spec.spec();
  const auto action = [&](const SpacetimePoint& p) { return action_rest(p, spec, params); };
  std::vector<std::vector<std::string>> csv;
  const double mc2 = params.rest_energy();
  if (opt.spatial) {
    const Complex avg = average_energy_spatial(action, opt.spatial_time, opt.spatial_radius,
                                               params, opt.spatial_nodes);
    csv.push_back({"spatial", format_g17(std::abs(spec.alpha)), format_g17(opt.spatial_radius),
                   std::to_string(opt.spatial_nodes), format_g17(avg.real()),
                   format_g17(avg.imag()), format_g17(std::abs(avg - mc2))});
  } else {
    for (const double r : opt.radii) {
      const Complex avg =
          average_energy(action, Eigen::Vector3d(r, 0.0, 0.0), params, opt.nodes);
      csv.push_back({"time", format_g17(std::abs(spec.alpha)), format_g17(r),
                     std::to_string(opt.nodes), format_g17(avg.real()), format_g17(avg.imag()),
                     format_g17(std::abs(avg - mc2))});
    }
  }
  std::ostringstream out;
  write_csv(out, {"average", "alpha", "r", "nodes", "re", "im", "abs_dev"}, csv);
  emit(opt.output, out.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relativistic QHJ breather construction and verification"};
  app.require_subcommand(1);
  app.set_config("--config", "", "declarative run configuration (INI, [subcommand] sections)");

  SampleOpts sample_opts;
  auto* sample = app.add_subcommand("sample", "evaluate a field over a rectangular grid");
  add_unit_opts(sample, sample_opts.units);
  add_spec_opts(sample, sample_opts.spec, true);
  sample->add_option("--field", sample_opts.field,
                     "psi | action | action-far | psi-train | action-train")
      ->capture_default_str();
  sample->add_option("--t0", sample_opts.t0)->capture_default_str();
  sample->add_option("--t1", sample_opts.t1)->capture_default_str();
  sample->add_option("--nt", sample_opts.nt)->capture_default_str();
  sample->add_option("--x0", sample_opts.x0)->capture_default_str();
  sample->add_option("--x1", sample_opts.x1)->capture_default_str();
  sample->add_option("--nx", sample_opts.nx)->capture_default_str();
  sample->add_option("--y0", sample_opts.y0)->capture_default_str();
  sample->add_option("--y1", sample_opts.y1)->capture_default_str();
  sample->add_option("--ny", sample_opts.ny)->capture_default_str();
  sample->add_option("--z0", sample_opts.z0)->capture_default_str();
  sample->add_option("--z1", sample_opts.z1)->capture_default_str();
  sample->add_option("--nz", sample_opts.nz)->capture_default_str();
  sample->add_option("--output", sample_opts.output, "output path ('-' = stdout)")
      ->capture_default_str();

  VerifyOpts verify_opts;
  auto* verify = app.add_subcommand("verify", "finite-difference residual verification");
  add_unit_opts(verify, verify_opts.units);
  add_spec_opts(verify, verify_opts.spec, false);
  verify->add_option("--equation", verify_opts.equation, "kg | qhj")->capture_default_str();
  verify->add_option("--radial-q", verify_opts.radial_q,
                     "radial wavenumber in units of kappa (sqrt(3) = exact solution)")
      ->capture_default_str();
  verify->add_option("--points", verify_opts.points)->capture_default_str();
  verify->add_option("--r-min", verify_opts.r_min)->capture_default_str();
  verify->add_option("--r-max", verify_opts.r_max)->capture_default_str();
  verify->add_option("--t-min", verify_opts.t_min)->capture_default_str();
  verify->add_option("--t-max", verify_opts.t_max)->capture_default_str();
  verify->add_option("--seed", verify_opts.seed)->capture_default_str();
  verify->add_option("--stencil-h", verify_opts.h, "base stencil spacing")->capture_default_str();
  verify->add_option("--levels", verify_opts.levels, "refinement levels")->capture_default_str();
  verify->add_option("--order-min", verify_opts.order_min)->capture_default_str();
  verify->add_option("--order-max", verify_opts.order_max)->capture_default_str();
  verify->add_option("--output", verify_opts.output)->capture_default_str();

  QuantizeOpts quantize_opts;
  auto* quantize = app.add_subcommand("quantize", "Bohr-Sommerfeld momentum scan");
  add_unit_opts(quantize, quantize_opts.units);
  quantize->add_option("--p-min", quantize_opts.scan.p_min)->capture_default_str();
  quantize->add_option("--p-max", quantize_opts.scan.p_max)->capture_default_str();
  quantize->add_option("--steps", quantize_opts.scan.steps)->capture_default_str();
  quantize->add_option("--d", quantize_opts.scan.d, "interval length")->capture_default_str();
  double quantize_alpha = 0.5;
  quantize->add_option("--alpha", quantize_alpha)->capture_default_str();
  quantize->add_option("--K", quantize_opts.scan.truncation)->capture_default_str();
  quantize->add_option("--tol", quantize_opts.scan.tol)->capture_default_str();
  quantize->add_option("--y", quantize_opts.scan.y)->capture_default_str();
  quantize->add_option("--z", quantize_opts.scan.z)->capture_default_str();
  quantize->add_option("--t", quantize_opts.scan.t)->capture_default_str();
  quantize->add_option("--stencil-h", quantize_opts.scan.stencil.h)->capture_default_str();
  quantize->add_option("--output", quantize_opts.output)->capture_default_str();

  EvolveOpts evolve_opts;
  auto* evolve = app.add_subcommand("evolve", "radial leapfrog evolution of the breather mode");
  add_unit_opts(evolve, evolve_opts.units);
  add_spec_opts(evolve, evolve_opts.spec, false);
  evolve->add_option("--outer-radius", evolve_opts.grid.outer_radius)->capture_default_str();
  evolve->add_option("--cells", evolve_opts.grid.cells)->capture_default_str();
  evolve->add_option("--cfl", evolve_opts.grid.cfl)->capture_default_str();
  evolve->add_option("--periods", evolve_opts.periods, "mode periods to evolve")
      ->capture_default_str();
  evolve->add_option("--output", evolve_opts.output, "diagnostics CSV path")
      ->capture_default_str();
  evolve->add_option("--summary", evolve_opts.summary, "JSON summary path (optional)")
      ->capture_default_str();

  SpectrumOpts spectrum_opts;
  auto* spectrum = app.add_subcommand("spectrum", "far-field action spectrum");
  add_unit_opts(spectrum, spectrum_opts.units);
  add_spec_opts(spectrum, spectrum_opts.spec, false);
  spectrum->add_option("--r", spectrum_opts.r, "probe radius")->capture_default_str();
  spectrum->add_option("--n-periods", spectrum_opts.n_periods)->capture_default_str();
  spectrum->add_option("--samples-per-period", spectrum_opts.samples_per_period)
      ->capture_default_str();
  spectrum->add_option("--output", spectrum_opts.output)->capture_default_str();

  AverageOpts average_opts;
  auto* average = app.add_subcommand("average-energy", "time (or spatial) average of -dS/dt");
  add_unit_opts(average, average_opts.units);
  add_spec_opts(average, average_opts.spec, false);
  average->add_option("--r", average_opts.radii, "probe radii (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  average->add_option("--nodes", average_opts.nodes, "quadrature nodes per period")
      ->capture_default_str();
  average->add_flag("--spatial", average_opts.spatial,
                    "experimental: volume average over a ball instead of the time average");
  average->add_option("--spatial-radius", average_opts.spatial_radius)->capture_default_str();
  average->add_option("--spatial-nodes", average_opts.spatial_nodes)->capture_default_str();
  average->add_option("--spatial-time", average_opts.spatial_time)->capture_default_str();
  average->add_option("--output", average_opts.output)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sample->parsed()) return run_sample(sample_opts);
    if (verify->parsed()) return run_verify(verify_opts);
    if (quantize->parsed()) {
      quantize_opts.scan.alpha = Complex{quantize_alpha, 0.0};
      return run_quantize(quantize_opts);
    }
    if (evolve->parsed()) return run_evolve(evolve_opts);
    if (spectrum->parsed()) return run_spectrum(spectrum_opts);
    if (average->parsed()) return run_average(average_opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cerr << "error: no subcommand selected\n";
  return kExitUsage;
}
