#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "qhjb/fields.hpp"
#include "qhjb/kinematics.hpp"
#include "qhjb/sampling.hpp"

using namespace qhjb;

namespace {

constexpr Complex kI{0.0, 1.0};

// Independent transcription of the two-term rest breather for the l = n = 0
// mode, written against std::sin / std::exp only.
Complex psi_oracle(const SpacetimePoint& p, Complex alpha) {
  const double q = std::sqrt(3.0);
  const double r = p.x.norm();
  const double j0 = (r == 0.0) ? 1.0 : std::sin(q * r) / (q * r);
  return std::exp(-kI * p.t) + alpha * std::exp(-2.0 * kI * p.t) * j0;
}

BreatherSpec spherical_spec(Complex alpha) {
  BreatherSpec spec;
  spec.alpha = alpha;
  return spec;
}

}  // namespace

TEST_CASE("psi_rest matches an independent transcription of the closed form") {
  const BreatherSpec spec = spherical_spec({0.5, 0.0});
  DeterministicRng rng(31);
  for (int i = 0; i < 40; ++i) {
    const SpacetimePoint p{rng.uniform(-2.0, 2.0), rng.uniform(-3.0, 3.0),
                           rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    const Complex got = psi_rest(p, spec);
    const Complex want = psi_oracle(p, spec.alpha);
    CHECK(std::abs(got - want) < 1e-14);
  }
  // frozen high-precision value
  const Complex frozen{1.053438391442839, -0.3626353290048997};
  CHECK(std::abs(psi_rest(SpacetimePoint{0.3, 1.2, 0.4, -0.7}, spec) - frozen) < 1e-14);
}

TEST_CASE("psi_rest limit values") {
  CHECK(psi_rest(SpacetimePoint{}, spherical_spec({0.0, 0.0})) == Complex{1.0, 0.0});
  CHECK(std::abs(psi_rest(SpacetimePoint{}, spherical_spec({0.5, 0.0})) -
                 Complex{1.5, 0.0}) < 1e-15);
  // at t = pi / w0 the fundamental flips sign while the overtone is back
  CHECK(std::abs(psi_rest(SpacetimePoint{std::numbers::pi, 0.0, 0.0, 0.0},
                          spherical_spec({0.5, 0.0})) -
                 Complex{-0.5, 0.0}) < 1e-14);
}

TEST_CASE("mode_factor composes Bessel, Legendre, and azimuthal factors") {
  const double q = std::sqrt(3.0);
  // l = 0: purely radial
  CHECK(mode_factor(Eigen::Vector3d::Zero(), ModeIndex{0, 0}, q) == Complex{1.0, 0.0});
  // l >= 1 vanishes at the origin
  CHECK(mode_factor(Eigen::Vector3d::Zero(), ModeIndex{1, 1}, q) == Complex{0.0, 0.0});
  CHECK(mode_factor(Eigen::Vector3d::Zero(), ModeIndex{3, 2}, q) == Complex{0.0, 0.0});

  // spinning modes against the standard-library special functions (which omit
  // the Condon-Shortley phase, hence the (-1)^n factor)
  DeterministicRng rng(37);
  for (const auto& [l, n] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 1}, {3, 2}}) {
    for (int i = 0; i < 10; ++i) {
      const Eigen::Vector3d x{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                              rng.uniform(-2.0, 2.0)};
      const double r = x.norm();
      const double cos_theta = x.z() / r;
      const double phi = std::atan2(x.y(), x.x());
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      const Complex want = std::sph_bessel(unsigned(l), q * r) * sign *
                           std::assoc_legendre(unsigned(l), unsigned(n), cos_theta) *
                           std::exp(kI * double(n) * phi);
      const Complex got = mode_factor(x, ModeIndex{l, n}, q);
      CAPTURE(l);
      CAPTURE(n);
      CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("exp(i S / hbar) recovers Psi for the rest breather") {
  const BreatherSpec spec = spherical_spec({0.5, 0.0});
  DeterministicRng rng(41);
  for (int i = 0; i < 40; ++i) {
    const SpacetimePoint p{rng.uniform(-2.0, 2.0), rng.uniform(-3.0, 3.0),
                           rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    const Complex s = action_rest(p, spec);
    const Complex psi = psi_rest(p, spec);
    CHECK(std::abs(std::exp(kI * s) - psi) < 1e-12);
  }
}

TEST_CASE("action_rest limit values") {
  // alpha = 0: the classical rest action -m c^2 t, exactly real
  for (const double t : {-1.3, 0.0, 0.7, 2.0}) {
    const Complex s = action_rest(SpacetimePoint{t, 0.4, -0.2, 0.9}, spherical_spec({0.0, 0.0}));
    CHECK(s.real() == -t);
    CHECK(s.imag() == 0.0);
  }
  // at the origin at t = 0 the log is real: S = -i ln(1 + alpha)
  const Complex s0 = action_rest(SpacetimePoint{}, spherical_spec({0.5, 0.0}));
  CHECK(std::abs(s0 - Complex{0.0, -std::log(1.5)}) < 1e-15);
}

TEST_CASE("action_far agrees with action_rest to second order in alpha B") {
  const BreatherSpec spec = spherical_spec({0.5, 0.0});
  const double q = std::sqrt(3.0);
  for (const double t : {0.0, 0.2, 1.1}) {
    const SpacetimePoint p{t, 50.0, 0.0, 0.0};
    const double u = 0.5 * std::abs(std::sin(q * 50.0) / (q * 50.0));
    const double bound = u * u;  // hbar |alpha B|^2
    CHECK(std::abs(action_rest(p, spec) - action_far(p, spec)) <= bound);
  }
  // alpha = 0 reduces to the classical action
  const Complex cl = action_far(SpacetimePoint{0.8, 1.0, 2.0, -1.0}, spherical_spec({0.0, 0.0}));
  CHECK(cl.real() == -0.8);
  CHECK(cl.imag() == 0.0);
}

TEST_CASE("the far-field discrepancy decays by well over 10x from r = 5 to r = 50") {
  const BreatherSpec spec = spherical_spec({0.5, 0.0});
  const SpacetimePoint near{0.0, 5.0, 0.0, 0.0};
  const SpacetimePoint far{0.0, 50.0, 0.0, 0.0};
  const double d_near = std::abs(action_rest(near, spec) - action_far(near, spec));
  const double d_far = std::abs(action_rest(far, spec) - action_far(far, spec));
  REQUIRE(d_far > 0.0);
  CHECK(d_near / d_far >= 10.0);
}

TEST_CASE("moving-frame fields reduce to the rest fields at v = 0") {
  const BreatherSpec spec = spherical_spec({0.5, 0.0});
  const SpacetimePoint p{0.7, 1.1, -0.4, 0.2};
  CHECK(psi_moving(p, spec) == psi_rest(p, spec));
  CHECK(action_moving(p, spec) == action_rest(p, spec));
}

TEST_CASE("action_moving is the rest action at the Lorentz-mapped event") {
  BreatherSpec spec = spherical_spec({0.5, 0.0});
  spec.boost = Boost{0.6};
  const SpacetimePoint p{0.4, 0.9, 0.3, -0.8};
  const Complex via_map = action_rest(lorentz_map(p, spec.boost), spherical_spec(spec.alpha));
  CHECK(action_moving(p, spec) == via_map);  // shared code path, bit for bit
  CHECK(psi_moving(p, spec) ==
        psi_rest(lorentz_map(p, spec.boost), spherical_spec(spec.alpha)));
}

TEST_CASE("alpha = 0 moving action is the classical -E t + p x") {
  BreatherSpec spec = spherical_spec({0.0, 0.0});
  spec.boost = Boost{0.6};
  DeterministicRng rng(43);
  for (int i = 0; i < 20; ++i) {
    const SpacetimePoint p{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                           rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    const Complex s = action_moving(p, spec);
    CHECK(s.real() == doctest::Approx(-1.25 * p.t + 0.75 * p.x.x()).epsilon(1e-12).scale(1.0));
    CHECK(std::abs(s.imag()) < 1e-15);
  }
}

TEST_CASE("exp(i S / hbar) recovers Psi for the moving breather") {
  BreatherSpec spec = spherical_spec({0.5, 0.0});
  spec.boost = Boost{0.6};
  DeterministicRng rng(47);
  for (int i = 0; i < 20; ++i) {
    const SpacetimePoint p{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                           rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    CHECK(std::abs(std::exp(kI * action_moving(p, spec)) - psi_moving(p, spec)) < 1e-12);
  }
}

TEST_CASE("psi_moving carries the de Broglie phase exp(i (-E t + p x) / hbar)") {
  BreatherSpec spec = spherical_spec({0.0, 0.0});
  spec.boost = Boost{0.6};
  const SpacetimePoint p{1.2, -0.7, 0.5, 0.3};
  const Complex want = std::exp(kI * (-1.25 * p.t + 0.75 * p.x.x()));
  CHECK(std::abs(psi_moving(p, spec) - want) < 1e-10);
}

TEST_CASE("the overtone dispersion identity holds") {
  // (2 w0 / c)^2 = q^2 + kappa^2 with q = sqrt(3) kappa: exact on the shell
  {
    const PhysParams par;  // natural units
    const double w0 = par.rest_frequency();
    const double kap = par.compton_wavenumber();
    CHECK((2.0 * w0 / par.c) * (2.0 * w0 / par.c) - 4.0 * kap * kap == 0.0);
  }
  {
    PhysParams par;
    par.m = 2.0;
    par.c = 3.0;
    par.hbar = 0.5;
    const double w0 = par.rest_frequency();
    const double kap = par.compton_wavenumber();
    const double lhs = (2.0 * w0 / par.c) * (2.0 * w0 / par.c);
    const double rhs = 3.0 * (kap * kap) + kap * kap;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-15));
  }
}

TEST_CASE("branch safety guards") {
  CHECK_THROWS_AS((void)action_rest(SpacetimePoint{}, spherical_spec({1.0, 0.0})),
                  BranchSafetyError);
  CHECK_THROWS_AS((void)action_far(SpacetimePoint{}, spherical_spec({-1.2, 0.0})),
                  BranchSafetyError);
  // overlapping train copies push |alpha * sum| past 1
  BreatherSpec train = spherical_spec({0.9, 0.0});
  train.train_period = 0.5;
  CHECK_THROWS_AS((void)action_train(SpacetimePoint{}, train), BranchSafetyError);
  // psi_train needs no guard at the same point
  CHECK_NOTHROW((void)psi_train(SpacetimePoint{}, train));
}

TEST_CASE("field constructors enforce their preconditions") {
  BreatherSpec boosted = spherical_spec({0.5, 0.0});
  boosted.boost = Boost{0.3};
  CHECK_THROWS_AS((void)psi_rest(SpacetimePoint{}, boosted), std::domain_error);
  CHECK_THROWS_AS((void)action_rest(SpacetimePoint{}, boosted), std::domain_error);

  BreatherSpec train = spherical_spec({0.5, 0.0});
  train.train_period = 2.0;
  CHECK_THROWS_AS((void)psi_moving(SpacetimePoint{}, train), std::domain_error);
  CHECK_THROWS_AS((void)action_moving(SpacetimePoint{}, train), std::domain_error);
  CHECK_THROWS_AS((void)train_mode_sum(SpacetimePoint{}, boosted), std::domain_error);

  BreatherSpec spun = train;
  spun.mode = ModeIndex{1, 0};
  CHECK_THROWS_AS((void)action_train(SpacetimePoint{}, spun), std::domain_error);

  PhysParams massless;
  massless.m = 0.0;
  CHECK_THROWS_AS((void)psi_rest(SpacetimePoint{}, spherical_spec({0.5, 0.0}), massless),
                  KinematicsError);
}

TEST_CASE("a wide train agrees with the single breather within the tail bound") {
  BreatherSpec train = spherical_spec({0.5, 0.0});
  train.train_period = 50.0;
  train.truncation = 64;
  const BreatherSpec single = spherical_spec({0.5, 0.0});
  const SpacetimePoint p{0.2, 0.3, 0.4, 0.1};
  const double q = std::sqrt(3.0);
  double harmonic = 0.0;
  for (int k = 1; k <= train.truncation; ++k) harmonic += 1.0 / k;
  const double tail_bound = 0.5 * 2.0 * harmonic / (q * 50.0);
  CHECK(std::abs(action_train(p, train) - action_rest(p, single)) <= tail_bound);
}

TEST_CASE("rest-train periodicity mismatch obeys the 1/K truncation law") {
  // shifting x by d re-indexes the copy sum, so the defect is the pair of edge
  // terms ~ j_0(sqrt(3) K d); their sin factor oscillates with K, but the
  // envelope decays as C / K
  const double d = 2.0 * std::numbers::pi;
  const double q = std::sqrt(3.0);
  double worst = 0.0;
  for (const int K : {8, 16, 32, 64}) {
    BreatherSpec train = spherical_spec({0.5, 0.0});
    train.train_period = d;
    train.truncation = K;
    for (const double x : {0.3, 0.7, 1.3, 2.2, 2.9}) {
      const SpacetimePoint a{0.2, x, 0.5, 0.1};
      const SpacetimePoint b{0.2, x + d, 0.5, 0.1};
      const double mismatch = std::abs(action_train(a, train) - action_train(b, train));
      const double bound = 4.0 / (q * d * K);  // edge terms x log amplification
      CAPTURE(K);
      CAPTURE(x);
      CHECK(mismatch <= bound);
      if (K == 64) worst = std::max(worst, mismatch);
    }
  }
  CHECK(worst < 1e-3);  // K = 64 leaves sub-permille periodicity violation
}

TEST_CASE("the moving train is the boosted standing train with dilated spacing") {
  const double d = 2.0;
  const Boost boost{0.6};
  BreatherSpec moving = spherical_spec({0.5, 0.0});
  moving.boost = boost;
  moving.train_period = d;

  BreatherSpec standing = spherical_spec({0.5, 0.0});
  standing.train_period = dilated_train_period(d, boost);

  DeterministicRng rng(53);
  for (int i = 0; i < 20; ++i) {
    const SpacetimePoint p{rng.uniform(-1.0, 1.0), rng.uniform(-2.0, 2.0),
                           rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    const Complex via_map = action_train(lorentz_map(p, boost), standing);
    CHECK(std::abs(action_train(p, moving) - via_map) < 1e-12);
    CHECK(std::abs(train_mode_sum(p, moving) - train_mode_sum(lorentz_map(p, boost), standing)) <
          1e-12);
  }
}

TEST_CASE("alpha = 0 train action is the classical -E t + p x") {
  BreatherSpec train = spherical_spec({0.0, 0.0});
  train.boost = Boost{0.6};
  train.train_period = 2.0;
  const SpacetimePoint p{0.9, -1.4, 0.6, 0.2};
  const Complex s = action_train(p, train);
  const auto em = energy_momentum_classical(train.boost);
  CHECK(s.real() == -em.energy * p.t + em.momentum * p.x.x());
  CHECK(s.imag() == 0.0);
}

TEST_CASE("psi_train equals exp(i S_train / hbar) where the log is winding-free") {
  BreatherSpec train = spherical_spec({0.5, 0.0});
  train.boost = Boost{0.6};
  train.train_period = 2.0 * std::numbers::pi;
  DeterministicRng rng(59);
  for (int i = 0; i < 20; ++i) {
    const SpacetimePoint p{rng.uniform(-1.0, 1.0), rng.uniform(-3.0, 3.0),
                           rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    CHECK(std::abs(std::exp(kI * action_train(p, train)) - psi_train(p, train)) < 1e-12);
  }
}

TEST_CASE("quantization_check accepts exact Bohr-Sommerfeld products") {
  const double two_pi = 2.0 * std::numbers::pi;
  {
    const auto rep = quantization_check(two_pi, 1.0);
    REQUIRE(rep.n_exact.has_value());
    CHECK(*rep.n_exact == 1);
    CHECK(rep.mismatch == 0.0);
  }
  {
    const auto rep = quantization_check(2.0 * two_pi, 1.5);
    REQUIRE(rep.n_exact.has_value());
    CHECK(*rep.n_exact == 3);
    CHECK(rep.mismatch < 1e-12);
  }
  {
    const auto rep = quantization_check(2.0 * two_pi, 0.5);
    REQUIRE(rep.n_exact.has_value());
    CHECK(*rep.n_exact == 1);
  }
}

TEST_CASE("quantization_check rejects detuned momenta") {
  const double two_pi = 2.0 * std::numbers::pi;
  const auto rep = quantization_check(two_pi, 1.3, PhysParams{}, 1e-6);
  CHECK(!rep.n_exact.has_value());
  CHECK(rep.mismatch == doctest::Approx(0.3).epsilon(1e-12));
  CHECK_THROWS_AS((void)quantization_check(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS((void)quantization_check(two_pi, 0.0), std::domain_error);
}
