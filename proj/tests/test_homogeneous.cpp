#include <cmath>

#include "boltz/errors.hpp"
#include "boltz/homogeneous.hpp"
#include "doctest.h"

using namespace boltz;

TEST_CASE("rk4 on the scalar surrogate") {
  auto decay = [](double y) { return -y; };
  const double h = 0.1;
  CHECK(rk4_step(1.0, h, decay) == doctest::Approx(1 - h + h * h / 2 - h * h * h / 6 + h * h * h * h / 24).epsilon(1e-15));
  CHECK(std::abs(rk4_step(1.0, h, decay) - std::exp(-h)) < 1e-7);
  const double e1 = std::abs(rk4_step(1.0, 0.1, decay) - std::exp(-0.1));
  const double e2 = std::abs(rk4_step(rk4_step(1.0, 0.05, decay), 0.05, decay) - std::exp(-0.1));
  CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.05));
  CHECK_THROWS_AS(rk4_step(1.0, 0.1, [](double) { return NAN; }), NonFiniteState);
}

TEST_CASE("rk4 with a zero right-hand side keeps the state") {
  const auto g = SpectralGrid::from_cutoff(4, 6.0);
  const auto f = test_distribution(TestDistribution::F2, g);
  const auto next = rk4_step(f, 0.1, [&](const DistributionField& x) { return DistributionField(x.grid); });
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(next[i] == f[i]);
}

TEST_CASE("case states") {
  const auto g = SpectralGrid::from_cutoff(16, 6.0);
  for (auto c : {TestCase::Case1, TestCase::Case2}) {
    const auto m = compute_moments(case_state(c, g));
    const double tol = c == TestCase::Case1 ? 1e-8 : 1e-4;  // F2 has a jump
    CHECK(m.rho == doctest::Approx(1.0).epsilon(tol));
    CHECK(m.theta == doctest::Approx(1.0).epsilon(tol));
  }
  CHECK(case_kernel(TestCase::Case2).omega == 0.72);
}

TEST_CASE("run configuration is validated") {
  HomogeneousRun cfg;
  cfg.dt = 0.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  cfg.dt = 0.1;
  cfg.t_end = -1.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
  cfg.t_end = 1.0;
  cfg.op = OperatorKind::Binary;
  cfg.sphere_points = 8;
  CHECK_THROWS_AS(run_homogeneous(cfg), UnsupportedOrder);
}

TEST_CASE("linearized relaxation: monotone approach and mass drift") {
  for (auto c : {TestCase::Case1, TestCase::Case2}) {
    HomogeneousRun cfg;
    cfg.test_case = c;
    cfg.t_end = 3.0;
    cfg.snapshot_stride = 10;
    const auto tr = run_homogeneous(cfg);
    REQUIRE(tr.t.size() == 31);
    CHECK(tr.t.back() == doctest::Approx(3.0));
    CHECK(tr.snapshots.size() == 4);
    for (std::size_t s = 11; s < tr.t.size(); ++s) CHECK(tr.l2_to_maxwellian[s] <= tr.l2_to_maxwellian[s - 1] + 1e-6);
    CHECK(tr.l2_to_maxwellian.back() < 0.5 * tr.l2_to_maxwellian.front());
    CHECK(std::abs(tr.mass.back() - tr.mass.front()) / tr.mass.front() < 1e-4);

    cfg.mass_fix = true;
    cfg.snapshot_stride = 0;
    cfg.t_end = 1.0;
    const auto fixed = run_homogeneous(cfg);
    CHECK(std::abs(fixed.mass.back() - fixed.mass.front()) / fixed.mass.front() <= 1e-12);
  }
}

TEST_CASE("paired run records the relative difference") {
  HomogeneousRun lin;
  lin.N = 8;
  lin.R = 4.0;
  lin.t_end = 0.5;
  HomogeneousRun bin = lin;
  bin.op = OperatorKind::Binary;
  bin.sphere_points = 13;
  const auto p = run_paired(lin, bin);
  REQUIRE(p.relative_difference.size() == 6);
  CHECK(p.relative_difference[0] == 0.0);
  CHECK(p.difference.size() == 6);
  CHECK(p.relative_difference.back() > 0.0);
  CHECK(p.relative_difference.back() < 0.1);
  CHECK(p.binary.mass.size() == 6);
}

TEST_CASE("binary ZeroOut run conserves mass") {
  HomogeneousRun cfg;
  cfg.op = OperatorKind::Binary;
  cfg.N = 8;
  cfg.R = 4.0;
  cfg.sphere_points = 7;
  cfg.fix = ConservationFix::ZeroOut;
  cfg.t_end = 0.3;
  const auto tr = run_homogeneous(cfg);
  CHECK(std::abs(tr.mass.back() - tr.mass.front()) / tr.mass.front() <= 1e-12);
}
