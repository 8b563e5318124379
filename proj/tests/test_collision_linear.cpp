#include <cmath>
#include <numbers>

#include "boltz/collision_binary.hpp"
#include "boltz/collision_linear.hpp"
#include "boltz/errors.hpp"
#include "boltz/experiments.hpp"
#include "boltz/homogeneous.hpp"
#include "boltz/transform.hpp"
#include "doctest.h"

using namespace boltz;

namespace {
const double pi = std::numbers::pi;

PrecomputedTables tables_for(const SpectralGrid& g, const CollisionKernel& k = CollisionKernel::maxwell()) {
  return precompute(g, make_radial_quadrature(g.modes(), g.cutoff()), k);
}
}  // namespace

TEST_CASE("precomputed tables") {
  const auto g = SpectralGrid::from_cutoff(8, 6.0);
  const auto t = tables_for(g);
  REQUIRE(t.size() == 9);
  CHECK(t.omega[0] == doctest::Approx(4.0 * pi * 216.0 / 3.0).epsilon(1e-12));
  for (int j = 0; j < t.size(); ++j) {
    CHECK(t.s[j][0] == 1.0);
    const double c = 32.0 * pi * pi * t.rq.weights[j] * t.kernel(t.rq.nodes[j]);
    for (std::size_t i = 0; i < g.half_size(); i += 37)
      if (std::abs(t.s[j][i]) > 1e-3) CHECK(t.phi[j][i] / t.s[j][i] == doctest::Approx(c).epsilon(1e-12));
  }
  CHECK(t.index(1, -2, -3) == t.index(-1, 2, 3));
}

TEST_CASE("cutoff ratio") {
  const SpectralGrid g(16, 7.5, 6.0);
  const MaxwellianParams p{};
  const auto M = maxwellian_field(p, g);
  const auto r = cutoff_ratio(M, p);
  std::size_t kept = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] != 0.0) {
      CHECK(r[i] == doctest::Approx(1.0).epsilon(1e-14));
      ++kept;
    }
  }
  CHECK(kept > 0);
  CHECK(kept < r.size());
  const std::size_t corner = g.flat(16, 16, 16);  // v = (-7.5, -7.5, -7.5)
  CHECK(M[corner] / p.rho < 1e-9);
  CHECK(r[corner] == 0.0);
  const auto r_all = cutoff_ratio(M, p, {false, 1e-9});
  CHECK(r_all[corner] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS((CutoffPolicy{true, 0.0}.validate()), InvalidArgument);
  CHECK_THROWS_AS((CutoffPolicy{true, 1.0}.validate()), InvalidArgument);
}

TEST_CASE("linearized operator annihilates its Maxwellian") {
  const auto g = SpectralGrid::from_cutoff(16, 6.0);
  for (const auto& k : {CollisionKernel::maxwell(), CollisionKernel::vhs072()}) {
    const auto t = tables_for(g, k);
    const MaxwellianParams p{1.0, {0.2, 0.0, -0.1}, 1.1};
    CHECK(linearized_collision(maxwellian_field(p, g), p, t).l2_norm() <= 1e-5);
  }
}

TEST_CASE("frozen parameters equal to the moments give the same result") {
  const auto g = SpectralGrid::from_cutoff(8, 6.0);
  const auto t = tables_for(g);
  const auto f = case_state(TestCase::Case1, g);
  const auto a = linearized_collision(f, t);
  const auto b = linearized_collision(f, compute_moments(f).maxwellian(), t);
  CHECK(l2_distance(a, b) == 0.0);
}

TEST_CASE("agreement with the binary pair operator at R = 4, N = 8") {
  AccuracyConfig cfg;
  cfg.R_list = {4.0};
  cfg.N_list = {8};
  for (auto [c, ref] : {std::pair{TestCase::Case1, 1.35e-4}, std::pair{TestCase::Case2, 2.47e-4}}) {
    cfg.test_case = c;
    const auto rows = accuracy_table(cfg);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].l2_diff >= ref / 3.0);
    CHECK(rows[0].l2_diff <= ref * 3.0);
  }
}

TEST_CASE("linearization error is quadratic in the perturbation") {
  const auto g = SpectralGrid::from_cutoff(16, 6.0);
  const auto t = tables_for(g);
  const BinaryCollision Q(g, CollisionKernel::maxwell(), t.rq, make_hemisphere_quadrature(25));
  const MaxwellianParams p{};
  const auto M = maxwellian_field(p, g);
  DistributionField delta(g);  // (v1^2 - v2^2) M: no mass, momentum or energy
  const int n = g.points_per_axis();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const std::size_t i = g.flat(a, b, c);
        delta[i] = (g.velocity(a) * g.velocity(a) - g.velocity(b) * g.velocity(b)) * M[i];
      }
  auto gap = [&](double eps) {
    const auto f = M + eps * delta;
    return l2_distance(Q(f), linearized_collision(f, p, t));
  };
  const double e1 = gap(0.2), e2 = gap(0.1);
  const double ratio = e1 / e2;
  CHECK(ratio >= 3.6);
  CHECK(ratio <= 4.4);
}

TEST_CASE("mass fix") {
  const auto g = SpectralGrid::from_cutoff(8, 6.0);
  const auto t = tables_for(g);
  const auto f = case_state(TestCase::Case2, g);
  const auto out = linearized_collision(f, t, {}, true);
  CHECK(std::abs(out.integral()) <= 1e-15 * out.max_abs() * std::pow(2.0 * g.half_width(), 3));

  auto F = forward_dft(f);
  mass_fix_linear(F);
  const auto once = F;
  mass_fix_linear(F);
  for (std::size_t i = 0; i < F.coeffs.size(); ++i) CHECK(F[i] == once[i]);
  CHECK(F[0] == Complex(0.0, 0.0));
}

TEST_CASE("cutoff barely perturbs a fast-decaying input") {
  const auto g = SpectralGrid::from_cutoff(16, 6.0);
  const auto t = tables_for(g);
  const auto f = case_state(TestCase::Case1, g);
  const auto on = linearized_collision(f, t, {true, 1e-9});
  const auto off = linearized_collision(f, t, {false, 1e-9});
  CHECK(l2_distance(on, off) <= 1e-8);
}
