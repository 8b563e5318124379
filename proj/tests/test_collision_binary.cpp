#include <cmath>
#include <numbers>

#include "boltz/collision_binary.hpp"
#include "boltz/errors.hpp"
#include "boltz/homogeneous.hpp"
#include "boltz/moments.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace boltz;

namespace {

BinaryCollision make_op(const SpectralGrid& g, const CollisionKernel& k, int M, ConservationFix fix) {
  return BinaryCollision(g, k, make_radial_quadrature(g.modes(), g.cutoff()), make_hemisphere_quadrature(M), fix);
}

double max_rel(const DistributionField& a, const DistributionField& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num = std::max(num, std::abs(a[i] - b[i]));
    den = std::max(den, std::abs(b[i]));
  }
  return num / den;
}

}  // namespace

TEST_CASE("binary operator annihilates Maxwellians") {
  const auto g = SpectralGrid::from_cutoff(16, 6.0);
  for (const auto& kernel : {CollisionKernel::maxwell(), CollisionKernel::vhs072()}) {
    const auto Q = make_op(g, kernel, 25, ConservationFix::None);
    for (double theta : {0.8, 1.0, 1.2}) {
      const auto M = maxwellian_field({1.0, {0, 0, 0}, theta}, g);
      CHECK(Q(M).l2_norm() <= 1e-5);
      if (theta == 1.0) CHECK(Q.pair(M, M).l2_norm() <= 2e-5);
    }
  }
}

TEST_CASE("pair(f, f) equals twice Q[f, f]") {
  const auto g = SpectralGrid::from_cutoff(8, 4.0);
  const auto Q = make_op(g, CollisionKernel::vhs072(), 13, ConservationFix::None);
  const auto f = test_distribution(TestDistribution::F1, g);
  CHECK(max_rel(Q.pair(f, f), 2.0 * Q(f)) <= 1e-12);
}

TEST_CASE("pair is linear in each argument without a fix") {
  oracle::Rng rng(4);
  const auto g = SpectralGrid::from_cutoff(8, 4.0);
  const auto Q = make_op(g, CollisionKernel::maxwell(), 7, ConservationFix::None);
  const auto f = test_distribution(TestDistribution::F2, g);
  const auto h = maxwellian_field({1.0, {0.2, 0, 0}, 0.9}, g);
  const double a = rng.uniform(0.5, 3.0);
  CHECK(max_rel(Q.pair(a * f, h), a * Q.pair(f, h)) <= 1e-12);
  CHECK(max_rel(Q.pair(f, h), Q.pair(h, f)) <= 1e-12);
}

TEST_CASE("free functions match the operator object") {
  const auto g = SpectralGrid::from_cutoff(4, 4.0);
  const auto rq = make_radial_quadrature(4, 4.0);
  const auto sq = make_hemisphere_quadrature(7);
  const auto f = test_distribution(TestDistribution::F1, g);
  const BinaryCollision Q(g, CollisionKernel::maxwell(), rq, sq);
  CHECK(max_rel(binary_collision(f, CollisionKernel::maxwell(), rq, sq), Q(f)) == 0.0);
  const auto M = maxwellian_field({}, g);
  CHECK(max_rel(binary_collision_pair(f, M, CollisionKernel::maxwell(), rq, sq), Q.pair(f, M)) == 0.0);
}

TEST_CASE("ZeroOut removes the mass of the output") {
  const auto g = SpectralGrid::from_cutoff(8, 6.0);
  const auto f = case_state(TestCase::Case1, g);
  const auto Q = make_op(g, CollisionKernel::maxwell(), 7, ConservationFix::ZeroOut);
  const auto out = Q(f);
  CHECK(std::abs(out.integral()) <= 1e-15 * out.max_abs() * std::pow(2.0 * g.half_width(), 3));
}

TEST_CASE("mass defect shrinks as the sphere rule grows") {
  const auto g = SpectralGrid::from_cutoff(16, 6.0);
  const auto f = case_state(TestCase::Case1, g);
  const double d7 = std::abs(make_op(g, CollisionKernel::maxwell(), 7, ConservationFix::None)(f).integral());
  const double d25 = std::abs(make_op(g, CollisionKernel::maxwell(), 25, ConservationFix::None)(f).integral());
  CHECK(d25 < d7);
  const double s7 = std::abs(make_op(g, CollisionKernel::maxwell(), 7, ConservationFix::SincReplace)(f).integral());
  CHECK(s7 < d7);
}

TEST_CASE("reflection symmetry in v3 is preserved") {
  const auto g = SpectralGrid::from_cutoff(8, 6.0);
  const auto f = test_distribution(TestDistribution::F2, g);  // even in v3
  const auto out = make_op(g, CollisionKernel::vhs072(), 13, ConservationFix::None)(f);
  const int n = g.points_per_axis();
  double asym = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 1; c < n; ++c)
        asym = std::max(asym, std::abs(out[g.flat(a, b, c)] - out[g.flat(a, b, g.storage(-g.wave(c)))]));
  CHECK(asym <= 1e-10 * out.max_abs());
}

TEST_CASE("loss weights") {
  const auto g = SpectralGrid::from_cutoff(16, 6.0);
  const auto rq = make_radial_quadrature(16, 6.0);
  const auto k = CollisionKernel::maxwell();
  const auto w = loss_weights(k, rq, g);
  CHECK(w[0] == doctest::Approx(72.0 / (4.0 * std::numbers::pi)).epsilon(1e-12));
  const auto sq = make_hemisphere_quadrature(25);
  const auto ws = loss_weights(k, rq, g, ConservationFix::SincReplace, &sq);
  CHECK(ws[0] == doctest::Approx(w[0]).epsilon(1e-14));
  CHECK(std::abs(w[g.flat(g.storage(9), g.storage(-7), g.storage(5))]) < std::abs(w[0]));
  CHECK_THROWS(loss_weights(k, rq, g, ConservationFix::SincReplace, nullptr));
}

TEST_CASE("grid mismatch is rejected") {
  const auto g = SpectralGrid::from_cutoff(4, 4.0);
  const auto Q = make_op(g, CollisionKernel::maxwell(), 7, ConservationFix::None);
  const auto f = maxwellian_field({}, SpectralGrid::from_cutoff(4, 5.0));
  CHECK_THROWS_AS(Q(f), GridMismatch);
}
