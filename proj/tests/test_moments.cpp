#include <cmath>
#include <numbers>

#include "boltz/errors.hpp"
#include "boltz/moments.hpp"
#include "boltz/transform.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace boltz;

namespace {
const double pi = std::numbers::pi;
}

TEST_CASE("Maxwellian samples and moments") {
  const auto g = SpectralGrid::from_cutoff(16, 6.0);  // L = 6.6213
  const auto M = maxwellian_field({}, g);
  CHECK(M[0] == doctest::Approx(std::pow(2.0 * pi, -1.5)).epsilon(1e-14));
  const auto M2 = maxwellian_field({2.0, {0, 0, 0}, 1.0}, g);
  for (std::size_t i = 0; i < M.size(); ++i) CHECK(M2[i] == 2.0 * M[i]);

  const auto m = compute_moments(M);
  CHECK(m.rho == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(std::abs(m.u[0]) + std::abs(m.u[1]) + std::abs(m.u[2]) < 1e-6);
  CHECK(m.theta == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("moments of random Maxwellians") {
  oracle::Rng rng(21);
  // Narrow Maxwellians on the default R = 6 grid; the full temperature range
  // on a grid wide enough that the truncated tails stay below 1e-6.
  const auto narrow = SpectralGrid::from_cutoff(16, 6.0);
  const auto wide = SpectralGrid::from_cutoff(32, 12.0);
  for (int trial = 0; trial < 16; ++trial) {
    const bool tight = trial % 2 == 0;
    const auto& g = tight ? narrow : wide;
    MaxwellianParams p;
    p.rho = rng.uniform(0.5, 2.0);
    double n2;
    do {
      for (auto& c : p.u) c = rng.uniform(-1, 1);
      n2 = p.u[0] * p.u[0] + p.u[1] * p.u[1] + p.u[2] * p.u[2];
    } while (n2 > 1.0);
    p.theta = tight ? rng.uniform(0.5, 1.0) : rng.uniform(0.5, 3.0);
    const auto m = compute_moments(maxwellian_field(p, g));
    CHECK(m.rho == doctest::Approx(p.rho).epsilon(1e-6));
    for (int d = 0; d < 3; ++d) CHECK(std::abs(m.u[d] - p.u[d]) < 1e-6);
    CHECK(m.theta == doctest::Approx(p.theta).epsilon(1e-6));
    // trace identity is exact by construction
    CHECK(m.p[0][0] + m.p[1][1] + m.p[2][2] == doctest::Approx(3.0 * m.rho * m.theta).epsilon(1e-12));
    // third moments feel the truncated tails of shifted Maxwellians on the narrow grid
    for (int a = 0; a < 3 && !tight; ++a) {
      CHECK(std::abs(m.q[a]) <= 1e-8);
      for (int b = 0; b < 3; ++b)
        if (a != b) CHECK(std::abs(m.p[a][b]) <= 1e-8);
    }
  }
}

TEST_CASE("conserved moments are linear in the field") {
  oracle::Rng rng(2);
  const auto g = SpectralGrid::from_cutoff(8, 6.0);
  const auto f = maxwellian_field({1.0, {0.3, 0, 0}, 1.0}, g);
  const auto h = maxwellian_field({0.5, {0, -0.2, 0.1}, 0.8}, g);
  auto conserved = [](const MomentSet& m) {
    const double u2 = m.u[0] * m.u[0] + m.u[1] * m.u[1] + m.u[2] * m.u[2];
    return std::array<double, 5>{m.rho, m.rho * m.u[0], m.rho * m.u[1], m.rho * m.u[2],
                                 0.5 * m.rho * u2 + 1.5 * m.rho * m.theta};
  };
  const double a = rng.uniform(0.2, 2), b = rng.uniform(0.2, 2);
  const auto lhs = conserved(compute_moments(a * f + b * h));
  const auto cf = conserved(compute_moments(f)), ch = conserved(compute_moments(h));
  for (int i = 0; i < 5; ++i) CHECK(lhs[i] == doctest::Approx(a * cf[i] + b * ch[i]).epsilon(1e-12));
}

TEST_CASE("nonpositive density is rejected") {
  const SpectralGrid g(4, 5.0, 4.0);
  DistributionField f(g);
  CHECK_THROWS_AS(compute_moments(f), NonpositiveDensity);
  CHECK_THROWS_AS(maxwellian_field({0.0, {0, 0, 0}, 1.0}, g), InvalidArgument);
}

TEST_CASE("closed-form Maxwellian transform") {
  const auto g = SpectralGrid::from_cutoff(16, 6.0);  // L = 6.6213
  const MaxwellianParams p{1.0, {0.0, 0.0, 0.0}, 1.0};
  const auto Mh = maxwellian_fourier(p, g);
  CHECK(std::abs(Mh.at_wave(0, 0, 0) - Complex(1.0, 0.0)) < 1e-15);
  // exp(-pi^2 theta |l|^2 / (2 L^2)) at l = (1,0,0)
  CHECK(Mh.at_wave(1, 0, 0).real() == doctest::Approx(std::exp(-pi * pi / (2.0 * g.half_width() * g.half_width()))).epsilon(1e-14));
}

TEST_CASE("closed-form transform agrees with the scaled DFT of the samples") {
  const auto g = SpectralGrid::from_cutoff(16, 6.0);  // L = 6.6213
  for (const MaxwellianParams p : {MaxwellianParams{1.0, {0, 0, 0}, 1.0}, MaxwellianParams{1.3, {0.4, -0.2, 0.1}, 1.0}}) {
    const auto closed = maxwellian_fourier(p, g);
    const auto dft = forward_dft(maxwellian_field(p, g));
    const double h3 = g.cell_volume();
    double err = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) err = std::max(err, std::abs(closed[i] - h3 * dft[i]));
    CHECK(err <= 1e-8);
  }
}

TEST_CASE("test distribution F1") {
  const auto g = SpectralGrid::from_cutoff(16, 6.0);  // L = 6.6213
  const auto f = test_distribution(TestDistribution::F1, g);
  CHECK(f[0] == doctest::Approx(std::pow(pi, -1.5) * std::exp(-3.0)).epsilon(1e-12));
  const auto m = compute_moments(f);
  CHECK(m.rho == doctest::Approx(std::pow(2.0 / 3.0, 1.5)).epsilon(1e-8));
  CHECK(std::abs(m.u[0]) + std::abs(m.u[1]) + std::abs(m.u[2]) < 1e-10);
  CHECK(m.theta == doctest::Approx(1.0).epsilon(1e-8));
  const int n = g.points_per_axis();
  double asym = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const double v = f[g.flat(a, b, c)];
        asym = std::max(asym, std::abs(v - f[g.flat(b, a, c)]));
        asym = std::max(asym, std::abs(v - f[g.flat(a, b, g.storage(-g.wave(c)))]));
      }
  // the -N plane has no mirror point on the grid, F1 is ~1e-20 there
  CHECK(asym < 1e-15);
}

TEST_CASE("test distribution F2") {
  const SpectralGrid gu(4, 4.0, 2.0);  // unit spacing puts a node at (1,0,0)
  const auto f = test_distribution(TestDistribution::F2, gu);
  const double expect = std::pow(2.0, 0.25) * (2.0 - std::sqrt(2.0)) * std::pow(pi, -1.5) * std::exp(-1.0 / std::sqrt(2.0));
  CHECK(f[gu.flat(1, 0, 0)] == doctest::Approx(expect).epsilon(1e-12));

  const auto g = SpectralGrid::from_cutoff(16, 6.0);  // L = 6.6213
  const auto m = compute_moments(test_distribution(TestDistribution::F2, g));
  // the collocation sum across the jump is second order in L/N, not spectral
  CHECK(m.rho == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(std::abs(m.u[0]) < 1e-2);
  CHECK(std::abs(m.u[1]) + std::abs(m.u[2]) < 1e-6);  // only the unmatched -L planes break symmetry
  CHECK(m.theta == doctest::Approx(1.0).epsilon(1e-4));
}
