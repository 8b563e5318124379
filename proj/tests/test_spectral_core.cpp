#include <cmath>

#include "boltz/errors.hpp"
#include "boltz/moments.hpp"
#include "boltz/transform.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace boltz;

namespace {

double max_rel_diff(const DistributionField& a, const DistributionField& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num = std::max(num, std::abs(a[i] - b[i]));
    den = std::max(den, std::abs(b[i]));
  }
  return num / den;
}

}  // namespace

TEST_CASE("grid enforces the dealiasing bound and default half-width") {
  const auto g = SpectralGrid::from_cutoff(16, 6.0);
  CHECK(g.half_width() == doctest::Approx((3.0 + std::sqrt(2.0)) * 6.0 / 4.0));
  CHECK(g.points_per_axis() == 32);
  CHECK_THROWS_AS(SpectralGrid(16, 6.0, 6.0), InvalidArgument);
  CHECK_NOTHROW(SpectralGrid(16, 7.5, 6.0));
}

TEST_CASE("storage index bijection is cyclic") {
  const SpectralGrid g(4, 5.0, 4.0);
  for (int i = 0; i < 8; ++i) CHECK(g.storage(g.wave(i)) == i);
  CHECK(g.wave(4) == -4);
  CHECK(g.storage(4) == g.storage(-4));
  CHECK(g.velocity(7) == doctest::Approx(-1.25));
}

TEST_CASE("forward transform of a constant") {
  const SpectralGrid g(4, 5.0, 4.0);
  DistributionField f(g);
  for (auto& v : f.values) v = 1.0;
  const auto F = forward_dft(f);
  CHECK(std::abs(F[0] - Complex(512.0, 0.0)) < 1e-12 * 512);
  double rest = 0.0;
  for (std::size_t i = 1; i < F.coeffs.size(); ++i) rest = std::max(rest, std::abs(F[i]));
  CHECK(rest < 1e-12 * 512);
}

TEST_CASE("forward and inverse transforms match the naive definitions") {
  oracle::Rng rng(11);
  for (int N : {1, 2, 3}) {
    const SpectralGrid g(N, 2.0 * N, 1.0);
    const auto f = oracle::random_field(g, rng);
    const auto F = forward_dft(f);
    const auto ref = oracle::naive_forward(f);
    double err = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) err = std::max(err, std::abs(F[i] - ref[i]));
    CHECK(err < 1e-12);

    FourierField G(g);
    for (std::size_t i = 0; i < G.coeffs.size(); ++i) G[i] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const auto inv = inverse_dft_with_residue(G);
    const auto iref = oracle::naive_inverse(G);
    double ierr = 0.0;
    for (std::size_t i = 0; i < iref.size(); ++i) ierr = std::max(ierr, std::abs(inv.field[i] - iref[i].real()));
    CHECK(ierr < 1e-12);
  }
}

TEST_CASE("round trip is the identity to 1e-12") {
  oracle::Rng rng(7);
  for (int N : {4, 8, 16}) {
    const auto g = SpectralGrid::from_cutoff(N, 6.0);
    const auto f = oracle::random_field(g, rng);
    const auto back = inverse_dft(forward_dft(f));
    CHECK(max_rel_diff(back, f) < 1e-12);
  }
}

TEST_CASE("inverse of a lone zero mode is constant") {
  const SpectralGrid g(4, 5.0, 4.0);
  FourierField F(g);
  F[0] = 512.0;
  const auto f = inverse_dft(F);
  for (double v : f.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("Hermitian pair gives a real cosine") {
  const SpectralGrid g(4, 5.0, 4.0);
  FourierField F(g);
  const Complex c(3.0, -2.0);
  F.at_wave(1, 0, 0) = c;
  F.at_wave(-1, 0, 0) = std::conj(c);
  const auto r = inverse_dft_with_residue(F);
  CHECK(r.imag_residue < 1e-14);
  for (int i = 0; i < 8; ++i) {
    const double ph = std::numbers::pi * g.wave(i) / 4.0;
    const double expect = 2.0 * (c.real() * std::cos(ph) - c.imag() * std::sin(ph)) / 512.0;
    CHECK(r.field[g.flat(i, 5, 2)] == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("non-Hermitian coefficients raise ImaginaryResidueExceeded") {
  const SpectralGrid g(4, 5.0, 4.0);
  FourierField F(g);
  F[0] = 1.0;
  F.at_wave(1, 0, 0) = Complex(0.0, 1.0);
  CHECK_THROWS_AS(inverse_dft(F), ImaginaryResidueExceeded);
}

TEST_CASE("linearity of the forward transform") {
  oracle::Rng rng(3);
  const auto g = SpectralGrid::from_cutoff(8, 6.0);
  const auto f = oracle::random_field(g, rng), h = oracle::random_field(g, rng);
  const double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2);
  const auto lhs = forward_dft(a * f + b * h);
  const auto F = forward_dft(f), H = forward_dft(h);
  double err = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < lhs.coeffs.size(); ++i) {
    err = std::max(err, std::abs(lhs[i] - (a * F[i] + b * H[i])));
    scale = std::max(scale, std::abs(lhs[i]));
  }
  CHECK(err < 1e-12 * scale);
}

TEST_CASE("Parseval with Nyquist weights") {
  oracle::Rng rng(5);
  const auto g = SpectralGrid::from_cutoff(8, 6.0);
  const auto f = oracle::random_field(g, rng);
  const auto F = forward_dft(f);
  double phys = 0.0, spec = 0.0;
  for (double v : f.values) phys += v * v;
  const int n = g.points_per_axis();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const double ck = nyquist_weight(g, a, b, c);
        spec += ck * ck * std::norm(F[g.flat(a, b, c)]);
      }
  spec /= double(g.size());
  CHECK(spec == doctest::Approx(phys).epsilon(1e-12));
}

TEST_CASE("Maxwellian coefficients are real and positive near the origin") {
  const auto g = SpectralGrid::from_cutoff(16, 6.0);  // L = 6.6213
  const auto F = forward_dft(maxwellian_field({}, g));
  for (int k = -3; k <= 3; ++k) {
    const Complex c = F.at_wave(k, 1, 0);
    CHECK(std::abs(c.imag()) < 1e-12 * std::abs(c.real()) + 1e-14);
    CHECK(c.real() > 0.0);
  }
}

TEST_CASE("real FFT pair shares the conventions of the full transforms") {
  oracle::Rng rng(9);
  const auto g = SpectralGrid::from_cutoff(4, 6.0);
  const RealFft fft(g);
  auto in = fft.make_real();
  DistributionField f(g);
  for (std::size_t i = 0; i < g.size(); ++i) f[i] = in[i] = rng.uniform(-1, 1);
  auto half = fft.make_spectrum();
  fft.forward(in.data(), half.data());
  const auto full = forward_dft(f);
  const int n = g.points_per_axis();
  double err = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c <= g.modes(); ++c) err = std::max(err, std::abs(half[g.half_flat(a, b, c)] - full[g.flat(a, b, c)]));
  CHECK(err < 1e-12);
  auto out = fft.make_real();
  fft.inverse(half.data(), out.data());
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(out[i] == doctest::Approx(f[i]).epsilon(1e-12));
}
