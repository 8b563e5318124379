#pragma once

// Independent reference computations and small generators shared by the tests.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "boltz/grid.hpp"

namespace oracle {

/// splitmix64; deterministic inputs for property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() { return (next() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

 private:
  std::uint64_t s_;
};

inline boltz::DistributionField random_field(const boltz::SpectralGrid& grid, Rng& rng) {
  boltz::DistributionField f(grid);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = rng.uniform(-1.0, 1.0);
  return f;
}

/// O(n^6) forward transform straight from the definition, output in storage order.
inline std::vector<std::complex<double>> naive_forward(const boltz::DistributionField& f) {
  const auto& g = f.grid;
  const int n = g.points_per_axis(), N = g.modes();
  std::vector<std::complex<double>> out(g.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int k[3] = {g.wave(a), g.wave(b), g.wave(c)};
        std::complex<double> s = 0.0;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
              const double ph = -std::numbers::pi * (k[0] * g.wave(i) + k[1] * g.wave(j) + k[2] * g.wave(l)) / N;
              s += f[g.flat(i, j, l)] * std::polar(1.0, ph);
            }
        double ck = 1.0;
        for (int d = 0; d < 3; ++d)
          if (k[d] == -N) ck *= 2.0;
        out[g.flat(a, b, c)] = s / ck;
      }
  return out;
}

/// Inverse sum over l in {-N..N}^3, the stored -N coefficient standing for both images.
inline std::vector<std::complex<double>> naive_inverse(const boltz::FourierField& F) {
  const auto& g = F.grid;
  const int n = g.points_per_axis(), N = g.modes();
  std::vector<std::complex<double>> out(g.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        std::complex<double> s = 0.0;
        for (int a = -N; a <= N; ++a)
          for (int b = -N; b <= N; ++b)
            for (int c = -N; c <= N; ++c) {
              const double ph = std::numbers::pi * (a * g.wave(i) + b * g.wave(j) + c * g.wave(l)) / N;
              s += F.at_wave(a, b, c) * std::polar(1.0, ph);
            }
        out[g.flat(i, j, l)] = s / double(n * n * n);
      }
  return out;
}

/// (a-1)!! for even a, 0 for odd a: mean of x^a y^b z^c over the unit sphere
/// is dfact(a) dfact(b) dfact(c) / (a+b+c+1)!!.
inline double odd_dfact(int m) {
  double r = 1.0;
  for (int k = m; k > 1; k -= 2) r *= k;
  return r;
}

inline double sphere_monomial_mean(int a, int b, int c) {
  if (a % 2 || b % 2 || c % 2) return 0.0;
  return odd_dfact(a - 1) * odd_dfact(b - 1) * odd_dfact(c - 1) / odd_dfact(a + b + c + 1);
}

}  // namespace oracle
