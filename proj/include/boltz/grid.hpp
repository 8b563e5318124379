#pragma once

#include <array>
#include <cstddef>

#include "boltz/aligned.hpp"

namespace boltz {

/// Cubic velocity grid with 2N points per axis on [-L, L).
///
/// Arrays are stored row-major in FFT order: storage index i in [0, 2N)
/// corresponds to the wave/collocation index k = i for i < N and k = i - 2N
/// otherwise.  The same bijection is used for physical and Fourier arrays.
class SpectralGrid {
 public:
  SpectralGrid() = default;
  /// Throws InvalidArgument if L violates the dealiasing bound for R.
  SpectralGrid(int N, double L, double R);

  /// Grid with the smallest admissible half-width L = (3 + sqrt 2) R / 4.
  static SpectralGrid from_cutoff(int N, double R);
  static double min_half_width(double R);

  int modes() const { return N_; }
  int points_per_axis() const { return 2 * N_; }
  std::size_t size() const { return n_ * n_ * n_; }
  double half_width() const { return L_; }
  double cutoff() const { return R_; }
  double spacing() const { return L_ / N_; }
  double cell_volume() const { return spacing() * spacing() * spacing(); }

  int wave(int i) const { return i < N_ ? i : i - 2 * N_; }
  int storage(int k) const {
    const int n = 2 * N_;
    return ((k % n) + n) % n;
  }
  std::size_t flat(int i1, int i2, int i3) const {
    return (static_cast<std::size_t>(i1) * n_ + i2) * n_ + i3;
  }
  double velocity(int i) const { return wave(i) * spacing(); }
  std::array<double, 3> velocity(int i1, int i2, int i3) const {
    return {velocity(i1), velocity(i2), velocity(i3)};
  }

  /// Half-spectrum (real-to-complex) layout: 2N x 2N x (N+1).
  std::size_t half_size() const { return n_ * n_ * (N_ + 1); }
  std::size_t half_flat(int i1, int i2, int i3) const {
    return (static_cast<std::size_t>(i1) * n_ + i2) * (N_ + 1) + i3;
  }

  bool operator==(const SpectralGrid& o) const {
    return N_ == o.N_ && L_ == o.L_ && R_ == o.R_;
  }

 private:
  int N_ = 0;
  std::size_t n_ = 0;
  double L_ = 0.0;
  double R_ = 0.0;
};

/// Throws GridMismatch when the grids differ.
void require_same_grid(const SpectralGrid& a, const SpectralGrid& b, const char* where);

/// Samples of f at the collocation points.
struct DistributionField {
  SpectralGrid grid;
  RealArray values;

  DistributionField() = default;
  explicit DistributionField(const SpectralGrid& g) : grid(g), values(g.size(), 0.0) {}

  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
  std::size_t size() const { return values.size(); }

  /// Discrete integral (L/N)^3 sum f.
  double integral() const;
  /// Discrete L2 norm sqrt((L/N)^3 sum f^2).
  double l2_norm() const;
  double max_abs() const;
  bool all_finite() const;

  DistributionField& operator+=(const DistributionField& o);
  DistributionField& operator-=(const DistributionField& o);
  DistributionField& operator*=(double a);
  /// this += a * x
  DistributionField& axpy(double a, const DistributionField& x);
};

DistributionField operator+(DistributionField a, const DistributionField& b);
DistributionField operator-(DistributionField a, const DistributionField& b);
DistributionField operator*(double s, DistributionField a);
DistributionField operator*(DistributionField a, double s);

double l2_distance(const DistributionField& a, const DistributionField& b);

/// Full (2N)^3 complex coefficients, cyclic storage.
struct FourierField {
  SpectralGrid grid;
  ComplexArray coeffs;

  FourierField() = default;
  explicit FourierField(const SpectralGrid& g) : grid(g), coeffs(g.size(), Complex(0.0, 0.0)) {}

  Complex& operator[](std::size_t i) { return coeffs[i]; }
  const Complex& operator[](std::size_t i) const { return coeffs[i]; }
  Complex& at_wave(int k1, int k2, int k3) {
    return coeffs[grid.flat(grid.storage(k1), grid.storage(k2), grid.storage(k3))];
  }
  const Complex& at_wave(int k1, int k2, int k3) const {
    return coeffs[grid.flat(grid.storage(k1), grid.storage(k2), grid.storage(k3))];
  }
};

}  // namespace boltz
