#include "boltz/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "boltz/errors.hpp"

namespace boltz {

double SpectralGrid::min_half_width(double R) { return (3.0 + std::sqrt(2.0)) * R / 4.0; }

SpectralGrid::SpectralGrid(int N, double L, double R) : N_(N), n_(2 * static_cast<std::size_t>(N)), L_(L), R_(R) {
  if (N < 1) throw InvalidArgument("grid: N must be positive");
  if (!(R > 0.0) || !(L > 0.0)) throw InvalidArgument("grid: L and R must be positive");
  if (L < min_half_width(R) * (1.0 - 1e-12))
    throw InvalidArgument("grid: L = " + std::to_string(L) + " violates the dealiasing bound for R = " +
                          std::to_string(R));
}

SpectralGrid SpectralGrid::from_cutoff(int N, double R) { return SpectralGrid(N, min_half_width(R), R); }

void require_same_grid(const SpectralGrid& a, const SpectralGrid& b, const char* where) {
  if (!(a == b)) throw GridMismatch(std::string(where) + ": grids differ");
}

double DistributionField::integral() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s * grid.cell_volume();
}

double DistributionField::l2_norm() const {
  double s = 0.0;
  for (double v : values) s += v * v;
  return std::sqrt(s * grid.cell_volume());
}

double DistributionField::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

bool DistributionField::all_finite() const {
  return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
}

DistributionField& DistributionField::operator+=(const DistributionField& o) {
  require_same_grid(grid, o.grid, "DistributionField::operator+=");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

DistributionField& DistributionField::operator-=(const DistributionField& o) {
  require_same_grid(grid, o.grid, "DistributionField::operator-=");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
  return *this;
}

DistributionField& DistributionField::operator*=(double a) {
  for (double& v : values) v *= a;
  return *this;
}

DistributionField& DistributionField::axpy(double a, const DistributionField& x) {
  require_same_grid(grid, x.grid, "DistributionField::axpy");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += a * x.values[i];
  return *this;
}

DistributionField operator+(DistributionField a, const DistributionField& b) { return a += b; }
DistributionField operator-(DistributionField a, const DistributionField& b) { return a -= b; }
DistributionField operator*(double s, DistributionField a) { return a *= s; }
DistributionField operator*(DistributionField a, double s) { return a *= s; }

double l2_distance(const DistributionField& a, const DistributionField& b) {
  require_same_grid(a.grid, b.grid, "l2_distance");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s * a.grid.cell_volume());
}

}  // namespace boltz
