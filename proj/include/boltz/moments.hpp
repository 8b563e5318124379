#pragma once

#include <array>

#include "boltz/grid.hpp"

namespace boltz {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

struct MaxwellianParams {
  double rho = 1.0;
  Vec3 u{0.0, 0.0, 0.0};
  double theta = 1.0;

  /// Throws InvalidArgument unless rho > 0 and theta > 0.
  void validate() const;
};

struct MomentSet {
  double rho = 0.0;
  Vec3 u{};
  double theta = 0.0;
  Vec3 q{};
  Mat3 p{};

  MaxwellianParams maxwellian() const { return {rho, u, theta}; }
};

/// Collocation-sum moments.  Throws NonpositiveDensity if rho <= 0.
MomentSet compute_moments(const DistributionField& field);

/// rho / (2 pi theta)^{3/2} exp(-|v - u|^2 / (2 theta)) at the grid points.
DistributionField maxwellian_field(const MaxwellianParams& params, const SpectralGrid& grid);

/// rho exp(-i pi l.u / L - pi^2 theta |l|^2 / (2 L^2)) for every stored l.
FourierField maxwellian_fourier(const MaxwellianParams& params, const SpectralGrid& grid);

enum class TestDistribution { F1, F2 };

/// F1: four displaced Gaussians (u = sqrt 2, vartheta = 1/3).
/// F2: discontinuous at v1 = 0; points on that plane take the mean of the
/// two one-sided values (the Fourier-series value at a jump).
DistributionField test_distribution(TestDistribution which, const SpectralGrid& grid);

}  // namespace boltz
