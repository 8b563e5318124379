#pragma once

#include <cmath>
#include <numbers>

namespace boltz {

/// VHS kernel B(g) = C g^{2(1 - omega)}, truncated at the grid cutoff R.
struct CollisionKernel {
  double C = 1.0 / (4.0 * std::numbers::pi);
  double omega = 1.0;

  double operator()(double g) const {
    const double e = 2.0 * (1.0 - omega);
    return e == 0.0 ? C : C * std::pow(g, e);
  }

  /// B = 1/(4 pi), Maxwell molecules.
  static CollisionKernel maxwell() { return {1.0 / (4.0 * std::numbers::pi), 1.0}; }
  /// B = g^0.56 / (4 pi), viscosity index 0.72.
  static CollisionKernel vhs072() { return {1.0 / (4.0 * std::numbers::pi), 0.72}; }

  void validate() const;
};

/// sin(x)/x with a series branch near zero.
inline double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

}  // namespace boltz
