#pragma once

#include <cstddef>

#include "boltz/collision_linear.hpp"

namespace boltz {

/// Max norms of the FFT round-trip experiment on the standard Maxwellian:
/// g = ifft(fft(M)), r = g / M, q = ifft(fft(r)) M.  Plain complex c2c
/// transforms with 1/n^3 on the inverse, no Nyquist weighting.
struct CancellationReport {
  int N = 16;
  double L = 7.5;
  double f_minus_g = 0.0;
  double f_minus_q = 0.0;
  double r_minus_1 = 0.0;
  /// Same pipeline with r set to zero where M / rho < epsilon.
  double epsilon = 0.0;
  std::size_t kept_points = 0;
  double r_minus_1_kept = 0.0;
  double f_minus_q_cutoff = 0.0;
};

CancellationReport cancellation_demo(int N = 16, double L = 7.5, const CutoffPolicy& policy = {});

}  // namespace boltz
