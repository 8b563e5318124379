#pragma once

#include <memory>

#include "boltz/grid.hpp"

namespace boltz {

/// f_hat_k = (1/c_k) sum_l f_l exp(-i pi k.l / N), with c_k = 2^(number of
/// components equal to -N).  Full (2N)^3 output.
FourierField forward_dft(const DistributionField& field);

struct InverseDftResult {
  DistributionField field;
  /// max |Im| / max |Re| of the reconstructed samples.
  double imag_residue = 0.0;
};

/// (1/(2N)^3) sum over l in {-N..N}^3 with cyclic identification: the stored
/// coefficient at -N stands for both +-N images, i.e. it is weighted by c_l.
InverseDftResult inverse_dft_with_residue(const FourierField& coeffs);

/// Throws ImaginaryResidueExceeded if the relative imaginary residue exceeds
/// max_imag_residue.
DistributionField inverse_dft(const FourierField& coeffs, double max_imag_residue = 1e-8);

/// c_k for a storage triple.
double nyquist_weight(const SpectralGrid& grid, int i1, int i2, int i3);

/// Real-data transforms on the half spectrum (2N x 2N x (N+1)) sharing the
/// conventions of forward_dft / inverse_dft.  Used by the collision operators.
class RealFft {
 public:
  explicit RealFft(const SpectralGrid& grid);

  const SpectralGrid& grid() const { return grid_; }

  /// in: physical samples (size()), out: half spectrum (half_size()).  in is
  /// preserved.  Both buffers must come from FftwAllocator.
  void forward(const double* in, Complex* out) const;
  /// in: half spectrum, destroyed on return; out: physical samples.
  void inverse(Complex* in, double* out) const;

  /// c_k on the half spectrum.  Multiplying FFT(a) FFT(b) by it before
  /// inverse() yields the plain cyclic convolution of a and b.
  const RealArray& nyquist_weights() const { return c_; }

  ComplexArray make_spectrum() const { return ComplexArray(grid_.half_size()); }
  RealArray make_real() const { return RealArray(grid_.size()); }

  struct Plans;

 private:
  SpectralGrid grid_;
  std::shared_ptr<const Plans> plans_;
  RealArray forward_scale_;  // 1/c_k
  RealArray inverse_scale_;  // c_k / (2N)^3
  RealArray c_;
};

}  // namespace boltz
