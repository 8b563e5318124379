#pragma once

#include <memory>
#include <vector>

#include "boltz/grid.hpp"
#include "boltz/kernel.hpp"
#include "boltz/quadrature.hpp"
#include "boltz/transform.hpp"

namespace boltz {

enum class ConservationFix { None, ZeroOut, SincReplace };

/// Spectral evaluation of the quadratic collision operator.  Construction
/// precomputes the radial loss weights and the per-node gain multipliers; the
/// object is immutable afterwards and may be shared between threads.
class BinaryCollision {
 public:
  BinaryCollision(const SpectralGrid& grid, const CollisionKernel& kernel, RadialQuadrature rq,
                  SphericalQuadrature sq, ConservationFix fix = ConservationFix::None);

  /// Q[f, f].
  DistributionField operator()(const DistributionField& f) const;
  /// Q[f, g] + Q[g, f].
  DistributionField pair(const DistributionField& f, const DistributionField& g) const;

  const SpectralGrid& grid() const { return grid_; }
  ConservationFix fix() const { return fix_; }
  const RadialQuadrature& radial() const { return rq_; }
  const SphericalQuadrature& sphere() const { return sq_; }

 private:
  DistributionField evaluate(const DistributionField& f, const DistributionField* g) const;
  void modulation(int j, int m, std::vector<Complex>& e1, std::vector<Complex>& e2,
                  std::vector<Complex>& e3) const;

  SpectralGrid grid_;
  CollisionKernel kernel_;
  RadialQuadrature rq_;
  SphericalQuadrature sq_;
  ConservationFix fix_;
  RealFft fft_;
  RealArray omega_;                  // loss multiplier, half spectrum
  std::vector<RealArray> gain_;      // 16 pi^2 w_j B(g_j) sinc(pi g_j |k| / 2L), half spectrum
};

DistributionField binary_collision(const DistributionField& f, const CollisionKernel& kernel,
                                   const RadialQuadrature& rq, const SphericalQuadrature& sq,
                                   ConservationFix fix = ConservationFix::None);

DistributionField binary_collision_pair(const DistributionField& f, const DistributionField& g,
                                        const CollisionKernel& kernel, const RadialQuadrature& rq,
                                        const SphericalQuadrature& sq, ConservationFix fix = ConservationFix::None);

/// sum_j w_j B(g_j) sinc(pi g_j |l| / L) over the full (2N)^3 storage.  With
/// SincReplace (which needs sq) the sinc becomes sum_m w_m cos(pi g_j sigma_m.l / L).
RealArray loss_weights(const CollisionKernel& kernel, const RadialQuadrature& rq, const SpectralGrid& grid,
                       ConservationFix fix = ConservationFix::None, const SphericalQuadrature* sq = nullptr);

}  // namespace boltz
