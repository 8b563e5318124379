#pragma once

#include <vector>

#include "boltz/grid.hpp"
#include "boltz/kernel.hpp"
#include "boltz/moments.hpp"
#include "boltz/quadrature.hpp"
#include "boltz/transform.hpp"

namespace boltz {

/// Per-grid tables of the fast linearized operator.  Frequency tables use
/// the half-spectrum layout of RealFft; varphi is a physical field.
struct PrecomputedTables {
  SpectralGrid grid;
  CollisionKernel kernel;
  RadialQuadrature rq;
  RealFft fft;
  std::vector<RealArray> s;       // sinc(pi g_j |k| / 2L)
  std::vector<RealArray> phi;     // 32 pi^2 w_j B(g_j) s_j
  std::vector<RealArray> varphi;  // InvFFT(s_j)
  RealArray omega;                // 16 pi^2 sum_j w_j B(g_j) sinc(pi g_j |k| / L)

  int size() const { return rq.size(); }
  /// Half-spectrum index of wave vector k (negative k3 folded by symmetry).
  std::size_t index(int k1, int k2, int k3) const;
};

PrecomputedTables precompute(const SpectralGrid& grid, const RadialQuadrature& rq, const CollisionKernel& kernel);

struct CutoffPolicy {
  bool enabled = true;
  double epsilon = 1e-9;

  void validate() const;
};

/// r = f / M where M / rho >= epsilon, 0 elsewhere (everywhere f / M when
/// the policy is disabled).
DistributionField cutoff_ratio(const DistributionField& f, const MaxwellianParams& params,
                               const CutoffPolicy& policy = {});

/// L[f] = Q[M, f] + Q[f, M] about the Maxwellian params.  With mass_fix the
/// zero Fourier mode of the result is removed.
DistributionField linearized_collision(const DistributionField& f, const MaxwellianParams& params,
                                       const PrecomputedTables& tables, const CutoffPolicy& policy = {},
                                       bool mass_fix = false);

/// Same, linearizing about the moments of f.
DistributionField linearized_collision(const DistributionField& f, const PrecomputedTables& tables,
                                       const CutoffPolicy& policy = {}, bool mass_fix = false);

/// Sets the zero mode to zero.
void mass_fix_linear(FourierField& coeffs);

}  // namespace boltz
