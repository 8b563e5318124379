#include "boltz/collision_linear.hpp"

#include <cmath>
#include <numbers>

#include "boltz/errors.hpp"
#include "boltz/parallel.hpp"

namespace boltz {

namespace {

constexpr double kPi = std::numbers::pi;

// phi carries 32 pi^2; with these transform conventions the gain balances the
// loss on a Maxwellian only with 4 pi^2, checked against the binary operator.
constexpr double kGainScale = 0.125;

struct MaxwellianSamples {
  RealArray M, Mg, Mh;
};

MaxwellianSamples sample_maxwellians(const SpectralGrid& grid, const MaxwellianParams& p) {
  const int n = grid.points_per_axis();
  MaxwellianSamples s{RealArray(grid.size()), RealArray(grid.size()), RealArray(grid.size())};
  const double pm = p.rho / std::pow(2.0 * kPi * p.theta, 1.5);
  const double ph = p.rho / std::pow(kPi * p.theta, 1.5);
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      for (int i3 = 0; i3 < n; ++i3) {
        const Vec3 v = grid.velocity(i1, i2, i3);
        const double c0 = v[0] - p.u[0], c1 = v[1] - p.u[1], c2 = v[2] - p.u[2];
        const double d2 = c0 * c0 + c1 * c1 + c2 * c2;
        const double v2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
        const std::size_t idx = grid.flat(i1, i2, i3);
        s.M[idx] = pm * std::exp(-d2 / (2.0 * p.theta));
        s.Mg[idx] = ph * std::exp(-v2 / p.theta);
        s.Mh[idx] = ph * std::exp(-d2 / p.theta);
      }
  return s;
}

}  // namespace

std::size_t PrecomputedTables::index(int k1, int k2, int k3) const {
  if (k3 < 0) {
    k1 = -k1;
    k2 = -k2;
    k3 = -k3;
  }
  if (k3 > grid.modes()) throw InvalidArgument("PrecomputedTables::index: wave index out of range");
  return grid.half_flat(grid.storage(k1), grid.storage(k2), k3 == grid.modes() ? grid.modes() : k3);
}

PrecomputedTables precompute(const SpectralGrid& grid, const RadialQuadrature& rq, const CollisionKernel& kernel) {
  kernel.validate();
  if (std::abs(rq.R - grid.cutoff()) > 1e-12 * grid.cutoff())
    throw GridMismatch("precompute: radial quadrature cutoff differs from the grid cutoff");
  PrecomputedTables t{grid, kernel, rq, RealFft(grid), {}, {}, {}, {}};
  const int J = rq.size();
  const int n = grid.points_per_axis();
  const int N = grid.modes();
  const double L = grid.half_width();
  const std::size_t half = grid.half_size();
  t.s.assign(J, RealArray(half));
  t.phi.assign(J, RealArray(half));
  t.omega.assign(half, 0.0);
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      for (int i3 = 0; i3 <= N; ++i3) {
        const double k1 = grid.wave(i1), k2 = grid.wave(i2), k3 = i3;
        const double norm = std::sqrt(k1 * k1 + k2 * k2 + k3 * k3);
        const std::size_t h = grid.half_flat(i1, i2, i3);
        double w = 0.0;
        for (int j = 0; j < J; ++j) {
          const double g = rq.nodes[j];
          const double B = kernel(g);
          t.s[j][h] = sinc(kPi * g * norm / (2.0 * L));
          t.phi[j][h] = 32.0 * kPi * kPi * rq.weights[j] * B * t.s[j][h];
          w += rq.weights[j] * B * sinc(kPi * g * norm / L);
        }
        t.omega[h] = 16.0 * kPi * kPi * w;
      }
  t.varphi.assign(J, RealArray(grid.size()));
  ComplexArray tmp = t.fft.make_spectrum();
  for (int j = 0; j < J; ++j) {
    for (std::size_t h = 0; h < half; ++h) tmp[h] = t.s[j][h];
    t.fft.inverse(tmp.data(), t.varphi[j].data());
  }
  return t;
}

void CutoffPolicy::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidArgument("cutoff epsilon must lie in (0, 1)");
}

DistributionField cutoff_ratio(const DistributionField& f, const MaxwellianParams& params,
                               const CutoffPolicy& policy) {
  params.validate();
  policy.validate();
  const DistributionField M = maxwellian_field(params, f.grid);
  DistributionField r(f.grid);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (policy.enabled && M[i] / params.rho < policy.epsilon) {
      r[i] = 0.0;
    } else {
      if (M[i] == 0.0) throw DivisionUnderflow("cutoff_ratio: Maxwellian underflows to zero at a kept point");
      r[i] = f[i] / M[i];
    }
  }
  return r;
}

DistributionField linearized_collision(const DistributionField& f, const MaxwellianParams& params,
                                       const PrecomputedTables& tables, const CutoffPolicy& policy,
                                       bool mass_fix) {
  require_same_grid(tables.grid, f.grid, "linearized_collision");
  params.validate();
  policy.validate();
  const SpectralGrid& grid = tables.grid;
  const RealFft& fft = tables.fft;
  const std::size_t full = grid.size();
  const std::size_t half = grid.half_size();
  const int J = tables.size();

  const MaxwellianSamples ms = sample_maxwellians(grid, params);
  RealArray r = fft.make_real();
  for (std::size_t i = 0; i < full; ++i) {
    if (policy.enabled && ms.M[i] / params.rho < policy.epsilon) {
      r[i] = 0.0;
    } else {
      if (ms.M[i] == 0.0) throw DivisionUnderflow("linearized_collision: Maxwellian underflows at a kept point");
      r[i] = f[i] / ms.M[i];
    }
  }
  ComplexArray rhat = fft.make_spectrum();
  fft.forward(r.data(), rhat.data());

  // Gain: per radial node, psi = M^h * InvFFT(FFT(M^g varphi_j) rhat).
  std::vector<ComplexArray> contrib(J);
  parallel_for(static_cast<std::size_t>(J), [&](std::size_t jj) {
    const int j = static_cast<int>(jj);
    RealArray u = fft.make_real(), psi = fft.make_real();
    ComplexArray uhat = fft.make_spectrum();
    const RealArray& vp = tables.varphi[j];
    for (std::size_t i = 0; i < full; ++i) u[i] = ms.Mg[i] * vp[i];
    fft.forward(u.data(), uhat.data());
    const RealArray& c = fft.nyquist_weights();
    for (std::size_t h = 0; h < half; ++h) uhat[h] *= rhat[h] * c[h];
    fft.inverse(uhat.data(), psi.data());
    for (std::size_t i = 0; i < full; ++i) psi[i] *= ms.Mh[i];
    fft.forward(psi.data(), uhat.data());
    const RealArray& ph = tables.phi[j];
    for (std::size_t h = 0; h < half; ++h) uhat[h] *= kGainScale * ph[h];
    contrib[j] = std::move(uhat);
  });
  ComplexArray gain = fft.make_spectrum();
  std::fill(gain.begin(), gain.end(), Complex(0.0, 0.0));
  for (int j = 0; j < J; ++j)
    for (std::size_t h = 0; h < half; ++h) gain[h] += contrib[j][h];

  DistributionField out(grid);
  fft.inverse(gain.data(), out.values.data());

  // Loss: InvFFT(omega fhat) M + InvFFT(omega Mhat) f.
  ComplexArray spec = fft.make_spectrum();
  RealArray conv = fft.make_real();
  fft.forward(f.values.data(), spec.data());
  for (std::size_t h = 0; h < half; ++h) spec[h] *= tables.omega[h];
  fft.inverse(spec.data(), conv.data());
  for (std::size_t i = 0; i < full; ++i) out[i] -= conv[i] * ms.M[i];
  fft.forward(ms.M.data(), spec.data());
  for (std::size_t h = 0; h < half; ++h) spec[h] *= tables.omega[h];
  fft.inverse(spec.data(), conv.data());
  for (std::size_t i = 0; i < full; ++i) out[i] -= conv[i] * f[i];

  if (mass_fix) {
    double mean = 0.0;
    for (double v : out.values) mean += v;
    mean /= static_cast<double>(full);
    for (double& v : out.values) v -= mean;
  }
  if (!out.all_finite()) throw NonFiniteOutput("linearized_collision: non-finite output");
  return out;
}

DistributionField linearized_collision(const DistributionField& f, const PrecomputedTables& tables,
                                       const CutoffPolicy& policy, bool mass_fix) {
  return linearized_collision(f, compute_moments(f).maxwellian(), tables, policy, mass_fix);
}

void mass_fix_linear(FourierField& coeffs) { coeffs[0] = Complex(0.0, 0.0); }

}  // namespace boltz
