#include "boltz/transform.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include <fftw3.h>

#include "boltz/errors.hpp"

namespace boltz {

// FFTW planning is not thread safe; execution with the new-array interface
// is.  Plans are created once per N under a global lock and never destroyed.
struct RealFft::Plans {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
  fftw_plan c2c_forward = nullptr;
  fftw_plan c2c_backward = nullptr;
};

namespace {

std::mutex g_plan_mutex;

std::shared_ptr<const RealFft::Plans> plans_for(int N) {
  static std::map<int, std::shared_ptr<RealFft::Plans>> cache;
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;

  const int n = 2 * N;
  const std::size_t full = static_cast<std::size_t>(n) * n * n;
  const std::size_t half = static_cast<std::size_t>(n) * n * (N + 1);
  RealArray r(full);
  ComplexArray h(half);
  ComplexArray a(full), b(full);
  auto* hc = reinterpret_cast<fftw_complex*>(h.data());
  auto* ac = reinterpret_cast<fftw_complex*>(a.data());
  auto* bc = reinterpret_cast<fftw_complex*>(b.data());

  // FFTW_ESTIMATE keeps plan selection independent of timing noise.
  auto p = std::make_shared<RealFft::Plans>();
  p->r2c = fftw_plan_dft_r2c_3d(n, n, n, r.data(), hc, FFTW_ESTIMATE);
  p->c2r = fftw_plan_dft_c2r_3d(n, n, n, hc, r.data(), FFTW_ESTIMATE);
  p->c2c_forward = fftw_plan_dft_3d(n, n, n, ac, bc, FFTW_FORWARD, FFTW_ESTIMATE);
  p->c2c_backward = fftw_plan_dft_3d(n, n, n, ac, bc, FFTW_BACKWARD, FFTW_ESTIMATE);
  if (!p->r2c || !p->c2r || !p->c2c_forward || !p->c2c_backward) throw Error("FFTW planning failed");
  cache.emplace(N, p);
  return p;
}

}  // namespace

double nyquist_weight(const SpectralGrid& grid, int i1, int i2, int i3) {
  const int N = grid.modes();
  double c = 1.0;
  if (i1 == N) c *= 2.0;
  if (i2 == N) c *= 2.0;
  if (i3 == N) c *= 2.0;
  return c;
}

RealFft::RealFft(const SpectralGrid& grid) : grid_(grid), plans_(plans_for(grid.modes())) {
  const int n = grid.points_per_axis();
  const int N = grid.modes();
  forward_scale_.resize(grid.half_size());
  inverse_scale_.resize(grid.half_size());
  c_.resize(grid.half_size());
  const double inv_total = 1.0 / static_cast<double>(grid.size());
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      for (int i3 = 0; i3 <= N; ++i3) {
        const double c = nyquist_weight(grid, i1, i2, i3);
        const std::size_t h = grid.half_flat(i1, i2, i3);
        forward_scale_[h] = 1.0 / c;
        inverse_scale_[h] = c * inv_total;
        c_[h] = c;
      }
}

void RealFft::forward(const double* in, Complex* out) const {
  fftw_execute_dft_r2c(plans_->r2c, const_cast<double*>(in), reinterpret_cast<fftw_complex*>(out));
  const std::size_t m = grid_.half_size();
  for (std::size_t h = 0; h < m; ++h) out[h] *= forward_scale_[h];
}

void RealFft::inverse(Complex* in, double* out) const {
  const std::size_t m = grid_.half_size();
  for (std::size_t h = 0; h < m; ++h) in[h] *= inverse_scale_[h];
  fftw_execute_dft_c2r(plans_->c2r, reinterpret_cast<fftw_complex*>(in), out);
}

FourierField forward_dft(const DistributionField& field) {
  const SpectralGrid& g = field.grid;
  for (double v : field.values)
    if (!std::isfinite(v)) throw NonFiniteOutput("forward_dft: non-finite input sample");
  RealFft fft(g);
  ComplexArray half = fft.make_spectrum();
  fft.forward(field.values.data(), half.data());

  // Expand the half spectrum using F(-k) = conj F(k).
  FourierField out(g);
  const int n = g.points_per_axis();
  const int N = g.modes();
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      for (int i3 = 0; i3 < n; ++i3) {
        if (i3 <= N) {
          out[g.flat(i1, i2, i3)] = half[g.half_flat(i1, i2, i3)];
        } else {
          const int j1 = (n - i1) % n, j2 = (n - i2) % n, j3 = n - i3;
          out[g.flat(i1, i2, i3)] = std::conj(half[g.half_flat(j1, j2, j3)]);
        }
      }
  return out;
}

InverseDftResult inverse_dft_with_residue(const FourierField& coeffs) {
  const SpectralGrid& g = coeffs.grid;
  const int n = g.points_per_axis();
  auto plans = plans_for(g.modes());
  ComplexArray in(g.size()), out(g.size());
  const double inv_total = 1.0 / static_cast<double>(g.size());
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      for (int i3 = 0; i3 < n; ++i3) {
        const std::size_t idx = g.flat(i1, i2, i3);
        in[idx] = coeffs[idx] * (nyquist_weight(g, i1, i2, i3) * inv_total);
      }
  fftw_execute_dft(plans->c2c_backward, reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));

  InverseDftResult res{DistributionField(g), 0.0};
  double max_re = 0.0, max_im = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    res.field[i] = out[i].real();
    max_re = std::max(max_re, std::abs(out[i].real()));
    max_im = std::max(max_im, std::abs(out[i].imag()));
  }
  res.imag_residue = max_re > 0.0 ? max_im / max_re : max_im;
  return res;
}

DistributionField inverse_dft(const FourierField& coeffs, double max_imag_residue) {
  InverseDftResult res = inverse_dft_with_residue(coeffs);
  if (!(res.imag_residue <= max_imag_residue)) {
    std::ostringstream msg;
    msg << "inverse_dft: imaginary residue " << res.imag_residue << " exceeds " << max_imag_residue;
    throw ImaginaryResidueExceeded(msg.str());
  }
  return std::move(res.field);
}

}  // namespace boltz
