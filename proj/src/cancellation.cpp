#include "boltz/cancellation.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include "boltz/aligned.hpp"
#include "boltz/errors.hpp"

namespace boltz {

namespace {

std::mutex g_plan_mutex;

struct C2C {
  int n;
  ComplexArray buf;
  fftw_plan fwd = nullptr, bwd = nullptr;

  explicit C2C(int points) : n(points), buf(static_cast<std::size_t>(points) * points * points) {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto* p = reinterpret_cast<fftw_complex*>(buf.data());
    fwd = fftw_plan_dft_3d(n, n, n, p, p, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_3d(n, n, n, p, p, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~C2C() {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
  }
  C2C(const C2C&) = delete;
  C2C& operator=(const C2C&) = delete;

  // ifft(fft(x)) in place on buf.
  void round_trip() {
    fftw_execute(fwd);
    fftw_execute(bwd);
    const double s = 1.0 / (static_cast<double>(n) * n * n);
    for (auto& z : buf) z *= s;
  }
};

}  // namespace

CancellationReport cancellation_demo(int N, double L, const CutoffPolicy& policy) {
  if (N < 1) throw InvalidArgument("cancellation_demo: N must be positive");
  if (!(L > 0.0)) throw InvalidArgument("cancellation_demo: L must be positive");
  policy.validate();

  const int n = 2 * N;
  const std::size_t size = static_cast<std::size_t>(n) * n * n;
  const double norm = std::pow(2.0 * std::numbers::pi, -1.5);
  RealArray M(size);
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      for (int i3 = 0; i3 < n; ++i3) {
        auto v = [&](int i) { return (i < N ? i : i - n) * L / N; };
        const double r2 = v(i1) * v(i1) + v(i2) * v(i2) + v(i3) * v(i3);
        M[(static_cast<std::size_t>(i1) * n + i2) * n + i3] = norm * std::exp(-r2 / 2.0);
      }

  CancellationReport rep;
  rep.N = N;
  rep.L = L;
  rep.epsilon = policy.epsilon;
  C2C t(n);

  for (std::size_t i = 0; i < size; ++i) t.buf[i] = M[i];
  t.round_trip();
  ComplexArray g = t.buf;
  for (std::size_t i = 0; i < size; ++i) {
    rep.f_minus_g = std::max(rep.f_minus_g, std::abs(M[i] - g[i]));
    const Complex r = g[i] / M[i];
    rep.r_minus_1 = std::max(rep.r_minus_1, std::abs(r - 1.0));
    t.buf[i] = r;
  }
  t.round_trip();
  for (std::size_t i = 0; i < size; ++i) rep.f_minus_q = std::max(rep.f_minus_q, std::abs(M[i] - t.buf[i] * M[i]));

  // Cutoff variant: ratios only where M / rho >= epsilon (rho = 1 here).
  for (std::size_t i = 0; i < size; ++i) {
    if (M[i] < policy.epsilon) {
      t.buf[i] = 0.0;
      continue;
    }
    ++rep.kept_points;
    const Complex r = g[i] / M[i];
    rep.r_minus_1_kept = std::max(rep.r_minus_1_kept, std::abs(r - 1.0));
    t.buf[i] = r;
  }
  t.round_trip();
  for (std::size_t i = 0; i < size; ++i)
    rep.f_minus_q_cutoff = std::max(rep.f_minus_q_cutoff, std::abs(M[i] - t.buf[i] * M[i]));
  return rep;
}

}  // namespace boltz
