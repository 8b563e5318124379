#include "boltz/collision_binary.hpp"

#include <cmath>
#include <numbers>

#include "boltz/errors.hpp"
#include "boltz/parallel.hpp"

namespace boltz {

void CollisionKernel::validate() const {
  if (!(C > 0.0)) throw InvalidArgument("kernel: C must be positive");
  if (!(omega >= 0.5 && omega <= 1.0)) throw InvalidArgument("kernel: omega must lie in [0.5, 1]");
}

namespace {

constexpr double kPi = std::numbers::pi;

void check_compatible(const SpectralGrid& grid, const RadialQuadrature& rq) {
  if (std::abs(rq.R - grid.cutoff()) > 1e-12 * grid.cutoff())
    throw GridMismatch("radial quadrature cutoff differs from the grid cutoff");
}

// Per-axis phase factor exp(i a k).  The stored -N entry represents both
// +-N images, so it carries their average cos(a N).
Complex axis_phase(double a, int i, int N) {
  if (i == N) return {std::cos(a * N), 0.0};
  const int k = i < N ? i : i - 2 * N;
  return {std::cos(a * k), std::sin(a * k)};
}

// sum_m w_m cos(2 a_m . l), written as Re prod_i exp(2 i a_{m,i} l_i); on a
// Nyquist axis the factor becomes cos^2(a N), the product of the two image
// averages used by the gain term, which keeps the discrete mass balance exact.
double quadrature_sinc(double g, const SphericalQuadrature& sq, double L, int N, int i1, int i2, int i3) {
  double s = 0.0;
  const int idx[3] = {i1, i2, i3};
  for (int m = 0; m < sq.size(); ++m) {
    Complex prod(1.0, 0.0);
    for (int d = 0; d < 3; ++d) {
      const double a = kPi * g * sq.nodes[m][d] / (2.0 * L);
      const Complex e = axis_phase(a, idx[d], N);
      prod *= (idx[d] == N) ? Complex(e.real() * e.real(), 0.0) : e * e;
    }
    s += sq.weights[m] * prod.real();
  }
  return s;
}

double loss_weight_at(const CollisionKernel& kernel, const RadialQuadrature& rq, const SpectralGrid& grid,
                      ConservationFix fix, const SphericalQuadrature* sq, int i1, int i2, int i3) {
  const double L = grid.half_width();
  const int N = grid.modes();
  const double l1 = grid.wave(i1), l2 = grid.wave(i2), l3 = grid.wave(i3);
  const double norm = std::sqrt(l1 * l1 + l2 * l2 + l3 * l3);
  double w = 0.0;
  for (int j = 0; j < rq.size(); ++j) {
    const double g = rq.nodes[j];
    const double s = fix == ConservationFix::SincReplace ? quadrature_sinc(g, *sq, L, N, i1, i2, i3)
                                                         : sinc(kPi * g * norm / L);
    w += rq.weights[j] * kernel(g) * s;
  }
  return w;
}

}  // namespace

RealArray loss_weights(const CollisionKernel& kernel, const RadialQuadrature& rq, const SpectralGrid& grid,
                       ConservationFix fix, const SphericalQuadrature* sq) {
  check_compatible(grid, rq);
  if (fix == ConservationFix::SincReplace && sq == nullptr)
    throw InvalidArgument("loss_weights: SincReplace needs a spherical quadrature");
  const int n = grid.points_per_axis();
  RealArray w(grid.size());
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      for (int i3 = 0; i3 < n; ++i3)
        w[grid.flat(i1, i2, i3)] = loss_weight_at(kernel, rq, grid, fix, sq, i1, i2, i3);
  return w;
}

BinaryCollision::BinaryCollision(const SpectralGrid& grid, const CollisionKernel& kernel, RadialQuadrature rq,
                                 SphericalQuadrature sq, ConservationFix fix)
    : grid_(grid), kernel_(kernel), rq_(std::move(rq)), sq_(std::move(sq)), fix_(fix), fft_(grid) {
  kernel_.validate();
  check_compatible(grid_, rq_);
  const int n = grid_.points_per_axis();
  const int N = grid_.modes();
  const double L = grid_.half_width();
  const double c = 16.0 * kPi * kPi;
  omega_.assign(grid_.half_size(), 0.0);
  gain_.assign(rq_.size(), RealArray(grid_.half_size(), 0.0));
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      for (int i3 = 0; i3 <= N; ++i3) {
        const std::size_t h = grid_.half_flat(i1, i2, i3);
        omega_[h] = c * loss_weight_at(kernel_, rq_, grid_, fix_, &sq_, i1, i2, i3);
        const double k1 = grid_.wave(i1), k2 = grid_.wave(i2), k3 = i3;
        const double norm = std::sqrt(k1 * k1 + k2 * k2 + k3 * k3);
        for (int j = 0; j < rq_.size(); ++j) {
          const double g = rq_.nodes[j];
          gain_[j][h] = c * rq_.weights[j] * kernel_(g) * sinc(kPi * g * norm / (2.0 * L));
        }
      }
}

void BinaryCollision::modulation(int j, int m, std::vector<Complex>& e1, std::vector<Complex>& e2,
                                 std::vector<Complex>& e3) const {
  const int n = grid_.points_per_axis();
  const int N = grid_.modes();
  const double scale = kPi * rq_.nodes[j] / (2.0 * grid_.half_width());
  const auto& s = sq_.nodes[m];
  e1.resize(n);
  e2.resize(n);
  e3.resize(N + 1);
  for (int i = 0; i < n; ++i) {
    e1[i] = axis_phase(scale * s[0], i, N);
    e2[i] = axis_phase(scale * s[1], i, N);
  }
  for (int i = 0; i <= N; ++i) e3[i] = axis_phase(scale * s[2], i, N);
}

DistributionField BinaryCollision::evaluate(const DistributionField& f, const DistributionField* g) const {
  require_same_grid(grid_, f.grid, "binary_collision");
  if (g != nullptr) require_same_grid(grid_, g->grid, "binary_collision_pair");

  const int n = grid_.points_per_axis();
  const int N = grid_.modes();
  const std::size_t half = grid_.half_size();
  const std::size_t full = grid_.size();
  const int J = rq_.size();

  ComplexArray F = fft_.make_spectrum();
  fft_.forward(f.values.data(), F.data());
  ComplexArray G;
  if (g != nullptr) {
    G = fft_.make_spectrum();
    fft_.forward(g->values.data(), G.data());
  }

  // Shifted interpolants Z(v +- g sigma / 2) are real trigonometric
  // polynomials; their products give the gain convolutions I_{j,k,m}.
  std::vector<ComplexArray> gain_hat(J);
  parallel_for(static_cast<std::size_t>(J), [&](std::size_t jj) {
    const int j = static_cast<int>(jj);
    std::vector<Complex> e1, e2, e3;
    ComplexArray X = fft_.make_spectrum();
    RealArray zp = fft_.make_real(), zm = fft_.make_real(), acc(full, 0.0);
    RealArray zpg, zmg;
    if (g != nullptr) {
      zpg = fft_.make_real();
      zmg = fft_.make_real();
    }
    auto shifted = [&](const ComplexArray& S, bool plus, RealArray& out) {
      for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2) {
          const Complex e12 = plus ? e1[i1] * e2[i2] : std::conj(e1[i1] * e2[i2]);
          const std::size_t base = grid_.half_flat(i1, i2, 0);
          for (int i3 = 0; i3 <= N; ++i3) {
            const Complex e = plus ? e12 * e3[i3] : e12 * std::conj(e3[i3]);
            X[base + i3] = S[base + i3] * e;
          }
        }
      fft_.inverse(X.data(), out.data());
    };
    for (int m = 0; m < sq_.size(); ++m) {
      modulation(j, m, e1, e2, e3);
      const double w = sq_.weights[m];
      shifted(F, true, zp);
      shifted(F, false, zm);
      if (g == nullptr) {
        for (std::size_t i = 0; i < full; ++i) acc[i] += w * zp[i] * zm[i];
      } else {
        shifted(G, true, zpg);
        shifted(G, false, zmg);
        for (std::size_t i = 0; i < full; ++i) acc[i] += w * (zp[i] * zmg[i] + zm[i] * zpg[i]);
      }
    }
    ComplexArray H = fft_.make_spectrum();
    fft_.forward(acc.data(), H.data());
    const RealArray& mult = gain_[j];
    for (std::size_t h = 0; h < half; ++h) H[h] *= mult[h];
    gain_hat[j] = std::move(H);
  });

  ComplexArray total = fft_.make_spectrum();
  std::fill(total.begin(), total.end(), Complex(0.0, 0.0));
  for (int j = 0; j < J; ++j)
    for (std::size_t h = 0; h < half; ++h) total[h] += gain_hat[j][h];

  DistributionField Q(grid_);
  fft_.inverse(total.data(), Q.values.data());

  // Loss: f * InvFFT(omega F) (and its symmetrized version for the pair).
  RealArray tmp = fft_.make_real();
  ComplexArray Y = fft_.make_spectrum();
  const ComplexArray& first = g != nullptr ? G : F;
  for (std::size_t h = 0; h < half; ++h) Y[h] = first[h] * omega_[h];
  fft_.inverse(Y.data(), tmp.data());
  for (std::size_t i = 0; i < full; ++i) Q[i] -= f[i] * tmp[i];
  if (g != nullptr) {
    for (std::size_t h = 0; h < half; ++h) Y[h] = F[h] * omega_[h];
    fft_.inverse(Y.data(), tmp.data());
    for (std::size_t i = 0; i < full; ++i) Q[i] -= (*g)[i] * tmp[i];
  }

  if (fix_ == ConservationFix::ZeroOut) {
    double mean = 0.0;
    for (double v : Q.values) mean += v;
    mean /= static_cast<double>(full);
    for (double& v : Q.values) v -= mean;
  }
  if (!Q.all_finite()) throw NonFiniteOutput("binary_collision: non-finite output");
  return Q;
}

DistributionField BinaryCollision::operator()(const DistributionField& f) const { return evaluate(f, nullptr); }

DistributionField BinaryCollision::pair(const DistributionField& f, const DistributionField& g) const {
  return evaluate(f, &g);
}

DistributionField binary_collision(const DistributionField& f, const CollisionKernel& kernel,
                                   const RadialQuadrature& rq, const SphericalQuadrature& sq, ConservationFix fix) {
  return BinaryCollision(f.grid, kernel, rq, sq, fix)(f);
}

DistributionField binary_collision_pair(const DistributionField& f, const DistributionField& g,
                                        const CollisionKernel& kernel, const RadialQuadrature& rq,
                                        const SphericalQuadrature& sq, ConservationFix fix) {
  return BinaryCollision(f.grid, kernel, rq, sq, fix).pair(f, g);
}

}  // namespace boltz
