#include "boltz/moments.hpp"

#include <cmath>
#include <numbers>

#include "boltz/errors.hpp"

namespace boltz {

void MaxwellianParams::validate() const {
  if (!(rho > 0.0) || !(theta > 0.0) || !std::isfinite(rho) || !std::isfinite(theta))
    throw InvalidArgument("Maxwellian parameters require rho > 0 and theta > 0");
}

MomentSet compute_moments(const DistributionField& field) {
  const SpectralGrid& g = field.grid;
  const int n = g.points_per_axis();
  // Raw sums first, then central moments about u.
  double m0 = 0.0;
  Vec3 m1{};
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      for (int i3 = 0; i3 < n; ++i3) {
        const double f = field[g.flat(i1, i2, i3)];
        const Vec3 v = g.velocity(i1, i2, i3);
        m0 += f;
        for (int a = 0; a < 3; ++a) m1[a] += f * v[a];
      }
  const double dv = g.cell_volume();
  MomentSet m;
  m.rho = m0 * dv;
  if (!(m.rho > 0.0)) throw NonpositiveDensity("compute_moments: density is not positive");
  for (int a = 0; a < 3; ++a) m.u[a] = m1[a] * dv / m.rho;

  Mat3 p{};
  Vec3 q{};
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      for (int i3 = 0; i3 < n; ++i3) {
        const double f = field[g.flat(i1, i2, i3)];
        const Vec3 v = g.velocity(i1, i2, i3);
        const Vec3 c{v[0] - m.u[0], v[1] - m.u[1], v[2] - m.u[2]};
        const double c2 = c[0] * c[0] + c[1] * c[1] + c[2] * c[2];
        for (int a = 0; a < 3; ++a) {
          q[a] += 0.5 * f * c2 * c[a];
          for (int b = a; b < 3; ++b) p[a][b] += f * c[a] * c[b];
        }
      }
  for (int a = 0; a < 3; ++a) {
    m.q[a] = q[a] * dv;
    for (int b = a; b < 3; ++b) m.p[a][b] = m.p[b][a] = p[a][b] * dv;
  }
  m.theta = (m.p[0][0] + m.p[1][1] + m.p[2][2]) / (3.0 * m.rho);
  return m;
}

DistributionField maxwellian_field(const MaxwellianParams& params, const SpectralGrid& grid) {
  params.validate();
  DistributionField f(grid);
  const int n = grid.points_per_axis();
  const double pref = params.rho / std::pow(2.0 * std::numbers::pi * params.theta, 1.5);
  const double inv2t = 1.0 / (2.0 * params.theta);
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      for (int i3 = 0; i3 < n; ++i3) {
        const Vec3 v = grid.velocity(i1, i2, i3);
        const double d0 = v[0] - params.u[0], d1 = v[1] - params.u[1], d2 = v[2] - params.u[2];
        f[grid.flat(i1, i2, i3)] = pref * std::exp(-(d0 * d0 + d1 * d1 + d2 * d2) * inv2t);
      }
  return f;
}

FourierField maxwellian_fourier(const MaxwellianParams& params, const SpectralGrid& grid) {
  params.validate();
  FourierField F(grid);
  const int n = grid.points_per_axis();
  const double pi = std::numbers::pi;
  const double L = grid.half_width();
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      for (int i3 = 0; i3 < n; ++i3) {
        const double l1 = grid.wave(i1), l2 = grid.wave(i2), l3 = grid.wave(i3);
        const double phase = -pi / L * (l1 * params.u[0] + l2 * params.u[1] + l3 * params.u[2]);
        const double decay = -0.5 * pi * pi * params.theta / (L * L) * (l1 * l1 + l2 * l2 + l3 * l3);
        F[grid.flat(i1, i2, i3)] = params.rho * std::exp(decay) * Complex(std::cos(phase), std::sin(phase));
      }
  return F;
}

DistributionField test_distribution(TestDistribution which, const SpectralGrid& grid) {
  DistributionField f(grid);
  const int n = grid.points_per_axis();
  const double pi32 = std::pow(std::numbers::pi, 1.5);
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      for (int i3 = 0; i3 < n; ++i3) {
        const Vec3 v = grid.velocity(i1, i2, i3);
        double value = 0.0;
        if (which == TestDistribution::F1) {
          const double u = std::sqrt(2.0), vt = 1.0 / 3.0;
          auto gauss = [&](double a, double b) {
            return std::exp(-(a * a + b * b + v[2] * v[2]) / (2.0 * vt));
          };
          value = (gauss(v[0] + u, v[1]) + gauss(v[0] - u, v[1]) + gauss(v[0], v[1] + u) + gauss(v[0], v[1] - u)) /
                  (4.0 * pi32);
        } else {
          const double s2 = std::sqrt(2.0);
          const double c = std::pow(2.0, 0.25) * (2.0 - s2) / pi32;
          const double v2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
          const double pos = c * std::exp(-v2 / s2), neg = 0.25 * c * std::exp(-v2 / (2.0 * s2));
          // On the plane v1 = 0 the sample is the mean of the one-sided limits.
          value = v[0] > 0.0 ? pos : v[0] < 0.0 ? neg : 0.5 * (pos + neg);
        }
        f[grid.flat(i1, i2, i3)] = value;
      }
  return f;
}

}  // namespace boltz
