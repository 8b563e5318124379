#pragma once

#include <array>
#include <iosfwd>
#include <vector>

namespace boltz {

/// sum_j weights[j] psi(nodes[j]) ~ int_0^R g^2 psi(g) dg.
struct RadialQuadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
  double R = 0.0;

  int size() const { return static_cast<int>(nodes.size()); }
};

/// Hemisphere rule; weights sum to 1, so 2 pi sum_m w_m phi(sigma_m)
/// approximates the hemisphere integral of an even phi.
struct SphericalQuadrature {
  std::vector<std::array<double, 3>> nodes;
  std::vector<double> weights;
  int lebedev_order = 0;

  int size() const { return static_cast<int>(nodes.size()); }
};

/// Gauss-Radau rule with J = N + 1 nodes, one of them fixed at g = R; exact
/// for polynomials of degree <= 2N against the weight g^2.
RadialQuadrature make_radial_quadrature(int N, double R);

/// Upper half of an antipodally symmetric Lebedev grid with 2M points.
/// Supported M: 7, 13, 19, 25, 55, 217, 727.
SphericalQuadrature make_hemisphere_quadrature(int M);

std::vector<int> supported_hemisphere_sizes();

/// Smallest supported hemisphere size whose Lebedev order is >= degree.
int hemisphere_size_for_degree(int degree);

void write_quadrature_csv(std::ostream& os, const RadialQuadrature& rq);
void write_quadrature_csv(std::ostream& os, const SphericalQuadrature& sq);

}  // namespace boltz
