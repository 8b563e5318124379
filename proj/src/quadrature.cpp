#include "boltz/quadrature.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>

#include <Eigen/Eigenvalues>

#include "boltz/errors.hpp"
#include "boltz/lebedev_data.hpp"

namespace boltz {

namespace {

// Monic Jacobi recurrence for the weight (1-t)^alpha (1+t)^beta on [-1, 1].
double jacobi_a(int k, double alpha, double beta) {
  const double s = 2.0 * k + alpha + beta;
  if (k == 0) return (beta - alpha) / (alpha + beta + 2.0);
  return (beta * beta - alpha * alpha) / (s * (s + 2.0));
}

double jacobi_b2(int k, double alpha, double beta) {
  const double s = 2.0 * k + alpha + beta;
  return 4.0 * k * (k + alpha) * (k + beta) * (k + alpha + beta) / (s * s * (s + 1.0) * (s - 1.0));
}

}  // namespace

RadialQuadrature make_radial_quadrature(int N, double R) {
  if (N < 1) throw InvalidArgument("radial quadrature: N must be >= 1");
  if (!(R > 0.0)) throw InvalidArgument("radial quadrature: R must be positive");
  const double alpha = 0.0, beta = 2.0;
  const int n = N + 1;
  const double x0 = 1.0;  // fixed node t = 1 <-> g = R

  Eigen::VectorXd diag(n), off(n - 1);
  for (int k = 0; k < n; ++k) diag(k) = jacobi_a(k, alpha, beta);
  for (int k = 1; k < n; ++k) off(k - 1) = std::sqrt(jacobi_b2(k, alpha, beta));

  // Radau modification: choose the last diagonal entry so x0 is an eigenvalue,
  // a* = x0 - b_{n-1}^2 p_{n-2}(x0) / p_{n-1}(x0) with monic p_k.
  double p_prev = 0.0, p = 1.0;
  for (int k = 0; k < n - 1; ++k) {
    const double next = (x0 - diag(k)) * p - (k > 0 ? jacobi_b2(k, alpha, beta) : 0.0) * p_prev;
    p_prev = p;
    p = next;
  }
  diag(n - 1) = x0 - jacobi_b2(n - 1, alpha, beta) * p_prev / p;

  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) T(k, k) = diag(k);
  for (int k = 0; k < n - 1; ++k) T(k, k + 1) = T(k + 1, k) = off(k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(T);
  if (eig.info() != Eigen::Success) throw ConvergenceFailure("radial quadrature: eigen-decomposition failed");

  const double mu0 = 8.0 / 3.0;  // int_{-1}^{1} (1+t)^2 dt
  const double scale = R * R * R / 8.0;
  RadialQuadrature rq;
  rq.R = R;
  rq.nodes.resize(n);
  rq.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double t = std::min(1.0, eig.eigenvalues()(i));
    const double v0 = eig.eigenvectors()(0, i);
    rq.nodes[i] = 0.5 * R * (t + 1.0);
    rq.weights[i] = mu0 * v0 * v0 * scale;
  }
  // The fixed node is exact by construction; remove eigen-solver rounding.
  rq.nodes[n - 1] = R;
  return rq;
}

namespace {

struct HemisphereEntry {
  int M;
  int order;
};

constexpr HemisphereEntry kHemispheres[] = {{7, 5},    {13, 7},   {19, 9},  {25, 11},
                                            {55, 17},  {217, 35}, {727, 65}};

}  // namespace

std::vector<int> supported_hemisphere_sizes() {
  std::vector<int> out;
  for (const auto& e : kHemispheres) out.push_back(e.M);
  return out;
}

int hemisphere_size_for_degree(int degree) {
  for (const auto& e : kHemispheres)
    if (e.order >= degree) return e.M;
  return kHemispheres[std::size(kHemispheres) - 1].M;
}

SphericalQuadrature make_hemisphere_quadrature(int M) {
  int order = 0;
  for (const auto& e : kHemispheres)
    if (e.M == M) order = e.order;
  if (order == 0) throw UnsupportedOrder("hemisphere quadrature: unsupported M = " + std::to_string(M));

  const detail::LebedevGrid* grid = nullptr;
  for (const auto& g : detail::lebedev_grids())
    if (g.order == order) grid = &g;
  if (grid == nullptr) throw UnsupportedOrder("hemisphere quadrature: missing Lebedev table");

  constexpr double eps = 1e-12;
  SphericalQuadrature sq;
  sq.lebedev_order = order;
  for (const auto& p : grid->points) {
    bool upper = p.z > eps;
    if (std::abs(p.z) <= eps) upper = p.y > eps || (std::abs(p.y) <= eps && p.x > 0.0);
    if (!upper) continue;
    sq.nodes.push_back({p.x, p.y, p.z});
    sq.weights.push_back(2.0 * p.w);
  }
  if (sq.size() != M) throw UnsupportedOrder("hemisphere quadrature: table is not antipodally symmetric");
  return sq;
}

void write_quadrature_csv(std::ostream& os, const RadialQuadrature& rq) {
  os << "j,g,w\n" << std::setprecision(17);
  for (int j = 0; j < rq.size(); ++j) os << j << ',' << rq.nodes[j] << ',' << rq.weights[j] << '\n';
}

void write_quadrature_csv(std::ostream& os, const SphericalQuadrature& sq) {
  os << "m,x,y,z,w\n" << std::setprecision(17);
  for (int m = 0; m < sq.size(); ++m)
    os << m << ',' << sq.nodes[m][0] << ',' << sq.nodes[m][1] << ',' << sq.nodes[m][2] << ',' << sq.weights[m]
       << '\n';
}

}  // namespace boltz
