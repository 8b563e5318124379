#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "boltz/errors.hpp"
#include "boltz/kernel.hpp"
#include "boltz/quadrature.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace boltz;

TEST_CASE("radial rule: size, endpoint and low moments") {
  const auto rq = make_radial_quadrature(16, 6.0);
  REQUIRE(rq.size() == 17);
  double s0 = 0.0, s1 = 0.0;
  for (int j = 0; j < rq.size(); ++j) {
    CHECK(rq.weights[j] > 0.0);
    CHECK(rq.nodes[j] > 0.0);
    CHECK(rq.nodes[j] <= 6.0);
    s0 += rq.weights[j];
    s1 += rq.weights[j] * rq.nodes[j];
  }
  CHECK(*std::max_element(rq.nodes.begin(), rq.nodes.end()) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(s0 == doctest::Approx(72.0).epsilon(1e-12));
  CHECK(s1 == doctest::Approx(324.0).epsilon(1e-12));
}

TEST_CASE("radial rule is exact to degree 2N and not beyond") {
  for (int N : {4, 8, 16, 32}) {
    for (double R : {1.0, 6.0}) {
      const auto rq = make_radial_quadrature(N, R);
      auto moment = [&](int k) {
        double s = 0.0;
        for (int j = 0; j < rq.size(); ++j) s += rq.weights[j] * std::pow(rq.nodes[j] / R, k);
        return s;
      };
      // integrate (g/R)^k g^2 on [0,R] = R^3/(k+3)
      for (int k = 0; k <= 2 * N; ++k) {
        const double exact = R * R * R / (k + 3);
        CHECK(std::abs(moment(k) - exact) / exact <= 1e-11);
      }
    }
  }
}

TEST_CASE("radial rule fails one degree past 2N") {
  // at larger N the error past degree 2N is already below round-off
  for (int N : {2, 4}) {
    const auto rq = make_radial_quadrature(N, 1.0);
    const int k = 2 * N + 1;
    double s = 0.0;
    for (int j = 0; j < rq.size(); ++j) s += rq.weights[j] * std::pow(rq.nodes[j], k);
    CHECK(std::abs(s - 1.0 / (k + 3)) * (k + 3) > 1e-8);
  }
}

TEST_CASE("hemisphere rules: weights, area and monomial means") {
  for (int M : supported_hemisphere_sizes()) {
    const auto sq = make_hemisphere_quadrature(M);
    REQUIRE(sq.size() == M);
    double sum = 0.0;
    for (int m = 0; m < M; ++m) {
      CHECK(sq.weights[m] > 0.0);
      const auto& s = sq.nodes[m];
      CHECK(s[0] * s[0] + s[1] * s[1] + s[2] * s[2] == doctest::Approx(1.0).epsilon(1e-14));
      sum += sq.weights[m];
    }
    CHECK(2.0 * std::numbers::pi * sum == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-14));
    // even monomials up to the design order
    const int order = sq.lebedev_order;
    for (int a = 0; a <= order; a += 2)
      for (int b = 0; a + b <= order; b += 2)
        for (int c = 0; a + b + c <= order; c += 2) {
          double q = 0.0;
          for (int m = 0; m < M; ++m)
            q += sq.weights[m] * std::pow(sq.nodes[m][0], a) * std::pow(sq.nodes[m][1], b) * std::pow(sq.nodes[m][2], c);
          CHECK(std::abs(q - oracle::sphere_monomial_mean(a, b, c)) <= 1e-12);
        }
  }
}

TEST_CASE("hemisphere z^2 mean at M = 25") {
  const auto sq = make_hemisphere_quadrature(25);
  double s = 0.0;
  for (int m = 0; m < 25; ++m) s += sq.weights[m] * sq.nodes[m][2] * sq.nodes[m][2];
  CHECK(2.0 * std::numbers::pi * s == doctest::Approx(2.0 * std::numbers::pi / 3.0).epsilon(1e-12));
}

TEST_CASE("cosine quadrature reproduces sinc") {
  const auto sq = make_hemisphere_quadrature(25);
  const double g = 2.0, L = 6.62;
  const double l[3] = {3.0, 1.0, 0.0};
  double s = 0.0;
  for (int m = 0; m < 25; ++m) {
    const auto& n = sq.nodes[m];
    s += sq.weights[m] * std::cos(std::numbers::pi * g * (n[0] * l[0] + n[1] * l[1] + n[2] * l[2]) / L);
  }
  CHECK(std::abs(s - sinc(std::numbers::pi * g * std::sqrt(10.0) / L)) <= 1e-6);
}

TEST_CASE("unsupported hemisphere sizes are rejected") {
  CHECK_THROWS_AS(make_hemisphere_quadrature(8), UnsupportedOrder);
  CHECK_THROWS_AS(make_hemisphere_quadrature(0), UnsupportedOrder);
  CHECK(hemisphere_size_for_degree(3) == 7);
  CHECK(make_hemisphere_quadrature(hemisphere_size_for_degree(32)).lebedev_order >= 32);
}

TEST_CASE("quadrature CSV dump has a header and one row per node") {
  std::ostringstream os;
  write_quadrature_csv(os, make_radial_quadrature(4, 6.0));
  std::string text = os.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 6);
}
