#include <cmath>

#include "boltz/errors.hpp"
#include "boltz/steady.hpp"
#include "doctest.h"

using namespace boltz;

namespace {

// Small problem for the expensive paths: 20 cells, N = 8.
SteadyProblem small_couette(double u_W, double Kn) {
  auto p = SteadyProblem::couette(u_W, Kn);
  p.Nx = 20;
  p.N = 8;
  p.R = 4.0;
  return p;
}

}  // namespace

TEST_CASE("problem validation") {
  SteadyProblem p;
  CHECK_NOTHROW(p.validate());
  p.x_R = p.x_L;
  CHECK_THROWS_AS(p.validate(), InvalidArgument);
  p = SteadyProblem{};
  p.wall_L.u = {0.1, 0.0, 0.0};
  CHECK_THROWS_AS(p.validate(), InvalidArgument);
  p = SteadyProblem{};
  p.Kn = 0.0;
  CHECK_THROWS_AS(p.validate(), InvalidArgument);
  CHECK(SteadyProblem::fourier(1.0, 3.0, 1.0).R == 4.0);
  CHECK(SteadyProblem::fourier(1.0, 2.0, 1.0).R == 3.5);
}

TEST_CASE("initial guess") {
  auto p = SteadyProblem::fourier(1.0, 3.0, 1.0);
  p.Nx = 5;
  p.R = 10.0;  // wide enough that the theta = 3 Maxwellian is not truncated
  const auto f = initial_guess(p);
  REQUIRE(f.size() == 5);
  const auto mid = compute_moments(f.cells[2]);
  CHECK(p.x(2) == doctest::Approx(0.0));
  CHECK(mid.theta == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(mid.rho == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(f.total_mass(p.dx()) == doctest::Approx(p.total_mass).epsilon(1e-6));

  auto c = SteadyProblem::couette(0.3, 1.0);
  c.Nx = 3;
  c.N = 8;
  const auto g = initial_guess(c);
  const auto M = maxwellian_field({}, c.grid());
  for (const auto& cell : g.cells) CHECK(l2_distance(cell, M) < 1e-14);
}

TEST_CASE("wall ghost balances the mass flux") {
  const auto g = SpectralGrid::from_cutoff(8, 6.0);
  const WallState wall{{0.0, 0.3, 0.0}, 1.0};
  const auto M = maxwellian_field({1.7, {0, 0, 0}, 1.0}, g);
  for (auto side : {WallSide::Left, WallSide::Right}) {
    // the unmatched v1 = -L plane makes the half sums differ by ~M(-L)
    CHECK(wall_density(M, {{0, 0, 0}, 1.0}, side) == doctest::Approx(1.7).epsilon(1e-8));
    const auto cell = maxwellian_field({1.2, {0.2, -0.1, 0.0}, 1.3}, g);
    const auto ghost = wall_ghost(cell, wall, side);
    CHECK(std::abs(merged_wall_flux(cell, ghost, side)) <= 1e-12);
    CHECK(wall_density(2.0 * cell, wall, side) == doctest::Approx(2.0 * wall_density(cell, wall, side)).epsilon(1e-14));
    CHECK_THROWS_AS(wall_density(DistributionField(g), wall, side), DegenerateFlux);
  }
  // a wall at the cell's own state reproduces the cell
  const auto cell = maxwellian_field({0.8, {0, 0, 0}, 1.0}, g);
  CHECK(l2_distance(wall_ghost(cell, {{0, 0, 0}, 1.0}, WallSide::Left), cell) < 1e-8);
}

TEST_CASE("global equilibrium is a discrete steady state") {
  auto p = SteadyProblem::couette(0.0, 1.0);
  p.Nx = 4;
  const auto f = initial_guess(p);
  const auto r = residual(f, p);
  CHECK(r.norm <= 1e-5);
  const auto sol = newton_solve(p);
  CHECK(sol.report.newton_iterations == 0);
  CHECK(sol.report.binary_evaluations == 1);
  CHECK(sol.report.converged);
  for (const auto& m : profile_moments(sol.f)) {
    CHECK(m.rho == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(m.theta == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::abs(m.u[1]) < 1e-8);
  }
}

TEST_CASE("residual scaling at equilibrium") {
  auto p = SteadyProblem::couette(0.0, 1.0);
  p.Nx = 2;
  auto f = initial_guess(p);
  for (auto& c : f.cells) c *= 3.0;
  CHECK(residual(f, p).norm <= 9e-5);
}

TEST_CASE("zero residual gives a zero correction") {
  auto p = small_couette(0.3, 1.0);
  const auto f = initial_guess(p);
  SolutionField r;
  for (int j = 0; j < p.Nx; ++j) r.cells.emplace_back(p.grid());
  const auto inner = source_iteration_solve(f, r, p);
  CHECK(inner.iterations <= 1);
  for (const auto& cell : inner.g.cells) CHECK(cell.max_abs() == 0.0);
}

TEST_CASE("small Couette flow") {
  const auto p = small_couette(0.2, 1.0);
  const auto sol = newton_solve(p);
  const auto& rep = sol.report;
  CHECK(rep.converged);
  CHECK(rep.newton_iterations >= 1);
  CHECK(rep.newton_iterations <= 4);
  CHECK(rep.binary_evaluations == rep.newton_iterations + 1);
  CHECK(rep.residual_norms.size() == std::size_t(rep.binary_evaluations));
  for (std::size_t k = 1; k < rep.residual_norms.size(); ++k)
    CHECK(rep.residual_norms[k] <= rep.residual_norms[k - 1] + 1e-12);
  CHECK(rep.residual_norms.back() < p.outer_res);
  for (double flux : rep.max_wall_flux) CHECK(flux <= 1e-12);
  CHECK(sol.f.total_mass(p.dx()) == doctest::Approx(p.total_mass).epsilon(1e-12));
  for (int it : rep.inner_iterations) CHECK(it < 100);

  const auto m = profile_moments(sol.f);
  double anti = 0.0, sym = 0.0;
  for (int j = 0; j < p.Nx; ++j) {
    anti = std::max(anti, std::abs(m[j].u[1] + m[p.Nx - 1 - j].u[1]));
    sym = std::max(sym, std::abs(m[j].theta - m[p.Nx - 1 - j].theta));
  }
  CHECK(anti <= 1e-3);
  CHECK(sym <= 1e-3);
  CHECK(m.front().u[1] < 0.0);  // left wall moves with -u_W
}

TEST_CASE("rarefaction flattens the velocity profile and speeds up the inner solve") {
  const auto dense = newton_solve(small_couette(0.2, 0.1));
  const auto rare = newton_solve(small_couette(0.2, 10.0));
  auto drop = [](const SteadySolution& s) {
    const auto m = profile_moments(s.f);
    return std::abs(m.front().u[1] - m.back().u[1]);
  };
  CHECK(drop(rare) < drop(dense));
  CHECK(dense.report.inner_iterations.front() > rare.report.inner_iterations.front());
}

TEST_CASE("Newton cap raises NonConvergence with the report") {
  auto p = small_couette(0.5, 1.0);
  p.max_newton = 1;
  try {
    newton_solve(p);
    FAIL("expected NonConvergence");
  } catch (const NonConvergence& e) {
    CHECK(e.report.newton_iterations == 1);
    CHECK_FALSE(e.report.converged);
    CHECK(e.last.size() == p.Nx);
  }
}
