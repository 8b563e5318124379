#include "boltz/steady.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>

#include "boltz/parallel.hpp"
#include "boltz/quadrature.hpp"

namespace boltz {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void validate_wall(const WallState& w, const char* name) {
  if (!(w.theta > 0.0)) throw InvalidArgument(std::string("steady: ") + name + " temperature must be positive");
  if (w.u[0] != 0.0) throw InvalidArgument(std::string("steady: ") + name + " velocity must have u_1 = 0");
}

// v_1 at each storage index of the first axis.
std::vector<double> axis_velocity(const SpectralGrid& grid) {
  std::vector<double> v(grid.points_per_axis());
  for (int i = 0; i < grid.points_per_axis(); ++i) v[i] = grid.velocity(i);
  return v;
}

// Raw sum_k v_1 f_k restricted to v_1 > 0 (sign = +1) or v_1 < 0 (sign = -1).
double half_flux(const DistributionField& f, int sign) {
  const SpectralGrid& grid = f.grid;
  const int n = grid.points_per_axis();
  const std::size_t block = static_cast<std::size_t>(n) * n;
  double s = 0.0;
  for (int i1 = 0; i1 < n; ++i1) {
    const double v = grid.velocity(i1);
    if (sign * v <= 0.0) continue;
    const double* p = f.values.data() + i1 * block;
    double b = 0.0;
    for (std::size_t i = 0; i < block; ++i) b += p[i];
    s += v * b;
  }
  return s;
}

DistributionField unit_wall_maxwellian(const WallState& wall, const SpectralGrid& grid) {
  return maxwellian_field(MaxwellianParams{1.0, wall.u, wall.theta}, grid);
}

// Wall Maxwellians and the normalizing incoming fluxes, built once per solve.
struct Walls {
  DistributionField M_L, M_R;
  double in_L = 0.0;  // sum v_1^+ M_L
  double in_R = 0.0;  // -sum v_1^- M_R

  Walls(const SteadyProblem& p, const SpectralGrid& grid)
      : M_L(unit_wall_maxwellian(p.wall_L, grid)), M_R(unit_wall_maxwellian(p.wall_R, grid)) {
    in_L = half_flux(M_L, +1);
    in_R = -half_flux(M_R, -1);
  }

  // Linear in the boundary cell; no sign check (used for corrections too).
  double rho_L(const DistributionField& f1) const { return -half_flux(f1, -1) / in_L; }
  double rho_R(const DistributionField& fN) const { return half_flux(fN, +1) / in_R; }

  DistributionField ghost_L(const DistributionField& f1) const { return rho_L(f1) * M_L; }
  DistributionField ghost_R(const DistributionField& fN) const { return rho_R(fN) * M_R; }
};

// Upwind transport of cell j with the given ghost cells.
void transport(const SolutionField& f, const DistributionField& gl, const DistributionField& gr, double dx, int j,
               const std::vector<double>& v1, DistributionField& out) {
  const int Nx = f.size();
  const DistributionField& fj = f.cells[j];
  const DistributionField& left = j == 0 ? gl : f.cells[j - 1];
  const DistributionField& right = j == Nx - 1 ? gr : f.cells[j + 1];
  const std::size_t block = fj.size() / v1.size();
  for (std::size_t i1 = 0; i1 < v1.size(); ++i1) {
    const double v = v1[i1];
    const std::size_t lo = i1 * block, hi = lo + block;
    if (v > 0.0) {
      for (std::size_t i = lo; i < hi; ++i) out[i] = v * (fj[i] - left[i]) / dx;
    } else {
      for (std::size_t i = lo; i < hi; ++i) out[i] = v * (right[i] - fj[i]) / dx;
    }
  }
}

double field_norm(const SolutionField& r, double dx) {
  double s = 0.0;
  for (const auto& c : r.cells)
    for (double x : c.values) s += x * x;
  const double h3 = r.cells.empty() ? 0.0 : r.cells.front().grid.cell_volume();
  return std::sqrt(dx * h3 * s);
}

SolutionField zeros_like(const SolutionField& f) {
  SolutionField z;
  z.cells.reserve(f.cells.size());
  for (const auto& c : f.cells) z.cells.emplace_back(c.grid);
  return z;
}

struct Context {
  const SteadyProblem& p;
  SpectralGrid grid;
  std::vector<double> v1;
  Walls walls;
  std::unique_ptr<BinaryCollision> binary;
  std::unique_ptr<PrecomputedTables> tables;

  explicit Context(const SteadyProblem& problem, bool need_binary, bool need_linear)
      : p(problem), grid(problem.grid()), v1(axis_velocity(grid)), walls(problem, grid) {
    const RadialQuadrature rq = make_radial_quadrature(p.N, p.R);
    if (need_binary)
      binary = std::make_unique<BinaryCollision>(grid, p.kernel, rq, make_hemisphere_quadrature(p.sphere_points),
                                                 p.fix);
    if (need_linear) tables = std::make_unique<PrecomputedTables>(precompute(grid, rq, p.kernel));
  }

  ResidualResult residual(const SolutionField& f) const {
    const int Nx = f.size();
    const double dx = p.dx();
    const DistributionField gl = ghost_checked(f.cells.front(), WallSide::Left);
    const DistributionField gr = ghost_checked(f.cells.back(), WallSide::Right);
    ResidualResult out;
    out.field = zeros_like(f);
    parallel_for(static_cast<std::size_t>(Nx), [&](std::size_t jj) {
      const int j = static_cast<int>(jj);
      DistributionField& r = out.field.cells[j];
      transport(f, gl, gr, dx, j, v1, r);
      r.axpy(-1.0 / p.Kn, (*binary)(f.cells[j]));
    });
    out.norm = field_norm(out.field, dx);
    return out;
  }

  DistributionField ghost_checked(const DistributionField& cell, WallSide side) const {
    const double out_flux = side == WallSide::Left ? -half_flux(cell, -1) : half_flux(cell, +1);
    if (!(out_flux > 0.0)) throw DegenerateFlux("wall_ghost: outgoing flux is not positive");
    return side == WallSide::Left ? walls.ghost_L(cell) : walls.ghost_R(cell);
  }
};

// Residual of the correction equation T g - (1/Kn) L g - r, with ghosts from g.
double correction_residual(const Context& ctx, const SolutionField& g, const SolutionField& Lg,
                           const SolutionField& r) {
  const int Nx = g.size();
  const double dx = ctx.p.dx();
  const DistributionField gl = ctx.walls.ghost_L(g.cells.front());
  const DistributionField gr = ctx.walls.ghost_R(g.cells.back());
  std::vector<double> partial(Nx, 0.0);
  parallel_for(static_cast<std::size_t>(Nx), [&](std::size_t jj) {
    const int j = static_cast<int>(jj);
    DistributionField t(ctx.grid);
    transport(g, gl, gr, dx, j, ctx.v1, t);
    double s = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double e = t[i] - Lg.cells[j][i] / ctx.p.Kn - r.cells[j][i];
      s += e * e;
    }
    partial[j] = s;
  });
  double s = 0.0;
  for (double x : partial) s += x;
  return std::sqrt(dx * ctx.grid.cell_volume() * s);
}

InnerSolveResult inner_solve(const Context& ctx, const SolutionField& f, const SolutionField& r) {
  const SteadyProblem& p = ctx.p;
  const int Nx = f.size();
  const double dx = p.dx();
  const std::size_t n1 = ctx.v1.size();
  const std::size_t block = ctx.grid.size() / n1;

  std::vector<MaxwellianParams> params(Nx);
  std::vector<double> nu(Nx);
  for (int j = 0; j < Nx; ++j) {
    params[j] = compute_moments(f.cells[j]).maxwellian();
    nu[j] = params[j].rho;
  }

  InnerSolveResult res;
  res.g = zeros_like(f);
  SolutionField Lg = zeros_like(f);
  SolutionField best = res.g;
  double best_norm = 0.0;
  double norm0 = 0.0;

  for (int ell = 0;; ++ell) {
    if (ell > 0) {
      parallel_for(static_cast<std::size_t>(Nx), [&](std::size_t jj) {
        const int j = static_cast<int>(jj);
        Lg.cells[j] = linearized_collision(res.g.cells[j], params[j], *ctx.tables, p.cutoff, p.linear_mass_fix);
      });
    }
    const double norm = correction_residual(ctx, res.g, Lg, r);
    if (ell == 0) {
      norm0 = norm;
      best_norm = norm;
    } else if (norm < best_norm) {
      best_norm = norm;
      best = res.g;
    }
    res.relative_residuals.push_back(norm0 > 0.0 ? norm / norm0 : 0.0);
    if (norm <= p.inner_abs || norm <= p.inner_rel * norm0) break;
    if (ell == p.max_inner) {
      res.hit_cap = true;
      res.g = std::move(best);
      break;
    }

    // Lagged right-hand side and ghosts from the current iterate.
    SolutionField rhs = zeros_like(f);
    for (int j = 0; j < Nx; ++j) {
      const auto& lg = Lg.cells[j];
      const auto& gj = res.g.cells[j];
      auto& b = rhs.cells[j];
      for (std::size_t i = 0; i < b.size(); ++i) {
        const double src = lg[i] + nu[j] * gj[i];
        if (src < 0.0) ++res.positivity_violations;
        b[i] = src / p.Kn + r.cells[j][i];
      }
    }
    const DistributionField gl = ctx.walls.ghost_L(res.g.cells.front());
    const DistributionField gr = ctx.walls.ghost_R(res.g.cells.back());
    SolutionField next = zeros_like(f);
    parallel_for(n1, [&](std::size_t i1) {
      const double v = ctx.v1[i1];
      const double a = std::abs(v) / dx;
      const std::size_t lo = i1 * block, hi = lo + block;
      for (std::size_t i = lo; i < hi; ++i) {
        if (v > 0.0) {
          double prev = gl[i];
          for (int j = 0; j < Nx; ++j) {
            prev = (rhs.cells[j][i] + a * prev) / (a + nu[j] / p.Kn);
            next.cells[j][i] = prev;
          }
        } else if (v < 0.0) {
          double prev = gr[i];
          for (int j = Nx - 1; j >= 0; --j) {
            prev = (rhs.cells[j][i] + a * prev) / (a + nu[j] / p.Kn);
            next.cells[j][i] = prev;
          }
        } else {
          for (int j = 0; j < Nx; ++j) next.cells[j][i] = rhs.cells[j][i] * p.Kn / nu[j];
        }
      }
    });
    res.g = std::move(next);
    ++res.iterations;
  }
  return res;
}

}  // namespace

void SteadyProblem::validate() const {
  if (!(x_L < x_R)) throw InvalidArgument("steady: x_L must be below x_R");
  if (Nx < 1) throw InvalidArgument("steady: Nx must be positive");
  if (!(Kn > 0.0)) throw InvalidArgument("steady: Kn must be positive");
  if (!(total_mass > 0.0)) throw InvalidArgument("steady: total mass must be positive");
  validate_wall(wall_L, "left wall");
  validate_wall(wall_R, "right wall");
  kernel.validate();
  cutoff.validate();
  if (!(outer_res > 0.0 && inner_abs > 0.0 && inner_rel > 0.0))
    throw InvalidArgument("steady: tolerances must be positive");
  if (max_newton < 0 || max_inner < 1) throw InvalidArgument("steady: iteration caps out of range");
  (void)grid();
  (void)make_hemisphere_quadrature(sphere_points);
}

SteadyProblem SteadyProblem::couette(double u_W, double Kn) {
  SteadyProblem p;
  p.Kn = Kn;
  p.wall_L = WallState{{0.0, -u_W, 0.0}, 1.0};
  p.wall_R = WallState{{0.0, u_W, 0.0}, 1.0};
  return p;
}

SteadyProblem SteadyProblem::fourier(double theta_L, double theta_R, double Kn) {
  SteadyProblem p;
  p.Kn = Kn;
  p.wall_L = WallState{{0.0, 0.0, 0.0}, theta_L};
  p.wall_R = WallState{{0.0, 0.0, 0.0}, theta_R};
  p.R = std::max(theta_L, theta_R) <= 2.0 ? 3.5 : 4.0;
  return p;
}

double SolutionField::total_mass(double dx) const {
  double s = 0.0;
  for (const auto& c : cells) s += c.integral();
  return dx * s;
}

SolutionField initial_guess(const SteadyProblem& problem) {
  problem.validate();
  const SpectralGrid grid = problem.grid();
  const double rho = problem.total_mass / (problem.x_R - problem.x_L);
  const double tL = problem.wall_L.theta, tR = problem.wall_R.theta;
  SolutionField f;
  f.cells.reserve(problem.Nx);
  for (int j = 0; j < problem.Nx; ++j) {
    const double s = (problem.x(j) - problem.x_L) / (problem.x_R - problem.x_L);
    f.cells.push_back(maxwellian_field(MaxwellianParams{rho, {0.0, 0.0, 0.0}, tL + s * (tR - tL)}, grid));
  }
  return f;
}

double wall_density(const DistributionField& boundary_cell, const WallState& wall, WallSide side) {
  validate_wall(wall, "wall");
  const DistributionField M = unit_wall_maxwellian(wall, boundary_cell.grid);
  if (side == WallSide::Left) {
    const double out = -half_flux(boundary_cell, -1);
    if (!(out > 0.0)) throw DegenerateFlux("wall_ghost: outgoing flux is not positive");
    return out / half_flux(M, +1);
  }
  const double out = half_flux(boundary_cell, +1);
  if (!(out > 0.0)) throw DegenerateFlux("wall_ghost: outgoing flux is not positive");
  return out / -half_flux(M, -1);
}

DistributionField wall_ghost(const DistributionField& boundary_cell, const WallState& wall, WallSide side) {
  const double rho = wall_density(boundary_cell, wall, side);
  return rho * unit_wall_maxwellian(wall, boundary_cell.grid);
}

double merged_wall_flux(const DistributionField& boundary_cell, const DistributionField& ghost, WallSide side) {
  require_same_grid(boundary_cell.grid, ghost.grid, "merged_wall_flux");
  // Left wall: ghost supplies v_1 > 0, the cell supplies v_1 < 0; mirrored on the right.
  const int in = side == WallSide::Left ? +1 : -1;
  return (half_flux(ghost, in) + half_flux(boundary_cell, -in)) * boundary_cell.grid.cell_volume();
}

ResidualResult residual(const SolutionField& f, const SteadyProblem& problem) {
  problem.validate();
  if (f.size() != problem.Nx) throw InvalidArgument("residual: cell count differs from Nx");
  const Context ctx(problem, true, false);
  return ctx.residual(f);
}

InnerSolveResult source_iteration_solve(const SolutionField& f, const SolutionField& r, const SteadyProblem& problem) {
  problem.validate();
  if (f.size() != problem.Nx || r.size() != problem.Nx)
    throw InvalidArgument("source_iteration_solve: cell count differs from Nx");
  const Context ctx(problem, false, true);
  return inner_solve(ctx, f, r);
}

SteadySolution newton_solve(const SteadyProblem& problem) {
  const auto start = Clock::now();
  SteadySolution out;
  out.f = initial_guess(problem);
  const Context ctx(problem, true, true);
  SolverReport& rep = out.report;
  const double dx = problem.dx();

  for (;;) {
    auto t0 = Clock::now();
    const ResidualResult r = ctx.residual(out.f);
    rep.binary_seconds += seconds_since(t0);
    ++rep.binary_evaluations;
    rep.residual_norms.push_back(r.norm);
    if (r.norm < problem.outer_res) {
      rep.converged = true;
      break;
    }
    if (rep.newton_iterations >= problem.max_newton) {
      rep.total_seconds = seconds_since(start);
      throw NonConvergence("newton_solve: residual above tolerance after " + std::to_string(problem.max_newton) +
                               " iterations",
                           rep, out.f);
    }

    t0 = Clock::now();
    InnerSolveResult inner = inner_solve(ctx, out.f, r.field);
    rep.inner_seconds += seconds_since(t0);
    rep.inner_relative_residuals.push_back(std::move(inner.relative_residuals));
    rep.inner_iterations.push_back(inner.iterations);
    rep.inner_cap_hits += inner.hit_cap ? 1 : 0;
    rep.positivity_violations += inner.positivity_violations;

    for (int j = 0; j < problem.Nx; ++j) out.f.cells[j] -= inner.g.cells[j];
    const double scale = problem.total_mass / out.f.total_mass(dx);
    for (auto& c : out.f.cells) {
      c *= scale;
      if (!c.all_finite()) throw NonFiniteState("newton_solve: non-finite iterate");
    }
    ++rep.newton_iterations;

    const double fl = merged_wall_flux(out.f.cells.front(), ctx.walls.ghost_L(out.f.cells.front()), WallSide::Left);
    const double fr = merged_wall_flux(out.f.cells.back(), ctx.walls.ghost_R(out.f.cells.back()), WallSide::Right);
    rep.max_wall_flux.push_back(std::max(std::abs(fl), std::abs(fr)));
  }
  rep.total_seconds = seconds_since(start);
  return out;
}

std::vector<MomentSet> profile_moments(const SolutionField& f) {
  std::vector<MomentSet> m;
  m.reserve(f.cells.size());
  for (const auto& c : f.cells) m.push_back(compute_moments(c));
  return m;
}

}  // namespace boltz
