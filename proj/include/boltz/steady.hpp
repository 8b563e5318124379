#pragma once

#include <string>
#include <vector>

#include "boltz/collision_binary.hpp"
#include "boltz/collision_linear.hpp"
#include "boltz/errors.hpp"
#include "boltz/moments.hpp"

namespace boltz {

struct WallState {
  Vec3 u{0.0, 0.0, 0.0};  // u[0] must be 0
  double theta = 1.0;
};

enum class WallSide { Left, Right };

struct SteadyProblem {
  double x_L = -0.5;
  double x_R = 0.5;
  int Nx = 200;
  double Kn = 1.0;
  WallState wall_L{};
  WallState wall_R{};
  double total_mass = 1.0;
  CollisionKernel kernel = CollisionKernel::maxwell();
  int N = 16;
  double R = 6.0;
  int sphere_points = 25;
  ConservationFix fix = ConservationFix::ZeroOut;  // binary operator in the residual
  bool linear_mass_fix = true;                     // linearized operator in the inner solve
  CutoffPolicy cutoff{};
  double outer_res = 1e-5;
  double inner_abs = 1e-7;
  double inner_rel = 1e-3;
  int max_newton = 20;
  int max_inner = 500;

  double dx() const { return (x_R - x_L) / Nx; }
  double x(int j) const { return x_L + (j + 0.5) * dx(); }  // 0-based cell centre
  SpectralGrid grid() const { return SpectralGrid::from_cutoff(N, R); }
  void validate() const;

  /// Walls at temperature theta moving with -+u_W in the v2 direction.
  static SteadyProblem couette(double u_W, double Kn);
  /// Stationary walls at temperatures theta_L and theta_R.
  static SteadyProblem fourier(double theta_L, double theta_R, double Kn);
};

struct SolutionField {
  std::vector<DistributionField> cells;

  int size() const { return static_cast<int>(cells.size()); }
  double total_mass(double dx) const;
};

struct SolverReport {
  int newton_iterations = 0;                      // number of updates f <- f - g
  int binary_evaluations = 0;                     // residual passes (one per cell each)
  std::vector<double> residual_norms;             // outer residual before each update, then final
  std::vector<std::vector<double>> inner_relative_residuals;  // per Newton step
  std::vector<int> inner_iterations;              // sweeps per Newton step
  int inner_cap_hits = 0;
  long positivity_violations = 0;                 // entries with L[g] + nu g < 0 (logged only)
  std::vector<double> max_wall_flux;              // per Newton update, merged boundary flux
  double binary_seconds = 0.0;
  double inner_seconds = 0.0;
  double total_seconds = 0.0;
  bool converged = false;
};

class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, SolverReport r, SolutionField f)
      : Error(what), report(std::move(r)), last(std::move(f)) {}
  SolverReport report;
  SolutionField last;
};

/// Density C / (x_R - x_L), zero velocity, temperature blended linearly
/// between the walls.
SolutionField initial_guess(const SteadyProblem& problem);

/// Wall density making the discrete mass flux through the wall vanish.
/// Throws DegenerateFlux when the outgoing flux is not positive.
double wall_density(const DistributionField& boundary_cell, const WallState& wall, WallSide side);
DistributionField wall_ghost(const DistributionField& boundary_cell, const WallState& wall, WallSide side);

/// sum_k v_1 f_k (L/N)^3 where f takes the ghost values for incoming
/// velocities and the boundary-cell values for outgoing ones.
double merged_wall_flux(const DistributionField& boundary_cell, const DistributionField& ghost, WallSide side);

struct ResidualResult {
  SolutionField field;
  double norm = 0.0;
};

/// Upwind transport minus (1/Kn) Q[f_j, f_j] in every cell.
ResidualResult residual(const SolutionField& f, const SteadyProblem& problem);

struct InnerSolveResult {
  SolutionField g;
  std::vector<double> relative_residuals;
  int iterations = 0;
  bool hit_cap = false;
  long positivity_violations = 0;
};

/// Source iteration with fast sweeping for the modified Newton correction.
InnerSolveResult source_iteration_solve(const SolutionField& f, const SolutionField& r, const SteadyProblem& problem);

struct SteadySolution {
  SolutionField f;
  SolverReport report;
};

/// Throws NonConvergence (carrying the report) after max_newton updates.
SteadySolution newton_solve(const SteadyProblem& problem);

std::vector<MomentSet> profile_moments(const SolutionField& f);

}  // namespace boltz
