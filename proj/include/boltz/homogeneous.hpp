#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "boltz/collision_binary.hpp"
#include "boltz/collision_linear.hpp"
#include "boltz/errors.hpp"
#include "boltz/moments.hpp"

namespace boltz {

enum class TestCase { Case1, Case2 };
enum class OperatorKind { Binary, Linearized };

/// Case1 = (B1, F1), Case2 = (B2, F2).
CollisionKernel case_kernel(TestCase c);
TestDistribution case_distribution(TestCase c);
/// Case initial state.  F1 is rescaled by (3/2)^{3/2} to unit density so the
/// equilibrium is the standard normal Maxwellian; F2 already has unit density.
DistributionField case_state(TestCase c, const SpectralGrid& grid);

struct HomogeneousRun {
  TestCase test_case = TestCase::Case1;
  OperatorKind op = OperatorKind::Linearized;
  int sphere_points = 25;  // binary operator only
  double dt = 0.1;
  double t_end = 10.0;
  ConservationFix fix = ConservationFix::None;  // binary operator
  bool mass_fix = false;                        // linearized operator
  int N = 16;
  double R = 6.0;
  CutoffPolicy cutoff{};
  int snapshot_stride = 0;  // keep f every stride steps; 0 keeps none

  void validate() const;
};

struct Snapshot {
  double t = 0.0;
  DistributionField f;
};

struct Trajectory {
  std::vector<double> t;
  std::vector<double> mass;
  std::vector<double> l2_to_maxwellian;
  std::vector<Snapshot> snapshots;
  MaxwellianParams target;  // moments of the initial state
  double seconds_per_step = 0.0;
};

struct PairedTrajectory {
  Trajectory linearized;
  Trajectory binary;
  std::vector<double> difference;           // ||f_lin - f_bin||
  std::vector<double> relative_difference;  // ||f_lin - f_bin|| / ||f_bin||
};

using CollisionRhs = std::function<DistributionField(const DistributionField&)>;

/// Classical fourth-order Runge-Kutta step.  State needs + and scalar *.
template <class State, class Rhs>
State rk4_step(const State& y, double dt, Rhs&& rhs) {
  const State k1 = rhs(y);
  const State k2 = rhs(y + (0.5 * dt) * k1);
  const State k3 = rhs(y + (0.5 * dt) * k2);
  const State k4 = rhs(y + dt * k3);
  State next = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  if constexpr (std::is_same_v<State, DistributionField>) {
    if (!next.all_finite()) throw NonFiniteState("rk4_step: non-finite state");
  } else {
    if (!std::isfinite(next)) throw NonFiniteState("rk4_step: non-finite state");
  }
  return next;
}

/// The collision right-hand side selected by cfg; the linearized operator is
/// bound to the Maxwellian with the moments of f0.
CollisionRhs make_collision_rhs(const HomogeneousRun& cfg, const DistributionField& f0);

DistributionField initial_state(const HomogeneousRun& cfg);

Trajectory run_homogeneous(const HomogeneousRun& cfg);

/// Advances a linearized and a binary run in lockstep and records E(t).
PairedTrajectory run_paired(const HomogeneousRun& lin, const HomogeneousRun& bin);

}  // namespace boltz
