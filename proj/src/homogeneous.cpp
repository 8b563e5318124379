#include "boltz/homogeneous.hpp"

#include <chrono>
#include <cmath>
#include <memory>

namespace boltz {

CollisionKernel case_kernel(TestCase c) {
  return c == TestCase::Case1 ? CollisionKernel::maxwell() : CollisionKernel::vhs072();
}

TestDistribution case_distribution(TestCase c) {
  return c == TestCase::Case1 ? TestDistribution::F1 : TestDistribution::F2;
}

void HomogeneousRun::validate() const {
  if (!(dt > 0.0)) throw InvalidArgument("homogeneous: dt must be positive");
  if (!(t_end >= 0.0)) throw InvalidArgument("homogeneous: t_end must be non-negative");
  if (N < 1) throw InvalidArgument("homogeneous: N must be positive");
  if (!(R > 0.0)) throw InvalidArgument("homogeneous: R must be positive");
  if (snapshot_stride < 0) throw InvalidArgument("homogeneous: snapshot stride must be non-negative");
  cutoff.validate();
}

DistributionField case_state(TestCase c, const SpectralGrid& grid) {
  DistributionField f = test_distribution(case_distribution(c), grid);
  if (c == TestCase::Case1) f *= std::pow(1.5, 1.5);
  return f;
}

DistributionField initial_state(const HomogeneousRun& cfg) {
  return case_state(cfg.test_case, SpectralGrid::from_cutoff(cfg.N, cfg.R));
}

CollisionRhs make_collision_rhs(const HomogeneousRun& cfg, const DistributionField& f0) {
  const SpectralGrid& grid = f0.grid;
  const CollisionKernel kernel = case_kernel(cfg.test_case);
  const RadialQuadrature rq = make_radial_quadrature(cfg.N, cfg.R);
  if (cfg.op == OperatorKind::Binary) {
    auto op = std::make_shared<BinaryCollision>(grid, kernel, rq, make_hemisphere_quadrature(cfg.sphere_points),
                                                cfg.fix);
    return [op](const DistributionField& f) { return (*op)(f); };
  }
  auto tables = std::make_shared<PrecomputedTables>(precompute(grid, rq, kernel));
  const MaxwellianParams params = compute_moments(f0).maxwellian();
  const CutoffPolicy policy = cfg.cutoff;
  const bool fix = cfg.mass_fix;
  return [tables, params, policy, fix](const DistributionField& f) {
    return linearized_collision(f, params, *tables, policy, fix);
  };
}

namespace {

struct Runner {
  HomogeneousRun cfg;
  CollisionRhs rhs;
  DistributionField f;
  DistributionField target_field;
  Trajectory traj;
  double seconds = 0.0;
  int steps = 0;

  explicit Runner(const HomogeneousRun& c) : cfg(c) {
    cfg.validate();
    f = initial_state(cfg);
    rhs = make_collision_rhs(cfg, f);
    traj.target = compute_moments(f).maxwellian();
    target_field = maxwellian_field(traj.target, f.grid);
    record(0.0, 0);
  }

  void record(double t, int step) {
    traj.t.push_back(t);
    traj.mass.push_back(f.integral());
    traj.l2_to_maxwellian.push_back(l2_distance(f, target_field));
    if (cfg.snapshot_stride > 0 && step % cfg.snapshot_stride == 0) traj.snapshots.push_back({t, f});
  }

  void step(int k) {
    const auto t0 = std::chrono::steady_clock::now();
    f = rk4_step(f, cfg.dt, rhs);
    seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ++steps;
    record(k * cfg.dt, k);
  }

  Trajectory finish() {
    traj.seconds_per_step = steps > 0 ? seconds / steps : 0.0;
    return std::move(traj);
  }
};

int step_count(const HomogeneousRun& cfg) { return static_cast<int>(std::llround(cfg.t_end / cfg.dt)); }

}  // namespace

Trajectory run_homogeneous(const HomogeneousRun& cfg) {
  Runner r(cfg);
  const int n = step_count(cfg);
  for (int k = 1; k <= n; ++k) r.step(k);
  return r.finish();
}

PairedTrajectory run_paired(const HomogeneousRun& lin, const HomogeneousRun& bin) {
  if (lin.op != OperatorKind::Linearized || bin.op != OperatorKind::Binary)
    throw InvalidArgument("run_paired: expects a linearized and a binary configuration");
  if (lin.dt != bin.dt || lin.t_end != bin.t_end || lin.N != bin.N || lin.R != bin.R ||
      lin.test_case != bin.test_case)
    throw InvalidArgument("run_paired: runs must share case, grid and time stepping");
  Runner a(lin), b(bin);
  PairedTrajectory out;
  auto record = [&] {
    const double d = l2_distance(a.f, b.f);
    out.difference.push_back(d);
    out.relative_difference.push_back(d / b.f.l2_norm());
  };
  record();
  const int n = step_count(lin);
  for (int k = 1; k <= n; ++k) {
    a.step(k);
    b.step(k);
    record();
  }
  out.linearized = a.finish();
  out.binary = b.finish();
  return out;
}

}  // namespace boltz
