#include "boltz/experiments.hpp"

#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "boltz/cancellation.hpp"
#include "boltz/parallel.hpp"
#include "boltz/quadrature.hpp"

#ifndef BOLTZ_VERSION
#define BOLTZ_VERSION "unknown"
#endif

namespace boltz {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::string sci(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

class Csv {
 public:
  Csv(const fs::path& path, const std::vector<std::string>& header) : out_(path) {
    if (!out_) throw Error("cannot write " + path.string());
    row_strings(header);
  }

  template <class... T>
  void row(const T&... cells) {
    std::vector<std::string> s{cell(cells)...};
    row_strings(s);
  }

 private:
  static std::string cell(double x) { return sci(x); }
  static std::string cell(int x) { return std::to_string(x); }
  static std::string cell(const std::string& x) { return x; }
  static std::string cell(const char* x) { return x; }

  void row_strings(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
    out_ << "\r\n";
  }

  std::ofstream out_;
};

int case_number(TestCase t) { return t == TestCase::Case1 ? 1 : 2; }

double max_until(const std::vector<double>& t, const std::vector<double>& v, double t_max) {
  double m = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (t[i] <= t_max + 1e-12) m = std::max(m, v[i]);
  return m;
}

void slice_rows(Csv& csv, const std::string& run, const Trajectory& traj) {
  for (const auto& s : traj.snapshots) {
    const SpectralGrid& g = s.f.grid;
    const int n = g.points_per_axis();
    for (int i1 = 0; i1 < n; ++i1)
      for (int i2 = 0; i2 < n; ++i2) csv.row(run, s.t, g.velocity(i1), g.velocity(i2), s.f[g.flat(i1, i2, 0)]);
  }
}

struct Context {
  fs::path dir;
  ExperimentOutput out;
  json timing = json::object();

  fs::path file(const std::string& name) {
    out.files.push_back(name);
    return dir / name;
  }
};

void accuracy(const AccuracyConfig& cfg, Context& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = accuracy_table(cfg);
  ctx.timing["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Csv csv(ctx.file("accuracy.csv"), {"case", "R", "N", "M", "l2_diff", "rel_diff_vs_binary"});
  std::ostringstream s;
  for (const auto& r : rows) {
    csv.row(case_number(r.test_case), r.R, r.N, r.M, r.l2_diff, r.rel_diff_vs_binary);
    s << "case " << case_number(r.test_case) << " R=" << r.R << " N=" << r.N << " M=" << r.M
      << ": l2_diff=" << sci(r.l2_diff) << " rel_diff_vs_binary=" << sci(r.rel_diff_vs_binary) << "\n";
  }
  ctx.out.summary = s.str();
}

void compare(const CompareConfig& cfg, Context& ctx) {
  HomogeneousRun lin;
  lin.test_case = cfg.test_case;
  lin.op = OperatorKind::Linearized;
  lin.dt = cfg.dt;
  lin.t_end = cfg.t_end;
  lin.N = cfg.N;
  lin.R = cfg.R;
  lin.mass_fix = cfg.mass_fix;
  lin.cutoff = cfg.cutoff;
  Csv csv(ctx.file("compare.csv"), {"M", "t", "l2_diff", "rel_diff", "mass_lin", "mass_bin", "l2_to_maxwellian_lin",
                                    "l2_to_maxwellian_bin"});
  Csv sum(ctx.file("compare_summary.csv"), {"M", "max_rel_diff", "final_l2_to_maxwellian_lin",
                                            "final_l2_to_maxwellian_bin", "mass_drift_lin", "mass_drift_bin"});
  std::ostringstream s;
  json times = json::array();
  for (int M : cfg.M_list) {
    HomogeneousRun bin = lin;
    bin.op = OperatorKind::Binary;
    bin.sphere_points = M;
    bin.fix = cfg.fix;
    const PairedTrajectory p = run_paired(lin, bin);
    const auto& a = p.linearized;
    const auto& b = p.binary;
    for (std::size_t i = 0; i < a.t.size(); ++i)
      csv.row(M, a.t[i], p.difference[i], p.relative_difference[i], a.mass[i], b.mass[i], a.l2_to_maxwellian[i],
              b.l2_to_maxwellian[i]);
    const double maxE = max_until(a.t, p.relative_difference, cfg.t_end);
    const double dl = (a.mass.back() - a.mass.front()) / a.mass.front();
    const double db = (b.mass.back() - b.mass.front()) / b.mass.front();
    sum.row(M, maxE, a.l2_to_maxwellian.back(), b.l2_to_maxwellian.back(), dl, db);
    s << "M=" << M << ": max E(t)=" << sci(maxE) << " final l2_to_maxwellian lin=" << sci(a.l2_to_maxwellian.back())
      << " bin=" << sci(b.l2_to_maxwellian.back()) << "\n";
    times.push_back({{"M", M},
                     {"seconds_per_step_linearized", a.seconds_per_step},
                     {"seconds_per_step_binary", b.seconds_per_step}});
  }
  ctx.timing["runs"] = times;
  ctx.out.summary = s.str();
}

void homogeneous(const HomogeneousConfig& cfg, Context& ctx) {
  std::ostringstream s;
  const bool slices = cfg.run.snapshot_stride > 0;
  if (cfg.mode == HomogeneousMode::Paired) {
    HomogeneousRun lin = cfg.run, bin = cfg.run;
    lin.op = OperatorKind::Linearized;
    bin.op = OperatorKind::Binary;
    const PairedTrajectory p = run_paired(lin, bin);
    const auto& a = p.linearized;
    const auto& b = p.binary;
    Csv csv(ctx.file("trajectory.csv"), {"t", "mass_lin", "l2_to_maxwellian_lin", "mass_bin", "l2_to_maxwellian_bin",
                                         "l2_diff", "rel_diff"});
    for (std::size_t i = 0; i < a.t.size(); ++i)
      csv.row(a.t[i], a.mass[i], a.l2_to_maxwellian[i], b.mass[i], b.l2_to_maxwellian[i], p.difference[i],
              p.relative_difference[i]);
    if (slices) {
      Csv sl(ctx.file("slices.csv"), {"run", "t", "v1", "v2", "f"});
      slice_rows(sl, "linearized", a);
      slice_rows(sl, "binary", b);
    }
    ctx.timing["seconds_per_step_linearized"] = a.seconds_per_step;
    ctx.timing["seconds_per_step_binary"] = b.seconds_per_step;
    s << "t_end=" << a.t.back() << ": l2_to_maxwellian lin=" << sci(a.l2_to_maxwellian.back())
      << " bin=" << sci(b.l2_to_maxwellian.back())
      << "; max E(t)=" << sci(max_until(a.t, p.relative_difference, a.t.back())) << "\n";
  } else {
    const Trajectory tr = run_homogeneous(cfg.run);
    Csv csv(ctx.file("trajectory.csv"), {"t", "mass", "l2_to_maxwellian"});
    for (std::size_t i = 0; i < tr.t.size(); ++i) csv.row(tr.t[i], tr.mass[i], tr.l2_to_maxwellian[i]);
    if (slices) {
      Csv sl(ctx.file("slices.csv"), {"run", "t", "v1", "v2", "f"});
      slice_rows(sl, cfg.mode == HomogeneousMode::Binary ? "binary" : "linearized", tr);
    }
    ctx.timing["seconds_per_step"] = tr.seconds_per_step;
    s << "t_end=" << tr.t.back() << ": l2_to_maxwellian=" << sci(tr.l2_to_maxwellian.back())
      << " mass drift=" << sci((tr.mass.back() - tr.mass.front()) / tr.mass.front()) << "\n";
  }
  ctx.out.summary = s.str();
}

void write_history(const SolverReport& rep, Context& ctx) {
  Csv nw(ctx.file("newton.csv"), {"newton_iter", "residual"});
  for (std::size_t k = 0; k < rep.residual_norms.size(); ++k) nw.row(static_cast<int>(k), rep.residual_norms[k]);
  Csv in(ctx.file("inner.csv"), {"newton_iter", "inner_iter", "rel_residual"});
  for (std::size_t k = 0; k < rep.inner_relative_residuals.size(); ++k)
    for (std::size_t l = 0; l < rep.inner_relative_residuals[k].size(); ++l)
      in.row(static_cast<int>(k), static_cast<int>(l), rep.inner_relative_residuals[k][l]);
  const double total = rep.binary_seconds + rep.inner_seconds;
  ctx.timing["binary_seconds"] = rep.binary_seconds;
  ctx.timing["inner_seconds"] = rep.inner_seconds;
  ctx.timing["binary_fraction"] = total > 0.0 ? rep.binary_seconds / total : 0.0;
  ctx.timing["total_seconds"] = rep.total_seconds;
  ctx.timing["newton_iterations"] = rep.newton_iterations;
  ctx.timing["binary_evaluations"] = rep.binary_evaluations;
  ctx.timing["inner_iterations"] = rep.inner_iterations;
  ctx.timing["inner_cap_hits"] = rep.inner_cap_hits;
  ctx.timing["positivity_violations"] = rep.positivity_violations;
}

void write_profile(const SteadyProblem& p, const SolutionField& f, Context& ctx) {
  Csv csv(ctx.file("profile.csv"), {"x", "rho", "u1", "u2", "u3", "theta", "q1", "q2", "q3", "p11", "p12", "p13",
                                    "p21", "p22", "p23", "p31", "p32", "p33"});
  const auto m = profile_moments(f);
  for (int j = 0; j < f.size(); ++j) {
    const MomentSet& s = m[j];
    csv.row(p.x(j), s.rho, s.u[0], s.u[1], s.u[2], s.theta, s.q[0], s.q[1], s.q[2], s.p[0][0], s.p[0][1], s.p[0][2],
            s.p[1][0], s.p[1][1], s.p[1][2], s.p[2][0], s.p[2][1], s.p[2][2]);
  }
}

void steady(const SteadyConfig& cfg, Context& ctx) {
  try {
    const SteadySolution sol = newton_solve(cfg.problem);
    write_profile(cfg.problem, sol.f, ctx);
    write_history(sol.report, ctx);
    std::ostringstream s;
    s << "converged after " << sol.report.newton_iterations << " Newton iterations, residual "
      << sci(sol.report.residual_norms.back()) << "\n";
    ctx.out.summary = s.str();
  } catch (const NonConvergence& e) {
    write_history(e.report, ctx);
    throw;
  }
}

void cancellation(const CancellationConfig& cfg, Context& ctx) {
  const CancellationReport r = cancellation_demo(cfg.N, cfg.L, cfg.cutoff);
  Csv csv(ctx.file("cancellation.csv"), {"quantity", "value"});
  csv.row("f_minus_g", r.f_minus_g);
  csv.row("f_minus_q", r.f_minus_q);
  csv.row("r_minus_1", r.r_minus_1);
  if (cfg.cutoff.enabled) {
    csv.row("kept_points", static_cast<int>(r.kept_points));
    csv.row("r_minus_1_kept", r.r_minus_1_kept);
    csv.row("f_minus_q_cutoff", r.f_minus_q_cutoff);
  }
  char buf[512];
  std::snprintf(buf, sizeof buf, "Max norm of f-g: %e\nMax norm of f-q: %e\nMax norm of r-1: %e\n", r.f_minus_g,
                r.f_minus_q, r.r_minus_1);
  ctx.out.summary = buf;
  if (cfg.cutoff.enabled) {
    std::snprintf(buf, sizeof buf, "With cutoff (epsilon=%g, %zu kept points): max norm of r-1 %e, of f-q %e\n",
                  r.epsilon, r.kept_points, r.r_minus_1_kept, r.f_minus_q_cutoff);
    ctx.out.summary += buf;
  }
}

void write_manifest(const ExperimentConfig& cfg, Context& ctx, const std::string& status) {
  json resolved = json::object();
  for (const auto& [k, v] : cfg.resolved()) resolved[k] = v;
  json m;
  m["command"] = command_name(cfg.command);
  m["config_source"] = cfg.source;
  m["config"] = resolved;
  m["version"] = version_string();
  m["status"] = status;
  m["threads"] = max_threads();
  m["determinism"] =
      "No random numbers are used. FFT plans use FFTW_ESTIMATE and all reductions run in a fixed order, so "
      "rerunning the same config writes bitwise-identical CSV files. Timings appear only in this manifest.";
  m["outputs"] = ctx.out.files;
  m["timing"] = ctx.timing;
  std::ofstream out(ctx.dir / "manifest.json");
  out << m.dump(2) << "\n";
}

}  // namespace

int default_sphere_points(int N) { return hemisphere_size_for_degree(2 * N); }

std::vector<AccuracyRow> accuracy_table(const AccuracyConfig& cfg) {
  std::vector<AccuracyRow> rows;
  const CollisionKernel kernel = case_kernel(cfg.test_case);
  for (double R : cfg.R_list)
    for (int N : cfg.N_list) {
      const SpectralGrid grid = SpectralGrid::from_cutoff(N, R);
      const DistributionField f = case_state(cfg.test_case, grid);
      const MaxwellianParams params = compute_moments(f).maxwellian();
      const DistributionField M = maxwellian_field(params, grid);
      const RadialQuadrature rq = make_radial_quadrature(N, R);
      const PrecomputedTables tables = precompute(grid, rq, kernel);
      const DistributionField L = linearized_collision(f, params, tables, cfg.cutoff);
      const int points = cfg.sphere_points > 0 ? cfg.sphere_points : default_sphere_points(N);
      const BinaryCollision op(grid, kernel, rq, make_hemisphere_quadrature(points), ConservationFix::None);
      const DistributionField ref = op.pair(f, M);
      const DistributionField Q = op(f);
      rows.push_back({cfg.test_case, R, N, points, l2_distance(L, ref), l2_distance(L, Q) / Q.l2_norm()});
    }
  return rows;
}

ExperimentOutput run_experiment(const ExperimentConfig& cfg, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  Context ctx;
  ctx.dir = out_dir;
  try {
    switch (cfg.command) {
      case Command::AccuracyTable: accuracy(cfg.accuracy, ctx); break;
      case Command::CompareOperators: compare(cfg.compare, ctx); break;
      case Command::Homogeneous: homogeneous(cfg.homogeneous, ctx); break;
      case Command::Steady: steady(cfg.steady, ctx); break;
      case Command::CancellationDemo: cancellation(cfg.cancellation, ctx); break;
    }
  } catch (const std::exception& e) {
    write_manifest(cfg, ctx, std::string("failed: ") + e.what());
    throw;
  }
  write_manifest(cfg, ctx, "ok");
  return ctx.out;
}

std::string version_string() { return BOLTZ_VERSION; }

}  // namespace boltz
