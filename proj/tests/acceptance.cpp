// Acceptance run: one PASS/FAIL line per criterion.  Arguments select a
// subset of criteria (e.g. "acceptance 1 5"); no arguments runs all of them.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "boltz/cancellation.hpp"
#include "boltz/collision_binary.hpp"
#include "boltz/collision_linear.hpp"
#include "boltz/experiments.hpp"
#include "boltz/homogeneous.hpp"
#include "boltz/steady.hpp"
#include "boltz/transform.hpp"

using namespace boltz;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    notes.push_back((ok ? "" : "!") + what);
  }
};

int failures = 0;

void report(int id, const char* title, const Verdict& v) {
  std::string detail;
  for (const auto& n : v.notes) detail += (detail.empty() ? "" : "; ") + n;
  std::printf("criterion %d %s: %s | %s\n", id, v.pass ? "PASS" : "FAIL", title, detail.c_str());
  std::fflush(stdout);
  if (!v.pass) ++failures;
}

// Steady runs are shared between criteria 6, 7 and 8.
struct SteadyRow {
  std::string label;
  double Kn = 0.0;
  int expected = 0;
  SteadySolution sol;
};

std::vector<SteadyRow> steady_rows;
bool steady_done = false;

void run_steady_rows() {
  if (steady_done) return;
  steady_done = true;
  const int couette_expected[] = {2, 2, 2, 2, 2};
  const double u[] = {0.1, 0.2, 0.3, 0.4, 0.5};
  for (int i = 0; i < 5; ++i)
    steady_rows.push_back({fmt("couette u_W=%.1f Kn=10", u[i]), 10.0, couette_expected[i],
                           newton_solve(SteadyProblem::couette(u[i], 10.0))});
  const double th[] = {1.5, 2.0, 2.5, 3.0};
  const int fourier_expected[] = {2, 2, 3, 3};
  for (int i = 0; i < 4; ++i)
    steady_rows.push_back({fmt("fourier theta_R=%.1f Kn=10", th[i]), 10.0, fourier_expected[i],
                           newton_solve(SteadyProblem::fourier(1.0, th[i], 10.0))});
  // one Kn = 1 row for the timing split
  steady_rows.push_back({"couette u_W=0.1 Kn=1", 1.0, 2, newton_solve(SteadyProblem::couette(0.1, 1.0))});
}

void criteria_1_2() {
  Verdict v1, v2;
  struct Target {
    TestCase c;
    double lo, hi, rel;
  };
  for (const Target t : {Target{TestCase::Case1, 3e-7, 3e-6, 0.150}, Target{TestCase::Case2, 1.3e-5, 1.2e-4, 0.080}}) {
    AccuracyConfig cfg;
    cfg.test_case = t.c;
    const auto t0 = Clock::now();
    const auto row = accuracy_table(cfg).at(0);
    const double secs = seconds_since(t0);
    const int id = t.c == TestCase::Case1 ? 1 : 2;
    v1.check(row.l2_diff >= t.lo && row.l2_diff <= t.hi,
             fmt("case %d l2_diff=%.3e in [%.1e, %.1e]", id, row.l2_diff, t.lo, t.hi));
    v1.check(secs < 120.0, fmt("case %d %.1fs < 120s", id, secs));
    v2.check(std::abs(row.rel_diff_vs_binary - t.rel) <= 0.02,
             fmt("case %d rel=%.4f vs %.3f +- 0.02", id, row.rel_diff_vs_binary, t.rel));
  }
  report(1, "linearized vs binary pair, R=6 N=16", v1);
  report(2, "relative distance L[f] vs Q[f,f], R=6 N=16", v2);
}

PairedTrajectory paired;
bool paired_done = false;

void run_paired_case1() {
  if (paired_done) return;
  paired_done = true;
  HomogeneousRun lin;
  lin.t_end = 10.0;
  HomogeneousRun bin = lin;
  bin.op = OperatorKind::Binary;
  bin.sphere_points = 25;
  paired = run_paired(lin, bin);
}

void criterion_3() {
  Verdict v;
  HomogeneousRun lin;
  lin.t_end = 20.0;
  auto t0 = Clock::now();
  const auto tr = run_homogeneous(lin);
  const double lin_secs = seconds_since(t0);
  v.check(tr.l2_to_maxwellian.back() <= 1e-4, fmt("linearized d(20)=%.3e <= 1e-4", tr.l2_to_maxwellian.back()));
  v.check(lin_secs <= 60.0, fmt("linearized run %.1fs <= 60s", lin_secs));

  t0 = Clock::now();
  run_paired_case1();
  const double paired_secs = seconds_since(t0);
  const double maxE = *std::max_element(paired.relative_difference.begin(), paired.relative_difference.end());
  v.check(maxE <= 0.03, fmt("max E(t) on [0,10] = %.4f <= 0.03", maxE));
  const auto& mass = paired.linearized.mass;
  const double drift = std::abs(mass.back() - mass.front()) / mass.front();
  v.check(drift <= 1e-4, fmt("linearized mass drift(10)=%.2e <= 1e-4", drift));
  v.check(paired_secs <= 900.0, fmt("paired run with binary M=25 %.0fs <= 900s", paired_secs));
  report(3, "homogeneous relaxation, case 1", v);
}

void criterion_4() {
  Verdict v;
  run_paired_case1();
  const double lin = paired.linearized.seconds_per_step, bin = paired.binary.seconds_per_step;
  v.check(lin <= bin / 5.0, fmt("per RK4 step linearized %.4fs, binary M=25 %.4fs, speedup %.1fx >= 5x", lin, bin, bin / lin));
  report(4, "speedup over the binary operator", v);
}

void criterion_5() {
  Verdict v;
  const auto r = cancellation_demo(16, 7.5);
  v.check(r.f_minus_g <= 1e-15, fmt("|f-g|=%.3e <= 1e-15", r.f_minus_g));
  v.check(r.r_minus_1 >= 1e10, fmt("|r-1|=%.3e >= 1e10", r.r_minus_1));
  v.check(r.r_minus_1_kept <= 1e-6, fmt("with cutoff |r-1| on kept points=%.3e <= 1e-6", r.r_minus_1_kept));
  report(5, "round-off cancellation demo, N=16 L=7.5", v);
}

void criterion_6() {
  Verdict v;
  run_steady_rows();
  for (const auto& row : steady_rows) {
    if (row.Kn != 10.0) continue;
    const int n = row.sol.report.newton_iterations;
    v.check(std::abs(n - row.expected) <= 1, fmt("%s: %d (expected %d)", row.label.c_str(), n, row.expected));
  }
  report(6, "Newton iteration counts at Kn=10", v);
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(BOLTZFSM_EXE) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion_7() {
  Verdict v;
  const auto g = SpectralGrid::from_cutoff(16, 6.0);
  const auto rq = make_radial_quadrature(16, 6.0);
  const auto tables = precompute(g, rq, CollisionKernel::maxwell());
  const BinaryCollision Q(g, CollisionKernel::maxwell(), rq, make_hemisphere_quadrature(25));
  const MaxwellianParams p{};
  const auto M = maxwellian_field(p, g);

  const double qm = Q(M).l2_norm(), lm = linearized_collision(M, p, tables).l2_norm();
  v.check(qm <= 1e-5 && lm <= 1e-5, fmt("equilibrium |Q[M,M]|=%.1e |L[M]|=%.1e <= 1e-5", qm, lm));

  DistributionField delta(g);
  const int n = g.points_per_axis();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const auto i = g.flat(a, b, c);
        delta[i] = (g.velocity(a) * g.velocity(a) - g.velocity(b) * g.velocity(b)) * M[i];
      }
  auto gap = [&](double eps) {
    const auto f = M + eps * delta;
    return l2_distance(Q(f), linearized_collision(f, p, tables));
  };
  const double ratio = gap(0.2) / gap(0.1);
  v.check(ratio >= 3.6 && ratio <= 4.4, fmt("quadratic law ratio=%.3f in [3.6, 4.4]", ratio));

  double worst = 0.0;
  for (int N : {4, 8, 16, 32}) {
    const auto r = make_radial_quadrature(N, 6.0);
    for (int k = 0; k <= 2 * N; ++k) {
      double s = 0.0;
      for (int j = 0; j < r.size(); ++j) s += r.weights[j] * std::pow(r.nodes[j] / 6.0, k);
      const double exact = 216.0 / (k + 3);
      worst = std::max(worst, std::abs(s - exact) / exact);
    }
  }
  v.check(worst <= 1e-11, fmt("radial exactness to degree 2N rel err=%.1e <= 1e-11", worst));

  double rt = 0.0;
  std::uint64_t state = 1;
  for (int N : {4, 8, 16}) {
    const auto gg = SpectralGrid::from_cutoff(N, 6.0);
    DistributionField f(gg);
    for (auto& x : f.values) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      x = double(state >> 11) * 0x1.0p-53 - 0.5;
    }
    const auto back = inverse_dft(forward_dft(f));
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      num = std::max(num, std::abs(back[i] - f[i]));
      den = std::max(den, std::abs(f[i]));
    }
    rt = std::max(rt, num / den);
  }
  v.check(rt <= 1e-12, fmt("DFT round trip rel err=%.1e <= 1e-12", rt));

  run_steady_rows();
  double flux = 0.0, mass_err = 0.0;
  for (const auto& row : steady_rows) {
    for (double x : row.sol.report.max_wall_flux) flux = std::max(flux, x);
    mass_err = std::max(mass_err, std::abs(row.sol.f.total_mass(SteadyProblem{}.dx()) - 1.0));
  }
  v.check(flux <= 1e-12, fmt("wall zero-flux max=%.1e <= 1e-12", flux));

  const double lin_mass = std::abs(linearized_collision(case_state(TestCase::Case2, g), tables, {}, true).integral());
  const auto zq = BinaryCollision(g, CollisionKernel::maxwell(), rq, make_hemisphere_quadrature(7),
                                  ConservationFix::ZeroOut)(case_state(TestCase::Case1, g));
  const double bin_mass = std::abs(zq.integral());
  v.check(lin_mass <= 1e-14 && bin_mass <= 1e-14 && mass_err <= 1e-12,
          fmt("mass after fix: linear %.1e, binary %.1e, steady |mass-C| %.1e", lin_mass, bin_mass, mass_err));

  double anti = 0.0, sym = 0.0;
  for (const auto& row : steady_rows) {
    if (row.label.rfind("couette", 0) != 0) continue;
    const auto m = profile_moments(row.sol.f);
    const int nx = static_cast<int>(m.size());
    for (int j = 0; j < nx; ++j) {
      anti = std::max(anti, std::abs(m[j].u[1] + m[nx - 1 - j].u[1]));
      sym = std::max(sym, std::abs(m[j].theta - m[nx - 1 - j].theta));
    }
  }
  v.check(anti <= 1e-3 && sym <= 1e-3, fmt("Couette u2 antisymmetry %.1e, theta symmetry %.1e <= 1e-3", anti, sym));

  const auto dir = fs::temp_directory_path() / "boltz_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto ini = dir / "steady.ini";
  std::ofstream(ini) << "[steady]\nu_W = 0.3\nKn = 1\nNx = 16\nN = 8\nR = 4\n";
  bool same = run_cli("steady --config " + ini.string() + " --out " + (dir / "a").string()) == 0 &&
              run_cli("steady --config " + ini.string() + " --out " + (dir / "b").string()) == 0;
  int files = 0;
  for (const auto& e : fs::directory_iterator(dir / "a")) {
    if (e.path().extension() != ".csv") continue;
    ++files;
    same = same && slurp(e.path()) == slurp(dir / "b" / e.path().filename());
  }
  v.check(same && files > 0, fmt("rerun of steady CLI: %d CSV files bitwise identical", files));
  report(7, "property suite", v);
}

void criterion_8() {
  Verdict v;
  run_steady_rows();
  for (const auto& row : steady_rows) {
    const auto& r = row.sol.report;
    const double frac = r.binary_seconds / r.total_seconds;
    const auto line = fmt("%s binary fraction %.2f (%.0fs of %.0fs)", row.label.c_str(), frac, r.binary_seconds,
                          r.total_seconds);
    // the timing property is stated for Couette flow; Fourier rows are reported only
    if (row.label.rfind("couette", 0) == 0)
      v.check(frac > 0.5, line + " > 0.5");
    else
      v.notes.push_back("(info) " + line);
  }
  report(8, "binary-time fraction of Couette steady runs, Kn in {1, 10}", v);
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  auto want = [&](int id) { return only.empty() || only.count(id) > 0; };

  const auto t0 = Clock::now();
  try {
    if (want(1) || want(2)) criteria_1_2();
    if (want(3)) criterion_3();
    if (want(4)) criterion_4();
    if (want(5)) criterion_5();
    if (want(6)) criterion_6();
    if (want(7)) criterion_7();
    if (want(8)) criterion_8();
  } catch (const std::exception& e) {
    std::printf("acceptance aborted: %s\n", e.what());
    return 2;
  }
  std::printf("acceptance: %d failing criteria, %.0fs\n", failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
