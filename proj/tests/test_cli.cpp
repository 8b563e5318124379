#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "boltz/config.hpp"
#include "boltz/errors.hpp"
#include "boltz/experiments.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace boltz;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("boltz_tests_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(BOLTZFSM_EXE) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string config_error(Command c, const std::string& text) {
  try {
    parse_config(c, text, {}, "cfg.ini");
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("command and fix names round trip") {
  for (auto c : {Command::AccuracyTable, Command::CompareOperators, Command::Homogeneous, Command::Steady,
                 Command::CancellationDemo})
    CHECK(parse_command(command_name(c)) == c);
  CHECK_FALSE(parse_command("bogus").has_value());
  for (auto f : {ConservationFix::None, ConservationFix::ZeroOut, ConservationFix::SincReplace})
    CHECK(parse_fix(fix_name(f)) == f);
}

TEST_CASE("defaults match the documented settings") {
  const auto cfg = parse_config(Command::Steady, "");
  CHECK(cfg.steady.problem.Nx == 200);
  CHECK(cfg.steady.problem.N == 16);
  CHECK(cfg.steady.problem.outer_res == 1e-5);
  CHECK(cfg.steady.problem.cutoff.epsilon == 1e-9);
  const auto h = parse_config(Command::Homogeneous, "");
  CHECK(h.homogeneous.run.dt == 0.1);
  CHECK(h.homogeneous.run.R == 6.0);
}

TEST_CASE("values are parsed and overrides applied") {
  const auto cfg = parse_config(Command::Steady,
                                "[steady]\nproblem = fourier\ntheta_R = 2.5\nKn = 10\nNx = 40\n",
                                Overrides{true, ConservationFix::SincReplace});
  CHECK(cfg.steady.problem.wall_R.theta == 2.5);
  CHECK(cfg.steady.problem.R == 4.0);
  CHECK(cfg.steady.problem.Kn == 10.0);
  CHECK(cfg.steady.problem.Nx == 40);
  CHECK_FALSE(cfg.steady.problem.cutoff.enabled);
  CHECK(cfg.steady.problem.fix == ConservationFix::SincReplace);

  const auto a = parse_config(Command::AccuracyTable, "[accuracy-table]\ncase = 2\nR = 4, 6\nN = 8,16\n");
  CHECK(a.accuracy.test_case == TestCase::Case2);
  CHECK(a.accuracy.R_list == std::vector<double>{4.0, 6.0});
  CHECK(a.accuracy.N_list == std::vector<int>{8, 16});
  bool found = false;
  for (const auto& [k, v] : a.resolved()) found = found || (k == "N" && v == "8, 16");
  CHECK(found);
}

TEST_CASE("shipped example configs parse") {
  int n = 0;
  for (const auto& e : fs::directory_iterator(CONFIG_DIR)) {
    const std::string text = slurp(e.path());
    const auto open = text.find('['), close = text.find(']');
    REQUIRE(open != std::string::npos);
    const auto cmd = parse_command(text.substr(open + 1, close - open - 1));
    REQUIRE(cmd.has_value());
    CHECK_NOTHROW(load_config(*cmd, e.path().string()));
    ++n;
  }
  CHECK(n == 6);
}

TEST_CASE("config errors name the file, line and field") {
  auto e = config_error(Command::Steady, "[steady]\nKn = 1\nfoo = 2\n");
  CHECK(e.find("cfg.ini:3") != std::string::npos);
  CHECK(e.find("foo") != std::string::npos);

  e = config_error(Command::Steady, "[steady]\n\nKn = -1\n");
  CHECK(e.find("cfg.ini:3") != std::string::npos);
  CHECK(e.find("Kn") != std::string::npos);

  e = config_error(Command::Steady, "[homogeneous]\nN = 8\n");
  CHECK(e.find("cfg.ini:1") != std::string::npos);

  e = config_error(Command::Homogeneous, "[homogeneous]\nN = eight\n");
  CHECK(e.find("cfg.ini:2") != std::string::npos);
  CHECK(e.find("N") != std::string::npos);

  CHECK_FALSE(config_error(Command::CompareOperators, "[compare-operators]\nM = 7, 8\n").empty());
  CHECK_FALSE(config_error(Command::Homogeneous, "[homogeneous]\nfix = maybe\n").empty());
  CHECK_FALSE(config_error(Command::AccuracyTable, "[accuracy-table]\ncase = 3\n").empty());
  CHECK_FALSE(config_error(Command::CancellationDemo, "[cancellation-demo]\nepsilon = 2\n").empty());
}

TEST_CASE("cancellation demo output and manifest") {
  const auto dir = scratch_dir("canc");
  const auto cfg = parse_config(Command::CancellationDemo, "");
  const auto out = run_experiment(cfg, dir);
  CHECK(out.summary.find("Max norm of r-1") != std::string::npos);
  REQUIRE(fs::exists(dir / "manifest.json"));
  const auto m = nlohmann::json::parse(slurp(dir / "manifest.json"));
  CHECK(m["command"] == "cancellation-demo");
  CHECK(m["status"] == "ok");
  CHECK(m["config"].dump().find("\"N\"") != std::string::npos);
  CHECK(m.contains("version"));
  CHECK(m.contains("determinism"));
  const std::string csv = slurp(dir / "cancellation.csv");
  CHECK(csv.find("\r\n") != std::string::npos);
}

TEST_CASE("reruns produce bitwise identical CSV files") {
  const auto a = scratch_dir("det_a"), b = scratch_dir("det_b");
  const std::string ini = "[homogeneous]\noperator = paired\nN = 8\nR = 4\nM = 7\nt_end = 0.3\nsnapshot_stride = 1\n";
  auto cfg = parse_config(Command::Homogeneous, ini);
  const auto oa = run_experiment(cfg, a);
  const auto ob = run_experiment(cfg, b);
  REQUIRE(oa.files == ob.files);
  REQUIRE_FALSE(oa.files.empty());
  for (const auto& f : oa.files) {
    if (fs::path(f).extension() != ".csv") continue;
    CHECK_MESSAGE(slurp(a / f) == slurp(b / f), f);
  }
}

TEST_CASE("command-line exit codes") {
  const auto dir = scratch_dir("cli");
  CHECK(run_cli("cancellation-demo --out " + (dir / "ok").string()) == 0);
  CHECK(fs::exists(dir / "ok" / "cancellation.csv"));

  const auto bad = dir / "bad.ini";
  std::ofstream(bad) << "[steady]\nNx = 0\n";
  CHECK(run_cli("steady --config " + bad.string() + " --out " + (dir / "bad").string()) == 2);
  CHECK(run_cli("steady --fix maybe") == 2);
  CHECK(run_cli("") == 2);

  const auto cap = dir / "cap.ini";
  std::ofstream(cap) << "[steady]\nu_W = 0.5\nNx = 6\nN = 4\nR = 3\nM = 7\nmax_newton = 1\n";
  CHECK(run_cli("steady --config " + cap.string() + " --out " + (dir / "cap").string()) == 3);
  CHECK(fs::exists(dir / "cap" / "newton.csv"));
}
