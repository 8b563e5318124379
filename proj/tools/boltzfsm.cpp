#include <CLI11.hpp>

#include <iostream>

#include "boltz/experiments.hpp"
#include "boltz/parallel.hpp"

namespace {

enum Exit { kOk = 0, kConfigError = 2, kNonConvergence = 3, kNumericalFailure = 4 };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier spectral solvers for the Boltzmann collision operator"};
  app.set_version_flag("--version", boltz::version_string());
  app.require_subcommand(1);

  std::string config, out = "out", fix;
  int threads = 1;
  bool no_cutoff = false;
  app.add_option("--config", config, "INI file with one section named after the command")->check(CLI::ExistingFile);
  app.add_option("--out", out, "output directory for CSV files and manifest.json");
  app.add_option("--threads", threads, "worker thread cap")->check(CLI::PositiveNumber);
  app.add_flag("--no-cutoff", no_cutoff, "disable the Maxwellian cutoff in the linearized operator");
  app.add_option("--fix", fix, "conservation fix for the binary operator")
      ->check(CLI::IsMember({"none", "zero", "sinc"}));

  for (const char* name : {"accuracy-table", "compare-operators", "homogeneous", "steady", "cancellation-demo"})
    app.add_subcommand(name)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  const boltz::Command command = *boltz::parse_command(app.get_subcommands().front()->get_name());
  boltz::Overrides overrides;
  overrides.no_cutoff = no_cutoff;
  if (!fix.empty()) overrides.fix = boltz::parse_fix(fix);
  boltz::set_max_threads(threads);

  try {
    const boltz::ExperimentConfig cfg = boltz::load_config(command, config, overrides);
    const boltz::ExperimentOutput result = boltz::run_experiment(cfg, out);
    std::cout << result.summary;
    for (const auto& f : result.files) std::cout << "wrote " << (std::filesystem::path(out) / f).string() << "\n";
    return kOk;
  } catch (const boltz::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const boltz::NonConvergence& e) {
    std::cerr << "non-convergence: " << e.what() << "\n";
    return kNonConvergence;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  }
}
