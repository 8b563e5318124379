#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "boltz/homogeneous.hpp"
#include "boltz/steady.hpp"

namespace boltz {

enum class Command { AccuracyTable, CompareOperators, Homogeneous, Steady, CancellationDemo };

std::optional<Command> parse_command(std::string_view name);
std::string command_name(Command c);

std::string fix_name(ConservationFix fix);
/// Accepts none, zero, sinc.
std::optional<ConservationFix> parse_fix(std::string_view name);

struct AccuracyConfig {
  TestCase test_case = TestCase::Case1;
  std::vector<double> R_list{6.0};
  std::vector<int> N_list{16};
  int sphere_points = 0;  // 0: smallest supported rule exact to degree 2N
  CutoffPolicy cutoff{};
};

struct CompareConfig {
  TestCase test_case = TestCase::Case1;
  std::vector<int> M_list{7, 13, 19, 25};
  double t_end = 10.0;
  double dt = 0.1;
  int N = 16;
  double R = 6.0;
  ConservationFix fix = ConservationFix::None;
  bool mass_fix = false;  // linearized operator
  CutoffPolicy cutoff{};
};

enum class HomogeneousMode { Linearized, Binary, Paired };

struct HomogeneousConfig {
  HomogeneousMode mode = HomogeneousMode::Paired;
  HomogeneousRun run{};  // operator field is set per mode
};

struct SteadyConfig {
  std::string preset = "couette";  // couette, fourier or custom
  SteadyProblem problem{};
};

struct CancellationConfig {
  int N = 16;
  double L = 7.5;
  CutoffPolicy cutoff{};
};

/// Command-line overrides applied after the file.
struct Overrides {
  bool no_cutoff = false;
  std::optional<ConservationFix> fix;
};

struct ExperimentConfig {
  Command command = Command::CancellationDemo;
  std::string source;  // path or "<defaults>"
  AccuracyConfig accuracy{};
  CompareConfig compare{};
  HomogeneousConfig homogeneous{};
  SteadyConfig steady{};
  CancellationConfig cancellation{};

  /// Every effective setting for the chosen command, in a stable order.
  std::vector<std::pair<std::string, std::string>> resolved() const;
};

/// Parses INI text holding one section named after the command.  Unknown
/// sections or keys and out-of-range values raise ConfigError naming the
/// line and field.  Module preconditions are checked before returning.
ExperimentConfig parse_config(Command command, const std::string& text, const Overrides& overrides = {},
                              const std::string& source = "<string>");

/// Reads the file (empty path: all defaults) and calls parse_config.
ExperimentConfig load_config(Command command, const std::string& path, const Overrides& overrides = {});

}  // namespace boltz
