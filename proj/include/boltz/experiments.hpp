#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "boltz/config.hpp"

namespace boltz {

struct AccuracyRow {
  TestCase test_case = TestCase::Case1;
  double R = 0.0;
  int N = 0;
  int M = 0;                         // hemisphere points of the binary reference
  double l2_diff = 0.0;              // ||L[f] - (Q[f,M] + Q[M,f])||
  double rel_diff_vs_binary = 0.0;   // ||L[f] - Q[f,f]|| / ||Q[f,f]||
};

/// Smallest supported hemisphere rule exact to degree 2N.
int default_sphere_points(int N);

std::vector<AccuracyRow> accuracy_table(const AccuracyConfig& cfg);

struct ExperimentOutput {
  std::vector<std::string> files;  // written CSVs, relative to the output directory
  std::string summary;             // human-readable report for stdout
};

/// Runs the configured command, writes CSVs and manifest.json into out_dir.
/// Library errors propagate; on NonConvergence the partial steady history
/// is written before rethrowing.
ExperimentOutput run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out_dir);

/// Version string baked in at configure time.
std::string version_string();

}  // namespace boltz
