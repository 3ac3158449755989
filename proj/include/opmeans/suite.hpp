#pragma once

// Configuration parsing, suite orchestration over the check registry, and
// machine-readable report emission. Reports are deterministic for a fixed
// config (the elapsed-seconds field aside).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opmeans/checks.hpp"

namespace opmeans::suite {

inline constexpr const char* kRegistryVersion = "opmeans-registry/1";

struct IntervalSets {
  std::vector<std::pair<double, double>> sandwich;    // (s, t)
  std::vector<std::array<double, 4>> ordered;         // (m2, m1, M1, M2)
  std::vector<std::pair<double, double>> band;        // (m, M)
};

IntervalSets default_interval_sets();

struct SuiteConfig {
  std::vector<std::string> checks;  // resolved, registry order
  int trials = 200;
  std::vector<int> dims = {1, 2, 4, 8};
  std::uint64_t seed = 1;
  double tol = 1e-9;
  std::vector<double> v_grid = {0.1, 0.25, 0.5, 0.75, 0.9};
  std::vector<double> p_grid = {2.0, 2.5, 3.0, 5.0};
  IntervalSets intervals = default_interval_sets();
  std::vector<std::string> extra_means;  // representing-mean labels
  std::string report_path = "report.json";
};

// Parses and validates a JSON config, applying defaults. Unknown check ids,
// malformed JSON and invalid ranges raise ConfigError naming the offense.
SuiteConfig parse_config(const std::string& text);

struct CheckRow {
  std::string check_id;
  checks::Assertion assertion;
  long planned = 0;
  long evaluated = 0;  // planned minus skips
  long skips = 0;
  long failures = 0;
  double min_margin = 0.0;
  std::optional<double> sharpness_gap;
  std::vector<checks::CheckResult> witnesses;  // one per failure
};

struct Report {
  SuiteConfig config;
  std::vector<CheckRow> results;
  double elapsed_seconds = 0.0;
  std::string version = kRegistryVersion;
  // 0 when no asserted check failed, 1 otherwise (diagnostic and monitored
  // checks never contribute)
  int exit_status = 0;
};

Report run_suite(const SuiteConfig& cfg);

std::string report_to_json(const Report& report);
void write_report(const Report& report, const std::string& path);

// The (dim, grid, trial) -> substream packing used by the runner; exposed so
// tests can regenerate the exact witness instances.
std::uint64_t trial_stream(int check_index, int dim_index, int grid_index, int trial);

}  // namespace opmeans::suite
