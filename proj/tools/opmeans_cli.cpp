// Command-line front end: `run` executes a configured suite and writes the
// JSON report, `list` prints the check registry, `probe` prints a sharpness
// gap for one of the probe-able checks.
//
// Exit codes for `run`: 0 when every asserted check passed, 1 when any
// asserted check failed, 2 on configuration problems.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "opmeans/kernel.hpp"
#include "opmeans/suite.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw opmeans::ConfigError("cannot read config file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int cmd_run(const std::string& config_path, std::optional<std::uint64_t> seed,
            std::optional<std::string> report_path, bool quiet) {
  opmeans::suite::SuiteConfig cfg =
      opmeans::suite::parse_config(config_path.empty() ? "{}" : slurp(config_path));
  if (seed) cfg.seed = *seed;
  if (report_path) cfg.report_path = *report_path;

  if (!quiet)
    std::cout << "kernel backend: "
              << opmeans::kernel::backend_name(opmeans::kernel::active_backend())
              << "\n";
  auto report = opmeans::suite::run_suite(cfg);
  for (const auto& row : report.results) {
    const char* tag =
        row.assertion == opmeans::checks::Assertion::Asserted
            ? (row.failures == 0 ? "PASS" : "FAIL")
            : (row.assertion == opmeans::checks::Assertion::Diagnostic ? "DIAG"
                                                                       : "MON ");
    if (!quiet) {
      std::cout << tag << "  " << row.check_id << "  trials=" << row.evaluated
                << " skips=" << row.skips << " failures=" << row.failures
                << " min_margin=" << row.min_margin;
      if (row.sharpness_gap) std::cout << " sharpness_gap=" << *row.sharpness_gap;
      std::cout << "\n";
    }
  }
  opmeans::suite::write_report(report, cfg.report_path);
  if (!quiet) {
    std::cout << "report: " << cfg.report_path << "  (elapsed "
              << report.elapsed_seconds << "s)\n";
    std::cout << (report.exit_status == 0 ? "suite OK" : "suite FAILED") << "\n";
  }
  return report.exit_status;
}

int cmd_list() {
  for (const auto& def : opmeans::checks::registry()) {
    const char* assertion =
        def.assertion == opmeans::checks::Assertion::Asserted   ? "asserted"
        : def.assertion == opmeans::checks::Assertion::Diagnostic ? "diagnostic"
                                                                  : "monitored";
    std::cout << def.id << "\t" << assertion << "\t[" << def.param_schema << "]\t"
              << def.anchor << "\n";
  }
  return 0;
}

int cmd_probe(const std::string& check, double s, double t, double v) {
  auto probe = opmeans::checks::sharpness_probe(check, s, t, v);
  std::cout << "check " << check << "  s=" << s << " t=" << t << " v=" << v
            << "\n";
  for (const auto& [name, x] : probe.attained_at)
    std::cout << "  constant " << name << " attained at B = " << x << "\n";
  std::cout << "sharpness gap: " << probe.gap << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical verification suite for sharp operator-mean inequalities"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> report_path;
  bool quiet = false;
  auto* run = app.add_subcommand("run", "run a check suite from a JSON config");
  run->add_option("--config", config_path, "config file (defaults apply if omitted)");
  run->add_option("--seed", seed, "override the config seed");
  run->add_option("--report", report_path, "override the report path");
  run->add_flag("--quiet", quiet, "suppress progress output");

  auto* list = app.add_subcommand("list", "list the check registry");

  std::string probe_check;
  double probe_s = 0.5, probe_t = 2.0, probe_v = 0.5;
  auto* probe = app.add_subcommand("probe", "print a sharpness gap");
  probe->add_option("--check", probe_check, "check id")->required();
  probe->add_option("--s", probe_s, "lower sandwich bound")->required();
  probe->add_option("--t", probe_t, "upper sandwich bound")->required();
  probe->add_option("--v", probe_v, "weight")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(config_path, seed, report_path, quiet);
    if (list->parsed()) return cmd_list();
    if (probe->parsed()) return cmd_probe(probe_check, probe_s, probe_t, probe_v);
  } catch (const opmeans::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const opmeans::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
