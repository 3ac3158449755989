#include "opmeans/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>

#include "opmeans/jsonio.hpp"
#include "opmeans/means.hpp"

namespace opmeans::suite {

using checks::CheckDef;
using checks::CheckParams;
using checks::InstanceKind;
using checks::WeightDomain;
using nlohmann::json;
using nlohmann::ordered_json;

IntervalSets default_interval_sets() {
  IntervalSets s;
  s.sandwich = {{0.5, 2.0}, {0.25, 0.75}, {1.5, 3.0}};
  s.ordered = {{0.5, 1.0, 2.0, 4.0}, {1.0, 1.5, 2.0, 3.0}};
  s.band = {{1.0, 4.0}, {0.5, 2.0}};
  return s;
}

namespace {

std::vector<std::string> all_check_ids() {
  std::vector<std::string> out;
  for (const auto& def : checks::registry()) out.push_back(def.id);
  return out;
}

void validate_config(const SuiteConfig& cfg) {
  if (cfg.checks.empty())
    throw ConfigError("config: the check selection is empty");
  for (const auto& id : cfg.checks)
    if (!checks::has_check(id))
      throw ConfigError("config: unknown check id '" + id + "'");
  if (cfg.trials < 1) throw ConfigError("config: trials must be at least 1");
  // substream packing allocates 20/10/6 bits to trial/grid/dim indices
  if (cfg.trials >= (1 << 20))
    throw ConfigError("config: trials must stay below 1048576");
  if (cfg.v_grid.size() >= 1000 || cfg.p_grid.size() >= 1000)
    throw ConfigError("config: grids must stay below 1000 points");
  if (!(cfg.tol > 0.0)) throw ConfigError("config: tol must be positive");
  if (cfg.dims.empty()) throw ConfigError("config: dims must be non-empty");
  if (cfg.dims.size() > 64) throw ConfigError("config: too many dims entries");
  for (int d : cfg.dims)
    if (d < 1 || d > kMaxDim)
      throw ConfigError("config: dims entries must lie in [1, 64]");
  if (cfg.v_grid.empty()) throw ConfigError("config: v_grid must be non-empty");
  for (double v : cfg.v_grid)
    if (v < 0.0 || v > 1.0)
      throw ConfigError("config: v_grid entries must lie in [0, 1]");
  if (cfg.p_grid.empty()) throw ConfigError("config: p_grid must be non-empty");
  for (double p : cfg.p_grid)
    if (!(p >= 2.0)) throw ConfigError("config: p_grid entries must be at least 2");
  if (cfg.intervals.sandwich.empty() || cfg.intervals.ordered.empty() ||
      cfg.intervals.band.empty())
    throw ConfigError("config: interval_params sets must be non-empty");
  for (auto [s, t] : cfg.intervals.sandwich)
    if (!(s > 0.0 && s <= t))
      throw ConfigError("config: sandwich sets require 0 < s <= t");
  for (auto [m, M] : cfg.intervals.band)
    if (!(m > 0.0 && m < M))
      throw ConfigError("config: band sets require 0 < m < M");
  for (auto q : cfg.intervals.ordered)
    if (!(0.0 < q[0] && q[0] <= q[1] && q[1] < q[2] && q[2] <= q[3]))
      throw ConfigError("config: ordered sets require 0 < m2 <= m1 < M1 <= M2");
  for (const auto& label : cfg.extra_means) {
    for (double v : cfg.v_grid) {
      auto rep = means::representing_betweenness(means::representing_fn(label, v), v);
      if (!rep.ok)
        throw ConfigError("config: extra mean '" + label +
                          "' fails the betweenness certificate at v=" +
                          std::to_string(v));
    }
  }
}

}  // namespace

SuiteConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: top level must be an object");
  SuiteConfig cfg;
  cfg.checks = all_check_ids();
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    try {
      if (key == "checks") {
        if (it->is_string()) {
          if (it->get<std::string>() != "all")
            throw ConfigError("config: checks must be \"all\" or a list of ids");
        } else {
          auto ids = it->get<std::vector<std::string>>();
          for (const auto& id : ids)
            if (!checks::has_check(id))
              throw ConfigError("config: unknown check id '" + id + "'");
          // keep registry order, drop duplicates
          std::vector<std::string> resolved;
          for (const auto& def : checks::registry())
            if (std::find(ids.begin(), ids.end(), def.id) != ids.end())
              resolved.push_back(def.id);
          cfg.checks = std::move(resolved);
        }
      } else if (key == "trials") {
        cfg.trials = it->get<int>();
      } else if (key == "dims") {
        cfg.dims = it->get<std::vector<int>>();
      } else if (key == "seed") {
        cfg.seed = it->get<std::uint64_t>();
      } else if (key == "tol") {
        cfg.tol = it->get<double>();
      } else if (key == "v_grid") {
        cfg.v_grid = it->get<std::vector<double>>();
      } else if (key == "p_grid") {
        cfg.p_grid = it->get<std::vector<double>>();
      } else if (key == "interval_params") {
        if (it->contains("sandwich"))
          cfg.intervals.sandwich =
              it->at("sandwich").get<std::vector<std::pair<double, double>>>();
        if (it->contains("ordered"))
          cfg.intervals.ordered =
              it->at("ordered").get<std::vector<std::array<double, 4>>>();
        if (it->contains("band"))
          cfg.intervals.band =
              it->at("band").get<std::vector<std::pair<double, double>>>();
      } else if (key == "extra_means") {
        cfg.extra_means = it->get<std::vector<std::string>>();
      } else if (key == "report_path") {
        cfg.report_path = it->get<std::string>();
      } else {
        throw ConfigError("config: unknown key '" + key + "'");
      }
    } catch (const json::exception& e) {
      throw ConfigError("config: bad value for '" + key + "': " + e.what());
    }
  }
  validate_config(cfg);
  return cfg;
}

std::uint64_t trial_stream(int check_index, int dim_index, int grid_index, int trial) {
  // radix packing: unique for trial < 2^20, grid < 2^10, dim < 2^6
  return static_cast<std::uint64_t>(trial) |
         (static_cast<std::uint64_t>(grid_index) << 20) |
         (static_cast<std::uint64_t>(dim_index) << 30) |
         (static_cast<std::uint64_t>(check_index) << 36);
}

namespace {

struct GridCell {
  CheckParams params;
  int grid_index;
};

// Weight grid for the check crossed with its interval sets, flattened into
// cells. Interval sets rotate within a cell's trials, so the per-(dim, v)
// trial count equals cfg.trials exactly.
std::vector<double> weight_grid(const CheckDef& def, const SuiteConfig& cfg) {
  switch (def.weights) {
    case WeightDomain::Unit: return cfg.v_grid;
    case WeightDomain::Half: return {0.5};
    case WeightDomain::GtOne: return checks::v_grid_gt1();
    case WeightDomain::LtZero: return checks::v_grid_lt0();
    case WeightDomain::Outside: {
      std::vector<double> g = checks::v_grid_gt1();
      const auto& neg = checks::v_grid_lt0();
      g.insert(g.end(), neg.begin(), neg.end());
      return g;
    }
    case WeightDomain::PGrid: return cfg.p_grid;
  }
  return {0.5};
}

enum class Source { Band, Sandwich, Ordered, None };

Source param_source(const CheckDef& def) {
  switch (def.kind) {
    case InstanceKind::Band: return Source::Band;
    case InstanceKind::Sandwich: return Source::Sandwich;
    case InstanceKind::OrderedI:
    case InstanceKind::OrderedII:
    case InstanceKind::OrderedByWeight: return Source::Ordered;
    case InstanceKind::ParamsOnly:
      if (def.id == "xi_vs_specht") return Source::Sandwich;
      if (def.id == "lemma21_signs") return Source::None;
      return Source::Ordered;  // the remark comparisons read ordered sets
  }
  return Source::None;
}

int interval_set_count(const CheckDef& def, const SuiteConfig& cfg) {
  switch (param_source(def)) {
    case Source::Band: return static_cast<int>(cfg.intervals.band.size());
    case Source::Sandwich: return static_cast<int>(cfg.intervals.sandwich.size());
    case Source::Ordered: return static_cast<int>(cfg.intervals.ordered.size());
    case Source::None: return 1;
  }
  return 1;
}

void apply_interval_set(const CheckDef& def, const SuiteConfig& cfg, int set_index,
                        CheckParams& p) {
  switch (param_source(def)) {
    case Source::Band: {
      auto [m, M] = cfg.intervals.band[set_index];
      p.band_lo = m;
      p.band_hi = M;
      break;
    }
    case Source::Sandwich: {
      auto [s, t] = cfg.intervals.sandwich[set_index];
      p.s = s;
      p.t = t;
      break;
    }
    case Source::Ordered: {
      auto q = cfg.intervals.ordered[set_index];
      p.m2 = q[0];
      p.m1 = q[1];
      p.M1 = q[2];
      p.M2 = q[3];
      break;
    }
    case Source::None:
      break;
  }
}

std::optional<double> row_sharpness(const CheckDef& def, const SuiteConfig& cfg) {
  if (!checks::supports_sharpness(def.id)) return std::nullopt;
  double gap = 0.0;
  auto probe_all = [&](double s, double t) {
    for (double v : cfg.v_grid)
      gap = std::max(gap, checks::sharpness_probe(def.id, s, t, v).gap);
  };
  if (def.id == "thm19" || def.id == "cor_xi_sharp") {
    for (auto [s, t] : cfg.intervals.sandwich) probe_all(s, t);
  } else if (def.id == "cor10") {
    for (auto [m, M] : cfg.intervals.band) probe_all(m, M);
  } else {
    // prop8 probes work on the spectral ratio pair
    for (auto q : cfg.intervals.ordered) probe_all(q[2] / q[1], q[3] / q[0]);
  }
  return gap;
}

ordered_json config_json(const SuiteConfig& cfg) {
  ordered_json j;
  j["checks"] = cfg.checks;
  j["trials"] = cfg.trials;
  j["dims"] = cfg.dims;
  j["seed"] = cfg.seed;
  j["tol"] = cfg.tol;
  j["v_grid"] = cfg.v_grid;
  j["p_grid"] = cfg.p_grid;
  ordered_json intervals;
  intervals["sandwich"] = cfg.intervals.sandwich;
  intervals["ordered"] = cfg.intervals.ordered;
  intervals["band"] = cfg.intervals.band;
  j["interval_params"] = std::move(intervals);
  j["extra_means"] = cfg.extra_means;
  j["report_path"] = cfg.report_path;
  return j;
}

}  // namespace

Report run_suite(const SuiteConfig& cfg) {
  validate_config(cfg);
  auto started = std::chrono::steady_clock::now();
  Report report;
  report.config = cfg;

  for (const auto& id : cfg.checks) {
    const CheckDef& def = checks::check_by_id(id);
    const int check_index =
        static_cast<int>(&def - checks::registry().data());
    CheckRow row;
    row.check_id = id;
    row.assertion = def.assertion;
    row.min_margin = std::numeric_limits<double>::infinity();

    const auto grid = weight_grid(def, cfg);
    const int sets = interval_set_count(def, cfg);
    for (int di = 0; di < static_cast<int>(cfg.dims.size()); ++di) {
      for (int gi = 0; gi < static_cast<int>(grid.size()); ++gi) {
        for (int trial = 0; trial < cfg.trials; ++trial) {
          CheckParams params;
          params.extra_means = cfg.extra_means;
          if (def.weights == WeightDomain::PGrid) {
            params.p = grid[gi];
            params.v = 0.5;
          } else {
            params.v = grid[gi];
          }
          apply_interval_set(def, cfg, trial % sets, params);
          gen::Seed seed{cfg.seed, trial_stream(check_index, di, gi, trial)};
          auto instance =
              checks::make_instance(def, cfg.dims[di], params, trial, seed);
          auto result = checks::run_check(id, instance, cfg.tol);
          ++row.planned;
          if (result.skipped) {
            ++row.skips;
            continue;
          }
          ++row.evaluated;
          row.min_margin = std::min(row.min_margin, result.margin);
          if (!result.pass) {
            ++row.failures;
            row.witnesses.push_back(std::move(result));
          }
        }
      }
    }
    if (row.evaluated == 0) row.min_margin = 0.0;
    row.sharpness_gap = row_sharpness(def, cfg);
    if (def.assertion == checks::Assertion::Asserted && row.failures > 0)
      report.exit_status = 1;
    report.results.push_back(std::move(row));
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return report;
}

std::string report_to_json(const Report& report) {
  ordered_json j;
  j["config"] = config_json(report.config);
  ordered_json results = ordered_json::array();
  for (const auto& row : report.results) {
    const CheckDef& def = checks::check_by_id(row.check_id);
    ordered_json r;
    r["check_id"] = row.check_id;
    ordered_json params;
    params["dims"] = report.config.dims;
    if (def.weights == WeightDomain::PGrid) {
      params["p_values"] = report.config.p_grid;
    } else if (def.weights == WeightDomain::Half) {
      params["v_values"] = std::vector<double>{0.5};
    } else if (def.weights == WeightDomain::Unit) {
      params["v_values"] = report.config.v_grid;
    } else {
      std::vector<double> g;
      if (def.weights != WeightDomain::LtZero)
        g.insert(g.end(), checks::v_grid_gt1().begin(), checks::v_grid_gt1().end());
      if (def.weights != WeightDomain::GtOne)
        g.insert(g.end(), checks::v_grid_lt0().begin(), checks::v_grid_lt0().end());
      params["v_values"] = g;
    }
    switch (param_source(def)) {
      case Source::Band: params["intervals"] = report.config.intervals.band; break;
      case Source::Sandwich:
        params["intervals"] = report.config.intervals.sandwich;
        break;
      case Source::Ordered:
        params["intervals"] = report.config.intervals.ordered;
        break;
      case Source::None: break;
    }
    r["params"] = std::move(params);
    r["assertion"] = def.assertion == checks::Assertion::Asserted   ? "asserted"
                     : def.assertion == checks::Assertion::Diagnostic ? "diagnostic"
                                                                      : "monitored";
    r["trials"] = row.evaluated;
    r["skips"] = row.skips;
    r["failures"] = row.failures;
    r["min_margin"] = row.min_margin;
    if (row.sharpness_gap.has_value()) r["sharpness_gap"] = *row.sharpness_gap;
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : row.witnesses) witnesses.push_back(witness_json(w));
    r["witnesses"] = std::move(witnesses);
    results.push_back(std::move(r));
  }
  j["results"] = std::move(results);
  j["elapsed_seconds"] = report.elapsed_seconds;
  j["version"] = report.version;
  return j.dump(2) + "\n";
}

void write_report(const Report& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write report to '" + path + "'");
  out << report_to_json(report);
}

}  // namespace opmeans::suite
