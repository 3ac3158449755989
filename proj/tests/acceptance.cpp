// Acceptance suite: one line per criterion, PASS or FAIL, exit code equal to
// the number of failed criteria. Criterion 1 runs the full default
// configuration (200 trials per cell, dims {1,2,4,8}, full weight and power
// grids, fixed seed); later criteria reuse its report where they can.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "opmeans/constants.hpp"
#include "opmeans/entropy.hpp"
#include "opmeans/kernel.hpp"
#include "opmeans/suite.hpp"
#include "support/scalar_oracle.hpp"

using namespace opmeans;
using constants::ClassicalKind;

namespace {

int failures_total = 0;

void report(int index, bool ok, const std::string& what, const std::string& detail) {
  std::printf("[%d/8] %s  %s (%s)\n", index, ok ? "PASS" : "FAIL", what.c_str(),
              detail.c_str());
  if (!ok) ++failures_total;
}

const suite::CheckRow& row_of(const suite::Report& rep, const std::string& id) {
  for (const auto& row : rep.results)
    if (row.check_id == id) return row;
  throw Error("acceptance: missing report row " + id);
}

// ---------------------------------------------------------------------------

suite::Report criterion_1_inequality_suite() {
  // documented defaults: every check, 200 trials, dims {1,2,4,8}, full grids
  auto cfg = suite::parse_config("{}");
  cfg.seed = 20260809;
  cfg.report_path = "acceptance_report.json";
  auto started = std::chrono::steady_clock::now();
  auto rep = suite::run_suite(cfg);
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  suite::write_report(rep, cfg.report_path);

  long asserted_failures = 0;
  long total_trials = 0;
  for (const auto& row : rep.results) {
    total_trials += row.evaluated;
    if (row.assertion == checks::Assertion::Asserted)
      asserted_failures += row.failures;
  }
  bool ok = asserted_failures == 0 && elapsed < 300.0;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "%zu checks, %ld instances, %ld asserted failures, %.1fs",
                rep.results.size(), total_trials, asserted_failures, elapsed);
  report(1, ok, "inequality suite green at tol 1e-9", detail);
  return rep;
}

void criterion_2_power_numerics() {
  bool ok = constants::f_p_value(2.5, 7.0) > 0.0 &&
            constants::f_p_value(5.0, 8.0) < 0.0;
  double worst = 0.0;
  for (double x : {1.0, 4.0, 10.0})
    worst = std::max(worst, std::abs(constants::f_p_value(2.0, x)));
  ok = ok && worst <= 1e-10;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "f_2.5(7)=%.6f, f_5(8)=%.1f, max |f_2| on {1,4,10} = %.2e",
                constants::f_p_value(2.5, 7.0), constants::f_p_value(5.0, 8.0),
                worst);
  report(2, ok, "power-constant crossover signs and p=2 collapse", detail);
}

void criterion_3_product_identity() {
  gen::Rng rng({20260809, 77});
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    double m = rng.uniform(0.05, 3.0);
    double M = m + rng.uniform(1e-3, 5.0);
    auto cb = constants::endpoint_constants(m / M, M / m, 0.5);
    double want = (M + m) * (M + m) / (4.0 * M * m);
    worst = std::max(worst, std::abs(cb.xi * cb.psi - want) / std::max(1.0, want));
  }
  char detail[80];
  std::snprintf(detail, sizeof(detail), "worst relative defect %.2e over 100 draws",
                worst);
  report(3, worst <= 1e-12, "xi*psi reproduces the squared-band constant", detail);
}

void criterion_4_sharpness() {
  const std::vector<double> grid = {1.1, 1.4, 2.0, 2.8, 4.0};
  const std::vector<double> vgrid = {0.1, 0.25, 0.5, 0.75, 0.9};
  const std::vector<std::string> probed = {"thm19", "cor10", "prop8_nabla",
                                           "prop8_harm", "cor_xi_sharp"};
  double worst = 0.0;
  long points = 0;
  for (const auto& id : probed) {
    for (double s : grid) {
      for (double t : grid) {
        double lo = std::min(s, t), hi = std::max(s, t);
        for (double v : vgrid) {
          worst = std::max(worst, checks::sharpness_probe(id, lo, hi, v).gap);
          ++points;
        }
      }
    }
  }
  // extra coverage for sandwiches straddling 1 where prop8 does not apply
  for (const auto& id : {"thm19", "cor10", "cor_xi_sharp"})
    for (double v : vgrid)
      for (auto [s, t] : {std::pair{0.3, 1.7}, std::pair{0.5, 2.0}}) {
        worst = std::max(worst, checks::sharpness_probe(id, s, t, v).gap);
        ++points;
      }
  char detail[80];
  std::snprintf(detail, sizeof(detail), "worst gap %.2e over %ld probe points",
                worst, points);
  report(4, worst <= 1e-10, "sharpness probes certify attainment", detail);
}

void criterion_5_improvement_claims(const suite::Report& rep) {
  // alpha against xi psi
  double worst_cross = 0.0, worst_onesided = 0.0;
  for (double v : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    for (double s : {0.2, 0.4, 0.6, 0.8, 0.95}) {
      for (double t : {1.05, 1.5, 2.0, 3.0, 4.0}) {
        auto cb = constants::endpoint_constants(s, t, v);
        worst_cross = std::max(worst_cross, cb.alpha - cb.xi * cb.psi);
      }
    }
    for (double lo : {1.1, 1.6, 2.2}) {
      for (double span : {0.3, 1.0, 2.5}) {
        auto above = constants::endpoint_constants(lo, lo + span, v);
        worst_onesided = std::max(
            worst_onesided, std::abs(above.alpha - above.xi * above.psi));
        auto below =
            constants::endpoint_constants(1.0 / (lo + span), 1.0 / lo, v);
        worst_onesided = std::max(
            worst_onesided, std::abs(below.alpha - below.xi * below.psi));
      }
    }
  }

  // map-image constant against the square-root band constant, 100 random sets
  gen::Rng rng({20260809, 78});
  double worst_ps = -1e300;
  for (int trial = 0; trial < 100; ++trial) {
    double m2 = rng.uniform(0.05, 1.5);
    double m1 = m2 + rng.uniform(0.0, 1.0);
    double M1 = m1 + rng.uniform(1e-3, 2.0);
    double M2 = M1 + rng.uniform(0.0, 3.0);
    double ci = oracle::geom(0.5, m1, M1) / oracle::geom(0.5, m2, M2) *
                oracle::arith(0.5, m2, M2) / oracle::arith(0.5, m1, M1);
    double ps = (M2 + m2) / (2.0 * std::sqrt(M2 * m2));
    worst_ps = std::max(worst_ps, ci - ps);
  }

  // monitored: xi against the Specht endpoint maximum (finding, not failure)
  long monitored_violations = row_of(rep, "xi_vs_specht").failures;

  bool ok = worst_cross <= 1e-12 && worst_onesided <= 1e-12 && worst_ps <= 1e-12;
  char detail[200];
  std::snprintf(detail, sizeof(detail),
                "alpha-xi*psi cross %.1e, one-sided defect %.1e, map-vs-band "
                "%.1e; xi<=maxS findings: %ld",
                worst_cross, worst_onesided, worst_ps, monitored_violations);
  report(5, ok, "improvement claims hold where proved", detail);
  if (monitored_violations > 0)
    std::printf("      finding: xi exceeded max{S(s),S(t)} on %ld monitored "
                "instances (reported, not asserted)\n",
                monitored_violations);
}

void criterion_6_typo_forensics(const suite::Report& rep) {
  const auto& lit_c8 = row_of(rep, "c8_literal");
  const auto& lit_p8 = row_of(rep, "prop8_harm_literal");
  bool literal_fail = lit_c8.failures >= 1 && lit_p8.failures >= 1;
  bool resolved_pass = row_of(rep, "c8_i").failures == 0 &&
                       row_of(rep, "c8_ii").failures == 0 &&
                       row_of(rep, "prop8_harm").failures == 0;

  // the canonical scalar counterexample: literal lower bound 4.25 vs T = 2
  auto a = HermitianMatrix::scalar(1.0);
  auto b = HermitianMatrix::scalar(4.0);
  auto literal =
      entropy::c8_bounds_literal(entropy::C8Case::I, 1.0, 1.0, 4.0, 4.0, 0.5, a, b);
  auto t = entropy::tsallis(a, b, 0.5);
  bool canonical = std::abs(literal.harm_lo(0, 0).real() - 4.25) <= 1e-12 &&
                   std::abs(t(0, 0).real() - 2.0) <= 1e-12;

  bool ok = literal_fail && resolved_pass && canonical;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "literal failures %ld + %ld, resolved failures 0, canonical "
                "instance 4.25 vs 2",
                lit_c8.failures, lit_p8.failures);
  report(6, ok, "printed-form probes fail, resolved forms pass", detail);
}

void criterion_7_scalar_oracle() {
  auto cfg = suite::parse_config("{}");  // default interval sets drive the params
  double worst = 0.0;
  long compared = 0, skipped = 0;
  std::string worst_id = "-";
  for (const auto& def : checks::registry()) {
    std::vector<double> grid;
    switch (def.weights) {
      case checks::WeightDomain::Unit: grid = cfg.v_grid; break;
      case checks::WeightDomain::Half: grid = {0.5}; break;
      case checks::WeightDomain::GtOne: grid = checks::v_grid_gt1(); break;
      case checks::WeightDomain::LtZero: grid = checks::v_grid_lt0(); break;
      case checks::WeightDomain::Outside:
        grid = checks::v_grid_gt1();
        for (double v : checks::v_grid_lt0()) grid.push_back(v);
        break;
      case checks::WeightDomain::PGrid: grid = cfg.p_grid; break;
    }
    for (int trial = 0; trial < 1000; ++trial) {
      checks::CheckParams params;
      double g = grid[trial % grid.size()];
      if (def.weights == checks::WeightDomain::PGrid) {
        params.p = g;
        params.v = 0.5;
      } else {
        params.v = g;
      }
      // rotate the default interval sets exactly like the runner
      switch (def.kind) {
        case checks::InstanceKind::Band: {
          auto [m, M] = cfg.intervals.band[trial % cfg.intervals.band.size()];
          params.band_lo = m;
          params.band_hi = M;
          break;
        }
        case checks::InstanceKind::Sandwich: {
          auto [s, t] =
              cfg.intervals.sandwich[trial % cfg.intervals.sandwich.size()];
          params.s = s;
          params.t = t;
          break;
        }
        default: {
          auto q = cfg.intervals.ordered[trial % cfg.intervals.ordered.size()];
          params.m2 = q[0];
          params.m1 = q[1];
          params.M1 = q[2];
          params.M2 = q[3];
          if (def.id == "xi_vs_specht") {
            auto [s, t] =
                cfg.intervals.sandwich[trial % cfg.intervals.sandwich.size()];
            params.s = s;
            params.t = t;
          }
          break;
        }
      }
      auto instance = checks::make_instance(
          def, 1, params, trial, gen::Seed{4242, static_cast<uint64_t>(trial)});
      auto result = checks::run_check(def.id, instance, 1e-9);
      if (result.skipped) {
        ++skipped;
        continue;
      }
      double diff = std::abs(result.margin - oracle::margin(def.id, instance));
      if (diff > worst) {
        worst = diff;
        worst_id = def.id;
      }
      ++compared;
    }
  }
  bool ok = worst <= 1e-12 && compared >= 38000;
  char detail[120];
  std::snprintf(detail, sizeof(detail),
                "worst |op - scalar| %.2e (%s), %ld compared, %ld skipped", worst,
                worst_id.c_str(), compared, skipped);
  report(7, ok, "dim-1 operator margins match independent scalar arithmetic",
         detail);
}

void criterion_8_derivative_formulas() {
  auto central = [](auto f, double x) {
    double h = 1e-5 * std::max(1.0, std::abs(x));
    return (f(x + h) - f(x - h)) / (2.0 * h);
  };
  double worst = 0.0;
  for (double v = 0.05; v <= 0.96; v += 0.05) {
    for (double x = 0.1; x <= 10.0; x *= 1.21) {
      double dF = central(
          [v](double y) { return constants::aux_scalar(constants::AuxFn::BigF, v, y); },
          x);
      double dG = central(
          [v](double y) { return constants::aux_scalar(constants::AuxFn::BigG, v, y); },
          x);
      worst = std::max(worst, std::abs(constants::aux_bigF_derivative(v, x) - dF) /
                                  std::max(1.0, std::abs(dF)));
      worst = std::max(worst, std::abs(constants::aux_bigG_derivative(v, x) - dG) /
                                  std::max(1.0, std::abs(dG)));
    }
  }
  char detail[80];
  std::snprintf(detail, sizeof(detail), "worst unit-floored relative error %.2e",
                worst);
  report(8, worst <= 1e-6, "closed-form derivatives match finite differences",
         detail);
}

}  // namespace

int main() {
  std::printf("acceptance suite, kernel backend: %s\n",
              kernel::backend_name(kernel::active_backend()));
  auto rep = criterion_1_inequality_suite();
  criterion_2_power_numerics();
  criterion_3_product_identity();
  criterion_4_sharpness();
  criterion_5_improvement_claims(rep);
  criterion_6_typo_forensics(rep);
  criterion_7_scalar_oracle();
  criterion_8_derivative_formulas();
  std::printf("%d/8 criteria passed\n", 8 - failures_total);
  return failures_total == 0 ? 0 : 1;
}
