#include "doctest.h"

#include <cmath>

#include "opmeans/constants.hpp"
#include "opmeans/gen.hpp"

using namespace opmeans;
using namespace opmeans::constants;

TEST_CASE("aux scalars at distinguished points") {
  for (double v : {0.0, 0.1, 0.5, 0.9, 1.0})
    CHECK(aux_scalar(AuxFn::F, v, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  // frozen: 1.3 / 2^0.3
  CHECK(aux_scalar(AuxFn::F, 0.3, 2.0) ==
        doctest::Approx(1.0559281152631062).epsilon(1e-14));
  // (0.7 + 0.15)(0.7 + 0.6)
  CHECK(aux_scalar(AuxFn::H, 0.3, 0.5) == doctest::Approx(1.105).epsilon(1e-14));
  CHECK(aux_scalar(AuxFn::FHat, 0.3, 2.0) ==
        doctest::Approx(1.0 / 1.0559281152631062).epsilon(1e-13));
  CHECK_THROWS_AS(aux_scalar(AuxFn::F, 0.3, 0.0), IntervalError);
  CHECK_THROWS_AS(aux_scalar(AuxFn::F, 0.3, -1.0), IntervalError);
}

TEST_CASE("endpoint constants: degenerate, symmetric-band and generic cases") {
  auto one = endpoint_constants(1.0, 1.0, 0.37);
  CHECK(one.xi == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(one.psi == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(one.alpha == doctest::Approx(1.0).epsilon(1e-15));

  // s = m/M, t = M/m at v = 1/2 gives xi = psi = (m+M)/(2 sqrt(mM))
  auto sym = endpoint_constants(0.25, 4.0, 0.5);
  CHECK(sym.xi == doctest::Approx(1.25).epsilon(1e-14));
  CHECK(sym.psi == doctest::Approx(1.25).epsilon(1e-14));
  CHECK(sym.xi * sym.psi == doctest::Approx(25.0 / 16.0).epsilon(1e-14));

  auto gen_case = endpoint_constants(0.5, 2.0, 0.3);
  CHECK(gen_case.xi == doctest::Approx(1.0559281152631062).epsilon(1e-14));
  CHECK(gen_case.xi_at == Endpoint::T);
  CHECK(gen_case.psi == doctest::Approx(1.0559281152631062).epsilon(1e-14));
  CHECK(gen_case.psi_at == Endpoint::S);
  CHECK(gen_case.alpha == doctest::Approx(1.105).epsilon(1e-14));
  CHECK(gen_case.alpha < gen_case.xi * gen_case.psi);

  CHECK_THROWS_AS(endpoint_constants(2.0, 1.0, 0.5), IntervalError);
}

TEST_CASE("constants never drop below one") {
  gen::Rng rng({21, 0});
  for (int trial = 0; trial < 200; ++trial) {
    double s = rng.uniform(0.05, 3.0);
    double t = s + rng.uniform(0.0, 3.0);
    double v = rng.uniform(0.0, 1.0);
    auto cb = endpoint_constants(s, t, v);
    CHECK(cb.xi >= 1.0 - 1e-15);
    CHECK(cb.psi >= 1.0 - 1e-15);
    CHECK(cb.alpha >= 1.0 - 1e-15);
  }
}

TEST_CASE("alpha equals xi psi on one-sided intervals, never exceeds it across 1") {
  gen::Rng rng({22, 0});
  for (int trial = 0; trial < 200; ++trial) {
    double v = rng.uniform(0.0, 1.0);
    double lo = rng.uniform(1.001, 3.0);
    double hi = lo + rng.uniform(0.0, 2.0);
    auto above = endpoint_constants(lo, hi, v);
    CHECK(above.alpha == doctest::Approx(above.xi * above.psi).epsilon(1e-12));
    auto below = endpoint_constants(1.0 / hi, 1.0 / lo, v);
    CHECK(below.alpha == doctest::Approx(below.xi * below.psi).epsilon(1e-12));
    double s = rng.uniform(0.05, 0.999), t = rng.uniform(1.001, 4.0);
    auto across = endpoint_constants(s, t, v);
    CHECK(across.alpha <= across.xi * across.psi + 1e-12);
  }
}

TEST_CASE("scalar means") {
  CHECK(scalar_mean(ScalarMeanKind::Geom, 0.5, 1.0, 4.0) ==
        doctest::Approx(2.0).epsilon(1e-15));
  CHECK(scalar_mean(ScalarMeanKind::Harm, 0.5, 1.0, 4.0) ==
        doctest::Approx(1.6).epsilon(1e-15));
  CHECK(scalar_mean(ScalarMeanKind::Arith, 0.25, 2.0, 2.0) ==
        doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(scalar_mean(ScalarMeanKind::Geom, 0.5, -1.0, 2.0), IntervalError);
  // negative weight with b/a below |v|/(1-v) kills harmonic positivity
  CHECK_THROWS_AS(scalar_mean(ScalarMeanKind::Harm, -3.0, 1.0, 0.5), DomainError);
}

TEST_CASE("classical constants") {
  CHECK(classical_constant(ClassicalKind::Specht, 1.0) == doctest::Approx(1.0));
  CHECK(classical_constant(ClassicalKind::Kantorovich, 4.0) ==
        doctest::Approx(1.5625).epsilon(1e-15));
  // frozen from the closed form
  CHECK(classical_constant(ClassicalKind::Specht, 4.0) ==
        doctest::Approx(1.2637407212158111).epsilon(1e-13));
  CHECK(classical_constant(ClassicalKind::Specht, 0.5) ==
        doctest::Approx(1.0614756908460860).epsilon(1e-13));
  // continuity across the expansion cutoff
  double just_below = classical_constant(ClassicalKind::Specht, 1.0 + 0.9e-6);
  double just_above = classical_constant(ClassicalKind::Specht, 1.0 + 1.1e-6);
  CHECK(std::abs(just_below - just_above) <= 1e-12);
  CHECK_THROWS_AS(classical_constant(ClassicalKind::Specht, 0.0), IntervalError);
}

TEST_CASE("power constants and the crossover function") {
  SUBCASE("p = 2 collapses the two constants") {
    auto pc = power_constants(1.0, 4.0, 2.0);
    CHECK(pc.c_lin == doctest::Approx(pc.c_fur).epsilon(1e-14));
    for (double x : {1.0, 4.0, 10.0}) CHECK(std::abs(f_p_value(2.0, x)) <= 1e-10);
  }
  SUBCASE("reported crossover signs") {
    CHECK(f_p_value(2.5, 7.0) > 0.0);
    CHECK(f_p_value(5.0, 8.0) < 0.0);
    // frozen magnitudes from direct evaluation
    CHECK(f_p_value(2.5, 7.0) == doctest::Approx(1.3415920564261921).epsilon(1e-10));
    CHECK(f_p_value(5.0, 8.0) == doctest::Approx(-3793.0711601139340).epsilon(1e-10));
  }
  SUBCASE("eta picks the smaller constant") {
    for (double p : {2.0, 2.5, 3.0, 5.0}) {
      auto pc = power_constants(0.5, 2.0, p);
      CHECK(pc.eta == doctest::Approx(std::min(pc.c_lin, pc.c_fur)));
    }
  }
  CHECK_THROWS_AS(power_constants(1.0, 4.0, 1.5), IntervalError);
  CHECK_THROWS_AS(power_constants(4.0, 1.0, 2.0), IntervalError);
}

TEST_CASE("closed-form derivatives match central differences") {
  auto central = [](auto f, double x) {
    double h = 1e-5 * std::max(1.0, std::abs(x));
    return (f(x + h) - f(x - h)) / (2.0 * h);
  };
  for (double v : {0.1, 0.25, 0.4, 0.6, 0.75, 0.9}) {
    for (double x = 0.1; x <= 10.0; x *= 1.45) {
      double want_f = central(
          [v](double y) { return aux_scalar(AuxFn::F, v, y); }, x);
      CHECK(std::abs(aux_f_derivative(v, x) - want_f) <=
            1e-6 * std::max(1.0, std::abs(want_f)));
      double want_F = central(
          [v](double y) { return aux_scalar(AuxFn::BigF, v, y); }, x);
      CHECK(std::abs(aux_bigF_derivative(v, x) - want_F) <=
            1e-6 * std::max(1.0, std::abs(want_F)));
      double want_G = central(
          [v](double y) { return aux_scalar(AuxFn::BigG, v, y); }, x);
      CHECK(std::abs(aux_bigG_derivative(v, x) - want_G) <=
            1e-6 * std::max(1.0, std::abs(want_G)));
      double want_h = central(
          [v](double y) { return aux_scalar(AuxFn::H, v, y); }, x);
      CHECK(std::abs(aux_h_derivative(v, x) - want_h) <=
            1e-6 * std::max(1.0, std::abs(want_h)));
    }
  }
}

TEST_CASE("sign pattern of the reflected differences") {
  gen::Rng rng({23, 0});
  for (int trial = 0; trial < 500; ++trial) {
    double x = rng.uniform(0.001, 1.0);
    double v = rng.uniform(0.0, 0.5);
    CHECK(aux_scalar(AuxFn::BigF, v, x) <= 1e-14);
    CHECK(aux_scalar(AuxFn::BigG, v, x) >= -1e-14);
    double w = rng.uniform(0.5, 1.0);
    CHECK(aux_scalar(AuxFn::BigF, w, x) >= -1e-14);
    CHECK(aux_scalar(AuxFn::BigG, w, x) <= 1e-14);
  }
}

TEST_CASE("pointwise certificate (1-v)+vx <= xi x^v on [s,t]") {
  gen::Rng rng({24, 0});
  for (int round = 0; round < 50; ++round) {
    double s = rng.uniform(0.05, 2.0);
    double t = s + rng.uniform(0.0, 3.0);
    double v = rng.uniform(0.0, 1.0);
    auto cb = endpoint_constants(s, t, v);
    for (int i = 0; i < 200; ++i) {
      double x = rng.uniform(s, t);
      CHECK((1.0 - v) + v * x <= cb.xi * std::pow(x, v) + 1e-12);
    }
  }
}

TEST_CASE("improvement monotonicity: tighter sandwiches never raise xi or psi") {
  gen::Rng rng({25, 0});
  for (int trial = 0; trial < 200; ++trial) {
    double s = rng.uniform(0.05, 1.5);
    double t = s + rng.uniform(0.001, 3.0);
    double v = rng.uniform(0.0, 1.0);
    double s2 = rng.uniform(s, t);
    double t2 = rng.uniform(s2, t);
    auto outer = endpoint_constants(s, t, v);
    auto inner = endpoint_constants(s2, t2, v);
    CHECK(inner.xi <= outer.xi + 1e-12);
    CHECK(inner.psi <= outer.psi + 1e-12);
  }
}

TEST_CASE("weighted mean-ratio identity at v = 1/2") {
  gen::Rng rng({26, 0});
  for (int trial = 0; trial < 100; ++trial) {
    double m = rng.uniform(0.1, 2.0);
    double M = m + rng.uniform(0.001, 5.0);
    double lhs = scalar_mean(ScalarMeanKind::Geom, 0.5, m, M) /
                 scalar_mean(ScalarMeanKind::Harm, 0.5, m, M);
    double rhs = scalar_mean(ScalarMeanKind::Arith, 0.5, m, M) /
                 scalar_mean(ScalarMeanKind::Geom, 0.5, m, M);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
  }
}

TEST_CASE("weight split") {
  Weight w(0.3);
  CHECK(w.lambda == doctest::Approx(0.3));
  CHECK(w.mu == doctest::Approx(0.7));
  CHECK(w.lambda + w.mu == doctest::Approx(1.0));
  Weight out(1.5);
  CHECK(out.lambda == doctest::Approx(-0.5));
  CHECK(out.mu == doctest::Approx(1.5));
}

TEST_CASE("xi against the Specht endpoint maximum on a grid (monitored)") {
  // the claim is unproven in general; this records the grid status rather
  // than asserting it, and verifies the comparison machinery on a known case
  int violations = 0;
  double worst = 1e300;
  for (double s : {0.2, 0.5, 0.8, 1.25, 2.0, 3.5}) {
    for (double t : {0.2, 0.5, 0.8, 1.25, 2.0, 3.5}) {
      if (s > t) continue;
      for (double v : {0.1, 0.25, 0.5, 0.75, 0.9}) {
        auto cb = endpoint_constants(s, t, v);
        double bound = std::max(classical_constant(ClassicalKind::Specht, s),
                                classical_constant(ClassicalKind::Specht, t));
        worst = std::min(worst, bound - cb.xi);
        if (cb.xi > bound + 1e-12) ++violations;
      }
    }
  }
  MESSAGE("xi vs Specht slack on the grid: ", worst, ", violations: ", violations);
  // a deliberately wrong constant must register as a violation
  CHECK(endpoint_constants(0.5, 2.0, 0.5).xi * 1.1 >
        std::max(classical_constant(ClassicalKind::Specht, 0.5),
                 classical_constant(ClassicalKind::Specht, 2.0)));
}
