#include "opmeans/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "opmeans/constants.hpp"
#include "opmeans/entropy.hpp"
#include "opmeans/functions.hpp"
#include "opmeans/means.hpp"

namespace opmeans::checks {

namespace {

using constants::AuxFn;
using constants::ClassicalKind;
using constants::ScalarMeanKind;
using means::MeanDescriptor;

double smean(ScalarMeanKind k, double v, double a, double b) {
  return constants::scalar_mean(k, v, a, b);
}

double smargin(double l, double r) {
  return (r - l) / std::max(1.0, std::abs(l) + std::abs(r));
}

HermitianMatrix mean_of(const MeanDescriptor& d, const HermitianMatrix& a,
                        const HermitianMatrix& b) {
  return means::weighted_mean(d, a, b);
}

// Minimum margin over the sub-inequalities of a multi-part statement,
// remembering which part attained it.
struct MinTracker {
  double margin = std::numeric_limits<double>::infinity();
  int part = -1;
  int count = 0;
  void add(double m) {
    if (m < margin) {
      margin = m;
      part = count;
    }
    ++count;
  }
  CheckOutcome outcome() const { return {margin, part, false, {}}; }
};

CheckOutcome skip(std::string reason) { return {0.0, -1, true, std::move(reason)}; }

const fns::FunctionDescriptor& rotated(fns::FnClass c, int index) {
  static const auto monotone = fns::with_class(fns::FnClass::Monotone);
  static const auto decreasing = fns::with_class(fns::FnClass::MonotoneDecreasing);
  static const auto convex = fns::with_class(fns::FnClass::Convex);
  static const auto concave = fns::with_class(fns::FnClass::Concave);
  const auto& list = c == fns::FnClass::Monotone            ? monotone
                     : c == fns::FnClass::MonotoneDecreasing ? decreasing
                     : c == fns::FnClass::Convex             ? convex
                                                             : concave;
  return *list[static_cast<size_t>(index) % list.size()];
}

double quad_form(const HermitianMatrix& x, const std::vector<cplx>& h) {
  cplx acc(0.0);
  const int n = x.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) acc += std::conj(h[i]) * x(i, j) * h[j];
  return acc.real();
}

// Canonical trio plus any configured representing means.
std::vector<MeanDescriptor> catalog_of(const Instance& in, double v) {
  auto base = means::canonical_catalog(v);
  std::vector<MeanDescriptor> out(base.begin(), base.end());
  for (const auto& label : in.params.extra_means)
    out.push_back(MeanDescriptor::representing(label, v));
  return out;
}

// ---------------------------------------------------------------------------
// evaluators
// ---------------------------------------------------------------------------

CheckOutcome eval_eq6_chain(const Instance& in) {
  const double v = in.params.v;
  auto harm = mean_of(MeanDescriptor::harmonic(v), in.a, in.b);
  auto geom = mean_of(MeanDescriptor::geometric(v), in.a, in.b);
  auto arit = mean_of(MeanDescriptor::arithmetic(v), in.a, in.b);
  MinTracker t;
  t.add(loewner_margin(harm, geom));
  t.add(loewner_margin(geom, arit));
  return t.outcome();
}

CheckOutcome eval_thm19(const Instance& in) {
  const double v = in.params.v;
  auto cb = constants::endpoint_constants(in.params.s, in.params.t, v);
  auto arit = mean_of(MeanDescriptor::arithmetic(v), in.a, in.b);
  auto geom = mean_of(MeanDescriptor::geometric(v), in.a, in.b);
  auto harm = mean_of(MeanDescriptor::harmonic(v), in.a, in.b);
  MinTracker t;
  t.add(loewner_margin(arit.scaled(1.0 / cb.xi), geom));
  t.add(loewner_margin(geom, harm.scaled(cb.psi)));
  return t.outcome();
}

CheckOutcome eval_lemma21_signs(const Instance& in) {
  const double v = in.params.v;
  const double x = in.params.aux_x;  // in (0, 1]
  double big_f = constants::aux_scalar(AuxFn::BigF, v, x);
  double big_g = constants::aux_scalar(AuxFn::BigG, v, x);
  MinTracker t;
  if (v <= 0.5) {
    t.add(smargin(big_f, 0.0));  // F_v(x) <= 0
    t.add(smargin(0.0, big_g));  // G_v(x) >= 0
  } else {
    t.add(smargin(0.0, big_f));
    t.add(smargin(big_g, 0.0));
  }
  return t.outcome();
}

CheckOutcome eval_cor10(const Instance& in) {
  const double v = in.params.v;
  const double m = in.params.band_lo, M = in.params.band_hi;
  constants::Weight w(v);
  double c_lo = smean(ScalarMeanKind::Geom, w.lambda, m, M) /
                smean(ScalarMeanKind::Arith, w.lambda, m, M);
  double c_hi = smean(ScalarMeanKind::Geom, w.mu, m, M) /
                smean(ScalarMeanKind::Harm, w.mu, m, M);
  auto arit = mean_of(MeanDescriptor::arithmetic(v), in.a, in.b);
  auto geom = mean_of(MeanDescriptor::geometric(v), in.a, in.b);
  auto harm = mean_of(MeanDescriptor::harmonic(v), in.a, in.b);
  MinTracker t;
  t.add(loewner_margin(arit.scaled(c_lo), geom));
  t.add(loewner_margin(geom, harm.scaled(c_hi)));
  return t.outcome();
}

CheckOutcome eval_remark_kantorovich_compare(const Instance& in) {
  const double v = in.params.v;
  const double m1 = in.params.m1, M1 = in.params.M1;
  const double m2 = in.params.m2, M2 = in.params.M2;
  constants::Weight w(v);
  double k1 = constants::classical_constant(ClassicalKind::Kantorovich, M1 / m1);
  double k2 = constants::classical_constant(ClassicalKind::Kantorovich, M2 / m2);
  MinTracker t;
  // upper-factor route: (m1 #_v M1)/(m1 nabla_v M1) <= K(M1/m1)^{-r}
  t.add(smargin(smean(ScalarMeanKind::Geom, v, m1, M1) /
                    smean(ScalarMeanKind::Arith, v, m1, M1),
                std::pow(k1, -w.lambda)));
  // lower-factor route: (m2 nabla_v M2)/(m2 #_v M2) <= K(M2/m2)^{R}
  t.add(smargin(smean(ScalarMeanKind::Arith, v, m2, M2) /
                    smean(ScalarMeanKind::Geom, v, m2, M2),
                std::pow(k2, w.mu)));
  return t.outcome();
}

CheckOutcome eval_needed_power(const Instance& in) {
  const double m = in.params.band_lo, M = in.params.band_hi;
  double c = smean(ScalarMeanKind::Arith, 0.5, m, M) /
             smean(ScalarMeanKind::Geom, 0.5, m, M);
  auto arit = mean_of(MeanDescriptor::arithmetic(0.5), in.a, in.b);
  auto geom = mean_of(MeanDescriptor::geometric(0.5), in.a, in.b);
  MinTracker t;
  t.add(loewner_margin(in.map.apply(arit), in.map.apply(geom).scaled(c)));
  return t.outcome();
}

enum class PowerFlavor { Lin, Fur, Eta, EtaMaps };

CheckOutcome eval_power(const Instance& in, PowerFlavor flavor) {
  const double m = in.params.band_lo, M = in.params.band_hi;
  const double p = in.params.p;
  auto pc = constants::power_constants(m, M, p);
  double c = flavor == PowerFlavor::Lin   ? pc.c_lin
             : flavor == PowerFlavor::Fur ? pc.c_fur
                                          : pc.eta;
  auto arit = mean_of(MeanDescriptor::arithmetic(0.5), in.a, in.b);
  auto power = [p](double x) { return std::pow(x, p); };
  HermitianMatrix lhs = apply_fn(in.map.apply(arit), power, 0.0);
  HermitianMatrix base =
      flavor == PowerFlavor::EtaMaps
          ? mean_of(MeanDescriptor::geometric(0.5), in.map.apply(in.a),
                    in.map.apply(in.b))
          : in.map.apply(mean_of(MeanDescriptor::geometric(0.5), in.a, in.b));
  HermitianMatrix rhs = apply_fn(base, power, 0.0).scaled(c);
  MinTracker t;
  t.add(loewner_margin(lhs, rhs));
  return t.outcome();
}

CheckOutcome eval_power_p_lin(const Instance& in) { return eval_power(in, PowerFlavor::Lin); }
CheckOutcome eval_power_p_fur(const Instance& in) { return eval_power(in, PowerFlavor::Fur); }
CheckOutcome eval_power_p_eta(const Instance& in) { return eval_power(in, PowerFlavor::Eta); }
CheckOutcome eval_power_p_eta_maps(const Instance& in) {
  return eval_power(in, PowerFlavor::EtaMaps);
}

CheckOutcome eval_prop8_nabla(const Instance& in) {
  const double v = in.params.v;
  double lo = smean(ScalarMeanKind::Geom, v, in.params.m2, in.params.M2) /
              smean(ScalarMeanKind::Arith, v, in.params.m2, in.params.M2);
  double hi = smean(ScalarMeanKind::Geom, v, in.params.m1, in.params.M1) /
              smean(ScalarMeanKind::Arith, v, in.params.m1, in.params.M1);
  auto arit = mean_of(MeanDescriptor::arithmetic(v), in.a, in.b);
  auto geom = mean_of(MeanDescriptor::geometric(v), in.a, in.b);
  MinTracker t;
  t.add(loewner_margin(arit.scaled(lo), geom));
  t.add(loewner_margin(geom, arit.scaled(hi)));
  return t.outcome();
}

CheckOutcome eval_prop8_harm(const Instance& in) {
  const double v = in.params.v;
  double lo = smean(ScalarMeanKind::Geom, v, in.params.m1, in.params.M1) /
              smean(ScalarMeanKind::Harm, v, in.params.m1, in.params.M1);
  double hi = smean(ScalarMeanKind::Geom, v, in.params.m2, in.params.M2) /
              smean(ScalarMeanKind::Harm, v, in.params.m2, in.params.M2);
  auto harm = mean_of(MeanDescriptor::harmonic(v), in.a, in.b);
  auto geom = mean_of(MeanDescriptor::geometric(v), in.a, in.b);
  MinTracker t;
  t.add(loewner_margin(harm.scaled(lo), geom));
  t.add(loewner_margin(geom, harm.scaled(hi)));
  return t.outcome();
}

// Upper constant denominator as printed, with mixed endpoints. Diagnostic:
// the endpoint-consistent form lives in eval_prop8_harm.
CheckOutcome eval_prop8_harm_literal(const Instance& in) {
  const double v = in.params.v;
  double lo = smean(ScalarMeanKind::Geom, v, in.params.m1, in.params.M1) /
              smean(ScalarMeanKind::Harm, v, in.params.m1, in.params.M1);
  double hi = smean(ScalarMeanKind::Geom, v, in.params.m2, in.params.M2) /
              smean(ScalarMeanKind::Harm, v, in.params.m1, in.params.M2);
  auto harm = mean_of(MeanDescriptor::harmonic(v), in.a, in.b);
  auto geom = mean_of(MeanDescriptor::geometric(v), in.a, in.b);
  MinTracker t;
  t.add(loewner_margin(harm.scaled(lo), geom));
  t.add(loewner_margin(geom, harm.scaled(hi)));
  return t.outcome();
}

double cor22_constant(const CheckParams& p, double v, bool case_two) {
  if (!case_two) {
    return smean(ScalarMeanKind::Geom, v, p.m1, p.M1) /
           smean(ScalarMeanKind::Geom, v, p.m2, p.M2) *
           smean(ScalarMeanKind::Arith, v, p.m2, p.M2) /
           smean(ScalarMeanKind::Arith, v, p.m1, p.M1);
  }
  return smean(ScalarMeanKind::Geom, v, p.M1, p.m1) /
         smean(ScalarMeanKind::Geom, v, p.M2, p.m2) *
         smean(ScalarMeanKind::Arith, v, p.M2, p.m2) /
         smean(ScalarMeanKind::Arith, v, p.M1, p.m1);
}

CheckOutcome eval_cor22(const Instance& in, bool case_two) {
  const double v = in.params.v;
  double c = cor22_constant(in.params, v, case_two);
  auto geom_ab = mean_of(MeanDescriptor::geometric(v), in.a, in.b);
  auto lhs = mean_of(MeanDescriptor::geometric(v), in.map.apply(in.a),
                     in.map.apply(in.b));
  MinTracker t;
  t.add(loewner_margin(lhs, in.map.apply(geom_ab).scaled(c)));
  return t.outcome();
}

CheckOutcome eval_cor2_2_i(const Instance& in) { return eval_cor22(in, false); }
CheckOutcome eval_cor2_2_ii(const Instance& in) { return eval_cor22(in, true); }

CheckOutcome eval_polya_szego(const Instance& in) {
  const double m = in.params.band_lo, M = in.params.band_hi;
  double c = (M + m) / (2.0 * std::sqrt(M * m));
  auto geom_ab = mean_of(MeanDescriptor::geometric(0.5), in.a, in.b);
  auto lhs = mean_of(MeanDescriptor::geometric(0.5), in.map.apply(in.a),
                     in.map.apply(in.b));
  MinTracker t;
  t.add(loewner_margin(lhs, in.map.apply(geom_ab).scaled(c)));
  return t.outcome();
}

CheckOutcome eval_remark1_3_improves(const Instance& in) {
  double ci = cor22_constant(in.params, 0.5, false);
  double ps = (in.params.M2 + in.params.m2) /
              (2.0 * std::sqrt(in.params.M2 * in.params.m2));
  MinTracker t;
  t.add(smargin(ci, ps));
  return t.outcome();
}

CheckOutcome eval_c8(const Instance& in, entropy::C8Case which) {
  const auto& p = in.params;
  auto bounds = entropy::c8_bounds(which, p.m2, p.m1, p.M1, p.M2, p.v, in.a, in.b);
  auto tsv = entropy::tsallis(in.a, in.b, p.v);
  MinTracker t;
  t.add(loewner_margin(bounds.nabla_lo, tsv));
  t.add(loewner_margin(tsv, bounds.nabla_hi));
  t.add(loewner_margin(bounds.harm_lo, tsv));
  t.add(loewner_margin(tsv, bounds.harm_hi));
  return t.outcome();
}

CheckOutcome eval_c8_i(const Instance& in) { return eval_c8(in, entropy::C8Case::I); }
CheckOutcome eval_c8_ii(const Instance& in) { return eval_c8(in, entropy::C8Case::II); }

CheckOutcome eval_c8_literal(const Instance& in) {
  const auto& p = in.params;
  auto bounds = entropy::c8_bounds_literal(entropy::C8Case::I, p.m2, p.m1, p.M1,
                                           p.M2, p.v, in.a, in.b);
  auto tsv = entropy::tsallis(in.a, in.b, p.v);
  MinTracker t;
  t.add(loewner_margin(bounds.harm_lo, tsv));
  t.add(loewner_margin(tsv, bounds.harm_hi));
  return t.outcome();
}

CheckOutcome eval_eq5(const Instance& in) {
  const double v = in.params.v;
  auto arit = mean_of(MeanDescriptor::arithmetic(v), in.a, in.b);
  auto geom = mean_of(MeanDescriptor::geometric(v), in.a, in.b);
  MinTracker t;
  t.add(loewner_margin(arit, geom));
  return t.outcome();
}

CheckOutcome eval_prop13_v_gt1(const Instance& in) {
  const double v = in.params.v;
  double lo = smean(ScalarMeanKind::Geom, v, in.params.m1, in.params.M1) /
              smean(ScalarMeanKind::Arith, v, in.params.m1, in.params.M1);
  double hi = smean(ScalarMeanKind::Geom, v, in.params.m2, in.params.M2) /
              smean(ScalarMeanKind::Arith, v, in.params.m2, in.params.M2);
  auto arit = mean_of(MeanDescriptor::arithmetic(v), in.a, in.b);
  auto geom = mean_of(MeanDescriptor::geometric(v), in.a, in.b);
  MinTracker t;
  t.add(loewner_margin(arit.scaled(lo), geom));
  t.add(loewner_margin(geom, arit.scaled(hi)));
  return t.outcome();
}

CheckOutcome eval_prop13_v_lt0(const Instance& in) {
  const double v = in.params.v;
  double lo = smean(ScalarMeanKind::Harm, v, in.params.m1, in.params.M1) /
              smean(ScalarMeanKind::Geom, v, in.params.m1, in.params.M1);
  double hi = smean(ScalarMeanKind::Harm, v, in.params.m2, in.params.M2) /
              smean(ScalarMeanKind::Geom, v, in.params.m2, in.params.M2);
  auto geom = mean_of(MeanDescriptor::geometric(v), in.a, in.b);
  auto harm = mean_of(MeanDescriptor::harmonic(v), in.a, in.b);
  MinTracker t;
  t.add(loewner_margin(geom.scaled(lo), harm));
  t.add(loewner_margin(harm, geom.scaled(hi)));
  return t.outcome();
}

CheckOutcome eval_map_theorem(const Instance& in, bool decreasing, bool use_alpha) {
  const double v = in.params.v;
  auto cb = constants::endpoint_constants(in.params.s, in.params.t, v);
  const double c = use_alpha ? cb.alpha : cb.xi * cb.psi;
  const auto& fd = rotated(decreasing ? fns::FnClass::MonotoneDecreasing
                                      : fns::FnClass::Monotone,
                           in.fn_index);
  auto f_pa = fns::eval_fn(fd, in.map.apply(in.a));
  auto f_pb = fns::eval_fn(fd, in.map.apply(in.b));
  auto catalog = catalog_of(in, v);
  MinTracker t;
  for (const auto& sigma : catalog) {
    auto f_mapped = fns::eval_fn(fd, in.map.apply(mean_of(sigma, in.a, in.b)));
    for (const auto& tau : catalog) {
      auto mixed = mean_of(tau, f_pa, f_pb);
      if (!decreasing) {
        t.add(loewner_margin(mixed, f_mapped.scaled(c)));
      } else {
        t.add(loewner_margin(f_mapped, mixed.scaled(c)));
      }
    }
  }
  return t.outcome();
}

CheckOutcome eval_thm_c_f(const Instance& in) { return eval_map_theorem(in, false, false); }
CheckOutcome eval_thm_c_g(const Instance& in) { return eval_map_theorem(in, true, false); }
CheckOutcome eval_remark_alpha_f(const Instance& in) {
  return eval_map_theorem(in, false, true);
}

CheckOutcome eval_hoa_baseline(const Instance& in) {
  const double m = in.params.band_lo, M = in.params.band_hi;
  const double c = (M + m) * (M + m) / (4.0 * M * m);
  const auto& fd = rotated(fns::FnClass::Monotone, in.fn_index);
  auto f_pa = fns::eval_fn(fd, in.map.apply(in.a));
  auto f_pb = fns::eval_fn(fd, in.map.apply(in.b));
  auto catalog = catalog_of(in, 0.5);
  MinTracker t;
  for (const auto& sigma : catalog) {
    auto f_mapped = fns::eval_fn(fd, in.map.apply(mean_of(sigma, in.a, in.b)));
    for (const auto& tau : catalog)
      t.add(loewner_margin(mean_of(tau, f_pa, f_pb), f_mapped.scaled(c)));
  }
  return t.outcome();
}

CheckOutcome eval_additive(const Instance& in, bool decreasing) {
  const double m = in.params.band_lo, M = in.params.band_hi;
  const auto& fd = rotated(decreasing ? fns::FnClass::MonotoneDecreasing
                                      : fns::FnClass::Monotone,
                           in.fn_index);
  const double c =
      (M - m) * (M - m) / (4.0 * M * m) * fd.evaluate(decreasing ? m : M);
  const HermitianMatrix slack =
      HermitianMatrix::identity(in.map.out_dim()).scaled(c);
  auto f_pa = fns::eval_fn(fd, in.map.apply(in.a));
  auto f_pb = fns::eval_fn(fd, in.map.apply(in.b));
  auto catalog = catalog_of(in, 0.5);
  MinTracker t;
  for (const auto& sigma : catalog) {
    auto f_mapped = fns::eval_fn(fd, in.map.apply(mean_of(sigma, in.a, in.b)));
    for (const auto& tau : catalog) {
      auto mixed = mean_of(tau, f_pa, f_pb);
      if (!decreasing) {
        t.add(loewner_margin(mixed - f_mapped, slack));
      } else {
        t.add(loewner_margin(f_mapped - mixed, slack));
      }
    }
  }
  return t.outcome();
}

CheckOutcome eval_additive_f(const Instance& in) { return eval_additive(in, false); }
CheckOutcome eval_additive_g(const Instance& in) { return eval_additive(in, true); }

CheckOutcome eval_sharp_ratio(const Instance& in, bool use_specht) {
  const double v = in.params.v;
  auto cb = constants::endpoint_constants(in.params.s, in.params.t, v);
  double c = use_specht
                 ? std::max(constants::classical_constant(ClassicalKind::Specht,
                                                          in.params.s),
                            constants::classical_constant(ClassicalKind::Specht,
                                                          in.params.t))
                 : cb.xi;
  const auto& fd = rotated(fns::FnClass::Monotone, in.fn_index);
  auto fa = fns::eval_fn(fd, in.a);
  auto fb = fns::eval_fn(fd, in.b);
  auto lhs = mean_of(MeanDescriptor::geometric(v), fa, fb);
  auto rhs = fns::eval_fn(fd, mean_of(MeanDescriptor::geometric(v), in.a, in.b))
                 .scaled(c);
  MinTracker t;
  t.add(loewner_margin(lhs, rhs));
  return t.outcome();
}

CheckOutcome eval_eq15_specht(const Instance& in) { return eval_sharp_ratio(in, true); }
CheckOutcome eval_cor_xi_sharp(const Instance& in) { return eval_sharp_ratio(in, false); }

CheckOutcome eval_xi_vs_specht(const Instance& in) {
  auto cb = constants::endpoint_constants(in.params.s, in.params.t, in.params.v);
  double s_bound =
      std::max(constants::classical_constant(ClassicalKind::Specht, in.params.s),
               constants::classical_constant(ClassicalKind::Specht, in.params.t));
  MinTracker t;
  t.add(smargin(cb.xi, s_bound));
  return t.outcome();
}

CheckOutcome eval_inner_product_g(const Instance& in) {
  const double v = in.params.v;
  auto cb = constants::endpoint_constants(in.params.s, in.params.t, v);
  const double c = cb.xi * cb.psi;
  const auto& gd = rotated(fns::FnClass::MonotoneDecreasing, in.fn_index);
  auto g_a = fns::eval_fn(gd, in.a);
  auto g_b = fns::eval_fn(gd, in.b);
  auto catalog = catalog_of(in, v);
  MinTracker t;
  for (const auto& sigma : catalog) {
    auto g_mix = fns::eval_fn(gd, mean_of(sigma, in.a, in.b));
    for (const auto& h : in.vectors) {
      double lhs = quad_form(g_mix, h);
      double rhs = c * std::pow(quad_form(g_a, h), 1.0 - v) *
                   std::pow(quad_form(g_b, h), v);
      t.add(smargin(lhs, rhs));
    }
  }
  return t.outcome();
}

CheckOutcome eval_lemma14(const Instance& in, bool convex) {
  const double v = in.params.v;
  const auto& fd =
      rotated(convex ? fns::FnClass::Convex : fns::FnClass::Concave, in.fn_index);
  auto nab = in.a.axpby(1.0 - v, v, in.b);
  if (fd.domain_floor != kNoDomainFloor && !is_positive_definite(nab))
    return skip("weighted arithmetic combination left the function domain");
  auto fa = fns::eval_fn(fd, in.a);
  auto fb = fns::eval_fn(fd, in.b);
  auto f_nab = fns::eval_fn(fd, nab);
  auto mix = fa.axpby(1.0 - v, v, fb);
  MinTracker t;
  if (convex) {
    t.add(loewner_margin(mix, f_nab));
  } else {
    t.add(loewner_margin(f_nab, mix));
  }
  return t.outcome();
}

CheckOutcome eval_lemma14_convex(const Instance& in) { return eval_lemma14(in, true); }
CheckOutcome eval_lemma14_concave(const Instance& in) { return eval_lemma14(in, false); }

CheckOutcome eval_final_prop(const Instance& in, bool case_two, bool decreasing) {
  const double v = in.params.v;
  double c = case_two
                 ? smean(ScalarMeanKind::Geom, v, in.params.M2, in.params.m2) /
                       smean(ScalarMeanKind::Arith, v, in.params.M2, in.params.m2)
                 : smean(ScalarMeanKind::Geom, v, in.params.m2, in.params.M2) /
                       smean(ScalarMeanKind::Arith, v, in.params.m2, in.params.M2);
  const auto& fd = rotated(decreasing ? fns::FnClass::MonotoneDecreasing
                                      : fns::FnClass::Monotone,
                           in.fn_index);
  auto geom_ab = mean_of(MeanDescriptor::geometric(v), in.a, in.b);
  auto fa = fns::eval_fn(fd, in.a);
  auto fb = fns::eval_fn(fd, in.b);
  auto f_geom = fns::eval_fn(fd, geom_ab);
  auto f_sharp = mean_of(MeanDescriptor::geometric(v), fa, fb);
  MinTracker t;
  if (!decreasing) {
    t.add(loewner_margin(f_geom, f_sharp.scaled(c)));
  } else {
    t.add(loewner_margin(f_sharp, f_geom.scaled(c)));
  }
  return t.outcome();
}

CheckOutcome eval_final_prop_i_f(const Instance& in) {
  return eval_final_prop(in, false, false);
}
CheckOutcome eval_final_prop_i_g(const Instance& in) {
  return eval_final_prop(in, false, true);
}
CheckOutcome eval_final_prop_ii_f(const Instance& in) {
  return eval_final_prop(in, true, false);
}
CheckOutcome eval_final_prop_ii_g(const Instance& in) {
  return eval_final_prop(in, true, true);
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

std::vector<CheckDef> make_registry() {
  using K = InstanceKind;
  using W = WeightDomain;
  using A = Assertion;
  return {
      {"additive_f",
       "additive reverse for operator monotone f under positive unital maps",
       K::Band, W::Half, A::Asserted, true, false, "m,M;f", eval_additive_f},
      {"additive_g",
       "additive reverse for operator monotone decreasing g under positive unital maps",
       K::Band, W::Half, A::Asserted, true, false, "m,M;g", eval_additive_g},
      {"c8_i",
       "Tsallis relative operator entropy bounds, spectrum of A below spectrum of B",
       K::OrderedI, W::Unit, A::Asserted, false, false, "m2,m1,M1,M2,v", eval_c8_i},
      {"c8_ii",
       "Tsallis relative operator entropy bounds, spectrum of B below spectrum of A",
       K::OrderedII, W::Unit, A::Asserted, false, false, "m2,m1,M1,M2,v", eval_c8_ii},
      {"c8_literal",
       "printed harmonic-family entropy bounds with arithmetic inner mean (typo probe)",
       K::OrderedI, W::Unit, A::Diagnostic, false, false, "m2,m1,M1,M2,v",
       eval_c8_literal},
      {"cor10",
       "mean-chain reverse with min/max-weight constants under a common band",
       K::Band, W::Unit, A::Asserted, false, false, "m,M,v", eval_cor10},
      {"cor2_2_i",
       "geometric mean of map images against the mapped geometric mean, A below B",
       K::OrderedI, W::Unit, A::Asserted, true, false, "m2,m1,M1,M2,v",
       eval_cor2_2_i},
      {"cor2_2_ii",
       "geometric mean of map images against the mapped geometric mean, B below A",
       K::OrderedII, W::Unit, A::Asserted, true, false, "m2,m1,M1,M2,v",
       eval_cor2_2_ii},
      {"cor_xi_sharp",
       "sharpened ratio bound: geometric mean of f-images within xi of f at the mean",
       K::Sandwich, W::Unit, A::Asserted, false, false, "s,t,v;f",
       eval_cor_xi_sharp},
      {"eq15_specht",
       "Specht-ratio bound on the geometric mean of f-images",
       K::Sandwich, W::Unit, A::Asserted, false, false, "s,t,v;f", eval_eq15_specht},
      {"eq5",
       "reversed arithmetic-geometric comparison for weights outside [0,1]",
       K::Band, W::Outside, A::Asserted, false, false, "m,M,v", eval_eq5},
      {"eq6_chain",
       "weighted harmonic <= geometric <= arithmetic operator mean chain",
       K::Band, W::Unit, A::Asserted, false, false, "m,M,v", eval_eq6_chain},
      {"final_prop_i_f",
       "ratio reverse for f at weights above 1, spectrum of A below spectrum of B",
       K::OrderedI, W::GtOne, A::Asserted, false, false, "m2,m1,M1,M2,v;f",
       eval_final_prop_i_f},
      {"final_prop_i_g",
       "ratio reverse for decreasing g at weights above 1, A below B",
       K::OrderedI, W::GtOne, A::Asserted, false, false, "m2,m1,M1,M2,v;g",
       eval_final_prop_i_g},
      {"final_prop_ii_f",
       "ratio reverse for f at negative weights, spectrum of B below spectrum of A",
       K::OrderedII, W::LtZero, A::Asserted, false, false, "m2,m1,M1,M2,v;f",
       eval_final_prop_ii_f},
      {"final_prop_ii_g",
       "ratio reverse for decreasing g at negative weights, B below A",
       K::OrderedII, W::LtZero, A::Asserted, false, false, "m2,m1,M1,M2,v;g",
       eval_final_prop_ii_g},
      {"hoa_baseline",
       "unweighted map-mean bound with the squared-band constant",
       K::Band, W::Half, A::Asserted, true, false, "m,M;f", eval_hoa_baseline},
      {"inner_product_g",
       "vector-state bound for decreasing g against weighted scalar geometric averages",
       K::Sandwich, W::Unit, A::Asserted, false, true, "s,t,v;g;h",
       eval_inner_product_g},
      {"lemma14_concave",
       "weighted-arithmetic concavity reversal outside the unit weight interval",
       K::OrderedByWeight, W::Outside, A::Asserted, false, false,
       "m2,m1,M1,M2,v;f", eval_lemma14_concave},
      {"lemma14_convex",
       "weighted-arithmetic convexity reversal outside the unit weight interval",
       K::OrderedByWeight, W::Outside, A::Asserted, false, false,
       "m2,m1,M1,M2,v;f", eval_lemma14_convex},
      {"lemma21_signs",
       "sign pattern of F_v and G_v on (0,1] split at weight one half",
       K::ParamsOnly, W::Unit, A::Asserted, false, false, "v;x", eval_lemma21_signs},
      {"needed_power",
       "mapped arithmetic mean within the band ratio of the mapped geometric mean",
       K::Band, W::Half, A::Asserted, true, false, "m,M", eval_needed_power},
      {"polya_szego",
       "geometric mean of map images with the square-root band constant",
       K::Band, W::Half, A::Asserted, true, false, "m,M", eval_polya_szego},
      {"power_p_eta",
       "p-th power bound with the better of the two power constants",
       K::Band, W::PGrid, A::Asserted, true, false, "m,M,p", eval_power_p_eta},
      {"power_p_eta_maps",
       "p-th power bound against the geometric mean of map images",
       K::Band, W::PGrid, A::Asserted, true, false, "m,M,p", eval_power_p_eta_maps},
      {"power_p_fur",
       "p-th power bound with the band-power ratio constant",
       K::Band, W::PGrid, A::Asserted, true, false, "m,M,p", eval_power_p_fur},
      {"power_p_lin",
       "p-th power bound with the squared-band constant",
       K::Band, W::PGrid, A::Asserted, true, false, "m,M,p", eval_power_p_lin},
      {"prop13_v_gt1",
       "two-sided arithmetic-geometric sandwich for weights above 1",
       K::OrderedI, W::GtOne, A::Asserted, false, false, "m2,m1,M1,M2,v",
       eval_prop13_v_gt1},
      {"prop13_v_lt0",
       "two-sided geometric-harmonic sandwich for negative weights",
       K::OrderedI, W::LtZero, A::Asserted, false, false, "m2,m1,M1,M2,v",
       eval_prop13_v_lt0},
      {"prop8_harm",
       "harmonic-family sandwich for disjoint spectra, endpoint-consistent constants",
       K::OrderedI, W::Unit, A::Asserted, false, false, "m2,m1,M1,M2,v",
       eval_prop8_harm},
      {"prop8_harm_literal",
       "harmonic-family sandwich with the printed mixed-endpoint upper constant (typo probe)",
       K::OrderedI, W::Unit, A::Diagnostic, false, false, "m2,m1,M1,M2,v",
       eval_prop8_harm_literal},
      {"prop8_nabla",
       "arithmetic-family sandwich for disjoint spectra",
       K::OrderedI, W::Unit, A::Asserted, false, false, "m2,m1,M1,M2,v",
       eval_prop8_nabla},
      {"remark1_3_improves",
       "map-image constant at weight one half improves the square-root band constant",
       K::ParamsOnly, W::Half, A::Asserted, false, false, "m2,m1,M1,M2",
       eval_remark1_3_improves},
      {"remark_alpha_f",
       "map-mean bound for f with the single-endpoint product constant alpha",
       K::Sandwich, W::Unit, A::Asserted, true, false, "s,t,v;f",
       eval_remark_alpha_f},
      {"remark_kantorovich_compare",
       "endpoint mean-ratio constants against Kantorovich powers",
       K::ParamsOnly, W::Unit, A::Asserted, false, false, "m2,m1,M1,M2,v",
       eval_remark_kantorovich_compare},
      {"thm19",
       "two-sided sharp reverse of the mean chain under the sandwich condition",
       K::Sandwich, W::Unit, A::Asserted, false, false, "s,t,v", eval_thm19},
      {"thm_c_f",
       "map-mean bound for operator monotone f with the product constant xi psi",
       K::Sandwich, W::Unit, A::Asserted, true, false, "s,t,v;f", eval_thm_c_f},
      {"thm_c_g",
       "map-mean bound for operator monotone decreasing g with the product constant",
       K::Sandwich, W::Unit, A::Asserted, true, false, "s,t,v;g", eval_thm_c_g},
      {"xi_vs_specht",
       "monitored claim that xi never exceeds the Specht endpoint maximum",
       K::ParamsOnly, W::Unit, A::Monitored, false, false, "s,t,v",
       eval_xi_vs_specht},
  };
}

}  // namespace

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> r = make_registry();
  return r;
}

const CheckDef& check_by_id(const std::string& id) {
  for (const auto& def : registry())
    if (def.id == id) return def;
  throw ConfigError("unknown check id '" + id + "'");
}

bool has_check(const std::string& id) {
  for (const auto& def : registry())
    if (def.id == id) return true;
  return false;
}

std::string instance_function_label(const std::string& check_id, int fn_index) {
  using C = fns::FnClass;
  std::optional<C> cls;
  if (check_id == "thm_c_f" || check_id == "remark_alpha_f" ||
      check_id == "hoa_baseline" || check_id == "additive_f" ||
      check_id == "eq15_specht" || check_id == "cor_xi_sharp" ||
      check_id == "final_prop_i_f" || check_id == "final_prop_ii_f") {
    cls = C::Monotone;
  } else if (check_id == "thm_c_g" || check_id == "additive_g" ||
             check_id == "inner_product_g" || check_id == "final_prop_i_g" ||
             check_id == "final_prop_ii_g") {
    cls = C::MonotoneDecreasing;
  } else if (check_id == "lemma14_convex") {
    cls = C::Convex;
  } else if (check_id == "lemma14_concave") {
    cls = C::Concave;
  }
  if (!cls) return {};
  return rotated(*cls, fn_index).label;
}

const std::vector<double>& v_grid_gt1() {
  static const std::vector<double> g = {1.5, 2.0, 3.0};
  return g;
}

const std::vector<double>& v_grid_lt0() {
  static const std::vector<double> g = {-0.5, -1.0};
  return g;
}

namespace {

InstanceKind resolved_kind(const CheckDef& def, double v) {
  if (def.kind != InstanceKind::OrderedByWeight) return def.kind;
  return v > 1.0 ? InstanceKind::OrderedI : InstanceKind::OrderedII;
}

}  // namespace

Instance make_instance(const CheckDef& def, int dim, const CheckParams& params,
                       int trial, gen::Seed seed) {
  Instance in;
  in.dim = dim;
  in.params = params;
  in.seed = seed;
  in.fn_index = trial;
  gen::Rng rng(seed);
  switch (resolved_kind(def, params.v)) {
    case InstanceKind::Band: {
      SpectralInterval band(params.band_lo, params.band_hi);
      in.a = gen::random_pd(dim, band, rng);
      in.b = gen::random_pd(dim, band, rng);
      break;
    }
    case InstanceKind::Sandwich: {
      auto pair = gen::sandwich_pair(dim, params.s, params.t, rng);
      in.a = pair.first;
      in.b = pair.second;
      break;
    }
    case InstanceKind::OrderedI: {
      auto pair =
          gen::ordered_pair(dim, params.m2, params.m1, params.M1, params.M2, rng);
      in.a = pair.first;
      in.b = pair.second;
      break;
    }
    case InstanceKind::OrderedII: {
      auto pair =
          gen::ordered_pair(dim, params.m2, params.m1, params.M1, params.M2, rng);
      in.a = pair.second;
      in.b = pair.first;
      break;
    }
    case InstanceKind::ParamsOnly: {
      in.params.aux_x = rng.uniform(1e-3, 1.0);
      in.a = HermitianMatrix::identity(dim);
      in.b = HermitianMatrix::identity(dim);
      break;
    }
    case InstanceKind::OrderedByWeight:
      throw Error("make_instance: unresolved instance kind");
  }
  if (def.needs_map) {
    in.has_map = true;
    gen::Seed map_seed{rng.next_u64(), 0};
    in.map = maps::builtin_map(trial % maps::builtin_map_count(), dim, map_seed);
  } else {
    in.map = maps::MapDescriptor::identity(dim);
  }
  if (def.needs_vectors) {
    for (int i = 0; i < 8; ++i)
      in.vectors.push_back(gen::random_unit_vector(dim, rng));
  }
  return in;
}

namespace {

// Spectral precondition checks; a violated precondition is a skip, never a
// failure (generators target the preconditions but rounding can graze them).
std::optional<std::string> violated_precondition(const CheckDef& def,
                                                 const Instance& in) {
  const double tol = 1e-10;
  const auto& p = in.params;
  auto band_ok = [&](const HermitianMatrix& x, double lo, double hi,
                     const char* which) -> std::optional<std::string> {
    EighResult eg = eigh(x);
    double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
    if (eg.eigenvalues.front() < lo - tol * scale ||
        eg.eigenvalues.back() > hi + tol * scale)
      return std::string(which) + " spectrum violates its declared band";
    return std::nullopt;
  };
  switch (resolved_kind(def, p.v)) {
    case InstanceKind::Band: {
      if (auto r = band_ok(in.a, p.band_lo, p.band_hi, "A")) return r;
      if (auto r = band_ok(in.b, p.band_lo, p.band_hi, "B")) return r;
      break;
    }
    case InstanceKind::Sandwich: {
      if (!(p.s > 0.0 && p.s <= p.t)) return "sandwich bounds require 0 < s <= t";
      if (loewner_margin(in.a.scaled(p.s), in.b) < -tol) return "sA <= B violated";
      if (loewner_margin(in.b, in.a.scaled(p.t)) < -tol) return "B <= tA violated";
      break;
    }
    case InstanceKind::OrderedI: {
      if (!(0.0 < p.m2 && p.m2 <= p.m1 && p.m1 < p.M1 && p.M1 <= p.M2))
        return "interval ordering 0 < m2 <= m1 < M1 <= M2 violated";
      if (auto r = band_ok(in.a, p.m2, p.m1, "A")) return r;
      if (auto r = band_ok(in.b, p.M1, p.M2, "B")) return r;
      break;
    }
    case InstanceKind::OrderedII: {
      if (!(0.0 < p.m2 && p.m2 <= p.m1 && p.m1 < p.M1 && p.M1 <= p.M2))
        return "interval ordering 0 < m2 <= m1 < M1 <= M2 violated";
      if (auto r = band_ok(in.b, p.m2, p.m1, "B")) return r;
      if (auto r = band_ok(in.a, p.M1, p.M2, "A")) return r;
      break;
    }
    case InstanceKind::ParamsOnly:
      break;
    case InstanceKind::OrderedByWeight:
      return "unresolved instance kind";
  }
  switch (def.weights) {
    case WeightDomain::Unit:
      if (p.v < 0.0 || p.v > 1.0) return "weight must lie in [0,1]";
      break;
    case WeightDomain::Half:
      break;
    case WeightDomain::GtOne:
      if (!(p.v > 1.0)) return "weight must exceed 1";
      break;
    case WeightDomain::LtZero:
      if (!(p.v < 0.0)) return "weight must be negative";
      break;
    case WeightDomain::Outside:
      if (p.v >= 0.0 && p.v <= 1.0) return "weight must lie outside [0,1]";
      break;
    case WeightDomain::PGrid:
      if (!(p.p >= 2.0)) return "power must be at least 2";
      break;
  }
  return std::nullopt;
}

}  // namespace

CheckResult run_check(const std::string& id, const Instance& instance, double tol) {
  const CheckDef& def = check_by_id(id);
  CheckResult result;
  result.check_id = id;
  result.params = instance.params;
  result.dim = instance.dim;
  result.seed = instance.seed;
  if (auto why = violated_precondition(def, instance)) {
    result.skipped = true;
    result.skip_reason = *why;
    return result;
  }
  CheckOutcome outcome;
  try {
    outcome = def.evaluate(instance);
  } catch (const DomainError& e) {
    outcome = {0.0, -1, true, e.what()};
  } catch (const IntervalError& e) {
    outcome = {0.0, -1, true, e.what()};
  }
  if (outcome.skipped) {
    result.skipped = true;
    result.skip_reason = outcome.skip_reason;
    return result;
  }
  result.margin = outcome.margin;
  result.worst_part = outcome.worst_part;
  result.pass = outcome.margin >= -tol;
  if (!result.pass) result.witness = instance;
  return result;
}

// ---------------------------------------------------------------------------
// sharpness probes
// ---------------------------------------------------------------------------

bool supports_sharpness(const std::string& check_id) {
  return check_id == "thm19" || check_id == "cor10" ||
         check_id == "prop8_nabla" || check_id == "prop8_harm" ||
         check_id == "cor_xi_sharp";
}

namespace {

double scalar_arith(double v, double x) { return (1.0 - v) + v * x; }
double scalar_geom(double v, double x) { return std::pow(x, v); }
double scalar_harm(double v, double x) { return 1.0 / ((1.0 - v) + v / x); }

}  // namespace

SharpnessProbe sharpness_probe(const std::string& check_id, double s, double t,
                               double v) {
  if (!supports_sharpness(check_id))
    throw ConfigError("sharpness probe does not support '" + check_id + "'");
  if (!(s > 0.0 && s <= t))
    throw IntervalError("sharpness_probe requires 0 < s <= t");
  SharpnessProbe probe{0.0, {}};
  auto record = [&probe](const std::string& name, double x, double defect) {
    probe.attained_at.emplace_back(name, x);
    probe.gap = std::max(probe.gap, std::abs(defect));
  };

  if (check_id == "thm19" || check_id == "cor_xi_sharp") {
    auto cb = constants::endpoint_constants(s, t, v);
    double x_xi = cb.xi_at == constants::Endpoint::S ? s : t;
    // at the attaining endpoint (1/xi)(1 nabla_v x) equals 1 #_v x
    record("xi", x_xi,
           smargin(scalar_arith(v, x_xi) / cb.xi, scalar_geom(v, x_xi)));
    if (check_id == "thm19") {
      double x_psi = cb.psi_at == constants::Endpoint::S ? s : t;
      record("psi", x_psi,
             smargin(scalar_geom(v, x_psi), cb.psi * scalar_harm(v, x_psi)));
    }
    return probe;
  }

  if (check_id == "cor10") {
    const double m = s, M = t;
    constants::Weight w(v);
    double c_lo = smean(ScalarMeanKind::Geom, w.lambda, m, M) /
                  smean(ScalarMeanKind::Arith, w.lambda, m, M);
    double c_hi = smean(ScalarMeanKind::Geom, w.mu, m, M) /
                  smean(ScalarMeanKind::Harm, w.mu, m, M);
    // the lambda constant is attained at (A,B) = (m,M) for v <= 1/2 and at
    // the swapped pair otherwise; the mu constant at the opposite pair
    double a_lo = v <= 0.5 ? m : M, b_lo = v <= 0.5 ? M : m;
    double a_hi = v <= 0.5 ? M : m, b_hi = v <= 0.5 ? m : M;
    record("lambda", b_lo,
           smargin(c_lo * smean(ScalarMeanKind::Arith, v, a_lo, b_lo),
                   smean(ScalarMeanKind::Geom, v, a_lo, b_lo)));
    record("mu", b_hi,
           smargin(smean(ScalarMeanKind::Geom, v, a_hi, b_hi),
                   c_hi * smean(ScalarMeanKind::Harm, v, a_hi, b_hi)));
    return probe;
  }

  // prop8 probes read (s, t) as the spectral ratio pair (M1/m1, M2/m2)
  if (!(s > 1.0))
    throw IntervalError("prop8 sharpness probes require 1 < s <= t");
  if (check_id == "prop8_nabla") {
    double lo = scalar_geom(v, t) / scalar_arith(v, t);
    double hi = scalar_geom(v, s) / scalar_arith(v, s);
    record("lower", t, smargin(lo * scalar_arith(v, t), scalar_geom(v, t)));
    record("upper", s, smargin(scalar_geom(v, s), hi * scalar_arith(v, s)));
    return probe;
  }
  // prop8_harm
  double lo = scalar_geom(v, s) / scalar_harm(v, s);
  double hi = scalar_geom(v, t) / scalar_harm(v, t);
  record("lower", s, smargin(lo * scalar_harm(v, s), scalar_geom(v, s)));
  record("upper", t, smargin(scalar_geom(v, t), hi * scalar_harm(v, t)));
  return probe;
}

}  // namespace opmeans::checks
