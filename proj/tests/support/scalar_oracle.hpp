#pragma once

// Independent scalar evaluation of every check margin for one-dimensional
// instances. Written in plain double arithmetic on the scalar values of A and
// B, deliberately not calling the library's constants/means/functions paths,
// so that agreement with run_check is a genuine dual-route comparison.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "opmeans/checks.hpp"

namespace oracle {

inline double smargin(double l, double r) {
  return (r - l) / std::max(1.0, std::abs(l) + std::abs(r));
}

inline double arith(double v, double a, double b) { return (1.0 - v) * a + v * b; }
inline double geom(double v, double a, double b) {
  return std::pow(a, 1.0 - v) * std::pow(b, v);
}
inline double harm(double v, double a, double b) {
  return 1.0 / ((1.0 - v) / a + v / b);
}

inline double fv(double v, double x) { return ((1.0 - v) + v * x) / std::pow(x, v); }
inline double gv(double v, double x) { return std::pow(x, v) * ((1.0 - v) + v / x); }
inline double hv(double v, double x) {
  return ((1.0 - v) + v * x) * ((1.0 - v) + v / x);
}

inline double kantorovich(double t) { return (t + 1.0) * (t + 1.0) / (4.0 * t); }
inline double specht(double t) {
  double h = t - 1.0;
  if (std::abs(h) < 1e-6) return 1.0 + h * h / 8.0 - h * h * h / 8.0;
  double L = std::log1p(h) / h;
  return std::exp(L - 1.0) / L;
}

// registry scalar functions by label
inline double fval(const std::string& label, double x) {
  if (label == "x^0.25") return std::pow(x, 0.25);
  if (label == "x^0.5") return std::sqrt(x);
  if (label == "x^0.75") return std::pow(x, 0.75);
  if (label == "x") return x;
  if (label == "x/(1+x)") return x / (1.0 + x);
  if (label == "log(1+x)") return std::log1p(x);
  if (label == "x^-0.25") return std::pow(x, -0.25);
  if (label == "x^-0.5") return 1.0 / std::sqrt(x);
  if (label == "x^-1") return 1.0 / x;
  if (label == "1/(1+x)") return 1.0 / (1.0 + x);
  if (label == "x^2") return x * x;
  throw std::runtime_error("oracle: unknown function label " + label);
}

inline const std::vector<std::string>& monotone_labels() {
  static const std::vector<std::string> l = {"x^0.25", "x^0.5",    "x^0.75",
                                             "x",      "x/(1+x)", "log(1+x)"};
  return l;
}
inline const std::vector<std::string>& decreasing_labels() {
  static const std::vector<std::string> l = {"x^-0.25", "x^-0.5", "x^-1",
                                             "1/(1+x)"};
  return l;
}
inline const std::vector<std::string>& convex_labels() {
  static const std::vector<std::string> l = {"x^-1", "x^2"};
  return l;
}
inline const std::vector<std::string>& concave_labels() {
  return monotone_labels();
}

inline std::string rotated_label(const std::vector<std::string>& labels, int idx) {
  return labels[static_cast<size_t>(idx) % labels.size()];
}

// catalog mean by index: harmonic, geometric, arithmetic, then extras
inline double mean_by_index(int idx, const std::vector<std::string>& extras,
                            double v, double a, double b) {
  switch (idx) {
    case 0: return harm(v, a, b);
    case 1: return geom(v, a, b);
    case 2: return arith(v, a, b);
    default: {
      const std::string& label = extras[static_cast<size_t>(idx - 3)];
      double x = b / a;
      if (label == "power_half") {
        double r = (1.0 - v) + v * std::sqrt(x);
        return a * r * r;
      }
      if (label == "power_neg_half") {
        double r = (1.0 - v) + v / std::sqrt(x);
        return a / (r * r);
      }
      throw std::runtime_error("oracle: unknown mean label " + label);
    }
  }
}

// Scalar margin of a check over a dim-1 instance. Positive linear unital
// maps on scalars are the identity, so the map is ignored.
inline double margin(const std::string& id, const opmeans::checks::Instance& in) {
  const auto& p = in.params;
  const double a = in.a(0, 0).real();
  const double b = in.b(0, 0).real();
  const double v = p.v;
  const int ncat = 3 + static_cast<int>(p.extra_means.size());

  if (id == "eq6_chain")
    return std::min(smargin(harm(v, a, b), geom(v, a, b)),
                    smargin(geom(v, a, b), arith(v, a, b)));
  if (id == "thm19") {
    double xi = std::max(fv(v, p.s), fv(v, p.t));
    double psi = std::max(gv(v, p.s), gv(v, p.t));
    return std::min(smargin(arith(v, a, b) / xi, geom(v, a, b)),
                    smargin(geom(v, a, b), psi * harm(v, a, b)));
  }
  if (id == "lemma21_signs") {
    double x = p.aux_x;
    double F = fv(v, x) - fv(v, 1.0 / x);
    double G = gv(v, x) - gv(v, 1.0 / x);
    if (v <= 0.5) return std::min(smargin(F, 0.0), smargin(0.0, G));
    return std::min(smargin(0.0, F), smargin(G, 0.0));
  }
  if (id == "cor10") {
    double lam = std::min(v, 1.0 - v), mu = std::max(v, 1.0 - v);
    double m = p.band_lo, M = p.band_hi;
    double c_lo = geom(lam, m, M) / arith(lam, m, M);
    double c_hi = geom(mu, m, M) / harm(mu, m, M);
    return std::min(smargin(c_lo * arith(v, a, b), geom(v, a, b)),
                    smargin(geom(v, a, b), c_hi * harm(v, a, b)));
  }
  if (id == "remark_kantorovich_compare") {
    double r = std::min(v, 1.0 - v), R = std::max(v, 1.0 - v);
    double lhs1 = geom(v, p.m1, p.M1) / arith(v, p.m1, p.M1);
    double lhs2 = arith(v, p.m2, p.M2) / geom(v, p.m2, p.M2);
    return std::min(smargin(lhs1, std::pow(kantorovich(p.M1 / p.m1), -r)),
                    smargin(lhs2, std::pow(kantorovich(p.M2 / p.m2), R)));
  }
  if (id == "needed_power") {
    double c = arith(0.5, p.band_lo, p.band_hi) / geom(0.5, p.band_lo, p.band_hi);
    return smargin(arith(0.5, a, b), c * geom(0.5, a, b));
  }
  if (id == "power_p_lin" || id == "power_p_fur" || id == "power_p_eta" ||
      id == "power_p_eta_maps") {
    double m = p.band_lo, M = p.band_hi, pw = p.p;
    double c_lin =
        std::pow((m + M) * (m + M) / (std::pow(4.0, 2.0 / pw) * m * M), pw);
    double mp = std::pow(m, pw - 1.0), Mp = std::pow(M, pw - 1.0);
    double c_fur = (Mp + mp) * (Mp + mp) / (4.0 * mp * Mp) *
                   std::pow((M + m) / (2.0 * std::sqrt(m * M)), pw);
    double c = id == "power_p_lin"   ? c_lin
               : id == "power_p_fur" ? c_fur
                                     : std::min(c_lin, c_fur);
    return smargin(std::pow(arith(0.5, a, b), pw),
                   c * std::pow(geom(0.5, a, b), pw));
  }
  if (id == "prop8_nabla") {
    double lo = geom(v, p.m2, p.M2) / arith(v, p.m2, p.M2);
    double hi = geom(v, p.m1, p.M1) / arith(v, p.m1, p.M1);
    return std::min(smargin(lo * arith(v, a, b), geom(v, a, b)),
                    smargin(geom(v, a, b), hi * arith(v, a, b)));
  }
  if (id == "prop8_harm") {
    double lo = geom(v, p.m1, p.M1) / harm(v, p.m1, p.M1);
    double hi = geom(v, p.m2, p.M2) / harm(v, p.m2, p.M2);
    return std::min(smargin(lo * harm(v, a, b), geom(v, a, b)),
                    smargin(geom(v, a, b), hi * harm(v, a, b)));
  }
  if (id == "prop8_harm_literal") {
    double lo = geom(v, p.m1, p.M1) / harm(v, p.m1, p.M1);
    double hi = geom(v, p.m2, p.M2) / harm(v, p.m1, p.M2);
    return std::min(smargin(lo * harm(v, a, b), geom(v, a, b)),
                    smargin(geom(v, a, b), hi * harm(v, a, b)));
  }
  if (id == "cor2_2_i" || id == "cor2_2_ii") {
    double c;
    if (id == "cor2_2_i") {
      c = geom(v, p.m1, p.M1) / geom(v, p.m2, p.M2) * arith(v, p.m2, p.M2) /
          arith(v, p.m1, p.M1);
    } else {
      c = geom(v, p.M1, p.m1) / geom(v, p.M2, p.m2) * arith(v, p.M2, p.m2) /
          arith(v, p.M1, p.m1);
    }
    return smargin(geom(v, a, b), c * geom(v, a, b));
  }
  if (id == "polya_szego") {
    double c = (p.band_hi + p.band_lo) / (2.0 * std::sqrt(p.band_hi * p.band_lo));
    return smargin(geom(0.5, a, b), c * geom(0.5, a, b));
  }
  if (id == "remark1_3_improves") {
    double ci = geom(0.5, p.m1, p.M1) / geom(0.5, p.m2, p.M2) *
                arith(0.5, p.m2, p.M2) / arith(0.5, p.m1, p.M1);
    double ps = (p.M2 + p.m2) / (2.0 * std::sqrt(p.M2 * p.m2));
    return smargin(ci, ps);
  }
  if (id == "c8_i" || id == "c8_ii" || id == "c8_literal") {
    bool case_two = id == "c8_ii";
    auto sm = [&](char kind, double small, double big) {
      double first = case_two ? big : small;
      double second = case_two ? small : big;
      if (kind == 'g') return geom(v, first, second);
      if (kind == 'a') return arith(v, first, second);
      return harm(v, first, second);
    };
    double sh1 = sm('g', p.m1, p.M1), sh2 = sm('g', p.m2, p.M2);
    double na1 = sm('a', p.m1, p.M1), na2 = sm('a', p.m2, p.M2);
    double ha1 = sm('h', p.m1, p.M1), ha2 = sm('h', p.m2, p.M2);
    double T = (geom(v, a, b) - a) / v;
    double nab = arith(v, a, b);
    double har = harm(v, a, b);
    if (id == "c8_literal") {
      double lo = (sh1 * nab - ha1 * a) / (v * ha1);
      double hi = (sh2 * nab - ha2 * a) / (v * ha2);
      return std::min(smargin(lo, T), smargin(T, hi));
    }
    double n_lo = (sh2 * nab - na2 * a) / (v * na2);
    double n_hi = (sh1 * nab - na1 * a) / (v * na1);
    double h_lo = (sh1 * har - ha1 * a) / (v * ha1);
    double h_hi = (sh2 * har - ha2 * a) / (v * ha2);
    return std::min(std::min(smargin(n_lo, T), smargin(T, n_hi)),
                    std::min(smargin(h_lo, T), smargin(T, h_hi)));
  }
  if (id == "eq5") return smargin(arith(v, a, b), geom(v, a, b));
  if (id == "prop13_v_gt1") {
    double lo = geom(v, p.m1, p.M1) / arith(v, p.m1, p.M1);
    double hi = geom(v, p.m2, p.M2) / arith(v, p.m2, p.M2);
    return std::min(smargin(lo * arith(v, a, b), geom(v, a, b)),
                    smargin(geom(v, a, b), hi * arith(v, a, b)));
  }
  if (id == "prop13_v_lt0") {
    double lo = harm(v, p.m1, p.M1) / geom(v, p.m1, p.M1);
    double hi = harm(v, p.m2, p.M2) / geom(v, p.m2, p.M2);
    return std::min(smargin(lo * geom(v, a, b), harm(v, a, b)),
                    smargin(harm(v, a, b), hi * geom(v, a, b)));
  }
  if (id == "thm_c_f" || id == "thm_c_g" || id == "remark_alpha_f") {
    double xi = std::max(fv(v, p.s), fv(v, p.t));
    double psi = std::max(gv(v, p.s), gv(v, p.t));
    double alpha = std::max(hv(v, p.s), hv(v, p.t));
    double c = id == "remark_alpha_f" ? alpha : xi * psi;
    bool dec = id == "thm_c_g";
    std::string label = rotated_label(dec ? decreasing_labels() : monotone_labels(),
                                      in.fn_index);
    double fa = fval(label, a), fb = fval(label, b);
    double best = 1e300;
    for (int si = 0; si < ncat; ++si) {
      double fmix = fval(label, mean_by_index(si, p.extra_means, v, a, b));
      for (int ti = 0; ti < ncat; ++ti) {
        double mixed = mean_by_index(ti, p.extra_means, v, fa, fb);
        best = std::min(best, dec ? smargin(fmix, c * mixed)
                                  : smargin(mixed, c * fmix));
      }
    }
    return best;
  }
  if (id == "hoa_baseline") {
    double m = p.band_lo, M = p.band_hi;
    double c = (M + m) * (M + m) / (4.0 * M * m);
    std::string label = rotated_label(monotone_labels(), in.fn_index);
    double fa = fval(label, a), fb = fval(label, b);
    double best = 1e300;
    for (int si = 0; si < ncat; ++si) {
      double fmix = fval(label, mean_by_index(si, p.extra_means, 0.5, a, b));
      for (int ti = 0; ti < ncat; ++ti)
        best = std::min(best, smargin(mean_by_index(ti, p.extra_means, 0.5, fa, fb),
                                      c * fmix));
    }
    return best;
  }
  if (id == "additive_f" || id == "additive_g") {
    double m = p.band_lo, M = p.band_hi;
    bool dec = id == "additive_g";
    std::string label =
        rotated_label(dec ? decreasing_labels() : monotone_labels(), in.fn_index);
    double c = (M - m) * (M - m) / (4.0 * M * m) * fval(label, dec ? m : M);
    double fa = fval(label, a), fb = fval(label, b);
    double best = 1e300;
    for (int si = 0; si < ncat; ++si) {
      double fmix = fval(label, mean_by_index(si, p.extra_means, 0.5, a, b));
      for (int ti = 0; ti < ncat; ++ti) {
        double mixed = mean_by_index(ti, p.extra_means, 0.5, fa, fb);
        best = std::min(best, dec ? smargin(fmix - mixed, c)
                                  : smargin(mixed - fmix, c));
      }
    }
    return best;
  }
  if (id == "eq15_specht" || id == "cor_xi_sharp") {
    double c = id == "eq15_specht"
                   ? std::max(specht(p.s), specht(p.t))
                   : std::max(fv(v, p.s), fv(v, p.t));
    std::string label = rotated_label(monotone_labels(), in.fn_index);
    double fa = fval(label, a), fb = fval(label, b);
    return smargin(geom(v, fa, fb), c * fval(label, geom(v, a, b)));
  }
  if (id == "xi_vs_specht") {
    double xi = std::max(fv(v, p.s), fv(v, p.t));
    return smargin(xi, std::max(specht(p.s), specht(p.t)));
  }
  if (id == "inner_product_g") {
    double xi = std::max(fv(v, p.s), fv(v, p.t));
    double psi = std::max(gv(v, p.s), gv(v, p.t));
    std::string label = rotated_label(decreasing_labels(), in.fn_index);
    double ga = fval(label, a), gb = fval(label, b);
    double best = 1e300;
    for (int si = 0; si < ncat; ++si) {
      double gmix = fval(label, mean_by_index(si, p.extra_means, v, a, b));
      best = std::min(best, smargin(gmix, xi * psi * std::pow(ga, 1.0 - v) *
                                              std::pow(gb, v)));
    }
    return best;
  }
  if (id == "lemma14_convex" || id == "lemma14_concave") {
    bool convex = id == "lemma14_convex";
    std::string label =
        rotated_label(convex ? convex_labels() : concave_labels(), in.fn_index);
    double nab = arith(v, a, b);
    double mix = arith(v, fval(label, a), fval(label, b));
    double fnab = fval(label, nab);
    return convex ? smargin(mix, fnab) : smargin(fnab, mix);
  }
  if (id == "final_prop_i_f" || id == "final_prop_i_g" ||
      id == "final_prop_ii_f" || id == "final_prop_ii_g") {
    bool case_two = id == "final_prop_ii_f" || id == "final_prop_ii_g";
    bool dec = id == "final_prop_i_g" || id == "final_prop_ii_g";
    double c = case_two ? geom(v, p.M2, p.m2) / arith(v, p.M2, p.m2)
                        : geom(v, p.m2, p.M2) / arith(v, p.m2, p.M2);
    std::string label =
        rotated_label(dec ? decreasing_labels() : monotone_labels(), in.fn_index);
    double fa = fval(label, a), fb = fval(label, b);
    double fgeom = fval(label, geom(v, a, b));
    double fsharp = geom(v, fa, fb);
    return dec ? smargin(fsharp, c * fgeom) : smargin(fgeom, c * fsharp);
  }
  throw std::runtime_error("oracle: no scalar route for check " + id);
}

}  // namespace oracle
