#include "opmeans/entropy.hpp"

#include <cmath>
#include <sstream>

#include "opmeans/constants.hpp"
#include "opmeans/means.hpp"

namespace opmeans::entropy {

using constants::ScalarMeanKind;

TsallisParams::TsallisParams(double v_) : v(v_) {
  if (!(v > 0.0 && v <= 1.0))
    throw IntervalError("Tsallis weight must lie in (0, 1]");
}

HermitianMatrix tsallis(const HermitianMatrix& a, const HermitianMatrix& b, double v) {
  TsallisParams params(v);
  HermitianMatrix sharp = means::weighted_mean(means::MeanDescriptor::geometric(v), a, b);
  HermitianMatrix via_mean = (sharp - a).scaled(1.0 / v);

  // second route: A^{1/2} ln_v(A^{-1/2} B A^{-1/2}) A^{1/2}
  EighResult ea = eigh(a);
  const int n = a.dim();
  std::vector<double> root(n), inv_root(n);
  for (int i = 0; i < n; ++i) {
    root[i] = std::sqrt(ea.eigenvalues[i]);
    inv_root[i] = 1.0 / root[i];
  }
  HermitianMatrix ih = reconstruct(ea.eigenvectors, inv_root);
  HermitianMatrix h = reconstruct(ea.eigenvectors, root);
  ComplexMatrix half(n, n), inv_half(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      half(i, j) = h(i, j);
      inv_half(i, j) = ih(i, j);
    }
  HermitianMatrix t = congruence(b, inv_half);
  HermitianMatrix lnv_t =
      apply_fn(t, [v](double x) { return (std::pow(x, v) - 1.0) / v; }, 0.0);
  HermitianMatrix via_log = congruence(lnv_t, half);

  double defect = spectral_norm(via_mean - via_log);
  double scale = std::max(1.0, spectral_norm(via_mean));
  if (defect > 1e-10 * scale) {
    std::ostringstream os;
    os << "tsallis: the two evaluation routes disagree by " << defect;
    throw Error(os.str());
  }
  return via_mean;
}

namespace {

void check_band(const HermitianMatrix& x, double lo, double hi, const char* which) {
  EighResult eg = eigh(x);
  double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
  if (eg.eigenvalues.front() < lo - 1e-10 * scale ||
      eg.eigenvalues.back() > hi + 1e-10 * scale) {
    std::ostringstream os;
    os << "c8_bounds: spectrum of " << which << " in [" << eg.eigenvalues.front()
       << ", " << eg.eigenvalues.back() << "] leaves the declared band [" << lo
       << ", " << hi << "]";
    throw DomainError(os.str());
  }
}

struct ScalarDuo {
  double lo_num, lo_den;  // lower bound uses (lo_num * inner - lo_den * A) / (v * lo_den)
  double hi_num, hi_den;
};

// One bound family: (num * inner - den * A) / (v * den) for lower and upper.
std::pair<HermitianMatrix, HermitianMatrix> family(const HermitianMatrix& a,
                                                   const HermitianMatrix& inner,
                                                   double v, const ScalarDuo& duo) {
  HermitianMatrix lo = inner.axpby(duo.lo_num, -duo.lo_den, a).scaled(1.0 / (v * duo.lo_den));
  HermitianMatrix hi = inner.axpby(duo.hi_num, -duo.hi_den, a).scaled(1.0 / (v * duo.hi_den));
  return {lo, hi};
}

C8Bounds bounds_impl(C8Case which, double m2, double m1, double M1, double M2,
                     double v, const HermitianMatrix& a, const HermitianMatrix& b,
                     bool literal_inner_nabla) {
  TsallisParams params(v);
  if (!(0.0 < m2 && m2 <= m1 && m1 < M1 && M1 <= M2))
    throw IntervalError("c8_bounds requires 0 < m2 <= m1 < M1 <= M2");
  if (a.dim() != b.dim()) throw DimensionError("c8_bounds: dimensions differ");
  if (which == C8Case::I) {
    check_band(a, m2, m1, "A");
    check_band(b, M1, M2, "B");
  } else {
    check_band(b, m2, m1, "B");
    check_band(a, M1, M2, "A");
  }

  // scalar means with the arguments in case order: case I pairs (m_i, M_i),
  // case II pairs (M_i, m_i)
  auto sm = [&](ScalarMeanKind kind, double small, double big) {
    return which == C8Case::I ? constants::scalar_mean(kind, v, small, big)
                              : constants::scalar_mean(kind, v, big, small);
  };
  double sh1 = sm(ScalarMeanKind::Geom, m1, M1);
  double sh2 = sm(ScalarMeanKind::Geom, m2, M2);
  double na1 = sm(ScalarMeanKind::Arith, m1, M1);
  double na2 = sm(ScalarMeanKind::Arith, m2, M2);
  double ha1 = sm(ScalarMeanKind::Harm, m1, M1);
  double ha2 = sm(ScalarMeanKind::Harm, m2, M2);

  HermitianMatrix nabla =
      means::weighted_mean(means::MeanDescriptor::arithmetic(v), a, b);
  HermitianMatrix harm_inner =
      literal_inner_nabla
          ? nabla
          : means::weighted_mean(means::MeanDescriptor::harmonic(v), a, b);

  C8Bounds out{HermitianMatrix::zero(a.dim()), HermitianMatrix::zero(a.dim()),
               HermitianMatrix::zero(a.dim()), HermitianMatrix::zero(a.dim())};
  auto [nlo, nhi] = family(a, nabla, v, {sh2, na2, sh1, na1});
  auto [hlo, hhi] = family(a, harm_inner, v, {sh1, ha1, sh2, ha2});
  out.nabla_lo = nlo;
  out.nabla_hi = nhi;
  out.harm_lo = hlo;
  out.harm_hi = hhi;
  return out;
}

}  // namespace

C8Bounds c8_bounds(C8Case which, double m2, double m1, double M1, double M2,
                   double v, const HermitianMatrix& a, const HermitianMatrix& b) {
  return bounds_impl(which, m2, m1, M1, M2, v, a, b, false);
}

C8Bounds c8_bounds_literal(C8Case which, double m2, double m1, double M1, double M2,
                           double v, const HermitianMatrix& a,
                           const HermitianMatrix& b) {
  return bounds_impl(which, m2, m1, M1, M2, v, a, b, true);
}

}  // namespace opmeans::entropy
