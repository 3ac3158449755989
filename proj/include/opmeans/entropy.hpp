#pragma once

// Tsallis relative operator entropy T_v(A|B) = (A #_v B - A)/v and the two
// bound families derived by substituting T_v into the disjoint-spectra
// sandwich inequalities. The harmonic family is implemented with inner mean
// A !_v B; the printed variant with A nabla_v B is exposed separately because
// it fails as a lower bound (a scalar instance disproves it) and the suite
// tracks it as a diagnostic.

#include "opmeans/hermitian.hpp"

namespace opmeans::entropy {

struct TsallisParams {
  double v;
  explicit TsallisParams(double v_);
};

// (A #_v B - A)/v, computed both through the geometric mean and through the
// v-logarithm functional calculus; the two routes must agree within 1e-10.
HermitianMatrix tsallis(const HermitianMatrix& a, const HermitianMatrix& b, double v);

enum class C8Case { I, II };

struct C8Bounds {
  HermitianMatrix nabla_lo;
  HermitianMatrix nabla_hi;
  HermitianMatrix harm_lo;
  HermitianMatrix harm_hi;
};

// Case I expects m2 <= spec(A) <= m1 < M1 <= spec(B) <= M2; case II swaps the
// roles of A and B. Spectral preconditions are checked through eigh.
C8Bounds c8_bounds(C8Case which, double m2, double m1, double M1, double M2,
                   double v, const HermitianMatrix& a, const HermitianMatrix& b);

// The printed harmonic-family pair, inner mean A nabla_v B. Diagnostic only.
C8Bounds c8_bounds_literal(C8Case which, double m2, double m1, double M1, double M2,
                           double v, const HermitianMatrix& a, const HermitianMatrix& b);

}  // namespace opmeans::entropy
