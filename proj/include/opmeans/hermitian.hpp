#pragma once

// Dense complex Hermitian matrices with eigendecomposition, scalar-function
// calculus, congruence transforms and Loewner-order comparison. This is the
// base layer every inequality check is expressed in.

#include <complex>
#include <functional>
#include <limits>
#include <vector>

#include "opmeans/errors.hpp"

namespace opmeans {

using cplx = std::complex<double>;

inline constexpr int kMaxDim = 64;

// General dense complex matrix, row-major. Used for eigenvector bases,
// unitaries, isometries and congruence factors.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);
  static ComplexMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  cplx& operator()(int i, int j) { return data_[i * cols_ + j]; }
  const cplx& operator()(int i, int j) const { return data_[i * cols_ + j]; }
  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }

  ComplexMatrix adjoint() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> data_;
};

// c = a * b
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
// c = a^H * b
ComplexMatrix matmul_adjoint_left(const ComplexMatrix& a, const ComplexMatrix& b);
// Largest |entry| difference from the identity of a^H a; isometry defect.
double isometry_defect(const ComplexMatrix& a);

// Hermitian matrix. Construction through from_entries validates the symmetry
// invariant (entrywise defect at most 1e-12 relative to the largest absolute
// entry); internal factories produce exactly Hermitian storage.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  static HermitianMatrix from_entries(int dim, std::vector<cplx> row_major);
  static HermitianMatrix identity(int n);
  static HermitianMatrix zero(int n);
  static HermitianMatrix diagonal(const std::vector<double>& d);
  static HermitianMatrix scalar(double a) { return diagonal({a}); }

  int dim() const { return dim_; }
  const cplx& operator()(int i, int j) const { return data_[i * dim_ + j]; }
  const cplx* data() const { return data_.data(); }

  HermitianMatrix operator+(const HermitianMatrix& o) const;
  HermitianMatrix operator-(const HermitianMatrix& o) const;
  // alpha*this + beta*o, real coefficients
  HermitianMatrix axpby(double alpha, double beta, const HermitianMatrix& o) const;
  HermitianMatrix scaled(double alpha) const;

  // (m + m^H)/2 of an arbitrary square matrix; trusted entry point for
  // results that are Hermitian up to rounding.
  static HermitianMatrix symmetrized(const ComplexMatrix& m);

 private:
  HermitianMatrix(int dim, std::vector<cplx> trusted)
      : dim_(dim), data_(std::move(trusted)) {}

  int dim_ = 0;
  std::vector<cplx> data_;
};

struct SpectralInterval {
  double lo;
  double hi;
  SpectralInterval(double lo_, double hi_);
};

struct EighResult {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // unitary, columns match eigenvalues
};

// Full eigendecomposition a = V diag(w) V^H via unitary Householder
// tridiagonalization followed by implicit-shift QL. Backward error is well
// inside 1e-11 * max(1, ||a||_2) for dim <= 64.
EighResult eigh(const HermitianMatrix& a);

// V diag(d) V^H, symmetrized.
HermitianMatrix reconstruct(const ComplexMatrix& v, const std::vector<double>& d);

inline constexpr double kNoDomainFloor = -std::numeric_limits<double>::infinity();

// Functional calculus: V diag(fn(w)) V^H. Every eigenvalue must exceed
// domain_floor + 1e-12*||a||_2; the offending eigenvalue is named otherwise.
HermitianMatrix apply_fn(const HermitianMatrix& a,
                         const std::function<double(double)>& fn,
                         double domain_floor = kNoDomainFloor);

// lambda_min(r - l) / max(1, ||r||_2 + ||l||_2). Nonnegative (up to a
// caller-chosen tolerance) exactly when l <= r in the Loewner order.
double loewner_margin(const HermitianMatrix& l, const HermitianMatrix& r);

// c^H x c; Hermitian for Hermitian x. c maps a space of dimension c.cols().
HermitianMatrix congruence(const HermitianMatrix& x, const ComplexMatrix& c);

double spectral_norm(const HermitianMatrix& a);
double min_eigenvalue(const HermitianMatrix& a);

// Relative positive-definiteness floor: spectrum must clear
// 1e-12 * ||a||_2 to count as positive definite.
bool is_positive_definite(const HermitianMatrix& a);

}  // namespace opmeans
