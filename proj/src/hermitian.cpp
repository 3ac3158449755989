#include "opmeans/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "opmeans/kernel.hpp"

namespace opmeans {

namespace {

void require_dim(int n) {
  if (n < 1) throw DimensionError("matrix dimension must be positive");
  if (n > kMaxDim) {
    std::ostringstream os;
    os << "matrix dimension " << n << " exceeds the supported cap " << kMaxDim;
    throw DimensionError(os.str());
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DimensionError("negative matrix shape");
  data_.assign(static_cast<size_t>(rows) * cols, cplx(0.0));
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = cplx(1.0);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matmul: inner dimensions differ");
  ComplexMatrix c(a.rows(), b.cols());
  kernel::matmul_nn(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
  return c;
}

ComplexMatrix matmul_adjoint_left(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("matmul_adjoint_left: row counts differ");
  ComplexMatrix c(a.cols(), b.cols());
  kernel::matmul_hn(a.data(), b.data(), c.data(), a.cols(), a.rows(), b.cols());
  return c;
}

double isometry_defect(const ComplexMatrix& a) {
  ComplexMatrix g = matmul_adjoint_left(a, a);
  double defect = 0.0;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      cplx want = (i == j) ? cplx(1.0) : cplx(0.0);
      defect = std::max(defect, std::abs(g(i, j) - want));
    }
  return defect;
}

HermitianMatrix HermitianMatrix::from_entries(int dim, std::vector<cplx> row_major) {
  require_dim(dim);
  if (row_major.size() != static_cast<size_t>(dim) * dim)
    throw DimensionError("from_entries: entry count does not match dim*dim");
  double scale = 0.0;
  for (const cplx& z : row_major) scale = std::max(scale, std::abs(z));
  double defect = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j <= i; ++j)
      defect = std::max(defect,
                        std::abs(row_major[i * dim + j] -
                                 std::conj(row_major[j * dim + i])));
  if (defect > 1e-12 * std::max(scale, 1e-300)) {
    std::ostringstream os;
    os << "not Hermitian: symmetry defect " << defect << " exceeds 1e-12 * "
       << scale;
    throw NotHermitianError(os.str());
  }
  // store the exactly Hermitian average
  for (int i = 0; i < dim; ++i) {
    row_major[i * dim + i] = cplx(row_major[i * dim + i].real());
    for (int j = 0; j < i; ++j) {
      cplx avg = 0.5 * (row_major[i * dim + j] + std::conj(row_major[j * dim + i]));
      row_major[i * dim + j] = avg;
      row_major[j * dim + i] = std::conj(avg);
    }
  }
  return HermitianMatrix(dim, std::move(row_major));
}

HermitianMatrix HermitianMatrix::identity(int n) {
  require_dim(n);
  std::vector<cplx> d(static_cast<size_t>(n) * n, cplx(0.0));
  for (int i = 0; i < n; ++i) d[i * n + i] = cplx(1.0);
  return HermitianMatrix(n, std::move(d));
}

HermitianMatrix HermitianMatrix::zero(int n) {
  require_dim(n);
  return HermitianMatrix(n, std::vector<cplx>(static_cast<size_t>(n) * n, cplx(0.0)));
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& d) {
  int n = static_cast<int>(d.size());
  require_dim(n);
  std::vector<cplx> m(static_cast<size_t>(n) * n, cplx(0.0));
  for (int i = 0; i < n; ++i) m[i * n + i] = cplx(d[i]);
  return HermitianMatrix(n, std::move(m));
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  return axpby(1.0, 1.0, o);
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& o) const {
  return o.axpby(-1.0, 1.0, *this);
}

HermitianMatrix HermitianMatrix::axpby(double alpha, double beta,
                                       const HermitianMatrix& o) const {
  if (dim_ != o.dim_) throw DimensionError("axpby: dimensions differ");
  std::vector<cplx> out = o.data_;
  kernel::axpby(alpha, data_.data(), beta, out.data(), dim_ * dim_);
  return HermitianMatrix(dim_, std::move(out));
}

HermitianMatrix HermitianMatrix::scaled(double alpha) const {
  std::vector<cplx> out(data_.size(), cplx(0.0));
  kernel::axpby(alpha, data_.data(), 0.0, out.data(), dim_ * dim_);
  return HermitianMatrix(dim_, std::move(out));
}

HermitianMatrix HermitianMatrix::symmetrized(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("symmetrized: matrix not square");
  int n = m.rows();
  require_dim(n);
  std::vector<cplx> out(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    out[i * n + i] = cplx(m(i, i).real());
    for (int j = 0; j < i; ++j) {
      cplx avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      out[i * n + j] = avg;
      out[j * n + i] = std::conj(avg);
    }
  }
  return HermitianMatrix(n, std::move(out));
}

SpectralInterval::SpectralInterval(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (!(lo > 0.0) || !(lo <= hi))
    throw IntervalError("spectral interval requires 0 < lo <= hi");
}

namespace {

// Unitary reduction of a Hermitian matrix to real symmetric tridiagonal form,
// a = q T q^H. On return d holds the diagonal of T, e[i] = T[i+1,i] >= 0, and
// q the accumulated unitary (row-major n x n). Householder reflections with
// the sign choice that avoids cancellation, then a diagonal phase similarity
// makes the subdiagonal real.
void tridiagonalize(std::vector<cplx>& a, int n, std::vector<double>& d,
                    std::vector<double>& e, std::vector<cplx>& q) {
  std::vector<cplx> v(n), p(n), w(n), qv(n);
  for (int col = 0; col + 2 < n; ++col) {
    double xnorm2 = 0.0;
    for (int i = col + 1; i < n; ++i) xnorm2 += std::norm(a[i * n + col]);
    double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) continue;

    cplx x0 = a[(col + 1) * n + col];
    cplx phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : cplx(1.0);
    cplx alpha = -phase * xnorm;

    // v = (x - alpha*e1) normalized; ||x - alpha*e1||^2 = 2*||x||*(||x|| + |x0|)
    for (int i = col + 1; i < n; ++i) v[i] = a[i * n + col];
    v[col + 1] -= alpha;
    double unorm2 = 0.0;
    for (int i = col + 1; i < n; ++i) unorm2 += std::norm(v[i]);
    double inv = 1.0 / std::sqrt(unorm2);
    for (int i = col + 1; i < n; ++i) v[i] *= inv;

    // p = A_sub * v over the trailing block
    for (int i = col + 1; i < n; ++i) {
      cplx acc(0.0);
      const cplx* row = a.data() + static_cast<size_t>(i) * n;
      for (int j = col + 1; j < n; ++j) acc += row[j] * v[j];
      p[i] = acc;
    }
    double kappa = 0.0;  // v^H p is real for Hermitian A
    for (int i = col + 1; i < n; ++i)
      kappa += (std::conj(v[i]) * p[i]).real();
    for (int i = col + 1; i < n; ++i) w[i] = p[i] - kappa * v[i];

    // A_sub -= 2 v w^H + 2 w v^H
    for (int i = col + 1; i < n; ++i) {
      cplx* row = a.data() + static_cast<size_t>(i) * n;
      const cplx vi2 = 2.0 * v[i];
      const cplx wi2 = 2.0 * w[i];
      for (int j = col + 1; j < n; ++j)
        row[j] -= vi2 * std::conj(w[j]) + wi2 * std::conj(v[j]);
    }

    // column col collapses to (alpha, 0, ..., 0) below the diagonal
    a[(col + 1) * n + col] = alpha;
    a[col * n + col + 1] = std::conj(alpha);
    for (int i = col + 2; i < n; ++i) {
      a[i * n + col] = cplx(0.0);
      a[col * n + i] = cplx(0.0);
    }

    // Q <- Q (I - 2 v v^H), columns col+1..n-1
    for (int i = 0; i < n; ++i) {
      cplx acc(0.0);
      const cplx* row = q.data() + static_cast<size_t>(i) * n;
      for (int j = col + 1; j < n; ++j) acc += row[j] * v[j];
      qv[i] = acc;
    }
    for (int i = 0; i < n; ++i) {
      cplx* row = q.data() + static_cast<size_t>(i) * n;
      const cplx s = 2.0 * qv[i];
      for (int j = col + 1; j < n; ++j) row[j] -= s * std::conj(v[j]);
    }
  }

  // Phase similarity: make the (still complex) subdiagonal real nonnegative.
  d.resize(n);
  e.assign(n, 0.0);
  cplx phi(1.0);
  for (int i = 0; i < n; ++i) {
    d[i] = a[i * n + i].real();
    if (i > 0) {
      cplx t = a[i * n + (i - 1)];
      double mag = std::abs(t);
      e[i - 1] = mag;
      phi = (mag > 0.0) ? t * phi / mag : phi;
    }
    if (i > 0) {
      for (int r = 0; r < n; ++r) q[r * n + i] *= phi;
    }
  }
}

// Implicit-shift QL on the real symmetric tridiagonal (d, e), rotations
// accumulated into the complex columns of q. e[i] couples d[i] and d[i+1].
void tql2(std::vector<double>& d, std::vector<double>& e, std::vector<cplx>& q,
          int n) {
  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (iter++ == 60)
        throw Error("eigh: QL iteration failed to converge");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        for (int row = 0; row < n; ++row) {
          cplx fq = q[row * n + i + 1];
          q[row * n + i + 1] = s * q[row * n + i] + c * fq;
          q[row * n + i] = c * q[row * n + i] - s * fq;
        }
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

}  // namespace

EighResult eigh(const HermitianMatrix& a) {
  const int n = a.dim();
  EighResult out;
  if (n == 1) {
    out.eigenvalues = {a(0, 0).real()};
    out.eigenvectors = ComplexMatrix::identity(1);
    return out;
  }

  std::vector<cplx> work(a.data(), a.data() + static_cast<size_t>(n) * n);
  std::vector<cplx> q(static_cast<size_t>(n) * n, cplx(0.0));
  for (int i = 0; i < n; ++i) q[i * n + i] = cplx(1.0);

  std::vector<double> d, e;
  tridiagonalize(work, n, d, e, q);
  tql2(d, e, q, n);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&d](int i, int j) { return d[i] < d[j]; });

  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    out.eigenvalues[j] = d[order[j]];
    for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = q[i * n + order[j]];
  }
  return out;
}

HermitianMatrix reconstruct(const ComplexMatrix& v, const std::vector<double>& d) {
  const int n = v.rows();
  ComplexMatrix scaled(n, n);
  kernel::scale_cols(v.data(), d.data(), scaled.data(), n, n);
  ComplexMatrix full(n, n);
  kernel::matmul_nh(scaled.data(), v.data(), full.data(), n, n, n);
  return HermitianMatrix::symmetrized(full);
}

HermitianMatrix apply_fn(const HermitianMatrix& a,
                         const std::function<double(double)>& fn,
                         double domain_floor) {
  EighResult eg = eigh(a);
  const int n = a.dim();
  double norm = std::max(std::abs(eg.eigenvalues.front()),
                         std::abs(eg.eigenvalues.back()));
  if (domain_floor != kNoDomainFloor) {
    double floor = domain_floor + 1e-12 * norm;
    for (double w : eg.eigenvalues) {
      if (w <= floor) {
        std::ostringstream os;
        os << "apply_fn: eigenvalue " << w << " does not clear domain floor "
           << domain_floor;
        throw DomainError(os.str());
      }
    }
  }
  std::vector<double> mapped(eg.eigenvalues.size());
  for (int i = 0; i < n; ++i) mapped[i] = fn(eg.eigenvalues[i]);
  return reconstruct(eg.eigenvectors, mapped);
}

double loewner_margin(const HermitianMatrix& l, const HermitianMatrix& r) {
  if (l.dim() != r.dim()) throw DimensionError("loewner_margin: dimensions differ");
  HermitianMatrix diff = r - l;
  double lambda_min = min_eigenvalue(diff);
  double scale = std::max(1.0, spectral_norm(r) + spectral_norm(l));
  return lambda_min / scale;
}

HermitianMatrix congruence(const HermitianMatrix& x, const ComplexMatrix& c) {
  if (c.rows() != x.dim()) throw DimensionError("congruence: factor rows must match dim");
  const int n = x.dim();
  const int m = c.cols();
  ComplexMatrix xc(n, m);
  kernel::matmul_nn(x.data(), c.data(), xc.data(), n, n, m);
  ComplexMatrix out(m, m);
  kernel::matmul_hn(c.data(), xc.data(), out.data(), m, n, m);
  return HermitianMatrix::symmetrized(out);
}

double spectral_norm(const HermitianMatrix& a) {
  EighResult eg = eigh(a);
  return std::max(std::abs(eg.eigenvalues.front()), std::abs(eg.eigenvalues.back()));
}

double min_eigenvalue(const HermitianMatrix& a) {
  return eigh(a).eigenvalues.front();
}

bool is_positive_definite(const HermitianMatrix& a) {
  EighResult eg = eigh(a);
  double norm = std::max(std::abs(eg.eigenvalues.front()),
                         std::abs(eg.eigenvalues.back()));
  return eg.eigenvalues.front() > 1e-12 * norm;
}

}  // namespace opmeans
