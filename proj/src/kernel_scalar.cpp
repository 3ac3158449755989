#include "opmeans/kernel.hpp"

// Reference kernels. Plain loops, no intrinsics; the AVX2 variants are held
// to these outputs by the equivalence tests.

namespace opmeans::kernel::scalar {

void matmul_nn(const cplx* a, const cplx* b, cplx* c, int m, int k, int n) {
  for (int i = 0; i < m * n; ++i) c[i] = cplx(0.0);
  for (int i = 0; i < m; ++i) {
    for (int kk = 0; kk < k; ++kk) {
      const cplx aik = a[i * k + kk];
      const cplx* brow = b + kk * n;
      cplx* crow = c + i * n;
      for (int j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  }
}

void matmul_hn(const cplx* a, const cplx* b, cplx* c, int m, int k, int n) {
  for (int i = 0; i < m * n; ++i) c[i] = cplx(0.0);
  for (int i = 0; i < m; ++i) {
    for (int kk = 0; kk < k; ++kk) {
      const cplx aik = std::conj(a[kk * m + i]);
      const cplx* brow = b + kk * n;
      cplx* crow = c + i * n;
      for (int j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  }
}

void matmul_nh(const cplx* a, const cplx* b, cplx* c, int m, int k, int n) {
  for (int i = 0; i < m; ++i) {
    const cplx* arow = a + i * k;
    for (int j = 0; j < n; ++j) {
      const cplx* brow = b + j * k;
      cplx acc(0.0);
      for (int kk = 0; kk < k; ++kk) acc += arow[kk] * std::conj(brow[kk]);
      c[i * n + j] = acc;
    }
  }
}

void axpby(double alpha, const cplx* x, double beta, cplx* y, int len) {
  const double* xr = reinterpret_cast<const double*>(x);
  double* yr = reinterpret_cast<double*>(y);
  for (int i = 0; i < 2 * len; ++i) yr[i] = alpha * xr[i] + beta * yr[i];
}

void scale_cols(const cplx* v, const double* d, cplx* w, int m, int n) {
  for (int i = 0; i < m; ++i) {
    const cplx* vrow = v + i * n;
    cplx* wrow = w + i * n;
    for (int j = 0; j < n; ++j) wrow[j] = vrow[j] * d[j];
  }
}

}  // namespace opmeans::kernel::scalar
