#include "opmeans/kernel.hpp"

// AVX2/FMA kernel variants. Two complex doubles per __m256d register,
// interleaved re/im. Complex products use the usual permute + fmaddsub
// pattern; tails fall back to scalar arithmetic. Compiled only on x86-64
// (this translation unit gets -mavx2 -mfma), selected at runtime.

#ifdef OPMEANS_HAVE_AVX2

#include <immintrin.h>

namespace opmeans::kernel::avx2 {

namespace {

// prod = s * b for a complex scalar s broadcast against a vector of two
// complex numbers b = [br0, bi0, br1, bi1].
inline __m256d cmul_broadcast(__m256d sr, __m256d si, __m256d b) {
  __m256d bswap = _mm256_permute_pd(b, 0x5);       // [bi0, br0, bi1, br1]
  __m256d t = _mm256_mul_pd(si, bswap);            // [si*bi, si*br, ...]
  return _mm256_fmaddsub_pd(sr, b, t);             // [sr*br - si*bi, sr*bi + si*br, ...]
}

// acc += x * conj(y), elementwise over two complex lanes.
inline __m256d cmul_conj_acc(__m256d acc, __m256d x, __m256d y) {
  __m256d yr = _mm256_movedup_pd(y);               // [yr0, yr0, yr1, yr1]
  __m256d yi = _mm256_permute_pd(y, 0xF);          // [yi0, yi0, yi1, yi1]
  __m256d xswap = _mm256_permute_pd(x, 0x5);       // [xi0, xr0, xi1, xr1]
  __m256d t = _mm256_mul_pd(xswap, yi);            // [xi*yi, xr*yi, ...]
  // even: xr*yr + xi*yi, odd: xi*yr - xr*yi
  return _mm256_add_pd(acc, _mm256_fmsubadd_pd(x, yr, t));
}

inline void accumulate_row(const cplx aik, const cplx* brow, cplx* crow, int n) {
  const double* b = reinterpret_cast<const double*>(brow);
  double* c = reinterpret_cast<double*>(crow);
  __m256d sr = _mm256_set1_pd(aik.real());
  __m256d si = _mm256_set1_pd(aik.imag());
  int j = 0;
  for (; j + 2 <= n; j += 2) {
    __m256d bv = _mm256_loadu_pd(b + 2 * j);
    __m256d cv = _mm256_loadu_pd(c + 2 * j);
    cv = _mm256_add_pd(cv, cmul_broadcast(sr, si, bv));
    _mm256_storeu_pd(c + 2 * j, cv);
  }
  for (; j < n; ++j) crow[j] += aik * brow[j];
}

}  // namespace

void matmul_nn(const cplx* a, const cplx* b, cplx* c, int m, int k, int n) {
  for (int i = 0; i < m * n; ++i) c[i] = cplx(0.0);
  for (int i = 0; i < m; ++i)
    for (int kk = 0; kk < k; ++kk)
      accumulate_row(a[i * k + kk], b + kk * n, c + i * n, n);
}

void matmul_hn(const cplx* a, const cplx* b, cplx* c, int m, int k, int n) {
  for (int i = 0; i < m * n; ++i) c[i] = cplx(0.0);
  for (int i = 0; i < m; ++i)
    for (int kk = 0; kk < k; ++kk)
      accumulate_row(std::conj(a[kk * m + i]), b + kk * n, c + i * n, n);
}

void matmul_nh(const cplx* a, const cplx* b, cplx* c, int m, int k, int n) {
  for (int i = 0; i < m; ++i) {
    const double* arow = reinterpret_cast<const double*>(a + i * k);
    for (int j = 0; j < n; ++j) {
      const double* brow = reinterpret_cast<const double*>(b + j * k);
      __m256d acc = _mm256_setzero_pd();
      int kk = 0;
      for (; kk + 2 <= k; kk += 2) {
        __m256d xv = _mm256_loadu_pd(arow + 2 * kk);
        __m256d yv = _mm256_loadu_pd(brow + 2 * kk);
        acc = cmul_conj_acc(acc, xv, yv);
      }
      alignas(32) double lanes[4];
      _mm256_store_pd(lanes, acc);
      cplx sum(lanes[0] + lanes[2], lanes[1] + lanes[3]);
      for (; kk < k; ++kk) sum += a[i * k + kk] * std::conj(b[j * k + kk]);
      c[i * n + j] = sum;
    }
  }
}

void axpby(double alpha, const cplx* x, double beta, cplx* y, int len) {
  const double* xr = reinterpret_cast<const double*>(x);
  double* yr = reinterpret_cast<double*>(y);
  const int total = 2 * len;
  __m256d av = _mm256_set1_pd(alpha);
  __m256d bv = _mm256_set1_pd(beta);
  int i = 0;
  for (; i + 4 <= total; i += 4) {
    __m256d xv = _mm256_loadu_pd(xr + i);
    __m256d yv = _mm256_loadu_pd(yr + i);
    _mm256_storeu_pd(yr + i, _mm256_fmadd_pd(av, xv, _mm256_mul_pd(bv, yv)));
  }
  for (; i < total; ++i) yr[i] = alpha * xr[i] + beta * yr[i];
}

void scale_cols(const cplx* v, const double* d, cplx* w, int m, int n) {
  for (int i = 0; i < m; ++i) {
    const double* vrow = reinterpret_cast<const double*>(v + i * n);
    double* wrow = reinterpret_cast<double*>(w + i * n);
    int j = 0;
    for (; j + 2 <= n; j += 2) {
      __m256d dv = _mm256_setr_pd(d[j], d[j], d[j + 1], d[j + 1]);
      __m256d xv = _mm256_loadu_pd(vrow + 2 * j);
      _mm256_storeu_pd(wrow + 2 * j, _mm256_mul_pd(xv, dv));
    }
    for (; j < n; ++j) w[i * n + j] = v[i * n + j] * d[j];
  }
}

}  // namespace opmeans::kernel::avx2

#endif  // OPMEANS_HAVE_AVX2
