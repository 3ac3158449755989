#pragma once

// Dense complex kernels behind the matrix layer. Every kernel has a scalar
// reference implementation and, on x86-64, an AVX2/FMA variant. The variant
// actually used is picked once at runtime (CPUID, overridable with the
// OPMEANS_KERNEL environment variable) and the two are equivalence-tested
// against each other in tests/test_kernel.cpp.
//
// Matrices are row-major, std::complex<double>, interleaved re/im.

#include <complex>

namespace opmeans::kernel {

using cplx = std::complex<double>;

enum class Backend { Scalar, Avx2 };

// Backend selected for this process. Honors OPMEANS_KERNEL=scalar|avx2|auto;
// an avx2 request on a CPU without AVX2+FMA falls back to scalar.
Backend active_backend();
const char* backend_name(Backend b);
bool cpu_has_avx2();

// c = a * b          a: m-by-k, b: k-by-n, c: m-by-n (overwritten)
void matmul_nn(const cplx* a, const cplx* b, cplx* c, int m, int k, int n);
// c = a^H * b        a: k-by-m, b: k-by-n, c: m-by-n
void matmul_hn(const cplx* a, const cplx* b, cplx* c, int m, int k, int n);
// c = a * b^H        a: m-by-k, b: n-by-k, c: m-by-n
void matmul_nh(const cplx* a, const cplx* b, cplx* c, int m, int k, int n);
// y = alpha*x + beta*y, real coefficients, len complex elements
void axpby(double alpha, const cplx* x, double beta, cplx* y, int len);
// w[i,j] = v[i,j] * d[j], real column scaling; v and w may alias
void scale_cols(const cplx* v, const double* d, cplx* w, int m, int n);

// Per-backend entry points, used by the dispatcher and the equivalence tests.
namespace scalar {
void matmul_nn(const cplx* a, const cplx* b, cplx* c, int m, int k, int n);
void matmul_hn(const cplx* a, const cplx* b, cplx* c, int m, int k, int n);
void matmul_nh(const cplx* a, const cplx* b, cplx* c, int m, int k, int n);
void axpby(double alpha, const cplx* x, double beta, cplx* y, int len);
void scale_cols(const cplx* v, const double* d, cplx* w, int m, int n);
}  // namespace scalar

#ifdef OPMEANS_HAVE_AVX2
namespace avx2 {
void matmul_nn(const cplx* a, const cplx* b, cplx* c, int m, int k, int n);
void matmul_hn(const cplx* a, const cplx* b, cplx* c, int m, int k, int n);
void matmul_nh(const cplx* a, const cplx* b, cplx* c, int m, int k, int n);
void axpby(double alpha, const cplx* x, double beta, cplx* y, int len);
void scale_cols(const cplx* v, const double* d, cplx* w, int m, int n);
}  // namespace avx2
#endif

}  // namespace opmeans::kernel
