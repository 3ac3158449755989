#include "opmeans/kernel.hpp"

#include <cstdlib>
#include <cstring>

namespace opmeans::kernel {

bool cpu_has_avx2() {
#if defined(OPMEANS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

Backend pick_backend() {
  const char* env = std::getenv("OPMEANS_KERNEL");
  if (env != nullptr) {
    if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
    if (std::strcmp(env, "avx2") == 0)
      return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
    // anything else, including "auto", falls through to detection
  }
  return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

}  // namespace

Backend active_backend() {
  static const Backend b = pick_backend();
  return b;
}

const char* backend_name(Backend b) {
  return b == Backend::Avx2 ? "avx2" : "scalar";
}

#ifdef OPMEANS_HAVE_AVX2
#define OPMEANS_DISPATCH(fn, ...)                  \
  if (active_backend() == Backend::Avx2)           \
    avx2::fn(__VA_ARGS__);                         \
  else                                             \
    scalar::fn(__VA_ARGS__)
#else
#define OPMEANS_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

void matmul_nn(const cplx* a, const cplx* b, cplx* c, int m, int k, int n) {
  OPMEANS_DISPATCH(matmul_nn, a, b, c, m, k, n);
}
void matmul_hn(const cplx* a, const cplx* b, cplx* c, int m, int k, int n) {
  OPMEANS_DISPATCH(matmul_hn, a, b, c, m, k, n);
}
void matmul_nh(const cplx* a, const cplx* b, cplx* c, int m, int k, int n) {
  OPMEANS_DISPATCH(matmul_nh, a, b, c, m, k, n);
}
void axpby(double alpha, const cplx* x, double beta, cplx* y, int len) {
  OPMEANS_DISPATCH(axpby, alpha, x, beta, y, len);
}
void scale_cols(const cplx* v, const double* d, cplx* w, int m, int n) {
  OPMEANS_DISPATCH(scale_cols, v, d, w, m, n);
}

#undef OPMEANS_DISPATCH

}  // namespace opmeans::kernel
