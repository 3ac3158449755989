#include "opmeans/gen.hpp"

#include <cmath>

namespace opmeans::gen {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng::Rng(Seed seed) {
  // stream folded in before expansion so distinct streams give unrelated
  // sequences even for adjacent seed values
  std::uint64_t st = seed.value ^ (seed.stream * 0xd1342543de82ef95ULL + 0x632be59bd9b4e019ULL);
  for (auto& word : s_) word = splitmix64(st);
}

namespace {
inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}
}  // namespace

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform01();
  while (u1 <= 0.0) u1 = uniform01();
  double u2 = uniform01();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

cplx Rng::complex_gaussian() {
  double re = gaussian();
  double im = gaussian();
  return cplx(re * M_SQRT1_2, im * M_SQRT1_2);
}

namespace {

// Householder QR of g in place; returns the accumulated unitary Q and leaves
// R in g. Phase-corrected afterwards per the Ginibre-to-Haar recipe.
ComplexMatrix householder_q(ComplexMatrix& g) {
  const int n = g.rows();
  ComplexMatrix q = ComplexMatrix::identity(n);
  std::vector<cplx> v(n), t(n);
  for (int col = 0; col < n - 1; ++col) {
    double xnorm2 = 0.0;
    for (int i = col; i < n; ++i) xnorm2 += std::norm(g(i, col));
    double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) continue;
    cplx x0 = g(col, col);
    cplx phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : cplx(1.0);
    cplx alpha = -phase * xnorm;
    for (int i = col; i < n; ++i) v[i] = g(i, col);
    v[col] -= alpha;
    double unorm2 = 0.0;
    for (int i = col; i < n; ++i) unorm2 += std::norm(v[i]);
    if (unorm2 == 0.0) continue;
    double inv = 1.0 / std::sqrt(unorm2);
    for (int i = col; i < n; ++i) v[i] *= inv;

    // g <- (I - 2 v v^H) g on rows col.., cols col..
    for (int j = col; j < n; ++j) {
      cplx acc(0.0);
      for (int i = col; i < n; ++i) acc += std::conj(v[i]) * g(i, j);
      t[j] = acc;
    }
    for (int i = col; i < n; ++i) {
      const cplx vi2 = 2.0 * v[i];
      for (int j = col; j < n; ++j) g(i, j) -= vi2 * t[j];
    }
    // q <- q (I - 2 v v^H) on cols col..
    for (int i = 0; i < n; ++i) {
      cplx acc(0.0);
      for (int j = col; j < n; ++j) acc += q(i, j) * v[j];
      t[i] = acc;
    }
    for (int i = 0; i < n; ++i) {
      const cplx s = 2.0 * t[i];
      for (int j = col; j < n; ++j) q(i, j) -= s * std::conj(v[j]);
    }
  }
  return q;
}

}  // namespace

ComplexMatrix random_unitary(int n, Rng& rng) {
  if (n < 1) throw DimensionError("random_unitary: n must be positive");
  if (n == 1) {
    double theta = rng.uniform(0.0, 2.0 * M_PI);
    ComplexMatrix u(1, 1);
    u(0, 0) = cplx(std::cos(theta), std::sin(theta));
    return u;
  }
  ComplexMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
  ComplexMatrix q = householder_q(g);
  // diagonal phase correction: multiply column j by R_jj / |R_jj|
  for (int j = 0; j < n; ++j) {
    cplx rjj = g(j, j);
    cplx lambda = std::abs(rjj) > 0.0 ? rjj / std::abs(rjj) : cplx(1.0);
    for (int i = 0; i < n; ++i) q(i, j) *= lambda;
  }
  return q;
}

ComplexMatrix random_unitary(int n, Seed seed) {
  Rng rng(seed);
  return random_unitary(n, rng);
}

HermitianMatrix random_pd(int n, const SpectralInterval& interval, Rng& rng) {
  if (n < 1) throw DimensionError("random_pd: n must be positive");
  if (interval.lo == interval.hi) {
    return HermitianMatrix::diagonal(std::vector<double>(n, interval.lo));
  }
  std::vector<double> w(n);
  if (n == 1) {
    w[0] = rng.uniform(interval.lo, interval.hi);
  } else {
    w[0] = interval.lo;
    w[n - 1] = interval.hi;
    for (int i = 1; i + 1 < n; ++i) w[i] = rng.uniform(interval.lo, interval.hi);
  }
  ComplexMatrix u = random_unitary(n, rng);
  return reconstruct(u, w);
}

HermitianMatrix random_pd(int n, const SpectralInterval& interval, Seed seed) {
  Rng rng(seed);
  return random_pd(n, interval, rng);
}

std::pair<HermitianMatrix, HermitianMatrix> sandwich_pair(int n, double s, double t,
                                                          Rng& rng) {
  if (!(s > 0.0) || !(s <= t)) throw IntervalError("sandwich_pair requires 0 < s <= t");
  HermitianMatrix a = random_pd(n, SpectralInterval(0.5, 2.0), rng);
  if (s == t) return {a, a.scaled(s)};
  HermitianMatrix c = random_pd(n, SpectralInterval(s, t), rng);
  HermitianMatrix a_half = apply_fn(a, [](double x) { return std::sqrt(x); }, 0.0);
  ComplexMatrix half(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) half(i, j) = a_half(i, j);
  HermitianMatrix b = congruence(c, half);
  return {a, b};
}

std::pair<HermitianMatrix, HermitianMatrix> sandwich_pair(int n, double s, double t,
                                                          Seed seed) {
  Rng rng(seed);
  return sandwich_pair(n, s, t, rng);
}

std::pair<HermitianMatrix, HermitianMatrix> ordered_pair(int n, double m2, double m1,
                                                         double M1, double M2, Rng& rng) {
  if (!(0.0 < m2 && m2 <= m1 && m1 < M1 && M1 <= M2))
    throw IntervalError("ordered_pair requires 0 < m2 <= m1 < M1 <= M2");
  HermitianMatrix a = random_pd(n, SpectralInterval(m2, m1), rng);
  HermitianMatrix b = random_pd(n, SpectralInterval(M1, M2), rng);
  return {a, b};
}

std::pair<HermitianMatrix, HermitianMatrix> ordered_pair(int n, double m2, double m1,
                                                         double M1, double M2, Seed seed) {
  Rng rng(seed);
  return ordered_pair(n, m2, m1, M1, M2, rng);
}

std::vector<cplx> random_unit_vector(int n, Rng& rng) {
  if (n < 1) throw DimensionError("random_unit_vector: n must be positive");
  std::vector<cplx> h(n);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (int i = 0; i < n; ++i) {
      h[i] = rng.complex_gaussian();
      norm2 += std::norm(h[i]);
    }
  } while (norm2 == 0.0);
  double inv = 1.0 / std::sqrt(norm2);
  for (auto& z : h) z *= inv;
  return h;
}

std::vector<cplx> random_unit_vector(int n, Seed seed) {
  Rng rng(seed);
  return random_unit_vector(n, rng);
}

}  // namespace opmeans::gen
