#pragma once

// Deterministic seeded generators: Haar unitaries, positive definite matrices
// with prescribed spectral intervals, sandwich pairs sA <= B <= tA built so
// the condition holds exactly, disjoint-spectra ordered pairs, unit vectors.
// Identical (value, stream) always reproduces identical draws bit for bit;
// no std::<random> distributions are used anywhere.

#include <cstdint>
#include <utility>
#include <vector>

#include "opmeans/hermitian.hpp"

namespace opmeans::gen {

struct Seed {
  std::uint64_t value = 0;
  std::uint64_t stream = 0;
};

std::uint64_t splitmix64(std::uint64_t& state);

// xoshiro256++ seeded from (value, stream) through splitmix64.
class Rng {
 public:
  explicit Rng(Seed seed);
  std::uint64_t next_u64();
  double uniform01();                       // [0, 1)
  double uniform(double lo, double hi);
  double gaussian();                        // Box-Muller, pair cached
  cplx complex_gaussian();                  // (g1 + i g2) / sqrt(2)

 private:
  std::uint64_t s_[4];
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Core forms drawing from a caller-owned stream, plus Seed wrappers matching
// the documented operations.
ComplexMatrix random_unitary(int n, Rng& rng);
ComplexMatrix random_unitary(int n, Seed seed);

HermitianMatrix random_pd(int n, const SpectralInterval& interval, Rng& rng);
HermitianMatrix random_pd(int n, const SpectralInterval& interval, Seed seed);

// A ~ random_pd([0.5, 2]); B = A^{1/2} C A^{1/2} with C ~ random_pd([s, t]),
// so sA <= B <= tA holds by congruence, not by luck. s == t returns B = sA.
std::pair<HermitianMatrix, HermitianMatrix> sandwich_pair(int n, double s, double t, Rng& rng);
std::pair<HermitianMatrix, HermitianMatrix> sandwich_pair(int n, double s, double t, Seed seed);

// 0 < m2 <= spec(A) <= m1 < M1 <= spec(B) <= M2 by construction.
std::pair<HermitianMatrix, HermitianMatrix> ordered_pair(int n, double m2, double m1,
                                                         double M1, double M2, Rng& rng);
std::pair<HermitianMatrix, HermitianMatrix> ordered_pair(int n, double m2, double m1,
                                                         double M1, double M2, Seed seed);

std::vector<cplx> random_unit_vector(int n, Rng& rng);
std::vector<cplx> random_unit_vector(int n, Seed seed);

}  // namespace opmeans::gen
