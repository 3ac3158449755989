#pragma once

// Weighted operator means: arithmetic, geometric, harmonic at any admissible
// weight, plus means given by a representing scalar function, with a grid
// verifier that a representing function lies between !_v and nabla_v.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "opmeans/hermitian.hpp"

namespace opmeans::means {

enum class MeanKind { Arithmetic, Geometric, Harmonic, Representing };

struct MeanDescriptor {
  MeanKind kind = MeanKind::Arithmetic;
  double weight = 0.5;
  std::string label;                       // "nabla", "sharp", "bang", or registry label
  std::function<double(double)> h;          // representing kind only, h(1) = 1

  static MeanDescriptor arithmetic(double v);
  static MeanDescriptor geometric(double v);
  static MeanDescriptor harmonic(double v);
  // Representing mean from the named registry; validates h(1) = 1 and
  // positivity on a test grid.
  static MeanDescriptor representing(const std::string& label, double v);
};

// A sigma_v B for the descriptor's mean. Inputs must be positive definite;
// harmonic weights outside [0,1] additionally require the combined inverse
// (1-v)A^{-1} + vB^{-1} to stay positive definite.
HermitianMatrix weighted_mean(const MeanDescriptor& d, const HermitianMatrix& a,
                              const HermitianMatrix& b);

struct BetweennessReport {
  bool ok;
  double worst_violation;  // largest one-sided overshoot found on the grid
  double at;               // grid point where it happened
};

// Checks x/(v + (1-v)x) <= h(x) <= (1-v) + vx on 1000 log-spaced points in
// [1e-3, 1e3] within 1e-12.
BetweennessReport representing_betweenness(const std::function<double(double)>& h,
                                           double v);

// Named representing functions available to configs. Each entry maps a weight
// to the scalar function h.
const std::vector<std::string>& representing_registry();
std::function<double(double)> representing_fn(const std::string& label, double v);

// The harmonic/geometric/arithmetic trio the theorem checks quantify over.
std::array<MeanDescriptor, 3> canonical_catalog(double v);

}  // namespace opmeans::means
