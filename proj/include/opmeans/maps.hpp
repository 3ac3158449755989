#pragma once

// Positive linear maps on matrices: identity, unitary conjugation, isometry
// compression, pinching, normalized trace, convex combinations. All built-in
// variants are unital by construction. Unitaries and isometries regenerate
// deterministically from seeds; configs never carry dense matrices.

#include <memory>
#include <string>
#include <vector>

#include "opmeans/gen.hpp"
#include "opmeans/hermitian.hpp"

namespace opmeans::maps {

enum class MapKind {
  Identity,
  UnitaryConjugation,
  Compression,
  Pinching,
  NormalizedTrace,
  ConvexCombination,
};

class MapDescriptor {
 public:
  MapDescriptor() = default;  // identity on dimension 1

  static MapDescriptor identity(int dim);
  static MapDescriptor unitary_conjugation(int dim, gen::Seed seed);
  // V = first out_dim columns of a seeded Haar unitary, so V^H V = I exactly
  // up to rounding.
  static MapDescriptor compression(int dim, int out_dim, gen::Seed seed);
  // Test hook: accepts an arbitrary factor without validating the isometry
  // invariant; validate_map reports on it.
  static MapDescriptor compression_raw(ComplexMatrix v);
  static MapDescriptor pinching(std::vector<int> block_sizes);
  static MapDescriptor normalized_trace(int dim);
  static MapDescriptor convex_combination(std::vector<double> weights,
                                          std::vector<MapDescriptor> parts);

  MapKind kind() const { return kind_; }
  int in_dim() const { return in_dim_; }
  int out_dim() const { return out_dim_; }
  bool unital() const { return unital_; }
  const std::string& label() const { return label_; }
  gen::Seed seed() const { return seed_; }
  const std::vector<int>& blocks() const { return blocks_; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<MapDescriptor>& parts() const { return parts_; }

  HermitianMatrix apply(const HermitianMatrix& x) const;

 private:
  MapKind kind_ = MapKind::Identity;
  int in_dim_ = 1;
  int out_dim_ = 1;
  bool unital_ = true;
  std::string label_ = "identity";
  gen::Seed seed_{};
  std::shared_ptr<const ComplexMatrix> factor_;  // U or V where applicable
  std::vector<int> blocks_;
  std::vector<double> weights_;
  std::vector<MapDescriptor> parts_;
};

HermitianMatrix apply_map(const MapDescriptor& d, const HermitianMatrix& x);

struct MapValidation {
  bool positive_ok;
  bool unital_ok;
  double worst_margin;
};

// Draws `trials` random PSD matrices, checks positivity margins of the image,
// and checks ||Phi(I) - I|| when the descriptor claims unitality.
MapValidation validate_map(const MapDescriptor& d, int trials, gen::Seed seed);

// Deterministic rotation of built-in unital maps for suite trials.
MapDescriptor builtin_map(int index, int dim, gen::Seed seed);
int builtin_map_count();

}  // namespace opmeans::maps
