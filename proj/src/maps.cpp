#include "opmeans/maps.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace opmeans::maps {

MapDescriptor MapDescriptor::identity(int dim) {
  MapDescriptor d;
  d.kind_ = MapKind::Identity;
  d.in_dim_ = d.out_dim_ = dim;
  d.label_ = "identity";
  return d;
}

MapDescriptor MapDescriptor::unitary_conjugation(int dim, gen::Seed seed) {
  MapDescriptor d;
  d.kind_ = MapKind::UnitaryConjugation;
  d.in_dim_ = d.out_dim_ = dim;
  d.seed_ = seed;
  d.factor_ = std::make_shared<ComplexMatrix>(gen::random_unitary(dim, seed));
  d.label_ = "unitary_conjugation";
  return d;
}

MapDescriptor MapDescriptor::compression(int dim, int out_dim, gen::Seed seed) {
  if (out_dim < 1 || out_dim > dim)
    throw DimensionError("compression: need 1 <= out_dim <= dim");
  MapDescriptor d;
  d.kind_ = MapKind::Compression;
  d.in_dim_ = dim;
  d.out_dim_ = out_dim;
  d.seed_ = seed;
  ComplexMatrix u = gen::random_unitary(dim, seed);
  auto v = std::make_shared<ComplexMatrix>(dim, out_dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < out_dim; ++j) (*v)(i, j) = u(i, j);
  if (isometry_defect(*v) > 1e-10)
    throw DomainError("compression: isometry defect above 1e-10");
  d.factor_ = std::move(v);
  d.label_ = "compression";
  return d;
}

MapDescriptor MapDescriptor::compression_raw(ComplexMatrix v) {
  MapDescriptor d;
  d.kind_ = MapKind::Compression;
  d.in_dim_ = v.rows();
  d.out_dim_ = v.cols();
  d.factor_ = std::make_shared<ComplexMatrix>(std::move(v));
  d.label_ = "compression_raw";
  return d;
}

MapDescriptor MapDescriptor::pinching(std::vector<int> block_sizes) {
  int total = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  for (int b : block_sizes)
    if (b < 1) throw DimensionError("pinching: block sizes must be positive");
  MapDescriptor d;
  d.kind_ = MapKind::Pinching;
  d.in_dim_ = d.out_dim_ = total;
  d.blocks_ = std::move(block_sizes);
  d.label_ = "pinching";
  return d;
}

MapDescriptor MapDescriptor::normalized_trace(int dim) {
  MapDescriptor d;
  d.kind_ = MapKind::NormalizedTrace;
  d.in_dim_ = d.out_dim_ = dim;
  d.label_ = "normalized_trace";
  return d;
}

MapDescriptor MapDescriptor::convex_combination(std::vector<double> weights,
                                                std::vector<MapDescriptor> parts) {
  if (weights.size() != parts.size() || parts.empty())
    throw DimensionError("convex_combination: weights and parts must align");
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw IntervalError("convex_combination: negative weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw IntervalError("convex_combination: weights must sum to 1");
  int in = parts.front().in_dim(), out = parts.front().out_dim();
  bool unital = true;
  for (const auto& p : parts) {
    if (p.in_dim() != in || p.out_dim() != out)
      throw DimensionError("convex_combination: parts have mixed shapes");
    unital = unital && p.unital();
  }
  MapDescriptor d;
  d.kind_ = MapKind::ConvexCombination;
  d.in_dim_ = in;
  d.out_dim_ = out;
  d.unital_ = unital;
  d.weights_ = std::move(weights);
  d.parts_ = std::move(parts);
  d.label_ = "convex_combination";
  return d;
}

HermitianMatrix MapDescriptor::apply(const HermitianMatrix& x) const {
  if (x.dim() != in_dim_) {
    std::ostringstream os;
    os << "apply_map: input dim " << x.dim() << " does not match descriptor dim "
       << in_dim_;
    throw DimensionError(os.str());
  }
  switch (kind_) {
    case MapKind::Identity:
      return x;
    case MapKind::UnitaryConjugation:
    case MapKind::Compression:
      return congruence(x, *factor_);
    case MapKind::Pinching: {
      std::vector<cplx> out(static_cast<size_t>(in_dim_) * in_dim_, cplx(0.0));
      int offset = 0;
      for (int b : blocks_) {
        for (int i = offset; i < offset + b; ++i)
          for (int j = offset; j < offset + b; ++j)
            out[i * in_dim_ + j] = x(i, j);
        offset += b;
      }
      ComplexMatrix m(in_dim_, in_dim_);
      for (int i = 0; i < in_dim_; ++i)
        for (int j = 0; j < in_dim_; ++j) m(i, j) = out[i * in_dim_ + j];
      return HermitianMatrix::symmetrized(m);
    }
    case MapKind::NormalizedTrace: {
      double tr = 0.0;
      for (int i = 0; i < in_dim_; ++i) tr += x(i, i).real();
      return HermitianMatrix::identity(in_dim_).scaled(tr / in_dim_);
    }
    case MapKind::ConvexCombination: {
      HermitianMatrix acc = HermitianMatrix::zero(out_dim_);
      for (size_t i = 0; i < parts_.size(); ++i)
        acc = acc.axpby(1.0, weights_[i], parts_[i].apply(x));
      return acc;
    }
  }
  throw Error("apply_map: unreachable");
}

HermitianMatrix apply_map(const MapDescriptor& d, const HermitianMatrix& x) {
  return d.apply(x);
}

MapValidation validate_map(const MapDescriptor& d, int trials, gen::Seed seed) {
  if (trials < 1) throw IntervalError("validate_map: trials must be >= 1");
  MapValidation out{true, true, std::numeric_limits<double>::infinity()};
  gen::Rng rng(seed);
  const int n = d.in_dim();
  for (int t = 0; t < trials; ++t) {
    // random PSD draw, occasionally rank deficient
    ComplexMatrix g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
    if (t % 4 == 0 && n > 1) {
      for (int j = 0; j < n; ++j) g(0, j) = cplx(0.0);  // drop one row: singular
    }
    HermitianMatrix psd = HermitianMatrix::symmetrized(matmul_adjoint_left(g, g));
    HermitianMatrix img = d.apply(psd);
    double margin = loewner_margin(HermitianMatrix::zero(d.out_dim()), img);
    out.worst_margin = std::min(out.worst_margin, margin);
    if (margin < -1e-9) out.positive_ok = false;
  }
  if (d.unital()) {
    HermitianMatrix img = d.apply(HermitianMatrix::identity(n));
    HermitianMatrix eye = HermitianMatrix::identity(d.out_dim());
    if (spectral_norm(img - eye) > 1e-10) out.unital_ok = false;
  }
  return out;
}

int builtin_map_count() { return 6; }

MapDescriptor builtin_map(int index, int dim, gen::Seed seed) {
  switch (((index % 6) + 6) % 6) {
    case 0: return MapDescriptor::identity(dim);
    case 1: return MapDescriptor::unitary_conjugation(dim, seed);
    case 2: return MapDescriptor::compression(dim, (dim + 1) / 2, seed);
    case 3: {
      if (dim == 1) return MapDescriptor::pinching({1});
      return MapDescriptor::pinching({dim / 2, dim - dim / 2});
    }
    case 4: return MapDescriptor::normalized_trace(dim);
    default: {
      std::vector<MapDescriptor> parts;
      parts.push_back(MapDescriptor::identity(dim));
      parts.push_back(dim == 1 ? MapDescriptor::pinching({1})
                               : MapDescriptor::pinching({dim / 2, dim - dim / 2}));
      return MapDescriptor::convex_combination({0.5, 0.5}, std::move(parts));
    }
  }
}

}  // namespace opmeans::maps
