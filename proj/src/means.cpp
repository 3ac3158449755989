#include "opmeans/means.hpp"

#include <cmath>
#include <map>

namespace opmeans::means {

namespace {

void require_pd(const HermitianMatrix& m, const char* which) {
  if (!is_positive_definite(m))
    throw DomainError(std::string("weighted_mean: ") + which +
                      " is not positive definite");
}

// A^{1/2} phi(A^{-1/2} B A^{-1/2}) A^{1/2}
HermitianMatrix transfer(const HermitianMatrix& a, const HermitianMatrix& b,
                         const std::function<double(double)>& phi) {
  EighResult ea = eigh(a);
  const int n = a.dim();
  std::vector<double> root(n), inv_root(n);
  for (int i = 0; i < n; ++i) {
    root[i] = std::sqrt(ea.eigenvalues[i]);
    inv_root[i] = 1.0 / root[i];
  }
  ComplexMatrix half(n, n), inv_half(n, n);
  {
    HermitianMatrix h = reconstruct(ea.eigenvectors, root);
    HermitianMatrix ih = reconstruct(ea.eigenvectors, inv_root);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        half(i, j) = h(i, j);
        inv_half(i, j) = ih(i, j);
      }
  }
  HermitianMatrix t = congruence(b, inv_half);
  HermitianMatrix phi_t = apply_fn(t, phi, 0.0);
  return congruence(phi_t, half);
}

}  // namespace

MeanDescriptor MeanDescriptor::arithmetic(double v) {
  return {MeanKind::Arithmetic, v, "nabla", nullptr};
}

MeanDescriptor MeanDescriptor::geometric(double v) {
  return {MeanKind::Geometric, v, "sharp", nullptr};
}

MeanDescriptor MeanDescriptor::harmonic(double v) {
  return {MeanKind::Harmonic, v, "bang", nullptr};
}

MeanDescriptor MeanDescriptor::representing(const std::string& label, double v) {
  auto h = representing_fn(label, v);
  if (std::abs(h(1.0) - 1.0) > 1e-12)
    throw DomainError("representing mean '" + label + "': h(1) != 1");
  for (double x = 1e-3; x <= 1e3; x *= 10.0) {
    double y = h(x);
    if (!std::isfinite(y) || y <= 0.0)
      throw DomainError("representing mean '" + label + "': h not positive at grid point");
  }
  return {MeanKind::Representing, v, label, std::move(h)};
}

HermitianMatrix weighted_mean(const MeanDescriptor& d, const HermitianMatrix& a,
                              const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("weighted_mean: dimensions differ");
  const double v = d.weight;
  switch (d.kind) {
    case MeanKind::Arithmetic:
      return a.axpby(1.0 - v, v, b);
    case MeanKind::Geometric: {
      require_pd(a, "A");
      require_pd(b, "B");
      return transfer(a, b, [v](double x) { return std::pow(x, v); });
    }
    case MeanKind::Harmonic: {
      require_pd(a, "A");
      require_pd(b, "B");
      auto inv = [](double x) { return 1.0 / x; };
      HermitianMatrix ai = apply_fn(a, inv, 0.0);
      HermitianMatrix bi = apply_fn(b, inv, 0.0);
      HermitianMatrix comb = ai.axpby(1.0 - v, v, bi);
      if (!is_positive_definite(comb))
        throw DomainError(
            "weighted_mean: harmonic combination (1-v)A^{-1} + vB^{-1} is not "
            "positive definite (weight outside [0,1] not admissible here)");
      return apply_fn(comb, inv, 0.0);
    }
    case MeanKind::Representing: {
      require_pd(a, "A");
      require_pd(b, "B");
      return transfer(a, b, d.h);
    }
  }
  throw Error("weighted_mean: unreachable");
}

BetweennessReport representing_betweenness(const std::function<double(double)>& h,
                                           double v) {
  if (v < 0.0 || v > 1.0)
    throw IntervalError("representing_betweenness requires v in [0,1]");
  BetweennessReport rep{true, 0.0, 1.0};
  const int points = 1000;
  const double lo = std::log(1e-3), hi = std::log(1e3);
  for (int i = 0; i < points; ++i) {
    double x = std::exp(lo + (hi - lo) * i / (points - 1));
    double y = h(x);
    if (!std::isfinite(y))
      throw DomainError("representing_betweenness: h not finite on the grid");
    double lower = x / (v + (1.0 - v) * x);
    double upper = (1.0 - v) + v * x;
    double viol = std::max(lower - y, y - upper);
    if (viol > rep.worst_violation) {
      rep.worst_violation = viol;
      rep.at = x;
    }
  }
  rep.ok = rep.worst_violation <= 1e-12;
  return rep;
}

const std::vector<std::string>& representing_registry() {
  static const std::vector<std::string> labels = {"power_half", "power_neg_half"};
  return labels;
}

std::function<double(double)> representing_fn(const std::string& label, double v) {
  // binomial power means x -> ((1-v) + v x^p)^{1/p}; operator means for
  // p in [-1, 1], sitting strictly between !_v (p = -1) and nabla_v (p = 1)
  if (label == "power_half") {
    return [v](double x) {
      double r = (1.0 - v) + v * std::sqrt(x);
      return r * r;
    };
  }
  if (label == "power_neg_half") {
    return [v](double x) {
      double r = (1.0 - v) + v / std::sqrt(x);
      return 1.0 / (r * r);
    };
  }
  throw ConfigError("unknown representing mean '" + label + "'");
}

std::array<MeanDescriptor, 3> canonical_catalog(double v) {
  return {MeanDescriptor::harmonic(v), MeanDescriptor::geometric(v),
          MeanDescriptor::arithmetic(v)};
}

}  // namespace opmeans::means
