#include "opmeans/functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace opmeans::fns {

namespace {

std::vector<FunctionDescriptor> make_registry() {
  using C = FnClass;
  auto power = [](double e) {
    return [e](double x) { return std::pow(x, e); };
  };
  std::vector<FunctionDescriptor> r;
  // nonnegative operator monotone (hence operator concave) on [0, inf);
  // fractional powers keep a zero floor so a stray negative eigenvalue is a
  // domain error, not a quiet NaN
  r.push_back({"x^0.25", power(0.25), {C::Monotone, C::Concave}, true, 0.0});
  r.push_back({"x^0.5", power(0.5), {C::Monotone, C::Concave}, true, 0.0});
  r.push_back({"x^0.75", power(0.75), {C::Monotone, C::Concave}, true, 0.0});
  r.push_back({"x", [](double x) { return x; }, {C::Monotone, C::Concave}, true,
               kNoDomainFloor});
  r.push_back({"x/(1+x)", [](double x) { return x / (1.0 + x); },
               {C::Monotone, C::Concave}, true, -1.0});
  r.push_back({"log(1+x)", [](double x) { return std::log1p(x); },
               {C::Monotone, C::Concave}, true, -1.0});
  // operator monotone decreasing on (0, inf)
  r.push_back({"x^-0.25", power(-0.25), {C::MonotoneDecreasing}, true, 0.0});
  r.push_back({"x^-0.5", power(-0.5), {C::MonotoneDecreasing}, true, 0.0});
  r.push_back({"x^-1", power(-1.0), {C::MonotoneDecreasing, C::Convex}, true, 0.0});
  r.push_back({"1/(1+x)", [](double x) { return 1.0 / (1.0 + x); },
               {C::MonotoneDecreasing}, true, -1.0});
  r.push_back({"x^2", [](double x) { return x * x; }, {C::Convex}, true,
               kNoDomainFloor});
  return r;
}

}  // namespace

const std::vector<FunctionDescriptor>& registry() {
  static const std::vector<FunctionDescriptor> r = make_registry();
  return r;
}

const FunctionDescriptor& by_label(const std::string& label) {
  for (const auto& d : registry())
    if (d.label == label) return d;
  throw ConfigError("unknown function '" + label + "'");
}

bool declares(const FunctionDescriptor& d, FnClass c) {
  return std::find(d.declared.begin(), d.declared.end(), c) != d.declared.end();
}

std::vector<const FunctionDescriptor*> with_class(FnClass c) {
  std::vector<const FunctionDescriptor*> out;
  for (const auto& d : registry())
    if (declares(d, c)) out.push_back(&d);
  return out;
}

HermitianMatrix eval_fn(const FunctionDescriptor& d, const HermitianMatrix& a) {
  return apply_fn(a, d.evaluate, d.domain_floor);
}

ClassCheck verify_function_class(const FunctionDescriptor& d, FnClass c, int n,
                                 int trials, gen::Seed seed) {
  if (!declares(d, c))
    throw ConfigError("verify_function_class: class not declared for '" + d.label + "'");
  ClassCheck out{true, std::numeric_limits<double>::infinity(), std::nullopt};
  gen::Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    HermitianMatrix a = gen::random_pd(n, SpectralInterval(0.2, 2.0), rng);
    double margin = 0.0;
    HermitianMatrix b = a;
    if (c == FnClass::Monotone || c == FnClass::MonotoneDecreasing) {
      // B = A + random PSD increment, so A <= B exactly
      ComplexMatrix g(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = 0.6 * rng.complex_gaussian();
      HermitianMatrix bump = HermitianMatrix::symmetrized(matmul_adjoint_left(g, g));
      b = a + bump;
      HermitianMatrix fa = eval_fn(d, a);
      HermitianMatrix fb = eval_fn(d, b);
      margin = c == FnClass::Monotone ? loewner_margin(fa, fb)
                                      : loewner_margin(fb, fa);
    } else {
      b = gen::random_pd(n, SpectralInterval(0.2, 2.0), rng);
      HermitianMatrix mid = a.axpby(0.5, 0.5, b);
      HermitianMatrix avg = eval_fn(d, a).axpby(0.5, 0.5, eval_fn(d, b));
      HermitianMatrix fmid = eval_fn(d, mid);
      margin = c == FnClass::Concave ? loewner_margin(avg, fmid)
                                     : loewner_margin(fmid, avg);
    }
    if (margin < out.worst_margin) {
      out.worst_margin = margin;
      if (margin < -1e-9) {
        out.consistent = false;
        out.witness = std::make_pair(a, b);
      }
    }
  }
  return out;
}

}  // namespace opmeans::fns
