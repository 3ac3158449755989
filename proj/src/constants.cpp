#include "opmeans/constants.hpp"

#include <algorithm>
#include <cmath>

#include "opmeans/errors.hpp"

namespace opmeans::constants {

namespace {

double require_positive(double x, const char* what) {
  if (!(x > 0.0)) throw IntervalError(std::string(what) + " must be positive");
  return x;
}

double fv(double v, double x) { return ((1.0 - v) + v * x) / std::pow(x, v); }
double gv(double v, double x) { return std::pow(x, v) * ((1.0 - v) + v / x); }
double hv(double v, double x) { return ((1.0 - v) + v * x) * ((1.0 - v) + v / x); }
double fhatv(double v, double x) { return std::pow(x, v) / ((1.0 - v) + v * x); }

}  // namespace

double aux_scalar(AuxFn name, double v, double x) {
  require_positive(x, "aux_scalar argument x");
  switch (name) {
    case AuxFn::F: return fv(v, x);
    case AuxFn::G: return gv(v, x);
    case AuxFn::H: return hv(v, x);
    case AuxFn::FHat: return fhatv(v, x);
    case AuxFn::BigF: return fv(v, x) - fv(v, 1.0 / x);
    case AuxFn::BigG: return gv(v, x) - gv(v, 1.0 / x);
  }
  throw Error("aux_scalar: unreachable");
}

double aux_f_derivative(double v, double x) {
  require_positive(x, "x");
  return v * (1.0 - v) * (x - 1.0) * std::pow(x, -v - 1.0);
}

double aux_bigF_derivative(double v, double x) {
  require_positive(x, "x");
  return v * (1.0 - v) * (x - 1.0) * (1.0 - std::pow(x, 2.0 * v - 1.0)) /
         std::pow(x, v + 1.0);
}

double aux_bigG_derivative(double v, double x) {
  return -aux_bigF_derivative(v, x);
}

double aux_h_derivative(double v, double x) {
  require_positive(x, "x");
  return v * (1.0 - v) * (x * x - 1.0) / (x * x);
}

ConstantBundle endpoint_constants(double s, double t, double v) {
  require_positive(s, "s");
  require_positive(t, "t");
  if (s > t) throw IntervalError("endpoint_constants requires s <= t");
  ConstantBundle out{};
  auto pick = [&](double at_s, double at_t, double& value, Endpoint& where) {
    if (at_s > at_t) {
      value = at_s;
      where = Endpoint::S;
    } else {
      value = at_t;
      where = Endpoint::T;
    }
  };
  pick(fv(v, s), fv(v, t), out.xi, out.xi_at);
  pick(gv(v, s), gv(v, t), out.psi, out.psi_at);
  pick(hv(v, s), hv(v, t), out.alpha, out.alpha_at);
  return out;
}

double scalar_mean(ScalarMeanKind kind, double v, double a, double b) {
  require_positive(a, "scalar_mean argument a");
  require_positive(b, "scalar_mean argument b");
  switch (kind) {
    case ScalarMeanKind::Arith:
      return (1.0 - v) * a + v * b;
    case ScalarMeanKind::Geom:
      return std::pow(a, 1.0 - v) * std::pow(b, v);
    case ScalarMeanKind::Harm: {
      double inv = (1.0 - v) / a + v / b;
      if (!(inv > 0.0))
        throw DomainError("scalar_mean: harmonic combination not positive");
      return 1.0 / inv;
    }
  }
  throw Error("scalar_mean: unreachable");
}

double classical_constant(ClassicalKind kind, double t) {
  require_positive(t, "classical_constant argument t");
  if (kind == ClassicalKind::Kantorovich) {
    return (t + 1.0) * (t + 1.0) / (4.0 * t);
  }
  // Specht. The closed form is 0/0 at t = 1; expand there.
  double h = t - 1.0;
  if (std::abs(h) < 1e-6) {
    return 1.0 + h * h / 8.0 - h * h * h / 8.0;
  }
  double L = std::log1p(h) / h;  // ln(t) / (t - 1)
  return std::exp(L - 1.0) / L;
}

PowerConstants power_constants(double m, double M, double p) {
  if (!(0.0 < m && m < M)) throw IntervalError("power_constants requires 0 < m < M");
  if (!(p >= 2.0)) throw IntervalError("power_constants requires p >= 2");
  PowerConstants out{};
  out.c_lin = std::pow((m + M) * (m + M) / (std::pow(4.0, 2.0 / p) * m * M), p);
  double mp = std::pow(m, p - 1.0);
  double Mp = std::pow(M, p - 1.0);
  out.c_fur = ((Mp + mp) * (Mp + mp) / (4.0 * mp * Mp)) *
              std::pow((M + m) / (2.0 * std::sqrt(m * M)), p);
  out.eta = std::min(out.c_lin, out.c_fur);
  return out;
}

double f_p_value(double p, double x) {
  if (!(p >= 2.0)) throw IntervalError("f_p_value requires p >= 2");
  require_positive(x, "f_p_value argument x");
  double lin = std::pow((x + 1.0) * (x + 1.0) / (std::pow(4.0, 2.0 / p) * x), p);
  double xp = std::pow(x, p - 1.0);
  double fur = ((1.0 + xp) * (1.0 + xp) / (4.0 * xp)) *
               std::pow((1.0 + x) / (2.0 * std::sqrt(x)), p);
  return lin - fur;
}

Weight::Weight(double v_) : v(v_), lambda(std::min(v_, 1.0 - v_)), mu(std::max(v_, 1.0 - v_)) {}

}  // namespace opmeans::constants
