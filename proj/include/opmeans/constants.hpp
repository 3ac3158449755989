#pragma once

// Scalar constants and auxiliary functions: the reversal factors xi, psi,
// alpha with their generating functions f_v, g_v, h_v and hat-f_v, the
// classical Kantorovich and Specht constants, and the p-power constants with
// the crossover function f_p.

#include <string>

namespace opmeans::constants {

enum class AuxFn { F, G, H, FHat, BigF, BigG };

// f    = ((1-v) + v x) / x^v
// g    = x^v ((1-v) + v/x)
// h    = ((1-v) + v x)((1-v) + v/x)      (= f * g)
// fhat = x^v / ((1-v) + v x)
// F    = f(x) - f(1/x),   G = g(x) - g(1/x)
double aux_scalar(AuxFn name, double v, double x);

// Closed-form derivatives, cross-checked against finite differences.
double aux_f_derivative(double v, double x);      // v(1-v)(x-1) x^{-v-1}
double aux_bigF_derivative(double v, double x);   // v(1-v)(x-1)(1-x^{2v-1})/x^{v+1}
double aux_bigG_derivative(double v, double x);   // v(1-v)(x-1)(x^{2v-1}-1)/x^{v+1}
double aux_h_derivative(double v, double x);      // v(1-v)(x^2-1)/x^2

enum class Endpoint { S, T };

struct ConstantBundle {
  double xi;
  double psi;
  double alpha;
  Endpoint xi_at;
  Endpoint psi_at;
  Endpoint alpha_at;
};

// xi = max{f_v(s), f_v(t)}, psi = max{g_v(s), g_v(t)},
// alpha = max{h_v(s), h_v(t)}, attaining endpoints recorded (ties go to t).
ConstantBundle endpoint_constants(double s, double t, double v);

enum class ScalarMeanKind { Arith, Geom, Harm };

// Weighted scalar means; weight unrestricted for arith/geom, harm requires
// the combined inverse to stay positive.
double scalar_mean(ScalarMeanKind kind, double v, double a, double b);

enum class ClassicalKind { Kantorovich, Specht };

// Kantorovich K(t) = (t+1)^2 / (4t); Specht S(t) = t^{1/(t-1)} / (e ln t^{1/(t-1)})
// with S(1) = 1 by continuity (series expansion near t = 1).
double classical_constant(ClassicalKind kind, double t);

struct PowerConstants {
  double c_lin;
  double c_fur;
  double eta;   // min(c_lin, c_fur)
};

PowerConstants power_constants(double m, double M, double p);

// f_p(x) = ((x+1)^2/(4^{2/p} x))^p - ((1+x^{p-1})^2/(4 x^{p-1})) ((1+x)/(2 sqrt x))^p
double f_p_value(double p, double x);

struct Weight {
  double v;
  double lambda;  // min{v, 1-v}
  double mu;      // max{v, 1-v}
  explicit Weight(double v_);
};

}  // namespace opmeans::constants
