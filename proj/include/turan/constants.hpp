#pragma once

// Closed-form quantities of the threshold argument: the K_r^- completion
// scale Lambda_r, the threshold p(n), the rational constants a_r, b_r, c_r
// with the admissible range of gamma, and the cap Sigma.

#include <cmath>
#include <optional>

#include "turan/error.hpp"
#include "turan/rational.hpp"

namespace turan {

inline long long choose2(long long k) { return k * (k - 1) / 2; }

/// n^{r-2} p^{C(r,2)-1}: the expected number of K_r^- completions of a pair, up to lower-order terms.
inline double lambda_r(double n, double p, int r) {
  detail::require(n >= 1, "lambda_r: n >= 1");
  detail::require(p >= 0 && p <= 1, "lambda_r: p in [0,1]");
  detail::require(r >= 2, "lambda_r: r >= 2");
  return std::pow(n, r - 2) * std::pow(p, static_cast<double>(choose2(r) - 1));
}

/// C n^{-2/(r+1)} (log n)^{2/((r+1)(r-2))}, natural logarithm.
inline double threshold_p(double n, int r, double c) {
  detail::require(n >= 3, "threshold_p: n >= 3");
  detail::require(r >= 3, "threshold_p: r >= 3");
  const double rr = r;
  return c * std::pow(n, -2.0 / (rr + 1)) * std::pow(std::log(n), 2.0 / ((rr + 1) * (rr - 2)));
}

/// 24 r log r 2^r max{(zeta p)^{-1}, n p (zeta^{r-2} Lambda_r)^{-1}}.
inline double sigma_cap(double n, double p, int r, double zeta) {
  detail::require(zeta > 0 && p > 0, "sigma_cap: zeta and p must be positive");
  detail::require(r >= 3, "sigma_cap: r >= 3");
  const double prefactor = 24.0 * r * std::log(static_cast<double>(r)) * std::ldexp(1.0, r);
  const double first = 1.0 / (zeta * p);
  const double second = n * p / (std::pow(zeta, r - 2) * lambda_r(n, p, r));
  return prefactor * std::max(first, second);
}

/// True when the n p / (zeta^{r-2} Lambda_r) branch of sigma_cap is the larger one.
inline bool sigma_cap_second_regime(double n, double p, int r, double zeta) {
  return n * p / (std::pow(zeta, r - 2) * lambda_r(n, p, r)) > 1.0 / (zeta * p);
}

struct AbcConstants {
  Rational a, b, c;
  Rational gamma_max;
};

/// a_r = (r-4)/(2(r-3)), b_r = r(r-3)/(2(r-1)^2), c_r = (a_r+b_r)/2 and
/// gamma_max = (1/2) ((c_r - a_r)/(4r^2+6))^{r-2}.
inline AbcConstants abc_constants(int r) {
  detail::require(r >= 4, "abc_constants: r >= 4");
  AbcConstants k;
  k.a = Rational(r - 4, 2 * (r - 3));
  k.b = Rational(static_cast<long long>(r) * (r - 3), 2LL * (r - 1) * (r - 1));
  if (!(k.a < k.b)) throw std::logic_error("abc_constants: a_r < b_r violated");
  k.c = (k.a + k.b) / 2;
  k.gamma_max = rpow((k.c - k.a) / (4LL * r * r + 6), static_cast<unsigned>(r - 2)) / 2;
  return k;
}

/// zeta = (2 gamma)^{1/(r-2)}.
inline double zeta_from_gamma(double gamma, int r) {
  detail::require(r >= 3, "zeta_from_gamma: r >= 3");
  detail::require(gamma > 0 && gamma < 0.5, "zeta_from_gamma: gamma in (0, 1/2)");
  return std::pow(2 * gamma, 1.0 / (r - 2));
}

struct ParamSet {
  int n = 0;
  int r = 0;
  double p = 0;
  double C = 1;
  double delta = 0;
  double gamma = 0;
  double alpha = 0;
  double zeta = 0;
  // derived
  double lambda = 0;
  std::optional<AbcConstants> abc;
  double sigma = 0;
  double threshold = 0;
};

struct ParamInput {
  int n = 0;
  int r = 4;
  double p = 0;
  double C = 1;
  double delta = 0.1;
  std::optional<double> gamma;  // defaults to gamma_max / 2 when r >= 4
  double alpha = 0.2;
};

inline ParamSet make_params(const ParamInput& in) {
  detail::require(in.n >= 3, "make_params: n >= 3");
  detail::require(in.r >= 3, "make_params: r >= 3");
  detail::require(in.p > 0 && in.p <= 1, "make_params: p in (0,1]");
  ParamSet s;
  s.n = in.n;
  s.r = in.r;
  s.p = in.p;
  s.C = in.C;
  s.delta = in.delta;
  s.alpha = in.alpha;
  if (in.r >= 4) s.abc = abc_constants(in.r);
  if (in.gamma) {
    s.gamma = *in.gamma;
  } else {
    detail::require(s.abc.has_value(), "make_params: gamma must be given when r = 3");
    s.gamma = to_double(s.abc->gamma_max) / 2;
  }
  s.zeta = zeta_from_gamma(s.gamma, in.r);
  s.lambda = lambda_r(in.n, in.p, in.r);
  s.sigma = sigma_cap(in.n, in.p, in.r, s.zeta);
  s.threshold = threshold_p(in.n, in.r, in.C);
  return s;
}

}  // namespace turan
