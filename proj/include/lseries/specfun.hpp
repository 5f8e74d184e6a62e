#pragma once

// Special functions on the principal branch: incomplete gamma, generalized
// exponential integral, EI, Lerch/Hurwitz zeta, polygamma, Bernoulli
// polynomials. All routines are pure; the only shared state is the
// Bernoulli table, built once on first use.

#include <lseries/common.hpp>

namespace lseries {

struct SpecFunConfig {
  double target_abs_tol = 1e-15;
  double target_rel_tol = 1e-15;
  int max_terms = 20000;
  /// |z| beyond which E_s(z) / Gamma(r, z) switch from power series to
  /// continued fraction (when the argument is away from the negative axis).
  double series_switch_radius = 12.0;

  void validate() const;
};

/// Complex Gamma function (Lanczos, with reflection).
Complex gamma(Complex z);
/// Principal branch of log Gamma(z) for Re z > 0; reflection elsewhere.
Complex lgamma(Complex z);

/// Upper incomplete gamma Gamma(r, z) = int_z^inf e^{-t} t^{r-1} dt.
Estimate inc_gamma_upper(Complex r, Complex z, const SpecFunConfig& cfg = {});

/// Generalized exponential integral E_s(z) = z^{s-1} Gamma(1-s, z), continued to
/// the negative real axis from above.
Estimate exp_int_E(Complex s, Complex z, const SpecFunConfig& cfg = {});

/// EI(w): E_1(w) for w > 0, -Ei(-w) for w < 0 (always real).
Estimate cal_EI(double w, const SpecFunConfig& cfg = {});

/// Exponential integral Ei(x) for real x > 0 (principal value).
double ei(double x);

/// Lerch zeta sum_{m>=0} e^{2 pi i m a} (z+m)^{-s}.
Estimate lerch_zeta(Complex s, Complex a, Complex z, const SpecFunConfig& cfg = {});

/// Hurwitz zeta zeta(s, z) for z off (-inf, 0], s != 1, by Euler-Maclaurin.
Estimate hurwitz_zeta(Complex s, Complex z, const SpecFunConfig& cfg = {});

/// Constant Laurent term of zeta(s, z) at s = a: zeta(a, z) for a != 1, -psi(z) at a = 1.
Estimate hurwitz_zeta_star(double a, Complex z, const SpecFunConfig& cfg = {});

/// Polygamma psi^{(m)}(z); m = 0 is the digamma function.
Estimate polygamma(int m, Complex z, const SpecFunConfig& cfg = {});

inline constexpr int kMaxBernoulliIndex = 64;

/// Bernoulli number B_n (B_1 = -1/2), exact table converted to double.
double bernoulli_number(int n);
/// Bernoulli polynomial B_n(z) from exact rational coefficients.
Complex bernoulli_poly(int n, Complex z);

}  // namespace lseries
