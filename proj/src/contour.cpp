#include <lseries/contour.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace lseries {
namespace {

double factorial(int n) { return std::tgamma(n + 1.0); }

// int_{z0}^{z0+1} g(z) dz.
Estimate unit_segment(const ComplexIntegrand& g, Complex z0, const QuadratureConfig& cfg) {
  return integrate_segment(g, z0, z0 + 1.0, cfg).estimate();
}

void require_weakly_holomorphic(const FourierExpansion& f, const char* what) {
  if (!f.is_weakly_holomorphic()) throw DomainError(std::string(what) + ": needs a weakly holomorphic expansion");
}

void require_harmonic_weight(const FourierExpansion& f, const char* what) {
  if (!f.nonholo.empty() && f.weight > 0) {
    throw DomainError(std::string(what) + ": a non-holomorphic part requires k <= 0");
  }
}

// Error added for the truncated tail of f on a segment at height y.
double truncation_error(const FourierExpansion& f, double y, const char* what) {
  double t = truncation_bound(f, y);
  if (t > 1e-6) throw PrecisionError(std::string(what) + ": expansion truncation too large at Im z = " + std::to_string(y));
  return t;
}

// Sum over m of e^{itmw} (z+m)^{s-1} (xi f^c)(t(2i - z - m)), stopping once the
// remaining terms are below `tol` by the bound |xi f^c(tau)| <= xi_abs(Im tau).
Complex r_t_sum(const FourierExpansion& xi, double s, Complex z, Complex w, double t, double xi_abs) {
  const Complex phase_step = std::exp(kI * t * w);
  const double decay = std::abs(phase_step);
  if (!(decay < 1.0)) throw RegimeError("R_t: needs Im(w) > 0");
  Complex phase = 1.0;
  Complex acc = 0.0;
  for (int m = 0; m < 200000; ++m) {
    const Complex zm = z + static_cast<double>(m);
    acc += xi_abs == 0.0 ? Complex{} : eval_value(xi, t * (2.0 * kI - zm)) * cpow(zm, s - 1.0) * phase;
    phase *= phase_step;
    const double next = std::abs(phase) * xi_abs * std::pow(std::abs(zm) + 1.0, std::max(0.0, s - 1.0));
    if (next / (1.0 - decay) < 1e-18 * std::max(1.0, std::abs(acc))) return acc;
  }
  throw ConvergenceError("R_t: m-sum did not converge");
}

// sum |c_n| e^{-2 pi n y} for a finite-support cusp form.
double cusp_abs(const FourierExpansion& g, double y) {
  double acc = 0.0;
  for (const auto& [n, c] : g.holo) acc += std::abs(c) * std::exp(-kTwoPi * n * y);
  return acc;
}

Estimate r_one_dim(const FourierExpansion& f, double s, Complex w, const QuadratureConfig& cfg) {
  const int k = f.weight;
  Estimate out;
  for (const auto& [n, b] : f.nonholo) {
    const double nn = static_cast<double>(n);
    const Complex shift = kTwoPi * nn + w;
    RealIntegrand g = [&](double t) {
      return std::exp(4.0 * kPi * nn * t) * std::pow(t, s - k) * exp_int_E(1.0 - s, shift * t).value;
    };
    SegmentIntegral part = integrate_semi_infinite(g, 1.0, 1.0, cfg);
    const Complex pre = -b * std::pow(-4.0 * kPi * nn, 1 - k);
    out += pre * part.estimate();
  }
  return out;
}

Estimate r_double_integral(const FourierExpansion& f, double s, Complex w, const QuadratureConfig& cfg) {
  if (!(w.imag() > 0.0)) throw RegimeError("r_remainder: the double-integral form needs Im(w) > 0");
  const int k = f.weight;
  const FourierExpansion xi = xi_image(f, true);
  const double t_max = cfg.t_cutoff;
  QuadratureConfig inner = cfg;
  inner.initial_panels = std::max(cfg.initial_panels, static_cast<int>(std::ceil(t_max - 1.0)));

  double inner_err = 0.0;
  ComplexIntegrand g = [&](Complex z) {
    RealIntegrand h = [&](double t) {
      return std::exp(kI * t * z * w) * std::pow(t, s - k) * r_t_sum(xi, s, z, w, t, cusp_abs(xi, t));
    };
    SegmentIntegral in = integrate_real(h, 1.0, t_max, inner);
    inner_err = std::max(inner_err, in.est_error);
    return in.value;
  };
  Estimate outer = unit_segment(g, kI, cfg);
  // The t-tail beyond t_max is bounded by the leading e^{-2 pi t} behaviour.
  const double tail = cusp_abs(xi, t_max) * std::pow(t_max, std::abs(s - k)) * std::exp(-w.real() * t_max) /
                      (1.0 - std::exp(-w.imag()));
  outer.error += inner_err + tail;
  return ipow(-s) * outer;
}

// Bernoulli-type integrand pieces shared by the s = 1 and s = 1 + m formulas.
Estimate xi_bernoulli_integral(const FourierExpansion& f, Complex coeff_b, int b_index,
                               const std::vector<std::pair<double, int>>& x_terms, const QuadratureConfig& cfg) {
  const FourierExpansion xi = xi_image(f, true);
  ComplexIntegrand g = [&](Complex z) {
    Complex bracket = coeff_b * bernoulli_poly(b_index, z) / static_cast<double>(b_index);
    const double x = z.real();
    for (const auto& [d, idx] : x_terms) bracket -= d * bernoulli_poly(idx, x);
    return eval_value(xi, z) * bracket;
  };
  return unit_segment(g, kI, cfg);
}

Estimate zeta_star_integral(const FourierExpansion& f, int m, const QuadratureConfig& cfg) {
  const double a = 1.0 - m;
  ComplexIntegrand g = [&](Complex z) {
    if (a <= 0.0) {
      // zeta(-n, z) = -B_{n+1}(z)/(n+1)
      const int n1 = 1 - static_cast<int>(a);
      return eval_value(f, z) * (-bernoulli_poly(n1, z) / static_cast<double>(n1));
    }
    return eval_value(f, z) * hurwitz_zeta_star(a, z).value;
  };
  Estimate e = unit_segment(g, kI, cfg);
  e.error += truncation_error(f, 1.0, "rhs_integer_value");
  return ipow(-static_cast<double>(m)) * e;
}

// Number of terms after which e^{-xm} (m+3)^g, summed geometrically, is below
// 1e-18. It depends on x alone so the integrand stays smooth in z.
int centered_term_count(double s, double x) {
  const double growth = std::max(0.0, s - 1.0);
  const double ratio = 1.0 / (1.0 - std::exp(-0.5 * x));
  for (int m = 1; m < 50000000; m *= 2) {
    const double dm = static_cast<double>(m);
    if (x * dm > growth + 1.0 && 4.0 * std::exp(-x * dm) * std::pow(dm + 3.0, growth) * ratio < 1e-18) {
      return m;
    }
  }
  throw ConvergenceError("lerch_term_centered: x too small");
}

// sum_m [h(z+m) - h(c+m)] with h(u) = e^{-xu} u^{s-1}. Differencing term by
// term keeps the summands O(|h'|) instead of letting two ~x^{-s} sums cancel.
Complex centered_lerch_sum(double s, double x, Complex z, Complex c, int terms) {
  Complex acc = 0.0;
  Complex ez = std::exp(-x * z);
  Complex ec = std::exp(-x * c);
  const double step = std::exp(-x);
  for (int m = 0; m < terms; ++m) {
    const double dm = static_cast<double>(m);
    acc += ez * cpow(z + dm, s - 1.0) - ec * cpow(c + dm, s - 1.0);
    ez *= step;
    ec *= step;
  }
  return acc;
}

// i^{-s} int f(z) [e^{-xz} zeta(1-s, ix/2pi, z) - (same at z = c)] dz; the
// subtraction is free because f has zero mean over a period, and it removes
// the ~x^{s-1} constant that would otherwise cancel in the integral.
Estimate lerch_term_centered(const FourierExpansion& f, double s, double x, const QuadratureConfig& cfg) {
  const Complex c = kI + 0.5;
  const int terms = centered_term_count(s, x);
  ComplexIntegrand g = [&](Complex z) { return eval_value(f, z) * centered_lerch_sum(s, x, z, c, terms); };
  // Rounding in the summands, each up to max_u e^{-xu} u^{s-1}, sets a noise
  // floor the quadrature cannot go below.
  const double hmax = s > 1.0 ? std::max(1.0, std::pow((s - 1.0) / (std::exp(1.0) * x), s - 1.0)) : 1.0;
  double fmax = 0.0;
  for (int j = 0; j <= 8; ++j) fmax = std::max(fmax, std::abs(eval_value(f, kI + j / 8.0)));
  const double noise = 4.0 * std::numeric_limits<double>::epsilon() * std::sqrt(static_cast<double>(terms)) * hmax * fmax;
  QuadratureConfig qc = cfg;
  qc.abs_tol = std::max(cfg.abs_tol, noise);
  Estimate e = unit_segment(g, kI, qc);
  e.error += noise;
  return ipow(-s) * e;
}

}  // namespace

Estimate ray_integral_bend(double a, Complex w, double T, const QuadratureConfig& cfg, bool tail_correction) {
  const bool upper = w.imag() > 0.0;
  const bool real_regime = w.imag() == 0.0 && w.real() > 0.0 && a < 0.0;
  if (!upper && !real_regime) {
    throw RegimeError("ray_integral_bend: needs Im(w) > 0, or Im(w) = 0 with Re(w) > 0 and a < 0");
  }
  if (!(T > 0.0)) throw DomainError("ray_integral_bend: T must be positive");
  QuadratureConfig c = cfg;
  c.initial_panels = std::max(cfg.initial_panels, static_cast<int>(std::ceil(T)));
  RealIntegrand g = [&](double t) {
    const Complex z = kI + t;
    return std::exp(kI * w * z) * cpow(z, a - 1.0);
  };
  Estimate out = integrate_real(g, 0.0, T, c).estimate();
  if (!tail_correction) return out;

  // int_Z^inf e^{cz} z^b dz ~ -(e^{cZ} Z^b / c) sum_j (-1)^j b(b-1)...(b-j+1) / (cZ)^j
  const Complex cc = kI * w;
  const Complex Z = kI + T;
  const double b = a - 1.0;
  const Complex pre = -std::exp(cc * Z) * cpow(Z, b) / cc;
  Complex term = 1.0;
  Complex sum = 1.0;
  double last = 1.0;
  for (int j = 1; j <= 40; ++j) {
    Complex next = term * (-(b - j + 1.0)) / (cc * Z);
    if (std::abs(next) >= last) break;
    term = next;
    last = std::abs(term);
    sum += term;
    if (last < 1e-17 * std::abs(sum)) break;
  }
  out.value += pre * sum;
  out.error += std::abs(pre) * last;
  return out;
}

Estimate rhs_lerch_term(const FourierExpansion& f, double s, Complex w, const QuadratureConfig& cfg) {
  f.validate();
  const Complex a = w / kTwoPi;
  ComplexIntegrand g = [&](Complex z) {
    return eval_value(f, z) * std::exp(kI * w * z) * lerch_zeta(1.0 - s, a, z).value;
  };
  Estimate e = unit_segment(g, kI, cfg);
  e.error += truncation_error(f, 1.0, "rhs_main_theorem");
  return ipow(-s) * e;
}

Estimate r_remainder(const FourierExpansion& f, double s, Complex w, RForm form, const QuadratureConfig& cfg) {
  f.validate();
  if (f.nonholo.empty()) return {};
  require_harmonic_weight(f, "r_remainder");
  if (w.imag() < 0.0) throw RegimeError("r_remainder: needs Im(w) >= 0");
  return form == RForm::one_dim ? r_one_dim(f, s, w, cfg) : r_double_integral(f, s, w, cfg);
}

Estimate rhs_main_theorem(const FourierExpansion& f, double s, Complex w, const QuadratureConfig& cfg, RForm form) {
  if (!(w.imag() > 0.0)) throw RegimeError("rhs_main_theorem: needs Im(w) > 0");
  if (!f.nonholo.empty() && w.real() < 0.0) throw RegimeError("rhs_main_theorem: harmonic case needs Re(w) >= 0");
  Estimate out = rhs_lerch_term(f, s, w, cfg);
  if (!f.nonholo.empty()) out += r_remainder(f, s, w, form, cfg);
  return out;
}

Estimate rhs_bern_whf(const FourierExpansion& f, int m, const QuadratureConfig& cfg) {
  if (m < 0) throw DomainError("rhs_bern: m must be >= 0");
  ComplexIntegrand g = [&](Complex z) {
    return eval_value(f, z) * bernoulli_poly(m + 1, z) / static_cast<double>(m + 1);
  };
  Estimate e = unit_segment(g, kI, cfg);
  e.error += truncation_error(f, 1.0, "rhs_bern");
  return (-ipow(-m - 1.0)) * e;
}

Estimate rhs_bern(const FourierExpansion& f, int m, const QuadratureConfig& cfg) {
  f.validate();
  Estimate out = rhs_bern_whf(f, m, cfg);
  if (f.nonholo.empty()) return out;
  require_harmonic_weight(f, "rhs_bern");
  const int k = f.weight;

  Complex c_km = 0.0;
  for (int l = 0; l <= m; ++l) {
    c_km -= factorial(m) * factorial(l - k) * ipow(static_cast<double>(k + m + 2 * l)) /
            (factorial(1 + m - k) * factorial(l));
  }
  std::vector<std::pair<double, int>> x_terms;
  for (int l = 0; l <= m; ++l) {
    for (int j = 0; j <= m - l; ++j) {
      const double sign = (j % 2 == 1) ? 1.0 : -1.0;  // (-1)^{j-1}
      const double d = factorial(m) * sign * factorial(l - k) /
                       (factorial(l) * factorial(j + l - k + 1) * factorial(1 - l + m - j));
      x_terms.emplace_back(d, 1 - l + m - j);
    }
  }
  out += xi_bernoulli_integral(f, c_km, 2 + m - k, x_terms, cfg);
  return out;
}

Estimate rhs_polyl(const FourierExpansion& f, const QuadratureConfig& cfg) {
  f.validate();
  ComplexIntegrand g = [&](Complex z) { return eval_value(f, z) * z; };
  Estimate out = kI * unit_segment(g, kI, cfg);
  out.error += truncation_error(f, 1.0, "rhs_polyl");
  if (f.nonholo.empty()) return out;
  require_harmonic_weight(f, "rhs_polyl");
  const int k = f.weight;
  // -(1/(1-k)) (i^k B_{2-k}(z)/(2-k) + x), with x = B_1(x) + 1/2; the 1/2
  // integrates to zero against the cusp form.
  const double inv = 1.0 / (1.0 - k);
  const Complex coeff = -inv * ipow(static_cast<double>(k));
  out += xi_bernoulli_integral(f, coeff, 2 - k, {{inv, 1}}, cfg);
  return out;
}

Estimate rhs_integer_value(const FourierExpansion& f, int m, const QuadratureConfig& cfg) {
  f.validate();
  if (f.is_weakly_holomorphic()) return zeta_star_integral(f, m, cfg);
  require_harmonic_weight(f, "rhs_integer_value");
  if (m == 1) return rhs_polyl(f, cfg);
  if (m >= 2) return rhs_bern(f, m - 1, cfg);
  throw RegimeError("rhs_integer_value: no closed form for harmonic f at m <= 0");
}

Estimate rhs_negative_s(const FourierExpansion& f, double s, const QuadratureConfig& cfg) {
  if (!(s < 0.0)) throw DomainError("rhs_negative_s: needs s < 0");
  f.validate();
  require_weakly_holomorphic(f, "rhs_negative_s");
  if (f.is_zero()) return {};
  ComplexIntegrand g = [&](Complex z) { return eval_value(f, z) * hurwitz_zeta(1.0 - s, z).value; };
  Estimate e = unit_segment(g, kI, cfg);
  e.error += truncation_error(f, 1.0, "rhs_negative_s");
  return ipow(-s) * e;
}

Estimate rhs_negative_s_polygamma(const FourierExpansion& f, int s, const QuadratureConfig& cfg, bool as_printed) {
  if (s >= 0) throw DomainError("rhs_negative_s_polygamma: needs integer s < 0");
  f.validate();
  require_weakly_holomorphic(f, "rhs_negative_s_polygamma");
  if (f.is_zero()) return {};
  const int order = -s;
  ComplexIntegrand g = [&](Complex z) { return eval_value(f, z) * polygamma(order, z).value; };
  Estimate e = unit_segment(g, kI, cfg);
  e.error += truncation_error(f, 1.0, "rhs_negative_s_polygamma");
  const Complex pre = ipow(as_printed ? 2.0 - s : 2.0 + s) / factorial(order);
  return pre * e;
}

Estimate compact_support_value(const FourierExpansion& f, const AnalyticSeed& seed, double a, double b,
                               const QuadratureConfig& cfg) {
  if (!(a > 0.0 && a < b)) throw DomainError("compact_support_value: needs 0 < a < b");
  f.validate();
  require_weakly_holomorphic(f, "compact_support_value");
  seed.validate();
  if (seed.is_zero() || f.is_zero()) return {};
  for (double y : {a, b}) {
    const Complex z1{10.0, y};
    const Complex z2{1e4, y};
    if (!(std::abs(seed(z2)) * std::abs(z2) < std::abs(seed(z1)) * std::abs(z1))) {
      throw DomainError("compact_support_value: seed does not decay faster than 1/|z|");
    }
  }
  ComplexIntegrand g = [&](Complex z) { return eval_value(f, z) * seed.periodized(z).value; };
  Estimate lo = unit_segment(g, Complex{0.0, a}, cfg);
  Estimate hi = unit_segment(g, Complex{0.0, b}, cfg);
  Estimate out{-kI * (lo.value - hi.value), lo.error + hi.error};
  out.error += truncation_error(f, a, "compact_support_value") * 2.0 * std::abs(seed.periodized(Complex{0.0, a}).value);
  return out;
}

Estimate bfi_quantity(const FourierExpansion& f) {
  f.validate();
  Estimate out;
  for (const auto& [n, a] : f.holo) out += (2.0 * a) * cal_EI(kTwoPi * n);
  if (!f.finite_support) {
    double k = 0.0;
    for (const auto& [n, a] : f.holo) {
      if (n >= 1) k = std::max(k, std::abs(a) * std::exp(-f.growth_const * std::sqrt(static_cast<double>(n))));
    }
    for (int n = f.known_through + 1; n < f.known_through + 10000; ++n) {
      double term = 2.0 * k * std::exp(f.growth_const * std::sqrt(static_cast<double>(n)) - kTwoPi * n) / (kTwoPi * n);
      out.error += term;
      if (term < 1e-30) break;
    }
  }
  return out;
}

Estimate ray_contour_integral(const FourierExpansion& f, double s, Complex w, int K, const QuadratureConfig& cfg) {
  if (K < 1) throw DomainError("ray_contour_integral: K must be >= 1");
  ComplexIntegrand g = [&](Complex z) { return eval_value(f, z) * std::exp(kI * w * z) * cpow(z, s - 1.0); };
  Estimate out;
  for (int m = 0; m < K; ++m) out += unit_segment(g, kI + static_cast<double>(m), cfg);
  return out;
}

Estimate lerch_partial_contour(const FourierExpansion& f, double s, Complex w, int K, const QuadratureConfig& cfg) {
  if (K < 1) throw DomainError("lerch_partial_contour: K must be >= 1");
  ComplexIntegrand g = [&](Complex z) {
    Complex partial = 0.0;
    for (int m = 0; m < K; ++m) {
      partial += std::exp(kI * w * static_cast<double>(m)) * cpow(z + static_cast<double>(m), s - 1.0);
    }
    return eval_value(f, z) * std::exp(kI * w * z) * partial;
  };
  return unit_segment(g, kI, cfg);
}

Estimate neville_at_zero(const std::vector<double>& x, const std::vector<Complex>& y) {
  if (x.size() != y.size() || x.empty()) throw DomainError("neville_at_zero: need matching non-empty samples");
  std::vector<Complex> p = y;
  const std::size_t n = x.size();
  // prev ends as the degree n-2 value through the samples closest to zero.
  Complex prev = p.back();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) {
      // P_{i..i+level}(0) from P_{i..i+level-1} and P_{i+1..i+level}.
      p[i] = (x[i + level] * p[i] - x[i] * p[i + 1]) / (x[i + level] - x[i]);
    }
    if (level + 2 == n) prev = p[1];
  }
  return {p[0], n > 1 ? std::abs(p[0] - prev) : 0.0};
}

Estimate rhs_limit_oracle(const FourierExpansion& f, double s, const QuadratureConfig& cfg, LimitOptions opts) {
  f.validate();
  require_harmonic_weight(f, "rhs_limit_oracle");
  if (opts.points < 2 || !(opts.x0 > 0.0)) throw ConfigError("rhs_limit_oracle: needs x0 > 0 and at least two points");
  std::vector<double> xs;
  std::vector<Complex> ys;
  double err = 0.0;
  for (int j = 0; j < opts.points; ++j) {
    const double x = opts.x0 * std::ldexp(1.0, -j);
    Estimate v = lerch_term_centered(f, s, x, cfg);
    if (!f.nonholo.empty()) v += r_one_dim(f, s, Complex{0.0, x}, cfg);
    xs.push_back(x);
    ys.push_back(v.value);
    err = std::max(err, v.error);
  }
  Estimate out = neville_at_zero(xs, ys);
  out.error += err;
  out.error += truncation_error(f, 1.0, "rhs_limit_oracle");
  return out;
}

}  // namespace lseries
