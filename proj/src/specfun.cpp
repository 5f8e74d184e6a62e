#include <lseries/specfun.hpp>

#include <algorithm>
#include <array>
#include <limits>
#include <string>

namespace lseries {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

Complex lanczos_lgamma(Complex z) {
  // Valid for Re z >= 0.5.
  z -= 1.0;
  Complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(kTwoPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

bool is_nonpositive_integer(Complex z) { return is_integer(z) && z.real() <= 0.0; }

void require_finite(Complex v, const char* what) {
  if (!is_finite(v)) throw OverflowError(std::string(what) + ": result not finite");
}

// --- E_s(z) -------------------------------------------------------------

// Power series from the analytic continuation formula. Converges for all z.
Estimate exp_int_series(Complex s, Complex z, const SpecFunConfig& cfg) {
  Complex mz = -z;
  Complex sum = 0.0;
  double abs_sum = 0.0;
  Complex term = 1.0;  // (-z)^k / k!
  const bool natural = is_integer(s) && s.real() >= 1.0;
  const int n = natural ? static_cast<int>(s.real()) : 0;
  const double zabs = std::abs(z);
  int k = 0;
  for (; k < cfg.max_terms; ++k) {
    if (!(natural && k == n - 1)) {
      Complex c = term / (1.0 - s + static_cast<double>(k));
      sum += c;
      abs_sum += std::abs(c);
    }
    if (k > zabs && std::abs(term) <= kEps * 0.01 * std::max(std::abs(sum), 1e-300)) break;
    term *= mz / static_cast<double>(k + 1);
  }
  if (k == cfg.max_terms) throw ConvergenceError("exp_int_E: power series did not converge");

  Complex lead;
  double lead_abs;
  if (natural) {
    // (-z)^{n-1}/(n-1)! (psi(n) - Log z)
    double psi_n = -kEulerGamma;
    double fact = 1.0;
    for (int j = 1; j < n; ++j) {
      psi_n += 1.0 / j;
      fact *= j;
    }
    Complex pw = cpow(mz, static_cast<double>(n - 1)) / fact;
    lead = pw * (psi_n - clog(z));
    lead_abs = std::abs(pw) * (std::abs(psi_n) + std::abs(clog(z)));
  } else {
    lead = cpow(z, s - 1.0) * gamma(1.0 - s);
    lead_abs = std::abs(lead);
  }
  Complex value = lead - sum;
  require_finite(value, "exp_int_E");
  return {value, 8.0 * kEps * (abs_sum + lead_abs) + kEps * std::abs(value)};
}

// Continued fraction (modified Lentz). Fast away from the negative axis.
bool exp_int_cf(Complex s, Complex z, const SpecFunConfig& cfg, Estimate& out) {
  const double tiny = 1e-300;
  Complex b = z + s;
  Complex f = (std::abs(b) < tiny) ? Complex{tiny, 0.0} : b;
  Complex c = f;
  Complex d = 0.0;
  double delta_err = 1.0;
  int i = 1;
  for (; i < cfg.max_terms; ++i) {
    Complex a = -static_cast<double>(i) * (s + static_cast<double>(i) - 1.0);
    b += 2.0;
    d = b + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = b + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    Complex delta = c * d;
    f *= delta;
    delta_err = std::abs(delta - 1.0);
    if (delta_err < kEps) break;
  }
  if (i == cfg.max_terms) return false;
  Complex value = std::exp(-z) / f;
  if (!is_finite(value)) return false;
  out = {value, std::abs(value) * (kEps * (4.0 + 0.1 * i) + delta_err)};
  return true;
}

// --- Gamma(r, z) ---------------------------------------------------------

// Legendre continued fraction for Gamma(r, z).
bool inc_gamma_cf(Complex r, Complex z, const SpecFunConfig& cfg, Estimate& out) {
  const double tiny = 1e-300;
  Complex b = z + 1.0 - r;
  Complex c = 1.0 / tiny;
  Complex d = 1.0 / b;
  Complex h = d;
  double delta_err = 1.0;
  int i = 1;
  for (; i < cfg.max_terms; ++i) {
    Complex an = -static_cast<double>(i) * (static_cast<double>(i) - r);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    Complex delta = d * c;
    h *= delta;
    delta_err = std::abs(delta - 1.0);
    if (delta_err < kEps) break;
  }
  if (i == cfg.max_terms) return false;
  Complex value = std::exp(r * clog(z) - z) * h;
  if (!is_finite(value)) return false;
  out = {value, std::abs(value) * (kEps * (8.0 + 0.1 * i) + delta_err)};
  return true;
}

// gamma(r, z) = z^r e^{-z} sum_k z^k / (r)_{k+1}; r not a non-positive integer.
Estimate lower_gamma_series(Complex r, Complex z, const SpecFunConfig& cfg) {
  Complex term = 1.0 / r;
  Complex sum = term;
  double abs_sum = std::abs(term);
  int k = 1;
  for (; k < cfg.max_terms; ++k) {
    term *= z / (r + static_cast<double>(k));
    sum += term;
    abs_sum += std::abs(term);
    if (std::abs(term) <= kEps * 0.01 * std::abs(sum) && static_cast<double>(k) > std::abs(z)) break;
  }
  if (k == cfg.max_terms) throw ConvergenceError("inc_gamma_upper: lower series did not converge");
  Complex pref = std::exp(r * clog(z) - z);
  return {pref * sum, std::abs(pref) * abs_sum * 8.0 * kEps};
}

// Gamma(-n, z) for n >= 0 from Gamma(0, z) and downward recurrence.
Estimate inc_gamma_nonpositive_int(int n, Complex z, const SpecFunConfig& cfg) {
  // Gamma(0, z) = -gamma - Log z - sum_{k>=1} (-z)^k / (k k!)
  Complex term = 1.0;
  Complex sum = 0.0;
  double abs_sum = 0.0;
  int k = 1;
  for (; k < cfg.max_terms; ++k) {
    term *= -z / static_cast<double>(k);
    Complex c = term / static_cast<double>(k);
    sum += c;
    abs_sum += std::abs(c);
    if (std::abs(c) <= kEps * 0.01 * std::max(std::abs(sum), 1e-300) && k > std::abs(z)) break;
  }
  if (k == cfg.max_terms) throw ConvergenceError("inc_gamma_upper: E_1 series did not converge");
  Complex logz = clog(z);
  Complex g = -kEulerGamma - logz - sum;
  double err = 8.0 * kEps * (abs_sum + kEulerGamma + std::abs(logz));
  Complex ez = std::exp(-z);
  for (int j = 1; j <= n; ++j) {
    double a = -static_cast<double>(j);
    Complex zpow = cpow(z, a);
    g = (g - zpow * ez) / a;
    err = (err + kEps * std::abs(zpow * ez)) / std::abs(a);
  }
  return {g, err};
}

}  // namespace

void SpecFunConfig::validate() const {
  if (!(target_abs_tol > 0.0) || !(target_rel_tol > 0.0)) {
    throw ConfigError("SpecFunConfig: tolerances must be strictly positive");
  }
  if (max_terms < 1) throw ConfigError("SpecFunConfig: max_terms must be >= 1");
  if (!(series_switch_radius > 0.0)) throw ConfigError("SpecFunConfig: series_switch_radius must be positive");
}

Complex lgamma(Complex z) {
  if (is_nonpositive_integer(z)) throw DomainError("lgamma: pole at non-positive integer");
  if (z.real() >= 0.5) return lanczos_lgamma(z);
  // log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z), branch not normalized.
  return std::log(kPi) - std::log(std::sin(kPi * z)) - lanczos_lgamma(1.0 - z);
}

Complex gamma(Complex z) {
  if (is_nonpositive_integer(z)) throw DomainError("gamma: pole at non-positive integer");
  if (z.real() >= 0.5) return std::exp(lanczos_lgamma(z));
  return kPi / (std::sin(kPi * z) * std::exp(lanczos_lgamma(1.0 - z)));
}

Estimate inc_gamma_upper(Complex r, Complex z, const SpecFunConfig& cfg) {
  cfg.validate();
  if (z == Complex{0.0, 0.0}) {
    if (r.real() <= 0.0) throw DomainError("inc_gamma_upper: z = 0 requires Re(r) > 0");
    Complex g = gamma(r);
    return {g, 4.0 * kEps * std::abs(g)};
  }
  if (-z.real() > 700.0) throw OverflowError("inc_gamma_upper: |z| beyond safe exponent range");

  const double zabs = std::abs(z);
  const double theta = std::abs(std::arg(z));
  if (zabs > 2.0 && theta <= 0.75 * kPi) {
    Estimate out;
    if (inc_gamma_cf(r, z, cfg, out)) return out;
  }
  if (is_nonpositive_integer(r)) {
    return inc_gamma_nonpositive_int(static_cast<int>(-r.real()), z, cfg);
  }
  Estimate lower = lower_gamma_series(r, z, cfg);
  Complex g = gamma(r);
  Complex value = g - lower.value;
  require_finite(value, "inc_gamma_upper");
  return {value, lower.error + 4.0 * kEps * std::abs(g)};
}

Estimate exp_int_E(Complex s, Complex z, const SpecFunConfig& cfg) {
  cfg.validate();
  if (z == Complex{0.0, 0.0}) throw DomainError("exp_int_E: z = 0");
  if (-z.real() > 700.0) throw OverflowError("exp_int_E: |z| beyond safe exponent range");
  const double zabs = std::abs(z);
  const double theta = std::abs(std::arg(z));
  // The power series loses ~e^{|z| + Re z} relative accuracy, so anything in the
  // right half plane beyond |z| = 2 goes to the continued fraction.
  const bool use_cf = zabs > 2.0 && (theta <= 0.5 * kPi + 0.25 ||
                                     (zabs > cfg.series_switch_radius && theta <= 0.75 * kPi));
  if (use_cf) {
    Estimate out;
    if (exp_int_cf(s, z, cfg, out)) return out;
  }
  return exp_int_series(s, z, cfg);
}

double ei(double x) {
  if (!(x > 0.0)) throw DomainError("ei: requires x > 0");
  if (x <= 40.0) {
    double term = 1.0;
    double sum = 0.0;
    for (int k = 1; k < 500; ++k) {
      term *= x / k;
      double c = term / k;
      sum += c;
      if (c < kEps * 0.01 * sum) break;
    }
    return kEulerGamma + std::log(x) + sum;
  }
  // Asymptotic: e^x/x sum_k k!/x^k, stopped at the smallest term.
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    double next = term * k / x;
    if (next > term) break;
    term = next;
    sum += term;
    if (term < kEps * 0.01) break;
  }
  return std::exp(x) / x * sum;
}

Estimate cal_EI(double w, const SpecFunConfig& cfg) {
  if (w == 0.0 || !std::isfinite(w)) throw DomainError("cal_EI: w must be finite and nonzero");
  if (w > 0.0) {
    Estimate e = exp_int_E(1.0, w, cfg);
    return {Complex{e.value.real(), 0.0}, e.error};
  }
  if (-w > 700.0) throw OverflowError("cal_EI: |w| beyond safe exponent range");
  double v = -ei(-w);
  return {Complex{v, 0.0}, 16.0 * kEps * std::abs(v)};
}

// --- zeta family -----------------------------------------------------------

Estimate hurwitz_zeta(Complex s, Complex z, const SpecFunConfig& cfg) {
  cfg.validate();
  if (s == Complex{1.0, 0.0}) throw DomainError("hurwitz_zeta: pole at s = 1");
  // z on the closed upper half-plane segment [i, i+1] has Re z = 0 at one end;
  // any z off the ray (-inf, 0] keeps every z + n off the branch cut.
  if (!(z.real() > 0.0) && z.imag() == 0.0) throw DomainError("hurwitz_zeta: requires z off (-inf, 0]");

  // Shift until Re(z + M) is large enough for the Euler-Maclaurin tail, then sum.
  // For Re s < 0 the head terms grow like (z+n)^{-s} and cancel against the
  // tail, so the shift is kept small; at non-positive integers the tail is a
  // finite polynomial identity and needs none.
  const bool nonpositive_int = is_integer(s) && s.real() <= 0.0;
  const double shift_target = nonpositive_int ? std::numeric_limits<double>::lowest() : std::max(s.real() < 0.0 ? 8.0 : 15.0, std::abs(s));
  int shift = 0;
  if (z.real() < shift_target) shift = static_cast<int>(std::ceil(shift_target - z.real()));
  if (shift > cfg.max_terms) throw ConvergenceError("hurwitz_zeta: shift exceeds max_terms");

  Complex head = 0.0;
  double head_abs = 0.0;
  for (int n = 0; n < shift; ++n) {
    Complex t = cpow(z + static_cast<double>(n), -s);
    head += t;
    head_abs += std::abs(t);
  }
  Complex zm = z + static_cast<double>(shift);
  Complex zm_pow = cpow(zm, -s);  // (z+M)^{-s}
  Complex tail = zm * zm_pow / (s - 1.0) + 0.5 * zm_pow;
  double tail_abs = std::abs(zm * zm_pow / (s - 1.0)) + std::abs(0.5 * zm_pow);

  // sum_j B_{2j}/(2j)! (s)_{2j-1} (z+M)^{-s-2j+1}
  Complex poch = s;               // (s)_{2j-1}
  Complex zpow = zm_pow / zm;     // (z+M)^{-s-1}
  const Complex inv_zm2 = 1.0 / (zm * zm);
  double fact = 2.0;              // (2j)!
  double last = 0.0;
  constexpr int kMaxOrder = 30;
  int j = 1;
  for (; j <= kMaxOrder; ++j) {
    Complex t = bernoulli_number(2 * j) / fact * poch * zpow;
    tail += t;
    tail_abs += std::abs(t);
    last = std::abs(t);
    if (poch == Complex{0.0, 0.0}) {
      last = 0.0;
      break;
    }
    if (j >= 8 && last <= kEps * 0.01 * std::max(std::abs(head + tail), 1e-300)) break;
    poch *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
    zpow *= inv_zm2;
    fact *= static_cast<double>((2 * j + 1) * (2 * j + 2));
  }
  Complex value = head + tail;
  require_finite(value, "hurwitz_zeta");
  return {value, last + 8.0 * kEps * (head_abs + tail_abs)};
}

namespace {

// Best rational approximation with small denominator, or 0 if none fits.
long small_denominator(double a, long& numerator) {
  for (long q = 1; q <= 1000; ++q) {
    double p = std::round(a * static_cast<double>(q));
    if (std::abs(a * static_cast<double>(q) - p) < 1e-12 * static_cast<double>(q)) {
      numerator = static_cast<long>(p);
      return q;
    }
  }
  return 0;
}

}  // namespace

Estimate lerch_zeta(Complex s, Complex a, Complex z, const SpecFunConfig& cfg) {
  cfg.validate();
  if (!(z.real() > 0.0) && z.imag() == 0.0) throw DomainError("lerch_zeta: requires z off (-inf, 0]");
  if (a.imag() < 0.0) throw DomainError("lerch_zeta: requires Im(a) >= 0");

  if (a.imag() == 0.0) {
    if (!(s.real() > 1.0)) {
      throw ConvergenceError("lerch_zeta: real a requires Re(s) > 1 for the defining series");
    }
    double frac = a.real() - std::floor(a.real());
    if (frac == 0.0 || frac == 1.0) return hurwitz_zeta(s, z, cfg);
    long p = 0;
    long q = small_denominator(frac, p);
    if (q == 0) throw ConvergenceError("lerch_zeta: irrational real a not supported");
    // sum over residues mod q of Hurwitz values.
    Estimate out;
    const Complex qs = cpow(static_cast<double>(q), -s);
    for (long r = 0; r < q; ++r) {
      Complex phase = std::exp(kI * kTwoPi * static_cast<double>(r) * frac);
      Estimate h = hurwitz_zeta(s, (z + static_cast<double>(r)) / static_cast<double>(q), cfg);
      out += (phase * qs) * h;
    }
    return out;
  }

  // Im(a) > 0: geometric decay with ratio |q| = e^{-2 pi Im a}.
  const Complex q = std::exp(kI * kTwoPi * a);
  const double qabs = std::abs(q);
  const double growth = std::max(0.0, -s.real());
  Complex sum = 0.0;
  double abs_sum = 0.0;
  Complex qm = 1.0;
  for (int m = 0; m < cfg.max_terms; ++m) {
    Complex zm = z + static_cast<double>(m);
    Complex t = qm * cpow(zm, -s);
    sum += t;
    abs_sum += std::abs(t);
    double zabs = std::abs(zm);
    double rho = qabs * std::pow(1.0 + 1.0 / zabs, growth) *
                 std::exp(std::abs(s.imag()) * std::abs(std::arg(zm) - std::arg(zm + 1.0)));
    if (rho < 1.0) {
      double tail = std::abs(t) * rho / (1.0 - rho);
      double tol = std::max(cfg.target_abs_tol, cfg.target_rel_tol * std::abs(sum)) * 0.01;
      if (tail <= tol) {
        require_finite(sum, "lerch_zeta");
        return {sum, tail + 4.0 * kEps * abs_sum};
      }
    }
    qm *= q;
  }
  throw ConvergenceError("lerch_zeta: max_terms exceeded");
}

Estimate hurwitz_zeta_star(double a, Complex z, const SpecFunConfig& cfg) {
  if (a == 1.0) {
    Estimate p = polygamma(0, z, cfg);
    return {-p.value, p.error};
  }
  return hurwitz_zeta(a, z, cfg);
}

Estimate polygamma(int m, Complex z, const SpecFunConfig& cfg) {
  cfg.validate();
  if (m < 0) throw DomainError("polygamma: order must be non-negative");
  if (is_nonpositive_integer(z)) throw DomainError("polygamma: pole at non-positive integer");
  if (m > 40) throw DomainError("polygamma: order too large");

  double mfact = 1.0;
  for (int j = 2; j <= m; ++j) mfact *= j;
  const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;  // (-1)^m

  // psi^{(m)}(z) = psi^{(m)}(z + n) - (-1)^m m! sum_{j<n} (z+j)^{-m-1}
  Complex shift_sum = 0.0;
  double shift_abs = 0.0;
  int n = 0;
  while (z.real() + n < 15.0 || std::abs(z + static_cast<double>(n)) < 15.0) {
    Complex t = cpow(z + static_cast<double>(n), -static_cast<double>(m + 1));
    shift_sum += t;
    shift_abs += std::abs(t);
    if (++n > cfg.max_terms) throw ConvergenceError("polygamma: shift exceeds max_terms");
  }
  Complex w = z + static_cast<double>(n);

  Complex asym = 0.0;
  double asym_abs = 0.0;
  double last = 0.0;
  const Complex inv_w2 = 1.0 / (w * w);
  if (m == 0) {
    // ln w - 1/(2w) - sum B_{2k} / (2k w^{2k})
    asym = std::log(w) - 0.5 / w;
    asym_abs = std::abs(asym);
    Complex wp = inv_w2;
    for (int k = 1; k <= 15; ++k) {
      Complex t = bernoulli_number(2 * k) / (2.0 * k) * wp;
      asym -= t;
      asym_abs += std::abs(t);
      last = std::abs(t);
      if (last <= kEps * 0.01 * std::abs(asym)) break;
      wp *= inv_w2;
    }
  } else {
    // (-1)^{m+1} [ (m-1)!/w^m + m!/(2 w^{m+1}) + sum_k B_{2k} (2k+m-1)!/(2k)! / w^{2k+m} ]
    double m1fact = mfact / m;
    Complex wm = cpow(w, -static_cast<double>(m));
    Complex acc = m1fact * wm + mfact / 2.0 * wm / w;
    asym_abs = std::abs(acc);
    Complex wp = wm * inv_w2;
    double ratio = m1fact;  // (2k+m-1)!/(2k)! at k = 0
    for (int k = 1; k <= 15; ++k) {
      // (2k+m-1)!/(2k)! = previous * (2k+m-2)(2k+m-1) / ((2k-1)(2k))
      ratio *= static_cast<double>((2 * k + m - 2) * (2 * k + m - 1)) /
               static_cast<double>((2 * k - 1) * (2 * k));
      Complex t = bernoulli_number(2 * k) * ratio * wp;
      acc += t;
      asym_abs += std::abs(t);
      last = std::abs(t);
      if (last <= kEps * 0.01 * std::abs(acc)) break;
      wp *= inv_w2;
    }
    asym = -sign_m * acc;
  }
  Complex value = asym - sign_m * mfact * shift_sum;
  require_finite(value, "polygamma");
  return {value, last + 8.0 * kEps * (asym_abs + mfact * shift_abs)};
}

}  // namespace lseries
