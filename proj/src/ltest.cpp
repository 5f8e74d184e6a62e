#include <lseries/ltest.hpp>

#include <algorithm>
#include <cmath>

namespace lseries {
namespace {

// Integrals on the series side can be many orders of magnitude below 1 (e.g.
// Re w = 30), so they are converged to relative accuracy only.
QuadratureConfig relative(const QuadratureConfig& cfg) {
  QuadratureConfig out = cfg;
  out.abs_tol = 1e-280;
  if (out.rel_tol <= 0.0) out.rel_tol = 1e-13;
  return out;
}

double semi_infinite_scale(Complex w) {
  double x = w.real();
  return x > 2.0 ? std::max(0.25, 4.0 / x) : 1.0;
}

// K with |a(n)| <= K e^{C sqrt n} over the stored positive range.
double growth_constant_k(const FourierExpansion& f) {
  double k = 0.0;
  for (const auto& [n, a] : f.holo) {
    if (n >= 1) k = std::max(k, std::abs(a) * std::exp(-f.growth_const * std::sqrt(static_cast<double>(n))));
  }
  return k;
}

// L|phi|(u): the Laplace transform of |phi|, which majorizes |(L phi)(u)|.
double abs_laplace(const TestFunction& phi, double u, const QuadratureConfig& cfg) {
  TestFunction mod = phi;
  mod.s = phi.s.real();
  mod.w = phi.w.real();
  mod.scale = std::abs(phi.scale);
  switch (phi.kind) {
    case TestFunctionKind::phi_sw:
      return std::abs(exp_int_E(1.0 - mod.s, u + mod.w).value) * mod.scale.real();
    case TestFunctionKind::fricke_of_phi_sw:
      return std::abs(pair_with(mod, [u](double y) { return Complex{std::exp(-u * y)}; }, cfg).value);
    case TestFunctionKind::compact_analytic: {
      RealIntegrand h = [&](double y) { return Complex{std::exp(-u * y) * std::abs(phi.seed(Complex{0.0, y}))}; };
      return std::abs(phi.scale) * std::abs(integrate_real(h, phi.lo, phi.hi, cfg).value);
    }
  }
  return 0.0;
}

// Tail sum_{n > known_through} K e^{C sqrt n} L|phi|(2 pi n).
double series_tail(const FourierExpansion& f, const TestFunction& phi, const QuadratureConfig& cfg) {
  if (f.finite_support) return 0.0;
  const double k = growth_constant_k(f);
  double total = 0.0;
  for (int n = f.known_through + 1; n < f.known_through + 10000; ++n) {
    double bound = k * std::exp(f.growth_const * std::sqrt(static_cast<double>(n)));
    double term = bound * abs_laplace(phi, kTwoPi * n, cfg);
    if (!std::isfinite(term)) throw AdmissibilityError("l_value: coefficient-growth majorant diverges");
    total += term;
    if (n > f.known_through + 3 && (term <= 1e-6 * total || term < 1e-300)) return total;
  }
  throw AdmissibilityError("l_value: coefficient-growth majorant does not converge");
}

}  // namespace

// ---------------------------------------------------------------------------
// Analytic seeds

Complex AnalyticSeed::operator()(Complex z) const {
  Complex acc = 0.0;
  for (const auto& t : terms) acc += t.coeff * cpow(z, -t.power);
  return acc;
}

Estimate AnalyticSeed::periodized(Complex z, const SpecFunConfig& cfg) const {
  Estimate acc;
  for (const auto& t : terms) {
    if (t.coeff == Complex{}) continue;
    acc += t.coeff * hurwitz_zeta(t.power, z, cfg);
  }
  return acc;
}

double AnalyticSeed::min_power() const {
  double p = std::numeric_limits<double>::infinity();
  for (const auto& t : terms) {
    if (t.coeff != Complex{}) p = std::min(p, t.power);
  }
  return p;
}

bool AnalyticSeed::is_zero() const {
  return std::all_of(terms.begin(), terms.end(), [](const PowerTerm& t) { return t.coeff == Complex{}; });
}

void AnalyticSeed::validate() const {
  for (const auto& t : terms) {
    if (t.coeff != Complex{} && !(t.power > 1.0)) {
      throw DomainError("analytic seed: z^{-p} needs p > 1 for the decay condition");
    }
  }
}

// ---------------------------------------------------------------------------
// Test functions

TestFunction TestFunction::phi_sw(Complex s, Complex w) {
  TestFunction phi;
  phi.kind = TestFunctionKind::phi_sw;
  phi.s = s;
  phi.w = w;
  return phi;
}

TestFunction TestFunction::compact(AnalyticSeed seed, double lo, double hi) {
  TestFunction phi;
  phi.kind = TestFunctionKind::compact_analytic;
  phi.seed = std::move(seed);
  phi.lo = lo;
  phi.hi = hi;
  phi.validate();
  return phi;
}

void TestFunction::validate() const {
  if (!is_finite(s) || !is_finite(w) || !is_finite(scale)) throw DomainError("test function: non-finite parameter");
  switch (kind) {
    case TestFunctionKind::phi_sw:
      break;
    case TestFunctionKind::fricke_of_phi_sw:
      if (level < 1) throw DomainError("test function: Fricke level must be positive");
      break;
    case TestFunctionKind::compact_analytic:
      if (!(lo > 0.0 && lo < hi && std::isfinite(hi))) {
        throw DomainError("test function: compact support needs 0 < lo < hi < inf");
      }
      seed.validate();
      break;
  }
}

Complex TestFunction::operator()(double t) const {
  switch (kind) {
    case TestFunctionKind::phi_sw:
      if (t < 1.0) return 0.0;
      return scale * std::exp(-w * t) * cpow(t, s - 1.0);
    case TestFunctionKind::fricke_of_phi_sw: {
      double x = level * t;
      if (!(x > 0.0) || x > 1.0) return 0.0;
      return scale * std::pow(x, -weight_shift) * std::exp(-w / x) * cpow(x, 1.0 - s);
    }
    case TestFunctionKind::compact_analytic:
      if (t < lo || t > hi) return 0.0;
      return scale * seed(Complex{0.0, t});
  }
  return 0.0;
}

Complex fricke_value(const TestFunction& phi, int a, int M, double x) {
  if (!(x > 0.0) || M < 1) throw DomainError("fricke_value: needs x > 0 and M >= 1");
  const double mx = M * x;
  return std::pow(mx, -a) * phi(1.0 / mx);
}

TestFunction fricke_transform_testfn(const TestFunction& phi, int a, int M) {
  if (M < 1) throw DomainError("fricke_transform_testfn: level must be positive");
  if (phi.kind == TestFunctionKind::phi_sw) {
    TestFunction out = phi;
    out.kind = TestFunctionKind::fricke_of_phi_sw;
    out.weight_shift = a;
    out.level = M;
    return out;
  }
  if (phi.kind == TestFunctionKind::fricke_of_phi_sw && phi.weight_shift == a && phi.level == M) {
    TestFunction out = phi;
    out.kind = TestFunctionKind::phi_sw;
    out.weight_shift = 0;
    out.level = 1;
    out.scale *= std::pow(static_cast<double>(M), -a);
    return out;
  }
  throw DomainError("fricke_transform_testfn: only phi_s^w (or its own transform) is supported");
}

// ---------------------------------------------------------------------------
// Laplace transforms and pairings

Estimate laplace_phi_sw(Complex s, Complex w, double u, const SpecFunConfig& cfg) {
  if (u + w == Complex{}) throw DomainError("laplace_phi_sw: pole at u + w = 0");
  return exp_int_E(1.0 - s, u + w, cfg);
}

SegmentIntegral pair_with(const TestFunction& phi, const RealIntegrand& h, const QuadratureConfig& cfg) {
  SegmentIntegral out;
  switch (phi.kind) {
    case TestFunctionKind::phi_sw: {
      const Complex s1 = phi.s - 1.0;
      RealIntegrand g = [&](double y) { return h(y) * std::exp(-phi.w * y) * cpow(y, s1); };
      out = integrate_semi_infinite(g, 1.0, semi_infinite_scale(phi.w), cfg);
      break;
    }
    case TestFunctionKind::fricke_of_phi_sw: {
      // y = 1/(Mv) maps (0, 1/M] onto [1, inf).
      const double m = phi.level;
      const Complex p = phi.s + static_cast<double>(phi.weight_shift) - 3.0;
      RealIntegrand g = [&](double v) { return h(1.0 / (m * v)) * std::exp(-phi.w * v) * cpow(v, p) / m; };
      out = integrate_semi_infinite(g, 1.0, semi_infinite_scale(phi.w), cfg);
      break;
    }
    case TestFunctionKind::compact_analytic: {
      if (phi.seed.is_zero()) return out;
      RealIntegrand g = [&](double y) { return h(y) * phi.seed(Complex{0.0, y}); };
      out = integrate_real(g, phi.lo, phi.hi, cfg);
      break;
    }
  }
  out.value *= phi.scale;
  out.est_error *= std::abs(phi.scale);
  return out;
}

Estimate laplace_transform(const TestFunction& phi, double u, const QuadratureConfig& cfg) {
  if (phi.kind == TestFunctionKind::phi_sw) return phi.scale * laplace_phi_sw(phi.s, phi.w, u);
  return pair_with(phi, [u](double y) { return Complex{std::exp(-u * y)}; }, relative(cfg)).estimate();
}

void require_fricke_admissible(const FourierExpansion& f, Complex w, int M) {
  const double need = std::max(kTwoPi * f.n0, f.growth_const * f.growth_const * M / kTwoPi);
  if (!(w.real() > need)) {
    throw AdmissibilityError("Fricke pairing needs Re(w) > " + std::to_string(need) + ", got " +
                             std::to_string(w.real()));
  }
}

// ---------------------------------------------------------------------------
// L-values

LValue l_value(const FourierExpansion& f, const TestFunction& phi, const QuadratureConfig& cfg) {
  f.validate();
  phi.validate();
  cfg.validate();
  if (phi.kind == TestFunctionKind::fricke_of_phi_sw) require_fricke_admissible(f, phi.w, phi.level);
  const QuadratureConfig rcfg = relative(cfg);

  LValue out;
  for (const auto& [n, a] : f.holo) {
    Estimate lap = laplace_transform(phi, kTwoPi * n, rcfg);
    out.holo_part += a * lap.value;
    out.error_estimate += std::abs(a) * lap.error;
  }
  out.error_estimate += series_tail(f, phi, rcfg);

  if (!f.nonholo.empty()) {
    const double r = 1.0 - f.weight;
    for (const auto& [n, b] : f.nonholo) {
      const double m = -static_cast<double>(n);
      RealIntegrand h = [&](double y) {
        return inc_gamma_upper(r, 4.0 * kPi * m * y).value * std::exp(kTwoPi * m * y);
      };
      SegmentIntegral part = pair_with(phi, h, rcfg);
      out.nonholo_part += b * part.value;
      out.error_estimate += std::abs(b) * part.est_error;
    }
  }
  out.value = out.holo_part + out.nonholo_part;
  return out;
}

Estimate l_value_by_vertical_integral(const FourierExpansion& f, const TestFunction& phi, const QuadratureConfig& cfg) {
  f.validate();
  phi.validate();
  cfg.validate();
  if (f.is_zero()) return {};
  double y_min = 1.0;
  double length = 1.0;
  switch (phi.kind) {
    case TestFunctionKind::fricke_of_phi_sw:
      throw RegimeError("vertical integral: Fricke transforms are supported near y = 0, out of reach of the expansion");
    case TestFunctionKind::phi_sw:
      if (f.n0 > 0 ? !(phi.w.real() > kTwoPi * f.n0) : phi.w.real() < 0.0) {
        throw AdmissibilityError("vertical integral: f(iy) phi(y) does not decay; needs Re(w) > 2 pi n0");
      }
      length = 1.0 / std::max(phi.w.real() - kTwoPi * f.n0, 1e-3);
      break;
    case TestFunctionKind::compact_analytic:
      y_min = phi.lo;
      length = phi.hi - phi.lo;
      break;
  }
  const double trunc = truncation_bound(f, y_min);
  if (trunc > 1e-6) throw PrecisionError("vertical integral: expansion truncation too large at Im z = " + std::to_string(y_min));

  Estimate out;
  if (phi.kind == TestFunctionKind::phi_sw) {
    // Merge e^{-2 pi n y} with e^{-wy} term by term; apart they overflow long
    // before the product becomes negligible.
    const double r = 1.0 - f.weight;
    RealIntegrand g = [&](double y) {
      Complex acc = 0.0;
      for (const auto& [n, a] : f.holo) acc += a * std::exp(-(kTwoPi * n + phi.w) * y);
      for (const auto& [n, b] : f.nonholo) {
        const double x = -4.0 * kPi * n * y;
        // Gamma(r, x) e^{x/2 - wy} is below the double range here.
        if (x > 740.0) continue;
        acc += b * inc_gamma_upper(r, x).value * std::exp(-(kTwoPi * n + phi.w) * y);
      }
      return phi.scale * acc * cpow(y, phi.s - 1.0);
    };
    const Complex decay = phi.w - kTwoPi * static_cast<double>(f.n0);
    out = integrate_semi_infinite(g, 1.0, semi_infinite_scale(decay), relative(cfg)).estimate();
  } else {
    RealIntegrand h = [&](double y) { return eval_value(f, Complex{0.0, y}); };
    out = pair_with(phi, h, relative(cfg)).estimate();
  }
  out.error += trunc * length * std::abs(phi(y_min));
  return out;
}

Estimate l_star(const FourierExpansion& f, double s, const QuadratureConfig& cfg) {
  LValue v = l_value(f, TestFunction::phi_sw(s, 0.0), cfg);
  return {v.value, v.error_estimate};
}

Estimate l_tilde(const FourierExpansion& f, double s, const QuadratureConfig& cfg) {
  if (!f.is_weakly_holomorphic()) throw DomainError("l_tilde: needs a weakly holomorphic expansion");
  return l_star(f, s, cfg) + ipow(f.weight) * l_star(f, f.weight - s, cfg);
}

}  // namespace lseries
