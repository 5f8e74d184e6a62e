#include <lseries/quadrature.hpp>

#include <algorithm>
#include <array>
#include <vector>

namespace lseries {
namespace {

constexpr int kMaxRule = 128;

struct RuleTable {
  std::array<std::vector<double>, kMaxRule + 1> nodes;
  std::array<std::vector<double>, kMaxRule + 1> weights;

  RuleTable() {
    for (int n = 2; n <= kMaxRule; ++n) build(n);
  }

  // Newton iteration on P_n from the Chebyshev-like initial guess.
  void build(int n) {
    auto& x = nodes[n];
    auto& w = weights[n];
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
      double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0;
        double p1 = z;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (z * p1 - p0) / (z * z - 1.0);
        double dz = p1 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      // Recompute derivative at the converged node.
      double p0 = 1.0;
      double p1 = z;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      x[i] = -z;
      x[n - 1 - i] = z;
      w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
  }
};

const RuleTable& rules() {
  static const RuleTable t;
  return t;
}

struct Panel {
  double a;
  double b;
  Complex whole;
  int depth;
};

Complex apply_rule(const RealIntegrand& f, double a, double b, const GaussLegendreRule& rule) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  Complex acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * acc;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0)) throw ConfigError("QuadratureConfig: abs_tol must be positive");
  if (rel_tol < 0.0) throw ConfigError("QuadratureConfig: rel_tol must be non-negative");
  if (base_nodes < 8 || base_nodes > kMaxRule) throw ConfigError("QuadratureConfig: base_nodes must be in [8, 128]");
  if (!(t_cutoff >= 1.0)) throw ConfigError("QuadratureConfig: t_cutoff must be >= 1");
  if (max_depth < 1) throw ConfigError("QuadratureConfig: max_depth must be >= 1");
  if (initial_panels < 1) throw ConfigError("QuadratureConfig: initial_panels must be >= 1");
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 2 || n > kMaxRule) throw DomainError("gauss_legendre: order outside [2, 128]");
  const auto& t = rules();
  return {t.nodes[n], t.weights[n]};
}

SegmentIntegral integrate_real(const RealIntegrand& f, double a, double b, const QuadratureConfig& cfg) {
  cfg.validate();
  SegmentIntegral out;
  if (a == b) return out;
  const auto rule = gauss_legendre(cfg.base_nodes);
  const double total = std::abs(b - a);

  std::vector<Panel> stack;
  double magnitude = 0.0;
  const int n0 = cfg.initial_panels;
  for (int i = n0 - 1; i >= 0; --i) {
    double pa = a + (b - a) * i / n0;
    double pb = (i + 1 == n0) ? b : a + (b - a) * (i + 1) / n0;
    Complex q = apply_rule(f, pa, pb, rule);
    magnitude += std::abs(q);
    stack.push_back({pa, pb, q, 0});
  }

  // Depth-first, left to right, so the summation order is deterministic.
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    double mid = 0.5 * (p.a + p.b);
    Complex left = apply_rule(f, p.a, mid, rule);
    Complex right = apply_rule(f, mid, p.b, rule);
    Complex refined = left + right;
    double diff = std::abs(refined - p.whole);
    double share = std::abs(p.b - p.a) / total;
    double tol = std::max(cfg.abs_tol, cfg.rel_tol * magnitude) * share;
    if (!is_finite(refined)) throw ConvergenceError("integrate: non-finite integrand value");
    // A panel that agrees with its halves to rounding level is converged even
    // when its share of the tolerance is smaller than that.
    tol = std::max(tol, 1e-14 * (std::abs(left) + std::abs(right)));
    if (diff <= tol || p.depth + 1 >= cfg.max_depth) {
      if (diff > tol) {
        throw ConvergenceError("integrate: max_depth reached on [" + std::to_string(p.a) + ", " +
                               std::to_string(p.b) + "]");
      }
      out.value += refined;
      // The refined value is far more accurate than |refined - whole| for
      // smooth integrands; keep a conservative fraction of it.
      out.est_error += diff * 0.1 + 1e-16 * std::abs(refined);
      out.panels_used += 2;
    } else {
      stack.push_back({mid, p.b, right, p.depth + 1});
      stack.push_back({p.a, mid, left, p.depth + 1});
    }
  }
  return out;
}

SegmentIntegral integrate_segment(const ComplexIntegrand& g, Complex z0, Complex z1, const QuadratureConfig& cfg) {
  const Complex dz = z1 - z0;
  RealIntegrand f = [&](double t) { return g(z0 + t * dz) * dz; };
  return integrate_real(f, 0.0, 1.0, cfg);
}

SegmentIntegral integrate_semi_infinite(const RealIntegrand& f, double a, double scale, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(scale > 0.0)) throw DomainError("integrate_semi_infinite: scale must be positive");
  SegmentIntegral out;
  double lo = a;
  double len = scale;
  int quiet = 0;
  for (int block = 0; block < 64; ++block) {
    SegmentIntegral part = integrate_real(f, lo, lo + len, cfg);
    out.value += part.value;
    out.est_error += part.est_error;
    out.panels_used += part.panels_used;
    double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value)) * 0.01;
    quiet = (std::abs(part.value) <= tol) ? quiet + 1 : 0;
    if (quiet >= 2) {
      out.est_error += std::abs(part.value);
      return out;
    }
    lo += len;
    len *= 1.5;
  }
  throw ConvergenceError("integrate_semi_infinite: integrand does not decay");
}

}  // namespace lseries
