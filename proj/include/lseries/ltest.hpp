#pragma once

// Test functions phi and the series side of the L-series pairing
//
//   L_f(phi) = sum_n a(n) (L phi)(2 pi n)
//            + sum_{n<0} b(n) int_0^inf Gamma(1-k, -4 pi n y) e^{-2 pi n y} phi(y) dy.

#include <limits>
#include <vector>

#include <lseries/modforms.hpp>
#include <lseries/quadrature.hpp>
#include <lseries/specfun.hpp>

namespace lseries {

enum class TestFunctionKind { phi_sw, fricke_of_phi_sw, compact_analytic };

/// One term c * z^{-p} of an analytic seed.
struct PowerTerm {
  Complex coeff{1.0, 0.0};
  double power = 2.0;
};

/// Phi(z) = sum_j c_j z^{-p_j}, p_j > 1. Its periodization
/// sum_{n>=0} Phi(z+n) is sum_j c_j zeta(p_j, z).
struct AnalyticSeed {
  std::vector<PowerTerm> terms;

  Complex operator()(Complex z) const;
  Estimate periodized(Complex z, const SpecFunConfig& cfg = {}) const;
  /// Smallest exponent; the decay condition needs it > 1.
  double min_power() const;
  bool is_zero() const;
  void validate() const;
};

struct TestFunction {
  TestFunctionKind kind = TestFunctionKind::phi_sw;
  Complex s{};
  Complex w{};
  /// Fricke weight a and level M, for fricke_of_phi_sw.
  int weight_shift = 0;
  int level = 1;
  /// Support [lo, hi] for compact_analytic.
  double lo = 1.0;
  double hi = std::numeric_limits<double>::infinity();
  AnalyticSeed seed;
  /// Overall constant factor.
  Complex scale{1.0, 0.0};

  /// 1_{[1,inf)}(t) e^{-wt} t^{s-1}.
  static TestFunction phi_sw(Complex s, Complex w);
  /// y -> Phi(iy) on [lo, hi], zero elsewhere.
  static TestFunction compact(AnalyticSeed seed, double lo, double hi);

  Complex operator()(double t) const;
  void validate() const;
};

/// (phi |_a W_M)(x) = (Mx)^{-a} phi(1/(Mx)) evaluated pointwise.
Complex fricke_value(const TestFunction& phi, int a, int M, double x);

/// Descriptor of phi |_a W_M. Applying the same (a, M) to a Fricke transform
/// returns the original phi_sw scaled by M^{-a}.
TestFunction fricke_transform_testfn(const TestFunction& phi, int a, int M);

/// (L phi_s^w)(u) = E_{1-s}(u + w).
Estimate laplace_phi_sw(Complex s, Complex w, double u, const SpecFunConfig& cfg = {});

/// Laplace transform of any supported test function at u.
Estimate laplace_transform(const TestFunction& phi, double u, const QuadratureConfig& cfg = {});

/// int_0^inf h(y) phi(y) dy over the support of phi.
SegmentIntegral pair_with(const TestFunction& phi, const RealIntegrand& h, const QuadratureConfig& cfg = {});

struct LValue {
  Complex value{};
  Complex holo_part{};
  Complex nonholo_part{};
  double error_estimate = 0.0;
};

/// Series side of L_f(phi). For phi_sw the Laplace transforms are the analytic
/// continuation E_{1-s}(2 pi n + w), so w = 0 gives L*(f, s) directly.
LValue l_value(const FourierExpansion& f, const TestFunction& phi, const QuadratureConfig& cfg = {});

/// int_0^inf f(iy) phi(y) dy by quadrature.
Estimate l_value_by_vertical_integral(const FourierExpansion& f, const TestFunction& phi,
                                      const QuadratureConfig& cfg = {});

/// L*(f, s) = L_f(phi_s^0).
Estimate l_star(const FourierExpansion& f, double s, const QuadratureConfig& cfg = {});

/// L*(f, s) + i^k L*(f, k - s) for weakly holomorphic f.
Estimate l_tilde(const FourierExpansion& f, double s, const QuadratureConfig& cfg = {});

/// Throws AdmissibilityError unless Re w > max(2 pi n0, C^2 M / (2 pi)), the
/// regime where phi_s^w and its Fricke transform both pair with f.
void require_fricke_admissible(const FourierExpansion& f, Complex w, int M);

}  // namespace lseries
