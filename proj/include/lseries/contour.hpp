#pragma once

// Right-hand sides written as integrals over the horizontal segment from i to
// i + 1 (or from ia to ia + 1), plus the remainder R(w, s) of the harmonic case.

#include <lseries/ltest.hpp>
#include <lseries/modforms.hpp>
#include <lseries/quadrature.hpp>

namespace lseries {

/// int_i^{i+T} e^{iwz} z^{a-1} dz. With `tail_correction` the remaining ray
/// [i+T, i+inf) is added from its integration-by-parts expansion, which matters
/// only when Im(w) = 0. Requires Im(w) > 0, or Im(w) = 0 with Re(w) > 0 and a < 0.
Estimate ray_integral_bend(double a, Complex w, double T, const QuadratureConfig& cfg = {},
                           bool tail_correction = true);

enum class RForm { one_dim, double_integral };

/// i^{-s} int_i^{i+1} f(z) e^{iwz} zeta(1-s, w/2pi, z) dz, f including its
/// non-holomorphic part.
Estimate rhs_lerch_term(const FourierExpansion& f, double s, Complex w, const QuadratureConfig& cfg = {});

/// R(w, s) in the one-dimensional form
///   -sum_{n<0} b(n) (-4 pi n)^{1-k} int_1^inf e^{4 pi n t} t^{s-k} E_{1-s}((2 pi n + w) t) dt
/// or the double-integral form with R_t(z, w). Zero for weakly holomorphic f.
Estimate r_remainder(const FourierExpansion& f, double s, Complex w, RForm form, const QuadratureConfig& cfg = {});

/// Full contour side of the main theorem: Lerch term plus R (double integral).
Estimate rhs_main_theorem(const FourierExpansion& f, double s, Complex w, const QuadratureConfig& cfg = {},
                          RForm form = RForm::double_integral);

/// Closed-form right-hand side for L*(f, m), m integer:
///   m <= 0: i^{-m} int f zeta*(1-m, z) dz (weakly holomorphic f only),
///   m = 1:  i int f z dz - (1/(1-k)) int xi(f^c) (i^k B_{2-k}(z)/(2-k) + x) dz,
///   m >= 2: the Bernoulli formula with index m - 1.
Estimate rhs_integer_value(const FourierExpansion& f, int m, const QuadratureConfig& cfg = {});

/// L_f(phi_{1+m}^0) by the Bernoulli-polynomial formula with the constants
/// c_{k,m} and d_{l,j} as printed; m >= 0.
Estimate rhs_bern(const FourierExpansion& f, int m, const QuadratureConfig& cfg = {});

/// L_f(phi_1^0) = i int f z dz - (1/(1-k)) int xi(f^c) (i^k B_{2-k}(z)/(2-k) + x) dz.
Estimate rhs_polyl(const FourierExpansion& f, const QuadratureConfig& cfg = {});

/// -i^{-m-1} int f B_{m+1}(z)/(m+1) dz, the weakly holomorphic case, m >= 1.
Estimate rhs_bern_whf(const FourierExpansion& f, int m, const QuadratureConfig& cfg = {});

/// i^{-s} int f zeta(1-s, z) dz for s < 0.
Estimate rhs_negative_s(const FourierExpansion& f, double s, const QuadratureConfig& cfg = {});

/// Polygamma form of rhs_negative_s for integer s < 0:
///   i^{2+s}/(-s)! int f psi^{(-s)}(z) dz.
/// With `as_printed` the prefactor is i^{2-s}, which differs by (-1)^s.
Estimate rhs_negative_s_polygamma(const FourierExpansion& f, int s, const QuadratureConfig& cfg = {},
                                  bool as_printed = false);

/// -i ( int_{ia}^{ia+1} f Phi~ dz - int_{ib}^{ib+1} f Phi~ dz ) with Phi~(z) = sum_n Phi(z+n).
Estimate compact_support_value(const FourierExpansion& f, const AnalyticSeed& seed, double a, double b,
                               const QuadratureConfig& cfg = {});

/// 2 sum_n a(n) EI(2 pi n).
Estimate bfi_quantity(const FourierExpansion& f);

/// int_i^{i+K} f(z) e^{iwz} z^{s-1} dz along Im z = 1.
Estimate ray_contour_integral(const FourierExpansion& f, double s, Complex w, int K, const QuadratureConfig& cfg = {});

/// int_i^{i+1} f(z) e^{iwz} sum_{m<K} e^{imw} (z+m)^{s-1} dz.
Estimate lerch_partial_contour(const FourierExpansion& f, double s, Complex w, int K, const QuadratureConfig& cfg = {});

struct LimitOptions {
  double x0 = 0.5;
  int points = 7;
};

/// lim_{x -> 0+} of the main-theorem right-hand side at w = ix, by polynomial
/// (Neville) extrapolation over x = x0 2^{-j}. R is taken in its
/// one-dimensional form.
Estimate rhs_limit_oracle(const FourierExpansion& f, double s, const QuadratureConfig& cfg = {},
                          LimitOptions opts = {});

/// Value at 0 of the interpolating polynomial through (x_j, y_j); the error is
/// the last correction.
Estimate neville_at_zero(const std::vector<double>& x, const std::vector<Complex>& y);

}  // namespace lseries
