#pragma once

// Fourier expansions of weakly holomorphic and harmonic Maass cusp forms at
// the cusp at infinity:
//
//   f(z) = sum_{n >= -n0, n != 0} a(n) e^{2 pi i n z}
//        + sum_{n < 0} b(n) Gamma(1 - k, -4 pi n y) e^{2 pi i n z}.
//
// Coefficients are complex doubles here; exact arithmetic stays in QSeries.

#include <map>
#include <optional>
#include <string>

#include <lseries/common.hpp>
#include <lseries/qseries.hpp>
#include <lseries/specfun.hpp>

namespace lseries {

using CoefficientMap = std::map<int, Complex>;

struct FourierExpansion {
  std::string name;
  int weight = 0;
  int level = 1;
  CoefficientMap holo;     // a(n), n != 0
  CoefficientMap nonholo;  // b(n), n < 0
  /// Depth of the principal part: a(n) = 0 for n < -n0.
  int n0 = 0;
  /// Growth constant C in |a(n)|, |b(-n)| <= K e^{C sqrt(n)}.
  double growth_const = 1.0;
  /// Coefficients beyond the stored maps are exactly zero (synthetic forms).
  bool finite_support = true;
  /// Last exponent covered by the stored holomorphic coefficients when the
  /// support is not finite.
  int known_through = 0;
  /// Genuinely modular (eligible for functional-equation checks).
  bool modular = false;
  /// Exact q-expansion the coefficients were converted from, when there is one.
  std::optional<QSeries> exact;

  bool is_weakly_holomorphic() const { return nonholo.empty(); }
  bool is_zero() const { return holo.empty() && nonholo.empty(); }

  Complex a(int n) const;
  Complex b(int n) const;

  /// Throws DomainError on a nonzero constant term or a non-negative nonholo key.
  void validate() const;
};

struct PointValue {
  Complex z{};
  Complex value{};
  double truncation_error = 0.0;
};

/// Weight-0 level-1 Hauptmodul J = j - 744 with exact coefficients for
/// exponents below `prec`.
FourierExpansion build_J(int prec = 40);

/// J^2 minus its constant term, from the exact q-expansion of J.
FourierExpansion build_J_squared(int prec = 40);

/// Expansion from a QSeries with the constant term removed.
FourierExpansion expansion_from_qseries(const QSeries& series, int weight, double growth_const,
                                        std::string name);

/// Synthetic expansion of the right shape; not modular.
FourierExpansion synth_harmonic(int k, CoefficientMap holo, CoefficientMap nonholo);

/// alpha * f + beta * g for expansions of equal weight and level.
FourierExpansion linear_combination(Complex alpha, const FourierExpansion& f, Complex beta,
                                    const FourierExpansion& g);

/// xi_k f (or xi_k f^c when conjugate_first): weight 2 - k cusp form with
/// coefficient -(-4 pi n)^{1-k} conj(b(n)) at frequency -n.
FourierExpansion xi_image(const FourierExpansion& f, bool conjugate_first);

/// Bound on |sum_{n > known_through} a(n) q^n| at height y.
double truncation_bound(const FourierExpansion& f, double y);

/// Point evaluation on the upper half plane.
PointValue eval_expansion(const FourierExpansion& f, Complex z, double tolerance = 1e-12);

/// Value without the tolerance gate; used inside quadrature loops.
Complex eval_value(const FourierExpansion& f, Complex z);

/// CSV rows "n,re,im" for -n0 <= n < upto (holomorphic coefficients).
std::string coefficients_csv(const FourierExpansion& f, int upto);
/// JSON object with weight, level, n0 and both coefficient maps.
std::string coefficients_json(const FourierExpansion& f, int upto);

}  // namespace lseries
