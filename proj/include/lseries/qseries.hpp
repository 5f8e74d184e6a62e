#pragma once

// Truncated Laurent series in q with exact rational coefficients.
//
// A QSeries stands for  sum_{e = min_exponent}^{precision - 1} c_e q^e + O(q^precision).
// Coefficients below `precision` are exact; nothing at or above it is ever
// read. Arithmetic propagates precision the usual way, e.g. a product keeps
// min(Pa + vb, Pb + va).

#include <string>
#include <variant>
#include <vector>

#include <lseries/common.hpp>
#include <lseries/rational.hpp>

namespace lseries {

class QSeries {
 public:
  /// Precision used for exact (polynomial) series.
  static constexpr int kExact = 1 << 28;

  QSeries() = default;  // the zero series, exact

  QSeries(int min_exponent, std::vector<Rational> coefficients, int precision);

  static QSeries monomial(const Rational& c, int exponent, int precision = kExact);
  static QSeries constant(const Rational& c, int precision = kExact) { return monomial(c, 0, precision); }

  int min_exponent() const { return min_exp_; }
  int precision() const { return prec_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Exact coefficient of q^n; zero below min_exponent.
  /// Throws PrecisionError for n >= precision.
  Rational coefficient(int n) const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Rational& c, const QSeries& a);

  QSeries inverse() const;
  /// Integer power; negative exponents go through inverse().
  QSeries pow(int n) const;
  QSeries truncated(int precision) const;

  std::string to_string(int max_terms = 8) const;

 private:
  void normalize();

  int min_exp_ = kExact;
  std::vector<Rational> coeffs_;  // coeffs_[i] is the coefficient of q^{min_exp_ + i}
  int prec_ = kExact;
};

enum class QSeriesOp { mul, pow, invert, truncate };

/// Dispatcher over the four arithmetic operations; `rhs` is a series for mul and
/// an integer (exponent / precision) for pow and truncate. Ignored for invert.
QSeries qseries_arith(QSeriesOp op, const QSeries& lhs, const std::variant<QSeries, int>& rhs);

/// Divisor power sum sigma_r(n).
mpz_class divisor_sigma(int r, int n);

/// E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n, k in {4, 6}, exact to q^{prec-1}.
QSeries build_eisenstein(int k, int prec);

/// Delta = (E_4^3 - E_6^2) / 1728, exact to q^{prec-1}.
QSeries build_delta(int prec);

/// j = E_4^3 / Delta, exact to q^{prec-1}.
QSeries build_j_series(int prec);

}  // namespace lseries
