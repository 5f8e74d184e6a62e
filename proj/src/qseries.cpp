#include <lseries/qseries.hpp>

#include <algorithm>
#include <sstream>

namespace lseries {
namespace {

int clamp_prec(long p) { return static_cast<int>(std::min<long>(p, QSeries::kExact)); }

void check_precision(int min_exp, int prec) {
  if (prec < min_exp && prec < QSeries::kExact) {
    throw PrecisionError("q-series precision underflow: precision " + std::to_string(prec) +
                         " below minimum exponent " + std::to_string(min_exp));
  }
}

}  // namespace

QSeries::QSeries(int min_exponent, std::vector<Rational> coefficients, int precision)
    : min_exp_(min_exponent), coeffs_(std::move(coefficients)), prec_(precision) {
  if (static_cast<long>(min_exp_) + static_cast<long>(coeffs_.size()) > prec_) {
    coeffs_.resize(static_cast<std::size_t>(std::max(0, prec_ - min_exp_)));
  }
  normalize();
}

QSeries QSeries::monomial(const Rational& c, int exponent, int precision) {
  if (exponent >= precision) return QSeries(precision, {}, precision);
  return QSeries(exponent, {c}, precision);
}

void QSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    min_exp_ = prec_;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    min_exp_ += static_cast<int>(lead);
  }
  // Trailing zeros are kept only for exact series' compactness.
  if (prec_ >= kExact) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
}

Rational QSeries::coefficient(int n) const {
  if (n >= prec_) {
    throw PrecisionError("coefficient of q^" + std::to_string(n) + " requested beyond precision " +
                         std::to_string(prec_));
  }
  if (n < min_exp_) return 0;
  auto idx = static_cast<std::size_t>(n - min_exp_);
  return idx < coeffs_.size() ? coeffs_[idx] : Rational(0);
}

QSeries QSeries::operator-() const {
  QSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  if (a.is_zero() && a.prec_ >= QSeries::kExact) return b;
  if (b.is_zero() && b.prec_ >= QSeries::kExact) return a;
  const int prec = std::min(a.prec_, b.prec_);
  const int lo = std::min(a.min_exp_, b.min_exp_);
  if (lo >= prec) return QSeries(prec, {}, prec);
  long hi_a = static_cast<long>(a.min_exp_) + static_cast<long>(a.coeffs_.size());
  long hi_b = static_cast<long>(b.min_exp_) + static_cast<long>(b.coeffs_.size());
  const int hi = static_cast<int>(std::min<long>(prec, std::max(hi_a, hi_b)));
  std::vector<Rational> c(static_cast<std::size_t>(std::max(0, hi - lo)));
  for (int e = lo; e < hi; ++e) {
    Rational v = 0;
    if (e >= a.min_exp_ && e < hi_a) v += a.coeffs_[static_cast<std::size_t>(e - a.min_exp_)];
    if (e >= b.min_exp_ && e < hi_b) v += b.coeffs_[static_cast<std::size_t>(e - b.min_exp_)];
    c[static_cast<std::size_t>(e - lo)] = v;
  }
  return QSeries(lo, std::move(c), prec);
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const Rational& c, const QSeries& a) {
  QSeries out = a;
  for (auto& x : out.coeffs_) x *= c;
  out.normalize();
  return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const long va = a.min_exp_;
  const long vb = b.min_exp_;
  const int prec = clamp_prec(std::min(a.prec_ + vb, b.prec_ + va));
  if (a.is_zero() || b.is_zero()) {
    check_precision(prec, prec);
    return QSeries(prec, {}, prec);
  }
  const int lo = static_cast<int>(va + vb);
  check_precision(lo, prec);
  const long hi = std::min<long>(prec, va + vb + static_cast<long>(a.coeffs_.size() + b.coeffs_.size()) - 1);
  std::vector<Rational> c(static_cast<std::size_t>(std::max<long>(0, hi - lo)));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      long e = va + vb + static_cast<long>(i + j);
      if (e >= hi) break;
      c[static_cast<std::size_t>(e - lo)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return QSeries(lo, std::move(c), prec);
}

QSeries QSeries::inverse() const {
  if (is_zero()) throw DomainError("q-series inverse: series is zero to working precision");
  const int v = min_exp_;
  const int rel = (prec_ >= kExact) ? kExact : prec_ - v;
  const int prec = (prec_ >= kExact) ? kExact : prec_ - 2 * v;
  if (rel >= kExact) {
    // Only monomials have exact inverses.
    if (coeffs_.size() != 1) throw PrecisionError("q-series inverse of an exact polynomial needs a precision");
    return monomial(Rational(1) / coeffs_[0], -v);
  }
  std::vector<Rational> d(static_cast<std::size_t>(rel));
  const Rational inv0 = Rational(1) / coeffs_[0];
  for (int n = 0; n < rel; ++n) {
    if (n == 0) {
      d[0] = inv0;
      continue;
    }
    Rational acc = 0;
    for (int i = 1; i <= n && static_cast<std::size_t>(i) < coeffs_.size(); ++i) {
      acc += coeffs_[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(n - i)];
    }
    d[static_cast<std::size_t>(n)] = -inv0 * acc;
  }
  check_precision(-v, prec);
  return QSeries(-v, std::move(d), prec);
}

QSeries QSeries::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  QSeries result = constant(1);
  QSeries base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

QSeries QSeries::truncated(int precision) const {
  QSeries out = *this;
  out.prec_ = std::min(prec_, precision);
  long keep = static_cast<long>(out.prec_) - out.min_exp_;
  if (keep < static_cast<long>(out.coeffs_.size())) out.coeffs_.resize(static_cast<std::size_t>(std::max(0L, keep)));
  out.normalize();
  return out;
}

std::string QSeries::to_string(int max_terms) const {
  std::ostringstream os;
  int shown = 0;
  for (std::size_t i = 0; i < coeffs_.size() && shown < max_terms; ++i) {
    if (coeffs_[i] == 0) continue;
    if (shown > 0) os << " + ";
    os << coeffs_[i].get_str() << "*q^" << (min_exp_ + static_cast<int>(i));
    ++shown;
  }
  if (shown == 0) os << "0";
  if (prec_ < kExact) os << " + O(q^" << prec_ << ")";
  return os.str();
}

QSeries qseries_arith(QSeriesOp op, const QSeries& lhs, const std::variant<QSeries, int>& rhs) {
  switch (op) {
    case QSeriesOp::mul:
      if (!std::holds_alternative<QSeries>(rhs)) throw ConfigError("qseries_arith: mul needs a series operand");
      return lhs * std::get<QSeries>(rhs);
    case QSeriesOp::pow:
      if (!std::holds_alternative<int>(rhs)) throw ConfigError("qseries_arith: pow needs an integer exponent");
      return lhs.pow(std::get<int>(rhs));
    case QSeriesOp::invert:
      return lhs.inverse();
    case QSeriesOp::truncate:
      if (!std::holds_alternative<int>(rhs)) throw ConfigError("qseries_arith: truncate needs an integer precision");
      return lhs.truncated(std::get<int>(rhs));
  }
  throw ConfigError("qseries_arith: unknown operation");
}

mpz_class divisor_sigma(int r, int n) {
  mpz_class acc = 0;
  for (int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(r));
    acc += p;
    int e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(r));
      acc += p;
    }
  }
  return acc;
}

QSeries build_eisenstein(int k, int prec) {
  if (k != 4 && k != 6) throw DomainError("build_eisenstein: weight must be 4 or 6");
  if (prec < 1) throw DomainError("build_eisenstein: prec must be >= 1");
  const Rational factor = Rational(-2 * k) / bernoulli_rational(k);
  std::vector<Rational> c(static_cast<std::size_t>(prec));
  c[0] = 1;
  for (int n = 1; n < prec; ++n) c[static_cast<std::size_t>(n)] = factor * Rational(divisor_sigma(k - 1, n));
  return QSeries(0, std::move(c), prec);
}

QSeries build_delta(int prec) {
  if (prec < 2) throw DomainError("build_delta: prec must be >= 2");
  QSeries e4 = build_eisenstein(4, prec);
  QSeries e6 = build_eisenstein(6, prec);
  return Rational(1, 1728) * (e4.pow(3) - e6.pow(2));
}

QSeries build_j_series(int prec) {
  if (prec < 0) throw DomainError("build_j_series: prec must be >= 0");
  QSeries e4 = build_eisenstein(4, prec + 2);
  QSeries delta = build_delta(prec + 2);
  return e4.pow(3) * delta.inverse();
}

}  // namespace lseries
