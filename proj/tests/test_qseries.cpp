#include <lseries/qseries.hpp>

#include "oracle_values.hpp"
#include "test_util.hpp"

using namespace lseries;

namespace {

QSeries poly(int min_exp, std::vector<Rational> c, int prec = QSeries::kExact) {
  return QSeries(min_exp, std::move(c), prec);
}

// Delta as q * prod (1 - q^n)^24, straight from the product.
std::vector<mpz_class> delta_by_product(int terms) {
  std::vector<mpz_class> p(terms, 0);
  p[0] = 1;
  for (int n = 1; n < terms; ++n) {
    for (int r = 0; r < 24; ++r) {
      for (int e = terms - 1; e >= n; --e) p[e] -= p[e - n];
    }
  }
  return p;  // p[e] is the coefficient of q^{e+1}
}

}  // namespace

TEST_SUITE("qseries") {

TEST_CASE("elementary arithmetic") {
  QSeries prod = poly(-1, {1, 0, 1}) * QSeries::monomial(1, 1);
  CHECK(prod.coefficient(0) == 1);
  CHECK(prod.coefficient(1) == 0);
  CHECK(prod.coefficient(2) == 1);

  QSeries inv = poly(0, {1, -1}).truncated(4).inverse();
  CHECK(inv.precision() == 4);
  for (int e = 0; e < 4; ++e) CHECK(inv.coefficient(e) == 1);
  CHECK_THROWS_AS(inv.coefficient(4), PrecisionError);

  QSeries cube = poly(0, {1, 1}).truncated(4).pow(3);
  CHECK(cube.coefficient(0) == 1);
  CHECK(cube.coefficient(1) == 3);
  CHECK(cube.coefficient(2) == 3);
  CHECK(cube.coefficient(3) == 1);
}

TEST_CASE("dispatcher matches the operators") {
  QSeries a = poly(-1, {2, 0, Rational(1, 3)}, 5);
  QSeries b = poly(1, {1, 1}, 6);
  CHECK(qseries_arith(QSeriesOp::mul, a, b).to_string() == (a * b).to_string());
  CHECK(qseries_arith(QSeriesOp::pow, a, 3).to_string() == a.pow(3).to_string());
  CHECK(qseries_arith(QSeriesOp::invert, a, 0).to_string() == a.inverse().to_string());
  CHECK(qseries_arith(QSeriesOp::truncate, a, 2).precision() == 2);
  CHECK_THROWS_AS(qseries_arith(QSeriesOp::pow, a, b), ConfigError);
}

TEST_CASE("precision propagation") {
  QSeries a = poly(-1, {1, 5}, 3);  // q^-1 + 5 + O(q^3)
  QSeries b = poly(2, {1}, 4);      // q^2 + O(q^4)
  // min(3 + 2, 4 - 1)
  CHECK((a * b).precision() == 3);
  CHECK((a + b).precision() == 3);
  QSeries inv = a.inverse();
  CHECK((inv * a).coefficient(0) == 1);
  for (int e = 1; e < (inv * a).precision(); ++e) CHECK((inv * a).coefficient(e) == 0);
}

TEST_CASE("negative powers go through the inverse") {
  QSeries a = poly(0, {1, 2, 3}, 8);
  QSeries one = a.pow(-2) * a.pow(2);
  CHECK(one.coefficient(0) == 1);
  for (int e = 1; e < one.precision(); ++e) CHECK(one.coefficient(e) == 0);
}

TEST_CASE("coefficients beyond precision are never read") {
  QSeries a = poly(-1, {1, 2, 3, 4}, 2);  // the 4 sits at q^2 and is dropped
  CHECK(a.coefficient(1) == 3);
  CHECK_THROWS_AS(a.coefficient(2), PrecisionError);
  CHECK_THROWS_AS((a * a).coefficient(1), PrecisionError);
  CHECK_THROWS_AS(QSeries().inverse(), DomainError);
}

TEST_CASE("divisor sums") {
  CHECK(divisor_sigma(3, 1) == 1);
  CHECK(divisor_sigma(3, 2) == 9);
  CHECK(divisor_sigma(5, 6) == 1 + 32 + 243 + 7776);
  CHECK(divisor_sigma(0, 12) == 6);
}

TEST_CASE("Eisenstein series") {
  QSeries e4 = build_eisenstein(4, 12);
  QSeries e6 = build_eisenstein(6, 12);
  CHECK(e4.coefficient(0) == 1);
  CHECK(e6.coefficient(0) == 1);
  for (int n = 1; n < 12; ++n) {
    CHECK(e4.coefficient(n) == 240 * divisor_sigma(3, n));
    CHECK(e6.coefficient(n) == -504 * divisor_sigma(5, n));
  }
  // E_4^2 = E_8 = 1 + 480 sum sigma_7(n) q^n, the one-dimensionality of M_8.
  QSeries e8 = e4 * e4;
  for (int n = 1; n < 12; ++n) CHECK(e8.coefficient(n) == 480 * divisor_sigma(7, n));
  CHECK_THROWS_AS(build_eisenstein(8, 4), DomainError);
}

TEST_CASE("Delta matches the eta product") {
  QSeries delta = build_delta(13);
  const auto product = delta_by_product(12);
  CHECK(delta.min_exponent() == 1);
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(delta.coefficient(n) == Rational(mpz_class(static_cast<long>(oracle::kDeltaCoeffs[n - 1]))));
    CHECK(delta.coefficient(n) == product[n - 1]);
  }
}

TEST_CASE("j from E_4^3 and from E_6^2 agree") {
  const int prec = 24;
  QSeries j4 = build_j_series(prec);
  QSeries delta = build_delta(prec + 1);
  QSeries e6 = build_eisenstein(6, prec + 1);
  QSeries j6 = e6 * e6 * delta.inverse() + QSeries::constant(1728);
  CHECK(j4.min_exponent() == -1);
  CHECK(j4.precision() >= prec - 1);
  for (int n = -1; n < std::min(j4.precision(), j6.precision()); ++n) {
    CAPTURE(n);
    CHECK(j4.coefficient(n) == j6.coefficient(n));
    CHECK(j4.coefficient(n) == Rational(oracle::kJCoeffs[n + 1]));
  }
}

}  // TEST_SUITE
