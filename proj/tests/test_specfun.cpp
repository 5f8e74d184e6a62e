#include <lseries/rational.hpp>
#include <lseries/specfun.hpp>

#include "oracle_values.hpp"
#include "test_util.hpp"

using namespace lseries;

TEST_SUITE("specfun") {

TEST_CASE("upper incomplete gamma matches mpmath") {
  for (const auto& row : oracle::kIncGamma) {
    CAPTURE(row.r);
    CAPTURE(row.z);
    CHECK_NEAR_REL(inc_gamma_upper(row.r, row.z).value, row.value, 1e-12);
  }
}

TEST_CASE("incomplete gamma closed forms") {
  CHECK_NEAR_REL(inc_gamma_upper(1.0, 0.5).value, std::exp(-0.5), 1e-14);
  CHECK_NEAR_REL(inc_gamma_upper(3.0, 1.0).value, 5.0 * std::exp(-1.0), 1e-14);
  CHECK_NEAR_REL(inc_gamma_upper(0.5, 0.0).value, std::sqrt(kPi), 1e-14);
  CHECK_THROWS_AS(inc_gamma_upper(-0.5, 0.0), DomainError);
  CHECK_THROWS_AS(inc_gamma_upper(0.0, 0.0), DomainError);
}

TEST_CASE("generalized exponential integral matches mpmath") {
  for (const auto& row : oracle::kExpIntE) {
    CAPTURE(row.s);
    CAPTURE(row.z);
    CHECK_NEAR_REL(exp_int_E(row.s, row.z).value, row.value, 1e-12);
  }
}

TEST_CASE("exponential integral special values") {
  CHECK_NEAR_REL(exp_int_E(0.0, 2.0).value, std::exp(-2.0) / 2.0, 1e-15);
  CHECK_NEAR_REL(exp_int_E(1.0, 1.0).value, 0.2193839343955203, 1e-14);
  // Negative axis is approached from above: E_1(-x) = -Ei(x) - i pi.
  CHECK_NEAR_REL(exp_int_E(1.0, -1.0).value, Complex(-1.8951178163559368, -kPi), 1e-14);
  CHECK_THROWS_AS(exp_int_E(1.0, 0.0), DomainError);
}

TEST_CASE("EI matches mpmath and is real") {
  for (const auto& row : oracle::kCalEI) {
    CAPTURE(row.w);
    Estimate v = cal_EI(row.w);
    CHECK_NEAR_REL(v.value, row.value, 1e-13);
    CHECK(v.value.imag() == 0.0);
  }
  CHECK_THROWS_AS(cal_EI(0.0), DomainError);
}

TEST_CASE("EI - E_1 = i pi on the negative axis") {
  for (double w : {-0.1, -1.0, -kTwoPi, -10.0, -30.0}) {
    CAPTURE(w);
    CHECK_NEAR_REL(cal_EI(w).value - exp_int_E(1.0, w).value, Complex(0.0, kPi), 1e-12);
  }
}

TEST_CASE("Hurwitz zeta matches mpmath") {
  for (const auto& row : oracle::kHurwitz) {
    CAPTURE(row.s);
    CAPTURE(row.z);
    CHECK_NEAR_REL(hurwitz_zeta(row.s, row.z).value, row.value, 1e-12);
  }
  CHECK_THROWS_AS(hurwitz_zeta(2.0, -1.0), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 1.0), DomainError);
}

TEST_CASE("Lerch zeta matches mpmath") {
  for (const auto& row : oracle::kLerch) {
    CAPTURE(row.s);
    CAPTURE(row.a);
    CAPTURE(row.z);
    CHECK_NEAR_REL(lerch_zeta(row.s, row.a, row.z).value, row.value, 1e-12);
  }
}

TEST_CASE("Lerch zeta special values") {
  CHECK_NEAR_REL(lerch_zeta(2.0, 0.0, 1.0).value, kPi * kPi / 6.0, 1e-14);
  // sum 2^{-m} (1+m)^{-2} = 2 Li_2(1/2) = pi^2/6 - ln(2)^2
  const double li = kPi * kPi / 6.0 - std::log(2.0) * std::log(2.0);
  CHECK_NEAR_REL(lerch_zeta(2.0, Complex(0.0, std::log(2.0) / kTwoPi), 1.0).value, li, 1e-14);
  CHECK_NEAR_REL(lerch_zeta(0.0, Complex(0.0, 1.0), 3.0).value, 1.0 / (1.0 - std::exp(-kTwoPi)), 1e-14);
  CHECK_THROWS_AS(lerch_zeta(0.5, 0.25, 1.0), ConvergenceError);
  CHECK_THROWS_AS(lerch_zeta(2.0, Complex(0.0, -1.0), 1.0), DomainError);
}

TEST_CASE("zeta star") {
  CHECK_NEAR_REL(hurwitz_zeta_star(1.0, 1.0).value, kEulerGamma, 1e-14);
  CHECK_NEAR_REL(hurwitz_zeta_star(0.0, 0.25).value, 0.25, 1e-14);
  CHECK_NEAR_REL(hurwitz_zeta_star(-1.0, 2.0).value, -(4.0 - 2.0 + 1.0 / 6.0) / 2.0, 1e-14);
}

TEST_CASE("polygamma matches mpmath") {
  for (const auto& row : oracle::kPolygamma) {
    CAPTURE(row.m);
    CAPTURE(row.z);
    CHECK_NEAR_REL(polygamma(row.m, row.z).value, row.value, 1e-12);
  }
  CHECK_NEAR_REL(polygamma(0, 1.0).value, -kEulerGamma, 1e-15);
  CHECK_NEAR_REL(polygamma(1, 1.0).value, kPi * kPi / 6.0, 1e-15);
  CHECK_NEAR_REL(polygamma(0, 2.0).value, 1.0 - kEulerGamma, 1e-14);
  CHECK_THROWS_AS(polygamma(0, -2.0), DomainError);
  CHECK_THROWS_AS(polygamma(-1, 1.0), DomainError);
}

TEST_CASE("gamma matches mpmath") {
  for (const auto& row : oracle::kGamma) {
    CAPTURE(row.z);
    CHECK_NEAR_REL(gamma(row.z), row.value, 1e-13);
  }
}

TEST_CASE("Bernoulli polynomials match mpmath") {
  for (const auto& row : oracle::kBernoulli) {
    CAPTURE(row.n);
    CAPTURE(row.z);
    CHECK_NEAR_REL(bernoulli_poly(row.n, row.z), row.value, 1e-11);
  }
  CHECK(bernoulli_number(1) == -0.5);
  CHECK(bernoulli_number(2) == doctest::Approx(1.0 / 6.0));
  CHECK_NEAR_REL(bernoulli_poly(1, Complex(0.3, 2.0)), Complex(0.3, 2.0) - 0.5, 1e-15);
  CHECK(bernoulli_rational(12) == Rational(-691, 2730));
  CHECK_THROWS(bernoulli_poly(kMaxBernoulliIndex + 1, 0.5));
}

TEST_CASE("Bernoulli translation B_n(z+1) - B_n(z) = n z^{n-1}") {
  for (int n = 1; n <= 10; ++n) {
    for (Complex z : {Complex(0.3, 0.0), Complex(-1.2, 0.7), Complex(0.5, 1.0)}) {
      CAPTURE(n);
      CHECK_NEAR_REL(bernoulli_poly(n, z + 1.0) - bernoulli_poly(n, z), static_cast<double>(n) * std::pow(z, n - 1),
                     1e-12);
    }
  }
}

TEST_CASE("E_s and Gamma agree off the cut") {
  const Complex zs[] = {{0.5, 0.0}, {3.0, 1.0}, {20.0, -2.0}, {-2.0, 1.5}, {0.1, -0.3}, {-8.0, -4.0}};
  for (Complex s : {Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(-1.5, 0.0), Complex(2.5, 0.0), Complex(0.5, 1.0)}) {
    for (Complex z : zs) {
      CAPTURE(s);
      CAPTURE(z);
      // Left of the imaginary axis both kernels cancel; allow their own estimates.
      const Estimate e = exp_int_E(s, z);
      const Estimate g = inc_gamma_upper(1.0 - s, z);
      const Complex pw = cpow(z, s - 1.0);
      CHECK(std::abs(e.value - pw * g.value) <= 1e-12 * std::abs(e.value) + e.error + std::abs(pw) * g.error);
    }
  }
}

TEST_CASE("E_s e^x stays bounded on the positive axis") {
  for (double s : {-2.0, 0.0, 1.0, 3.0}) {
    for (double x = 5.0; x <= 50.0; x += 2.5) {
      const double scaled = std::abs(exp_int_E(s, x).value) * std::exp(x);
      CHECK(scaled <= 1.0 / x * (1.0 + std::abs(s) / x) * 1.5);
    }
  }
}

}  // TEST_SUITE
