#include <cstring>

#include <lseries/ltest.hpp>

#include "oracle_values.hpp"
#include "test_util.hpp"

using namespace lseries;

namespace {

FourierExpansion harmonic_form(const char* label) {
  if (std::strcmp(label, "k0") == 0) return synth_harmonic(0, {{1, 1.0}}, {{-1, 1.0}});
  return synth_harmonic(-2, {{-1, 1.0}, {1, 0.5}}, {{-1, Complex(2.0, -1.0)}, {-2, Complex(0.3, 0.2)}});
}

}  // namespace

TEST_SUITE("ltest") {

TEST_CASE("Laplace transform of phi_s^w") {
  CHECK_NEAR_REL(laplace_phi_sw(1.0, 0.0, 1.0).value, std::exp(-1.0), 1e-15);
  CHECK_NEAR_REL(laplace_phi_sw(0.0, 0.0, kTwoPi).value, exp_int_E(1.0, kTwoPi).value, 1e-15);
  CHECK_NEAR_REL(laplace_phi_sw(0.0, 0.0, -kTwoPi).value, cal_EI(-kTwoPi).value - Complex(0.0, kPi), 1e-13);
  CHECK_THROWS_AS(laplace_phi_sw(0.0, 1.0, -1.0), DomainError);
  // Quadrature of the definition.
  const Complex s(0.7, 0.0), w(0.4, 2.0);
  TestFunction phi = TestFunction::phi_sw(s, w);
  SegmentIntegral direct = integrate_semi_infinite([&](double t) { return std::exp(-3.0 * t) * phi(t); }, 1.0, 1.0);
  CHECK_NEAR_REL(laplace_phi_sw(s, w, 3.0).value, direct.value, 1e-12);
  CHECK_NEAR_REL(laplace_transform(phi, 3.0).value, direct.value, 1e-12);
}

TEST_CASE("Fricke transform of phi_s^w") {
  const Complex s(0.5, 0.0), w(1.0, 0.5);
  TestFunction phi = TestFunction::phi_sw(s, w);
  TestFunction t0 = fricke_transform_testfn(phi, 2, 1);
  for (double t : {0.1, 0.5, 0.99, 1.0, 1.5}) {
    const Complex expected = t <= 1.0 ? std::exp(-w / t) * std::pow(t, -s - 1.0) : Complex(0.0);
    CAPTURE(t);
    CHECK_NEAR_REL(t0(t), expected, 1e-14);
    CHECK_NEAR_REL(fricke_value(phi, 2, 1, t), expected, 1e-14);
  }
  TestFunction t4 = fricke_transform_testfn(phi, 2, 4);
  CHECK_NEAR_REL(t4(0.125), 4.0 * std::exp(-2.0 * w) * std::pow(2.0, s - 1.0), 1e-14);
  CHECK(t4(0.3) == Complex(0.0));

  TestFunction back = fricke_transform_testfn(t4, 2, 4);
  CHECK(back.kind == TestFunctionKind::phi_sw);
  for (double t : {1.0, 1.7, 4.0}) CHECK_NEAR_REL(back(t), phi(t) / 16.0, 1e-14);

  CHECK_THROWS_AS(fricke_transform_testfn(TestFunction::compact({{{1.0, 2.0}}}, 1.0, 2.0), 2, 1), DomainError);
}

TEST_CASE("L*(J, s) against mpmath") {
  FourierExpansion J = build_J();
  for (const auto& row : oracle::kLStarJ) {
    CAPTURE(row.s);
    Estimate v = l_star(J, row.s);
    CHECK_NEAR_REL(v.value, row.value, 1e-12);
    CHECK_NEAR_REL(l_value(J, TestFunction::phi_sw(row.s, 0.0)).value, v.value, 1e-10);
  }
  CHECK_NEAR_ABS(l_star(J, 0.0).value.imag(), -kPi, 1e-12);
}

TEST_CASE("L_J(phi_s^w) against mpmath") {
  FourierExpansion J = build_J();
  for (const auto& row : oracle::kLValueJ) {
    CAPTURE(row.s);
    CAPTURE(row.w);
    const Complex v = l_value(J, TestFunction::phi_sw(row.s, row.w)).value;
    CHECK(std::abs(v - row.value) <= 1e-12 * std::max(1.0, std::abs(row.value)) + 1e-24);
    CHECK(std::abs(v - row.value) <= 1e-9 * std::abs(row.value));
  }
}

TEST_CASE("harmonic L-values against mpmath") {
  for (std::size_t i = 0; i < std::size(oracle::kLHarmonic); ++i) {
    const auto& row = oracle::kLHarmonic[i];
    const Complex w = i % 6 < 3 ? Complex(0.5, 1.0) : Complex(0.0);
    FourierExpansion f = harmonic_form(row.form);
    CAPTURE(row.form);
    CAPTURE(row.s);
    CAPTURE(w);
    LValue v = l_value(f, TestFunction::phi_sw(row.s, w));
    CHECK(std::abs(v.value - row.value) <= 1e-10 * std::max(1e-3, std::abs(row.value)));
    CHECK_NEAR_ABS(v.holo_part + v.nonholo_part, v.value, 1e-15);
  }
}

TEST_CASE("single-term examples") {
  const double e0 = std::exp(-kTwoPi) / kTwoPi;
  FourierExpansion one = synth_harmonic(0, {{1, 1.0}}, {});
  CHECK_NEAR_REL(l_value(one, TestFunction::phi_sw(1.0, 0.0)).value, e0, 1e-14);
  CHECK_NEAR_REL(l_star(one, 0.0).value, exp_int_E(1.0, kTwoPi).value, 1e-14);

  FourierExpansion b_only = synth_harmonic(0, {}, {{-1, 1.0}});
  LValue nh = l_value(b_only, TestFunction::phi_sw(1.0, 0.0));
  CHECK_NEAR_REL(nh.value, e0, 1e-12);
  CHECK(nh.holo_part == Complex(0.0));

  FourierExpansion zero = synth_harmonic(0, {}, {});
  CHECK(l_value(zero, TestFunction::phi_sw(0.5, kI)).value == Complex(0.0));
  CHECK(l_value_by_vertical_integral(zero, TestFunction::compact({{{1.0, 2.0}}}, 1.0, 2.0)).value == Complex(0.0));
}

TEST_CASE("l_tilde") {
  FourierExpansion J = build_J();
  CHECK_NEAR_REL(l_tilde(J, 0.0).value, 2.0 * l_star(J, 0.0).value, 1e-14);
  for (double s : {0.5, 1.0, 2.5}) CHECK_NEAR_REL(l_tilde(J, s).value, l_tilde(J, -s).value, 1e-13);
  FourierExpansion one = synth_harmonic(0, {{1, 1.0}}, {});
  CHECK_NEAR_REL(l_tilde(one, 1.0).value, exp_int_E(0.0, kTwoPi).value + exp_int_E(2.0, kTwoPi).value, 1e-14);
  CHECK_THROWS_AS(l_tilde(harmonic_form("k0"), 1.0), DomainError);
}

TEST_CASE("vertical integral agrees with the series") {
  FourierExpansion J = build_J();
  const std::vector<TestFunction> phis = {
      TestFunction::compact({{{1.0, 2.0}}}, 1.0, 2.0),
      TestFunction::compact({{{1.0, 3.0}}}, 1.0, 1.5),
      TestFunction::compact({{{Complex(0.5, -1.0), 2.5}, {2.0, 4.0}}}, 0.8, 1.7),
      TestFunction::phi_sw(0.0, 30.0),
      TestFunction::phi_sw(1.5, Complex(10.0, 2.0)),
  };
  for (const auto& phi : phis) {
    LValue series = l_value(J, phi);
    Estimate vertical = l_value_by_vertical_integral(J, phi);
    CAPTURE(series.value);
    CAPTURE(vertical.value);
    CHECK(std::abs(series.value - vertical.value) <=
          std::max(1e-9 * std::max(1.0, std::abs(series.value)), series.error_estimate + vertical.error));
  }
  FourierExpansion h = harmonic_form("k-2");
  for (const auto& phi : {TestFunction::compact({{{1.0, 2.0}}}, 1.0, 2.0), TestFunction::phi_sw(0.5, 20.0)}) {
    CHECK_NEAR_REL(l_value(h, phi).value, l_value_by_vertical_integral(h, phi).value, 1e-9);
  }
  CHECK_THROWS_AS(l_value_by_vertical_integral(J, TestFunction::phi_sw(0.0, 3.0)), AdmissibilityError);
  CHECK_THROWS_AS(l_value_by_vertical_integral(J, fricke_transform_testfn(TestFunction::phi_sw(0.0, 30.0), 2, 1)),
                  RegimeError);
}

TEST_CASE("linearity") {
  FourierExpansion f = harmonic_form("k0");
  FourierExpansion g = synth_harmonic(0, {{-1, 2.0}, {2, Complex(0.0, 1.0)}}, {{-2, 0.5}});
  const Complex alpha(1.5, -0.5), beta(-2.0, 0.25);
  FourierExpansion h = linear_combination(alpha, f, beta, g);
  for (const auto& phi : {TestFunction::phi_sw(0.5, Complex(0.5, 1.0)), TestFunction::phi_sw(2.0, 0.0),
                          TestFunction::compact({{{1.0, 2.0}}}, 1.0, 2.0)}) {
    const Complex lhs = l_value(h, phi).value;
    const Complex rhs = alpha * l_value(f, phi).value + beta * l_value(g, phi).value;
    CHECK_NEAR_REL(lhs, rhs, 1e-13);
  }
}

TEST_CASE("functional equation for J") {
  FourierExpansion J = build_J();
  const Complex w(30.0, 5.0);
  for (double s : {0.0, 1.0, -0.5}) {
    TestFunction phi = TestFunction::phi_sw(s, w);
    const Complex lhs = l_value(J, phi).value;
    const Complex rhs = l_value(J, fricke_transform_testfn(phi, 2, 1)).value;
    CAPTURE(s);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::abs(lhs));
  }
  CHECK_NOTHROW(require_fricke_admissible(J, w, 1));
  CHECK_THROWS_AS(require_fricke_admissible(J, 1.0, 1), AdmissibilityError);
}

TEST_CASE("test function validation") {
  CHECK_THROWS_AS(TestFunction::compact({{{1.0, 2.0}}}, 2.0, 1.0).validate(), DomainError);
  CHECK_THROWS_AS(TestFunction::compact({{{1.0, 0.5}}}, 1.0, 2.0).validate(), DomainError);
}

}  // TEST_SUITE
