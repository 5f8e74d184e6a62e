#include <array>
#include <string>
#include <vector>

#include <lseries/rational.hpp>
#include <lseries/specfun.hpp>

namespace lseries {
namespace {

struct BernoulliTable {
  std::array<Rational, kMaxBernoulliIndex + 1> numbers;
  // coeffs[n][j] is the coefficient of z^j in B_n(z).
  std::vector<std::vector<double>> coeffs;

  BernoulliTable() {
    // sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1.
    numbers[0] = 1;
    for (int n = 1; n <= kMaxBernoulliIndex; ++n) {
      Rational acc = 0;
      mpz_class binom = 1;  // C(n+1, 0)
      for (int k = 0; k < n; ++k) {
        acc += Rational(binom) * numbers[k];
        binom = binom * (n + 1 - k) / (k + 1);
      }
      numbers[n] = -acc / Rational(n + 1);
      numbers[n].canonicalize();
    }

    coeffs.resize(kMaxBernoulliIndex + 1);
    for (int n = 0; n <= kMaxBernoulliIndex; ++n) {
      coeffs[n].assign(n + 1, 0.0);
      mpz_class binom = 1;  // C(n, k)
      for (int k = 0; k <= n; ++k) {
        Rational c = Rational(binom) * numbers[k];
        coeffs[n][n - k] = c.get_d();
        binom = binom * (n - k) / (k + 1);
      }
    }
  }
};

const BernoulliTable& table() {
  static const BernoulliTable t;
  return t;
}

void check_index(int n) {
  if (n < 0 || n > kMaxBernoulliIndex) {
    throw DomainError("Bernoulli index " + std::to_string(n) + " outside [0, " +
                      std::to_string(kMaxBernoulliIndex) + "]");
  }
}

}  // namespace

const Rational& bernoulli_rational(int n) {
  check_index(n);
  return table().numbers[n];
}

double bernoulli_number(int n) {
  check_index(n);
  return table().numbers[n].get_d();
}

Complex bernoulli_poly(int n, Complex z) {
  check_index(n);
  const auto& c = table().coeffs[n];
  Complex acc = 0.0;
  for (int j = n; j >= 0; --j) acc = acc * z + c[j];
  return acc;
}

}  // namespace lseries
