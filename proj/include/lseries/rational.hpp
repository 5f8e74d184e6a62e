#pragma once

#include <gmpxx.h>

namespace lseries {

using Rational = mpq_class;

/// Exact Bernoulli number B_n for 0 <= n <= kMaxBernoulliIndex (B_1 = -1/2).
const Rational& bernoulli_rational(int n);

}  // namespace lseries
