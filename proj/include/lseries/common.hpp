#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lseries {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kEulerGamma = std::numbers::egamma;
inline constexpr Complex kI{0.0, 1.0};

/// A computed value together with an estimate of its absolute error.
struct Estimate {
  Complex value{};
  double error = 0.0;

  Estimate& operator+=(const Estimate& other) {
    value += other.value;
    error += other.error;
    return *this;
  }
};

inline Estimate operator+(Estimate a, const Estimate& b) { return a += b; }

inline Estimate operator*(Complex c, const Estimate& e) {
  return {c * e.value, std::abs(c) * e.error};
}

// Error hierarchy. Every failure inside the library surfaces as one of these.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of the function (pole, branch point, bad precondition).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A series, continued fraction or quadrature did not reach tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Result would exceed the double exponent range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Not enough stored coefficients / q-series precision for the request.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Test function is not admissible for the given expansion.
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the regime where an identity is known to hold.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration or descriptor.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Principal-branch power z^a; arg z in (-pi, pi]. Exact for z on the negative axis.
inline Complex cpow(Complex z, Complex a) {
  if (z == Complex{0.0, 0.0}) {
    if (a.real() > 0.0) return 0.0;
    throw DomainError("cpow: 0 raised to a power with non-positive real part");
  }
  if (a.imag() == 0.0 && a.real() == std::round(a.real()) && std::abs(a.real()) <= 64.0) {
    int n = static_cast<int>(a.real());
    Complex base = n < 0 ? 1.0 / z : z;
    Complex out = 1.0;
    for (int k = std::abs(n); k > 0; --k) out *= base;
    return out;
  }
  // std::log picks arg in (-pi, pi]; for z = -x + (-0)i we want +pi.
  Complex zz = (z.imag() == 0.0 && z.real() < 0.0) ? Complex{z.real(), 0.0} : z;
  return std::exp(a * std::log(zz));
}

/// Principal logarithm, with the negative real axis mapped to arg = +pi.
inline Complex clog(Complex z) {
  if (z.imag() == 0.0 && z.real() < 0.0) return {std::log(-z.real()), kPi};
  return std::log(z);
}

/// i^a on the principal branch: exp(i*pi*a/2).
inline Complex ipow(Complex a) { return std::exp(kI * (kPi / 2.0) * a); }

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline bool is_integer(Complex z) {
  return z.imag() == 0.0 && z.real() == std::round(z.real());
}

}  // namespace lseries
