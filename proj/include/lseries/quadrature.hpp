#pragma once

#include <functional>
#include <span>

#include <lseries/common.hpp>

namespace lseries {

struct QuadratureConfig {
  double abs_tol = 1e-13;
  /// Relative tolerance against the magnitude of the integral; not part of the
  /// acceptance rule when zero.
  double rel_tol = 1e-13;
  int max_depth = 30;
  /// Gauss-Legendre panel order.
  int base_nodes = 16;
  /// Truncation point for the t-integrals over [1, inf).
  double t_cutoff = 12.0;
  /// Number of equal panels the interval is split into before adapting.
  int initial_panels = 4;

  void validate() const;
};

struct SegmentIntegral {
  Complex value{};
  double est_error = 0.0;
  int panels_used = 0;

  Estimate estimate() const { return {value, est_error}; }
};

using RealIntegrand = std::function<Complex(double)>;
using ComplexIntegrand = std::function<Complex(Complex)>;

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1], 2 <= n <= 128.
struct GaussLegendreRule {
  std::span<const double> nodes;
  std::span<const double> weights;
};
GaussLegendreRule gauss_legendre(int n);

/// Adaptive panel-subdivision Gauss-Legendre on [a, b].
SegmentIntegral integrate_real(const RealIntegrand& f, double a, double b,
                               const QuadratureConfig& cfg = {});

/// Integral of g along the straight segment from z0 to z1 (dz measure).
SegmentIntegral integrate_segment(const ComplexIntegrand& g, Complex z0, Complex z1,
                                  const QuadratureConfig& cfg = {});

/// Integral over [a, inf) of a decaying integrand: consecutive blocks of growing
/// length are added until two blocks in a row fall below tolerance. `scale` is
/// the length of the first block.
SegmentIntegral integrate_semi_infinite(const RealIntegrand& f, double a, double scale,
                                        const QuadratureConfig& cfg = {});

}  // namespace lseries
