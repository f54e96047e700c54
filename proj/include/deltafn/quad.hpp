#pragma once

// Adaptive Gauss-Kronrod quadrature and the fractional-part integral
// machinery: per-period splitting of integrals of f({x}, x) over half-lines
// and the two sides of the zeta-function transform of periodic integrands.

#include <cmath>
#include <functional>

namespace deltafn {

struct QuadConfig {
  double rel_tol = 1e-11;
  double abs_tol = 1e-13;
  int max_subdivisions = 2000;
  long tail_intervals_max = 1'000'000;
  // Absolute floor for the tail-extrapolation agreement test in
  // integrate_unit_split.
  double tail_stop = 1e-14;

  /// Throws DomainError unless rel_tol, abs_tol > 0 and max_subdivisions >= 1.
  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double abs_err_est = 0.0;
  long n_evals = 0;
  bool converged = true;

  QuadResult& operator+=(const QuadResult& other) {
    value += other.value;
    abs_err_est += other.abs_err_est;
    n_evals += other.n_evals;
    converged = converged && other.converged;
    return *this;
  }
  friend QuadResult operator+(QuadResult lhs, const QuadResult& rhs) { return lhs += rhs; }

  /// Multiply value and error estimate by a constant.
  QuadResult scaled(double factor) const {
    QuadResult r = *this;
    r.value *= factor;
    r.abs_err_est *= std::fabs(factor);
    return r;
  }
};

using Integrand = std::function<double(double)>;

/// Integrand of a periodic argument: called as f(frac, x) where frac is the
/// fractional part of x / period in [0, 1).
using FracIntegrand = std::function<double(double, double)>;

/// {x} = x - floor(x), in [0, 1).
inline double frac(double x) { return x - std::floor(x); }

/// First periodic Bernoulli function P1(x) = {x} - 1/2.
inline double p1(double x) { return frac(x) - 0.5; }

/// Adaptive G7/K15 quadrature of f over [a, b], a < b. Sets converged = false
/// when max_subdivisions is exhausted before the tolerance is met.
QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadConfig& cfg = {});

/// Integral of a smooth f over [a, inf) via x = a + (1-t)/t.
QuadResult integrate_semi_infinite(const Integrand& f, double a, const QuadConfig& cfg = {});

/// Integral over [start, inf) of f({x/period}, x), summed one period at a
/// time so each panel is smooth. The remainder beyond the last summed period
/// is extrapolated with Euler-Maclaurin on the per-period contribution; the
/// change between successive truncation points is added to abs_err_est.
QuadResult integrate_unit_split(const FracIntegrand& f, double start, const QuadConfig& cfg = {},
                                double period = 1.0);

struct TransformSides {
  QuadResult lhs;
  QuadResult rhs;
};

/// Both sides of
///   int_0^inf f({x/b}) (x+c)^(-lambda) dx = b^(1-lambda) int_0^1 f(y) zeta(lambda, y + c/b) dy
/// for b > 0, c >= 0, lambda > 1 (c > 0 whenever the left side is singular at 0).
TransformSides lemma2_transform(const std::function<double(double)>& f, double b, double c,
                                double lambda, const QuadConfig& cfg = {});

}  // namespace deltafn
