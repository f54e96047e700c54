#pragma once

// Double-precision primitives: log-gamma, polygamma, Hurwitz/Riemann zeta,
// integer-order upper incomplete gamma and Gamma(0, x).
//
// All functions are pure. They throw DomainError for arguments outside the
// documented domain instead of returning NaN.

#include <array>

namespace deltafn {

inline constexpr int kZetaTableMax = 64;

struct SpecialConstants {
  double euler_gamma;
  double ln_pi;
  double ln_2;
  double ln_2pi;
  // zeta_values[k] = zeta(k) for 2 <= k <= kZetaTableMax; entries 0 and 1 are unused.
  std::array<double, kZetaTableMax + 1> zeta_values;
};

/// Process-wide constant table; built on first use (thread-safe).
const SpecialConstants& constants();

/// ln Gamma(x), x > 0.
double ln_gamma(double x);

/// Digamma psi(x), x > 0.
double digamma(double x);

/// psi^(order)(x) for order >= -1 and x > 0. Order -1 is ln Gamma, order 0 the
/// digamma function, and order >= 1 uses (-1)^(order+1) order! zeta(order+1, x).
double polygamma(int order, double x);

/// zeta(s, a) = sum_{k>=0} (a+k)^(-s), s > 1, a > 0 (Euler-Maclaurin).
double hurwitz_zeta(double s, double a);

/// zeta(s) = hurwitz_zeta(s, 1).
double riemann_zeta(double s);

/// zeta(k) for integer k >= 2; table lookup up to kZetaTableMax.
double zeta_int(int k);

/// zeta(k) - 1 without cancellation, integer k >= 2.
double zeta_minus_one(int k);

/// Gamma(n+1, x) = n! e^(-x) sum_{m=0}^{n} x^m/m!, n >= 0, x >= 0.
double upper_incomplete_gamma_int(int n, double x);

/// Gamma(0, x) = -Ei(-x), x > 0.
double gamma_zero(double x);

/// gamma + ln x + Gamma(0, x) computed without cancellation for small x.
/// Equals -sum_{k>=1} (-x)^k/(k k!).
double ein_complement(double x);

/// n! as double (exact for n <= 22).
double factorial(int n);

/// Binomial coefficient C(n, k) as double.
double binomial(int n, int k);

}  // namespace deltafn
