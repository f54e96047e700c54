#pragma once

// Reference values computed independently of the library algorithms.

#include <cmath>
#include <numbers>

namespace oracle {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kEuler = std::numbers::egamma;

// sum_{k=1}^{n} k^(-s) plus the Euler-Maclaurin remainder after n terms.
inline double zeta_brute(double s, long n = 10'000'000) {
  double sum = 0.0;
  for (long k = n; k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);
  const double N = static_cast<double>(n);
  return sum + std::pow(N, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(N, -s) + s * std::pow(N, -s - 1.0) / 12.0;
}

// E1(x) = Gamma(0, x) from the continued fraction (modified Lentz), x >= 1.
inline double e1_continued_fraction(double x) {
  const double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-17) break;
  }
  return h * std::exp(-x);
}

// Delta'(1) = psi(2) - ln Gamma(2) = 1 - gamma.
inline constexpr double kDelta1At1 = 1.0 - kEuler;
// Delta''(1) = pi^2/6 - 3 + 2 gamma.
inline constexpr double kDelta2At1 = kPi * kPi / 6.0 - 3.0 + 2.0 * kEuler;

}  // namespace oracle
