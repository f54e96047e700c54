#include "deltafn/wide.hpp"

#include <array>
#include <cmath>

#include "deltafn/errors.hpp"
#include "specfun_impl.hpp"

#if defined(DELTAFN_WIDE_IS_FLOAT128)
#include <quadmath.h>
#endif

namespace deltafn::wide {

namespace {

// Constants split into a double head and a double tail.
Real split(double hi, double lo) { return Real(hi) + Real(lo); }

struct WideOps {
  // Shifts chosen so the Bernoulli series through B_30 reach ~1e-34.
  static constexpr int lgamma_shift = 40;
  static constexpr int digamma_shift = 40;
  static constexpr int zeta_shift = 60;
  static Real log(Real x) {
#if defined(DELTAFN_WIDE_IS_FLOAT128)
    return logq(x);
#else
    return std::log(x);
#endif
  }
  static Real abs(Real x) { return x < 0 ? -x : x; }
  static Real eps() { return split(1.0, 0.0) / Real(1.0e34); }
  static Real half_ln_2pi() { return split(0.9189385332046728, -3.8782941580672414e-17); }
};

using Kern = detail::Kernels<Real, WideOps>;

constexpr int kWideZetaMax = 90;

// zeta(k) - 1 = zeta(k, 2) for k = 2..kWideZetaMax, built once.
const std::array<Real, kWideZetaMax + 1>& zeta_minus_one_table() {
  static const std::array<Real, kWideZetaMax + 1> table = [] {
    std::array<Real, kWideZetaMax + 1> t{};
    for (int k = 2; k <= kWideZetaMax; ++k) t[k] = Kern::hurwitz_int(k, Real(2));
    return t;
  }();
  return table;
}

// ln Gamma(2 + z) for |z| <= 0.5. The shifted Stirling form loses about
// eps * ln Gamma(41) in absolute terms, which matters near the zeros.
Real ln_gamma_2p(Real z) {
  const auto& zm1 = zeta_minus_one_table();
  const Real euler = split(0.5772156649015329, -4.942915152430645e-18);
  Real sum = Real(0);
  Real power = z;
  for (int k = 2; k <= kWideZetaMax; ++k) {
    power *= z;
    const Real term = power * zm1[k] / Real(k);
    sum += (k % 2 == 0) ? term : -term;
    if (WideOps::abs(term) < WideOps::eps() * Real(1e-2) * WideOps::abs(z)) break;
  }
  return z * (Real(1) - euler) + sum;
}

}  // namespace

Real from_double(double x) { return Real(x); }
double to_double(Real x) { return static_cast<double>(x); }

Real ln_gamma(Real x) {
  if (!(x > 0)) throw DomainError("wide::ln_gamma: x must be positive");
  if (x == Real(1) || x == Real(2)) return Real(0);
  if (x >= Real(0.5) && x <= Real(1.5)) return ln_gamma_2p(x - Real(1)) - WideOps::log(x);
  if (x > Real(1.5) && x <= Real(2.5)) return ln_gamma_2p(x - Real(2));
  return Kern::ln_gamma_shifted(x);
}

Real digamma(Real x) {
  if (!(x > 0)) throw DomainError("wide::digamma: x must be positive");
  return Kern::digamma(x);
}

Real hurwitz_zeta(int s, Real a) {
  if (s < 2) throw DomainError("wide::hurwitz_zeta: s must be >= 2");
  if (!(a > 0)) throw DomainError("wide::hurwitz_zeta: a must be positive");
  return Kern::hurwitz_int(s, a);
}

Real polygamma(int order, Real x) {
  if (order < -1) throw DomainError("wide::polygamma: order must be >= -1");
  if (order == -1) return ln_gamma(x);
  if (order == 0) return digamma(x);
  Real fact = Real(1);
  for (int k = 2; k <= order; ++k) fact *= Real(k);
  const Real z = hurwitz_zeta(order + 1, x);
  return (order % 2 == 1) ? fact * z : -fact * z;
}

}  // namespace deltafn::wide
