#include "deltafn/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "deltafn/errors.hpp"
#include "deltafn/kernels.hpp"
#include "deltafn/quad.hpp"
#include "specfun_impl.hpp"

namespace deltafn {

namespace {

constexpr double kEulerGamma = 0.5772156649015329;
constexpr double kLnPi = 1.1447298858494002;
constexpr double kLn2 = 0.6931471805599453;
constexpr double kLn2Pi = 1.8378770664093456;
constexpr double kHalfLn2Pi = 0.9189385332046728;

struct DoubleOps {
  static constexpr int lgamma_shift = 8;
  static constexpr int digamma_shift = 10;
  static constexpr int zeta_shift = 10;
  static double log(double x) { return std::log(x); }
  static double abs(double x) { return std::fabs(x); }
  static double eps() { return std::numeric_limits<double>::epsilon() / 2; }
  static double half_ln_2pi() { return kHalfLn2Pi; }
};

using Kern = detail::Kernels<double, DoubleOps>;

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

// zeta(s, a) with the direct part supplied by the dispatched power-sum kernel
// for integer s, or by pow() otherwise.
double hurwitz_impl(double s, double a) {
  const int shift = static_cast<int>(std::ceil(DoubleOps::zeta_shift + s));
  const double w = a + shift;
  const bool integral = s == std::floor(s) && s <= 1024;
  double direct = 0.0;
  double w_pow = 0.0;
  if (integral) {
    const int si = static_cast<int>(s);
    direct = kernels::inverse_power_sum(a, shift, si);
    w_pow = kernels::inverse_power_sum(w, 1, si);
  } else {
    for (int k = shift - 1; k >= 0; --k) direct += std::pow(a + k, -s);
    w_pow = std::pow(w, -s);
  }
  return direct + Kern::zeta_tail(s, w, w_pow);
}

// (zeta(k) - 1) for k >= 2, summed from the second term on.
double zeta_minus_one_impl(int k) { return hurwitz_impl(k, 2.0); }

// ln Gamma(1+z) for |z| <= 1/2 from the Taylor series about 1:
//   -log1p(z) + z(1-gamma) + sum_{k>=2} (-1)^k (zeta(k)-1) z^k / k.
// The log1p term is returned separately so callers shifting by one can drop it.
double ln_gamma_1p_tail(double z, const SpecialConstants& c) {
  double sum = 0.0;
  double power = z;
  for (int k = 2; k <= kZetaTableMax; ++k) {
    power *= z;
    const double term = power * (c.zeta_values[k] - 1.0) / k;
    sum += (k % 2 == 0) ? term : -term;
    if (std::fabs(term) < 1e-18 * std::fabs(z)) break;
  }
  return z * (1.0 - c.euler_gamma) + sum;
}

}  // namespace

const SpecialConstants& constants() {
  static const SpecialConstants table = [] {
    SpecialConstants c{};
    c.euler_gamma = kEulerGamma;
    c.ln_pi = kLnPi;
    c.ln_2 = kLn2;
    c.ln_2pi = kLn2Pi;
    c.zeta_values[0] = std::numeric_limits<double>::quiet_NaN();
    c.zeta_values[1] = std::numeric_limits<double>::infinity();
    for (int k = 2; k <= kZetaTableMax; ++k) c.zeta_values[k] = 1.0 + zeta_minus_one_impl(k);
    return c;
  }();
  return table;
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return std::round(r);
}

double ln_gamma(double x) {
  require(x > 0 && std::isfinite(x), "ln_gamma: x must be positive and finite");
  if (x == 1.0 || x == 2.0) return 0.0;
  const auto& c = constants();
  // Near the zeros at 1 and 2 the shifted Stirling series loses relative
  // accuracy; the Taylor series about 1 keeps it.
  if (x >= 0.5 && x <= 1.5) {
    const double z = x - 1.0;
    return ln_gamma_1p_tail(z, c) - std::log1p(z);
  }
  if (x > 1.5 && x <= 2.5) return ln_gamma_1p_tail(x - 2.0, c);
  return Kern::ln_gamma_shifted(x);
}

double digamma(double x) {
  require(x > 0 && std::isfinite(x), "digamma: x must be positive and finite");
  return Kern::digamma(x);
}

double polygamma(int order, double x) {
  require(order >= -1, "polygamma: order must be >= -1");
  require(x > 0 && std::isfinite(x), "polygamma: x must be positive and finite");
  if (order == -1) return ln_gamma(x);
  if (order == 0) return digamma(x);
  const double sign = (order % 2 == 1) ? 1.0 : -1.0;
  return sign * factorial(order) * hurwitz_zeta(order + 1, x);
}

double hurwitz_zeta(double s, double a) {
  require(s > 1 && std::isfinite(s), "hurwitz_zeta: s must exceed 1");
  require(a > 0 && std::isfinite(a), "hurwitz_zeta: a must be positive");
  return hurwitz_impl(s, a);
}

double riemann_zeta(double s) { return hurwitz_zeta(s, 1.0); }

double zeta_int(int k) {
  require(k >= 2, "zeta_int: k must be >= 2");
  if (k <= kZetaTableMax) return constants().zeta_values[k];
  return 1.0 + zeta_minus_one_impl(k);
}

double zeta_minus_one(int k) {
  require(k >= 2, "zeta_minus_one: k must be >= 2");
  return zeta_minus_one_impl(k);
}

double upper_incomplete_gamma_int(int n, double x) {
  require(n >= 0, "upper_incomplete_gamma_int: n must be >= 0");
  require(x >= 0 && !std::isnan(x), "upper_incomplete_gamma_int: x must be >= 0");
  // Neumaier-compensated ascending sum of x^m/m!.
  double sum = 0.0;
  double comp = 0.0;
  double term = 1.0;
  for (int m = 0; m <= n; ++m) {
    if (m > 0) term *= x / m;
    const double t = sum + term;
    comp += (std::fabs(sum) >= std::fabs(term)) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return factorial(n) * std::exp(-x) * (sum + comp);
}

double ein_complement(double x) {
  require(x > 0 && std::isfinite(x), "ein_complement: x must be positive");
  if (x > 2.0) return constants().euler_gamma + std::log(x) + gamma_zero(x);
  // -sum_{k>=1} (-x)^k/(k k!)
  double sum = 0.0;
  double power = 1.0;  // (-x)^k / k!
  for (int k = 1; k < 200; ++k) {
    power *= -x / k;
    const double term = power / k;
    sum -= term;
    if (std::fabs(term) <= 1e-17 * std::fabs(sum)) break;
  }
  return sum;
}

double gamma_zero(double x) {
  require(x > 0 && std::isfinite(x), "gamma_zero: x must be positive");
  if (x <= 2.0) return ein_complement(x) - constants().euler_gamma - std::log(x);
  // Gamma(0, x) = e^(-x) int_0^inf e^(-u)/(x+u) du
  QuadConfig cfg;
  cfg.rel_tol = 1e-13;
  cfg.abs_tol = 1e-300;
  const QuadResult r =
      integrate_semi_infinite([x](double u) { return std::exp(-u) / (x + u); }, 0.0, cfg);
  if (!r.converged) throw ConvergenceError("gamma_zero: quadrature did not converge");
  return std::exp(-x) * r.value;
}

}  // namespace deltafn
