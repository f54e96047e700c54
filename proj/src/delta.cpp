#include "deltafn/delta.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>

#include "deltafn/errors.hpp"
#include "deltafn/hyp2f1.hpp"
#include "deltafn/specfun.hpp"
#include "deltafn/wide.hpp"

namespace deltafn {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = 3.141592653589793;

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

double sign_of_order(int m) { return (m % 2 == 1) ? 1.0 : -1.0; }  // (-1)^(m-1)

// Leibniz sum over psi^(m-1-j)(x+1) (-1)^j j!/x^(j+1) in binary128. The
// terms grow like m!/x^(m+1) while the sum stays O(1) near x = 0, so double
// precision alone loses up to ~11 digits on the supported range.
EvalResult closed_route(int m, double x) {
  require(x != 0.0, "CLOSED route requires x != 0");
  using W = wide::Real;
  const W xw = wide::from_double(x);
  const W xp1 = xw + W(1);
  const W inv_x = W(1) / xw;
  W sum = W(0);
  W magnitude = W(0);
  W inv_pow = inv_x;  // 1/x^(j+1)
  W j_fact = W(1);    // j!
  for (int j = 0; j <= m; ++j) {
    if (j > 0) {
      j_fact *= W(j);
      inv_pow *= inv_x;
    }
    const W term = W(binomial(m, j)) * wide::polygamma(m - 1 - j, xp1) * j_fact * inv_pow;
    const W signed_term = (j % 2 == 0) ? term : -term;
    sum += signed_term;
    magnitude += term < 0 ? -term : term;
  }
  EvalResult r;
  r.value = wide::to_double(sum);
  r.abs_err_est = std::fabs(r.value) * kEps + wide::to_double(magnitude) * 1e-31;
  r.route = Route::kClosed;
  r.n_evals = m + 1;
  return r;
}

EvalResult from_quad(const QuadResult& q, double factor, Route route) {
  EvalResult r;
  r.value = q.value * factor;
  r.abs_err_est = q.abs_err_est * std::fabs(factor) + std::fabs(r.value) * kEps;
  r.route = route;
  r.n_evals = q.n_evals;
  r.converged = q.converged;
  return r;
}

EvalResult hurwitz_route(int m, double x, const QuadConfig& cfg) {
  const double s = m + 1.0;
  const QuadResult q = integrate_finite(
      [m, s, x](double u) { return std::pow(u, m) * hurwitz_zeta(s, x * u + 1.0); }, 0.0, 1.0, cfg);
  return from_quad(q, sign_of_order(m) * factorial(m), Route::kHurwitz);
}

// int_0^1 u^m e^(-yu) du for y >= 0.
double truncated_exponential_moment(int m, double y) {
  if (y == 0.0) return 1.0 / (m + 1.0);
  if (y <= 2.0 * (m + 1) + 10.0) {
    // e^(-y) sum_j y^j / ((m+1)(m+2)...(m+1+j)), all terms positive.
    double term = 1.0 / (m + 1.0);
    double sum = term;
    for (int j = 1; j < 10000; ++j) {
      term *= y / (m + 1.0 + j);
      sum += term;
      if (term <= 0.25 * kEps * sum) break;
    }
    return std::exp(-y) * sum;
  }
  // [m! - Gamma(m+1, y)] / y^(m+1); Gamma(m+1, y) < m!/e^3 here.
  return (factorial(m) - upper_incomplete_gamma_int(m, y)) / std::pow(y, m + 1.0);
}

EvalResult laplace_route(int m, double x, const QuadConfig& cfg) {
  require(x >= 0.0, "LAPLACE route requires x >= 0");
  auto integrand = [m, x](double t) {
    if (t > 745.0) return 0.0;
    const double bose = t / std::expm1(t);  // t/(e^t - 1)
    return std::pow(t, m - 1) * bose * truncated_exponential_moment(m, x * t);
  };
  const QuadResult q = integrate_semi_infinite(integrand, 0.0, cfg);
  return from_quad(q, sign_of_order(m), Route::kLaplace);
}

EvalResult hyp_route(int m, double x, const QuadConfig& cfg) {
  const double xp1 = x + 1.0;
  const double z = x / xp1;
  const double mp1 = m + 1.0;
  const double t1 = std::pow(xp1, -mp1) / (2.0 * mp1) * gauss_2f1({1.0, mp1, m + 2.0, z});
  const double t2 = std::pow(xp1, -static_cast<double>(m)) / (m * mp1) * gauss_2f1({1.0, double(m), m + 2.0, z});
  const QuadResult p = integrate_unit_split(
      [m, xp1](double phase, double t) { return (phase - 0.5) / ((t + 1.0) * std::pow(t + xp1, m + 1.0)); }, 0.0,
      cfg);
  const double factor = sign_of_order(m) * factorial(m);
  EvalResult r;
  r.value = factor * (t1 + t2 - p.value);
  r.abs_err_est = std::fabs(factor) * (p.abs_err_est + 16.0 * kEps * (std::fabs(t1) + std::fabs(t2))) +
                  std::fabs(r.value) * kEps;
  r.route = Route::kHyp;
  r.n_evals = p.n_evals + 2;
  r.converged = p.converged;
  return r;
}

EvalResult recurrence_route(int m, double x) {
  require(x != 0.0, "RECURRENCE route requires x != 0");
  // a_k = (-1)^(k-1) Delta^(k)/k! ;  a_k = a_(k-1)/x - zeta(k, x+1)/(k x)
  const EvalResult base = closed_route(1, x);
  double a = base.value;
  double err = base.abs_err_est;
  for (int k = 2; k <= m; ++k) {
    const double first = a / x;
    const double second = hurwitz_zeta(k, x + 1.0) / (k * x);
    a = first - second;
    // zeta(k, x+1) carries a few ulp of its own.
    err = err / std::fabs(x) + kEps * (2.0 * std::fabs(first) + 8.0 * std::fabs(second));
  }
  const double factor = sign_of_order(m) * factorial(m);
  EvalResult r;
  r.value = factor * a;
  r.abs_err_est = std::fabs(factor) * err;
  r.route = Route::kRecurrence;
  r.n_evals = base.n_evals + m - 1;
  return r;
}

// Term-wise differentiated Taylor series of Delta about 0:
//   Delta^(m)(x) = sum_{j>=0} (-1)^(j+m+1) zeta(j+m+1)/(j+m+1) (j+m)!/j! x^j
EvalResult series_route(int m, double x) {
  require(std::fabs(x) <= kSeriesRadius, "SERIES route requires |x| <= 0.5");
  double ratio = factorial(m);  // (j+m)!/j!
  double power = 1.0;
  double sum = 0.0;
  double magnitude = 0.0;
  double last = 0.0;
  int j = 0;
  for (; j < 4000; ++j) {
    if (j > 0) {
      ratio *= static_cast<double>(j + m) / j;
      power *= x;
    }
    const int k = j + m + 1;
    const double sign = ((j + m + 1) % 2 == 0) ? 1.0 : -1.0;
    const double term = sign * zeta_int(k) / k * ratio * power;
    sum += term;
    magnitude += std::fabs(term);
    last = std::fabs(term);
    if (x == 0.0) break;
    if (last <= 0.25 * kEps * std::fabs(sum) && j > m) break;
  }
  EvalResult r;
  r.value = sum;
  r.abs_err_est = 2.0 * kEps * magnitude + last;
  r.route = Route::kSeries;
  r.n_evals = j + 1;
  return r;
}

EvalResult asymptotic_route(int m, double x) {
  require(x > 0.0, "ASYMPTOTIC route requires x > 0");
  const DerivOrder order(m);
  EvalResult r;
  r.value = asymptotic_leading(order, x, true);
  r.abs_err_est = std::fabs(r.value - asymptotic_leading(order, x, false));
  r.route = Route::kAsymptotic;
  r.n_evals = 1;
  return r;
}

// gamma - t + Gamma(0, t) + ln t = -sum_{k>=2} (-t)^k/(k k!) near 0.
double ei_bracket(double t) {
  if (t > 2.0) return constants().euler_gamma - t + gamma_zero(t) + std::log(t);
  double power = -t;  // (-t)^k / k!, starting at k = 1
  double sum = 0.0;
  for (int k = 2; k < 200; ++k) {
    power *= -t / k;
    const double term = power / k;
    sum -= term;
    if (std::fabs(term) <= 1e-18 * std::fabs(sum)) break;
  }
  return sum;
}

// sum_{k>=2} (-1)^k zeta(k)/k^2 = 1 - pi^2/12 + sum_{k>=2} (-1)^k (zeta(k)-1)/k^2
double alternating_zeta_over_k2() {
  double tail = 0.0;
  for (int k = 2; k < 200; ++k) {
    const double term = zeta_minus_one(k) / (static_cast<double>(k) * k);
    tail += (k % 2 == 0) ? term : -term;
    if (term < 1e-20) break;
  }
  return 1.0 - kPi * kPi / 12.0 + tail;
}

// Cohen-Rodriguez Villegas-Zagier acceleration of sum_{k>=0} (-1)^k a(k).
template <class Term>
double alternating_sum(const Term& a, int n) {
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s += c * a(k);
    b = (static_cast<double>(k + n) * (k - n)) * b / ((k + 0.5) * (k + 1.0));
  }
  return s / d;
}

}  // namespace

std::string_view route_name(Route r) {
  switch (r) {
    case Route::kClosed:
      return "CLOSED";
    case Route::kHurwitz:
      return "HURWITZ";
    case Route::kLaplace:
      return "LAPLACE";
    case Route::kHyp:
      return "HYP";
    case Route::kRecurrence:
      return "RECURRENCE";
    case Route::kSeries:
      return "SERIES";
    case Route::kAsymptotic:
      return "ASYMPTOTIC";
  }
  return "UNKNOWN";
}

std::optional<Route> parse_route(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char ch) { return std::toupper(ch); });
  for (Route r : {Route::kClosed, Route::kHurwitz, Route::kLaplace, Route::kHyp, Route::kRecurrence,
                  Route::kSeries, Route::kAsymptotic}) {
    if (upper == route_name(r)) return r;
  }
  return std::nullopt;
}

DerivOrder::DerivOrder(int m) : m_(m) {
  if (m < 1 || m > kMax) throw DomainError("derivative order must be in 1..12");
}

double delta(double x) {
  require(x > -1.0 && std::isfinite(x), "delta: requires x > -1");
  if (std::fabs(x) < kSeriesThreshold) {
    // -gamma + sum_{k>=2} (-1)^k zeta(k) x^(k-1)/k
    double sum = 0.0;
    double power = 1.0;
    for (int k = 2; k < 400; ++k) {
      power *= x;
      const double term = zeta_int(k) * power / k;
      sum += (k % 2 == 0) ? term : -term;
      if (std::fabs(term) <= 1e-18) break;
    }
    return -constants().euler_gamma + sum;
  }
  return ln_gamma(x + 1.0) / x;
}

EvalResult delta_deriv(DerivOrder order, double x, Route route, const QuadConfig& cfg) {
  require(x > -1.0 && std::isfinite(x), "delta_deriv: requires x > -1");
  cfg.validate();
  const int m = order.value();
  switch (route) {
    case Route::kClosed:
      return closed_route(m, x);
    case Route::kHurwitz:
      return hurwitz_route(m, x, cfg);
    case Route::kLaplace:
      return laplace_route(m, x, cfg);
    case Route::kHyp:
      return hyp_route(m, x, cfg);
    case Route::kRecurrence:
      return recurrence_route(m, x);
    case Route::kSeries:
      return series_route(m, x);
    case Route::kAsymptotic:
      return asymptotic_route(m, x);
  }
  throw DomainError("delta_deriv: unknown route");
}

EvalResult delta_deriv_auto(DerivOrder m, double x, const QuadConfig& cfg) {
  require(x > -1.0 && std::isfinite(x), "delta_deriv: requires x > -1");
  if (x == 0.0) {
    EvalResult r;
    r.value = delta_deriv_at_zero(m);
    r.abs_err_est = std::fabs(r.value) * kEps;
    r.route = Route::kSeries;
    r.n_evals = 1;
    return r;
  }
  if (std::fabs(x) < kSeriesThreshold) return delta_deriv(m, x, Route::kSeries, cfg);
  return delta_deriv(m, x, Route::kClosed, cfg);
}

double delta_deriv_at_zero(DerivOrder order) {
  const int m = order.value();
  return sign_of_order(m) * factorial(m) * zeta_int(m + 1) / (m + 1.0);
}

double delta_deriv_at_one(DerivOrder order) {
  const int m = order.value();
  double bracket = 1.0 - constants().euler_gamma;
  for (int j = 2; j <= m; ++j) bracket -= zeta_minus_one(j) / j;
  return sign_of_order(m) * factorial(m) * bracket;
}

double delta_deriv_half_integer(DerivOrder order) {
  const int m = order.value();
  require(m <= 10, "delta_deriv_half_integer: requires m <= 10");
  const int n = m - 1;
  const auto& c = constants();
  double sum = 0.0;
  for (int j = 0; j <= n - 1; ++j) {
    const double sign = ((n - j) % 2 == 0) ? 1.0 : -1.0;
    sum += sign / (n - j + 1.0) * (std::ldexp(1.0, n + 2) - std::ldexp(1.0, j + 1)) * zeta_int(n - j + 1);
  }
  sum += std::ldexp(1.0, n + 1) * (c.euler_gamma + 2.0 * c.ln_2);
  sum -= std::ldexp(1.0, n + 2) * 0.5 * c.ln_pi;
  return factorial(m) * sum;
}

double asymptotic_leading(DerivOrder order, double x, bool refined) {
  require(x > 0.0, "asymptotic_leading: requires x > 0");
  const int m = order.value();
  const double leading = sign_of_order(m) * factorial(m - 1) * std::pow(x + 1.0, -static_cast<double>(m));
  if (!refined) return leading;
  const double l = constants().euler_gamma - std::log(x) + digamma(m + 1.0);
  return leading * (1.0 + m * l / x - m * l / (2.0 * (x + 1.0)));
}

FracRepSides frac_rep_prop2(DerivOrder order, int k, const QuadConfig& cfg) {
  const int m = order.value();
  require(m <= 8, "frac_rep_prop2: requires m <= 8");
  require(k >= 1, "frac_rep_prop2: requires k >= 1");
  const double s = m + 1.0;
  FracRepSides sides;
  sides.lhs = integrate_finite([m, s, k](double u) { return std::pow(u, m) * hurwitz_zeta(s, k * u + 1.0); }, 0.0,
                               1.0, cfg);
  QuadResult bracket =
      integrate_unit_split([m, s](double phase, double w) { return std::pow(phase, m) * std::pow(w, -s); }, 1.0, cfg);
  for (int j = 1; j < k; ++j) {
    bracket += integrate_unit_split(
        [m, s, j](double phase, double x) { return std::pow(phase + j, m) * std::pow(x + j + 1.0, -s); }, 0.0, cfg);
  }
  sides.rhs = bracket.scaled(std::pow(static_cast<double>(k), -s));
  return sides;
}

IntegralDeltaForms integral_delta(const QuadConfig& cfg) {
  IntegralDeltaForms forms;
  forms.quadrature = integrate_finite([](double x) { return delta(x); }, 0.0, 1.0, cfg);
  const double gamma = constants().euler_gamma;
  forms.series = -gamma + alternating_zeta_over_k2();
  const QuadResult ei =
      integrate_semi_infinite([](double t) { return ei_bracket(t) / (t * std::expm1(t)); }, 0.0, cfg);
  forms.ei_form = ei.scaled(-1.0);
  forms.ei_form.value -= gamma;
  return forms;
}

std::vector<double> integral_delta_partial_sums(int k_max) {
  require(k_max >= 2, "integral_delta_partial_sums: requires k_max >= 2");
  std::vector<double> sums;
  double s = -constants().euler_gamma;
  for (int k = 2; k <= k_max; ++k) {
    const double term = zeta_int(k) / (static_cast<double>(k) * k);
    s += (k % 2 == 0) ? term : -term;
    sums.push_back(s);
  }
  return sums;
}

IntegralDeltaSquaredForms integral_delta_squared(const QuadConfig& cfg) {
  IntegralDeltaSquaredForms forms;
  forms.quadrature = integrate_finite(
      [](double x) {
        const double d = delta(x);
        return d * d;
      },
      0.0, 1.0, cfg);
  const double gamma = constants().euler_gamma;
  // b(m) = 1/(m-1) sum_{l=2}^{m-2} zeta(m-l) zeta(l) / ((m-l) l), summed with sign (-1)^m from m = 4.
  auto b = [](int k) {
    const int m = k + 4;
    double inner = 0.0;
    for (int l = 2; l <= m - 2; ++l) inner += zeta_int(m - l) * zeta_int(l) / (static_cast<double>(m - l) * l);
    return inner / (m - 1.0);
  };
  const double coarse = alternating_sum(b, 36);
  const double fine = alternating_sum(b, 48);
  forms.series = gamma * gamma - 2.0 * gamma * alternating_zeta_over_k2() + fine;
  forms.series_err_est = std::fabs(fine - coarse) + 8.0 * kEps * std::fabs(forms.series);
  return forms;
}

IdentityResidual recurrence_residual(DerivOrder order, double x, Route base, const QuadConfig& cfg,
                                     double tolerance) {
  const int m = order.value();
  require(m >= 2, "recurrence_residual: requires m >= 2");
  require(x > -1.0 && x != 0.0, "recurrence_residual: requires x > -1, x != 0");
  const EvalResult upper = delta_deriv(order, x, base, cfg);
  const EvalResult lower = delta_deriv(DerivOrder(m - 1), x, base, cfg);
  const double lhs = sign_of_order(m) * upper.value / factorial(m);
  const double rhs = sign_of_order(m - 1) * lower.value / (factorial(m - 1) * x) - hurwitz_zeta(m, x + 1.0) / (m * x);
  PointRecord point;
  point.label("route", std::string(route_name(base))).set("m", m).set("x", x);
  return make_residual("recurrence", point, lhs, rhs, tolerance, ResidualKind::kRelative);
}

VerificationReport check_complete_monotonicity(int m_max, std::span<const double> grid, const QuadConfig& cfg) {
  require(m_max >= 1 && m_max <= DerivOrder::kMax, "check_complete_monotonicity: m_max must be in 1..12");
  for (double x : grid) require(x > -1.0 && std::isfinite(x), "check_complete_monotonicity: grid points must exceed -1");
  VerificationReport report;
  report.suite = "monotonicity";
  for (double x : grid) {
    for (int m = 1; m <= m_max; ++m) {
      const EvalResult r = delta_deriv_auto(DerivOrder(m), x, cfg);
      const double signed_value = sign_of_order(m) * r.value;
      const double floor = -r.abs_err_est;
      double violation = std::max(0.0, floor - signed_value);
      if (!std::isfinite(signed_value)) violation = std::numeric_limits<double>::infinity();
      PointRecord point;
      point.label("route", std::string(route_name(r.route))).set("m", m).set("x", x);
      report.add(make_inequality("complete_monotonicity", point, signed_value, floor, violation, 0.0));
    }
  }
  return report;
}

}  // namespace deltafn
