#pragma once

// Delta(x) = ln Gamma(x+1)/x, Delta(0) = -gamma, and its derivatives on
// (-1, inf), computed along independent routes so they can be checked
// against each other.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "deltafn/quad.hpp"
#include "deltafn/report.hpp"

namespace deltafn {

enum class Route {
  kClosed,      // Leibniz rule on ln Gamma(x+1) * (1/x), polygammas at x+1
  kHurwitz,     // (-1)^(m-1) m! int_0^1 u^m zeta(m+1, xu+1) du
  kLaplace,     // (-1)^(m-1) int_0^inf t^m/(e^t-1) int_0^1 u^m e^(-xtu) du dt
  kHyp,         // two 2F1 terms plus a P1 integral
  kRecurrence,  // upward recurrence in m from Delta'
  kSeries,      // term-wise differentiated Taylor series about 0
  kAsymptotic,  // leading large-x term (approximate)
};

std::string_view route_name(Route r);

/// Case-insensitive parse of a route name; nullopt if unknown.
std::optional<Route> parse_route(std::string_view name);

/// Derivative order m >= 1 with the supported cap.
class DerivOrder {
 public:
  static constexpr int kMax = 12;
  explicit DerivOrder(int m);
  int value() const { return m_; }

 private:
  int m_;
};

struct EvalResult {
  double value = 0.0;
  double abs_err_est = 0.0;
  Route route = Route::kClosed;
  long n_evals = 0;
  bool converged = true;
};

/// |x| below which delta() and the automatic route use the Taylor series.
inline constexpr double kSeriesThreshold = 0.125;

/// Largest |x| accepted by the SERIES route.
inline constexpr double kSeriesRadius = 0.5;

/// Delta(x), x > -1.
double delta(double x);

/// Delta^(m)(x) by the requested route.
EvalResult delta_deriv(DerivOrder m, double x, Route route, const QuadConfig& cfg = {});

/// Default route: x = 0 exact value, |x| < kSeriesThreshold SERIES, else CLOSED.
EvalResult delta_deriv_auto(DerivOrder m, double x, const QuadConfig& cfg = {});

/// Delta^(m)(0) = (-1)^(m-1) m! zeta(m+1)/(m+1).
double delta_deriv_at_zero(DerivOrder m);

/// Delta^(m)(1) from the closed zeta sum
///   (-1)^(m-1) Delta^(m)(1) = m! [1 - gamma - sum_{j=2}^{m} (zeta(j)-1)/j].
double delta_deriv_at_one(DerivOrder m);

/// Delta^(m)(-1/2) from psi values at 1/2, 1 <= m <= 10.
double delta_deriv_half_integer(DerivOrder m);

/// Leading large-x term (-1)^(m-1) (m-1)!/(x+1)^m. With `refined`, the first
/// correction from the near-one expansions of the 2F1 terms is included:
/// leading * [1 + m L/x - m L/(2(x+1))], L = gamma - ln x + psi(m+1).
double asymptotic_leading(DerivOrder m, double x, bool refined = false);

struct FracRepSides {
  QuadResult lhs;  // int_0^1 u^m zeta(m+1, ku+1) du
  QuadResult rhs;  // k^(-m-1) [fractional-part integrals]
};

/// Hurwitz integral versus its fractional-part form, 1 <= m <= 8, k >= 1.
FracRepSides frac_rep_prop2(DerivOrder m, int k, const QuadConfig& cfg = {});

struct IntegralDeltaForms {
  QuadResult quadrature;  // int_0^1 Delta
  double series;          // -gamma + sum (-1)^k zeta(k)/k^2
  QuadResult ei_form;     // -gamma - int_0^inf [gamma - t + Gamma(0,t) + ln t]/(t(e^t-1)) dt
};

IntegralDeltaForms integral_delta(const QuadConfig& cfg = {});

/// Partial sums -gamma + sum_{k=2}^{K} (-1)^k zeta(k)/k^2 for K = 2..k_max.
std::vector<double> integral_delta_partial_sums(int k_max);

struct IntegralDeltaSquaredForms {
  QuadResult quadrature;  // int_0^1 Delta^2
  double series;          // double zeta-sum form
  double series_err_est;
};

IntegralDeltaSquaredForms integral_delta_squared(const QuadConfig& cfg = {});

/// Residual of the recurrence
///   (-1)^(m-1)/m! Delta^(m) = (1/x) (-1)^(m-2)/(m-1)! Delta^(m-1) - zeta(m, x+1)/(m x)
/// with both derivatives computed by `base`; 2 <= m <= 12, x > -1, x != 0.
IdentityResidual recurrence_residual(DerivOrder m, double x, Route base, const QuadConfig& cfg = {},
                                     double tolerance = 1e-9);

/// Sign check (-1)^(m-1) Delta^(m)(x) >= -abs_err_est for every grid point and
/// 1 <= m <= m_max. Violations are failing checks, not exceptions.
VerificationReport check_complete_monotonicity(int m_max, std::span<const double> grid,
                                               const QuadConfig& cfg = {});

}  // namespace deltafn
