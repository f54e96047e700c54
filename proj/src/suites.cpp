#include "deltafn/suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>

#include "deltafn/delta.hpp"
#include "deltafn/errors.hpp"
#include "deltafn/hyp2f1.hpp"
#include "deltafn/specfun.hpp"

namespace deltafn {

namespace {

// Relative agreement with an absolute floor: passes iff
// |lhs - rhs| <= max(rel * max(|lhs|, |rhs|), abs_floor).
IdentityResidual agreement(std::string identity, PointRecord point, double lhs, double rhs, double rel,
                           double abs_floor) {
  IdentityResidual r = make_residual(std::move(identity), std::move(point), lhs, rhs, rel, ResidualKind::kRelative);
  const double scale = std::max({std::fabs(lhs), std::fabs(rhs), abs_floor / rel});
  r.residual = (lhs - rhs) / scale;
  r.pass = std::isfinite(r.residual) && std::fabs(r.residual) <= rel;
  return r;
}

PointRecord at(int m, double x) {
  PointRecord p;
  p.set("m", m).set("x", x);
  return p;
}

VerificationReport specfun_suite(const QuadConfig& cfg) {
  VerificationReport rep;
  const auto& c = constants();
  rep.add(make_residual("euler_gamma_vs_digamma", PointRecord{}, c.euler_gamma, -digamma(1.0), 1e-14,
                        ResidualKind::kAbsolute));
  for (int k = 2; k <= kZetaTableMax; ++k) {
    PointRecord p;
    p.set("k", k);
    rep.add(make_residual("zeta_table", p, c.zeta_values[k], riemann_zeta(k), 1e-14, ResidualKind::kRelative));
  }
  for (double s : {1.5, 2.0, 3.25, 10.0}) {
    for (double a : {0.1, 0.5, 1.0, 2.5, 7.0}) {
      PointRecord p;
      p.set("s", s).set("a", a);
      rep.add(make_residual("hurwitz_telescoping", p, hurwitz_zeta(s, a) - hurwitz_zeta(s, a + 1.0), std::pow(a, -s),
                            1e-13, ResidualKind::kRelative));
    }
  }
  for (int j = 0; j <= 6; ++j) {
    for (double x : {0.1, 0.5, 1.0, 3.0, 10.0}) {
      const double up = polygamma(j, x + 1.0);
      const double here = polygamma(j, x);
      const double jump = ((j % 2 == 0) ? 1.0 : -1.0) * factorial(j) / std::pow(x, j + 1);
      PointRecord p;
      p.set("order", j).set("x", x);
      IdentityResidual r = make_residual("polygamma_functional_equation", p, up - here, jump, 1e-12,
                                         ResidualKind::kRelative);
      r.residual = (up - here - jump) / std::max({std::fabs(up), std::fabs(here), std::fabs(jump)});
      r.pass = std::fabs(r.residual) <= r.tolerance;
      rep.add(r);
    }
  }
  for (int n = 1; n <= 8; ++n) {
    const double sign = (n % 2 == 1) ? 1.0 : -1.0;
    const double rhs = sign * factorial(n) * (std::ldexp(1.0, n + 1) - 1.0) * zeta_int(n + 1);
    PointRecord p;
    p.set("order", n);
    rep.add(make_residual("polygamma_half_argument", p, polygamma(n, 0.5), rhs, 1e-12, ResidualKind::kRelative));
  }
  const double h = 1e-5;
  for (int j = 0; j <= 4; ++j) {
    for (double x : {0.5, 1.0, 2.0}) {
      const double fd = (polygamma(j, x + h) - polygamma(j, x - h)) / (2.0 * h);
      PointRecord p;
      p.set("order", j).set("x", x);
      rep.add(make_residual("polygamma_difference_quotient", p, fd, polygamma(j + 1, x), 1e-6,
                            ResidualKind::kRelative));
    }
  }
  for (double s : {2.0, 3.0, 5.0}) {
    for (double a : {1.0, 1.5, 3.0}) {
      const QuadResult q = integrate_unit_split(
          [s, a](double phase, double x) { return (phase - 0.5) / std::pow(x + a, s + 1.0); }, 0.0, cfg);
      const double lhs = std::pow(a, -s) / 2.0 + std::pow(a, 1.0 - s) / (s - 1.0) - s * q.value;
      PointRecord p;
      p.set("s", s).set("a", a);
      rep.add(make_residual("hurwitz_periodic_integral", p, lhs, hurwitz_zeta(s, a), 1e-9, ResidualKind::kAbsolute));
    }
  }
  for (double s : {2.0, 3.0, 5.0}) {
    const QuadResult q = integrate_unit_split(
        [s](double phase, double x) { return (phase - 0.5) / std::pow(x, s + 1.0); }, 1.0, cfg);
    const double lhs = 1.0 / (s - 1.0) + 0.5 - s * q.value;
    PointRecord p;
    p.set("s", s);
    rep.add(make_residual("riemann_periodic_integral", p, lhs, riemann_zeta(s), 1e-10, ResidualKind::kAbsolute));
  }
  return rep;
}

VerificationReport routes_suite(const QuadConfig& cfg) {
  VerificationReport rep;
  for (int m = 1; m <= 8; ++m) {
    const DerivOrder order(m);
    for (double x : route_grid()) {
      std::vector<Route> routes{Route::kClosed, Route::kHurwitz, Route::kHyp};
      if (x >= 0.0) routes.push_back(Route::kLaplace);
      std::vector<EvalResult> values;
      for (Route r : routes) values.push_back(delta_deriv(order, x, r, cfg));
      for (std::size_t i = 0; i < routes.size(); ++i) {
        for (std::size_t j = i + 1; j < routes.size(); ++j) {
          PointRecord p = at(m, x);
          p.label("route_a", std::string(route_name(routes[i]))).label("route_b", std::string(route_name(routes[j])));
          rep.add(agreement("route_agreement", p, values[i].value, values[j].value, 1e-8, 1e-10));
        }
      }
    }
  }
  for (int m = 1; m <= 8; ++m) {
    const DerivOrder order(m);
    const double exact = delta_deriv_at_zero(order);
    for (Route r : {Route::kHurwitz, Route::kHyp, Route::kSeries}) {
      PointRecord p = at(m, 0.0);
      p.label("route", std::string(route_name(r)));
      rep.add(make_residual("value_at_zero", p, delta_deriv(order, 0.0, r, cfg).value, exact, 1e-11,
                            ResidualKind::kRelative));
    }
  }
  for (int m = 1; m <= 4; ++m) {
    const DerivOrder order(m);
    for (double ax : {0.01, 0.03, 0.06, 0.09, 0.12}) {
      for (double x : {-ax, ax}) {
        rep.add(make_residual("series_vs_closed", at(m, x), delta_deriv(order, x, Route::kSeries, cfg).value,
                              delta_deriv(order, x, Route::kClosed, cfg).value, 1e-10, ResidualKind::kRelative));
      }
    }
  }
  const double h = 1e-5;
  for (int m = 1; m <= 4; ++m) {
    for (double x : {0.5, 1.0, 3.0}) {
      const DerivOrder order(m);
      const double fd = (delta_deriv(order, x + h, Route::kClosed, cfg).value -
                         delta_deriv(order, x - h, Route::kClosed, cfg).value) /
                        (2.0 * h);
      rep.add(make_residual("derivative_chaining", at(m, x), fd,
                            delta_deriv(DerivOrder(m + 1), x, Route::kClosed, cfg).value, 1e-5,
                            ResidualKind::kRelative));
    }
  }
  return rep;
}

VerificationReport recurrence_suite(const QuadConfig& cfg) {
  VerificationReport rep;
  for (int m = 2; m <= 10; ++m) {
    for (double x : route_grid()) rep.add(recurrence_residual(DerivOrder(m), x, Route::kClosed, cfg, 1e-9));
  }
  for (int m : {2, 5}) {
    for (double x : {1.0, 3.0}) rep.add(recurrence_residual(DerivOrder(m), x, Route::kHurwitz, cfg, 1e-9));
  }
  return rep;
}

VerificationReport prop2_suite(const QuadConfig& cfg) {
  VerificationReport rep;
  for (int m = 1; m <= 4; ++m) {
    for (int k = 1; k <= 5; ++k) {
      const FracRepSides sides = frac_rep_prop2(DerivOrder(m), k, cfg);
      PointRecord p;
      p.set("m", m).set("k", k);
      rep.add(make_residual("fractional_part_representation", p, sides.lhs.value, sides.rhs.value, 1e-6,
                            ResidualKind::kAbsolute));
    }
  }
  for (int m = 1; m <= 8; ++m) {
    const DerivOrder order(m);
    rep.add(make_residual("value_at_one", at(m, 1.0), delta_deriv_at_one(order),
                          delta_deriv(order, 1.0, Route::kClosed, cfg).value, 1e-11, ResidualKind::kRelative));
  }
  return rep;
}

VerificationReport prop4_suite(const QuadConfig& cfg) {
  VerificationReport rep;
  const IntegralDeltaForms one = integral_delta(cfg);
  auto pair = [&rep](const char* a, const char* b, double lhs, double rhs) {
    PointRecord p;
    p.label("form_a", a).label("form_b", b);
    rep.add(make_residual("integral_delta", p, lhs, rhs, 1e-8, ResidualKind::kAbsolute));
  };
  pair("quadrature", "series", one.quadrature.value, one.series);
  pair("quadrature", "ei_form", one.quadrature.value, one.ei_form.value);
  pair("series", "ei_form", one.series, one.ei_form.value);

  const IntegralDeltaSquaredForms two = integral_delta_squared(cfg);
  {
    PointRecord p;
    p.label("form_a", "quadrature").label("form_b", "series");
    rep.add(make_residual("integral_delta_squared", p, two.quadrature.value, two.series, 1e-8,
                          ResidualKind::kAbsolute));
  }
  {
    const double lower = one.quadrature.value * one.quadrature.value;
    rep.add(make_inequality("cauchy_schwarz", PointRecord{}, two.quadrature.value, lower,
                            std::max(0.0, lower - two.quadrature.value)));
  }
  // Even truncations lie above the limit, odd ones below.
  const std::vector<double> sums = integral_delta_partial_sums(21);
  for (std::size_t i = 0; i < sums.size(); ++i) {
    const int k = static_cast<int>(i) + 2;
    const double violation = (k % 2 == 0) ? std::max(0.0, one.series - sums[i]) : std::max(0.0, sums[i] - one.series);
    PointRecord p;
    p.set("k", k);
    rep.add(make_inequality("partial_sum_bracketing", p, sums[i], one.series, violation));
  }
  return rep;
}

VerificationReport appendix_suite(const QuadConfig&) {
  VerificationReport rep;
  std::vector<double> wide_grid;
  for (int i = 0; i <= 8; ++i) wide_grid.push_back(2.5 * i);
  for (int n = 0; n <= 8; ++n) {
    for (double x : {0.1, 0.5, 1.0, 2.0, 10.0}) rep.add(hyp_identity_residual(HypIdentity::kEulerTransform, n, x));
  }
  for (HypIdentity id : {HypIdentity::kIntegralForm, HypIdentity::kContiguousStep, HypIdentity::kIteratedRecurrence,
                         HypIdentity::kBaseIntegral, HypIdentity::kLogForm, HypIdentity::kArgumentTransform,
                         HypIdentity::kHypReduction}) {
    for (int n = 0; n <= 8; ++n) {
      for (double x : wide_grid) {
        if (id == HypIdentity::kLogForm && x == 0.0) continue;
        rep.add(hyp_identity_residual(id, n, x));
      }
    }
  }
  for (int n = 0; n <= 6; ++n) {
    for (int i = 0; i <= 10; ++i) rep.add(hyp_identity_residual(HypIdentity::kLogBound, n, 0.1 * i));
  }
  for (int n = 0; n <= 8; ++n) {
    for (double x : {0.5, 2.0}) rep.add(hyp_identity_residual(HypIdentity::kDerivativeRule, n, x));
  }
  for (auto [a, b, c] : {std::tuple{1.0, 2.0, 5.0}, std::tuple{2.0, 2.0, 3.0}, std::tuple{1.0, 4.0, 6.0}}) {
    for (double x : {0.5, 2.0}) rep.add(derivative_rule_residual(a, b, c, x));
  }
  const double z = 0.9;
  for (int n = 0; n <= 6; ++n) {
    const double y = n + 1.0;
    for (int excess : {1, 2}) {
      PointRecord p;
      p.set("y", y).set("excess", excess).set("z", z);
      rep.add(make_residual("log_branch_continuity", p, gauss_2f1_series({1.0, y, y + excess, z}),
                            gauss_2f1_log_branch(y, excess, z), 1e-10, ResidualKind::kRelative));
    }
  }
  return rep;
}

VerificationReport asymptotic_suite(const QuadConfig& cfg) {
  VerificationReport rep;
  for (int m = 1; m <= 4; ++m) {
    const DerivOrder order(m);
    double previous_gap = std::numeric_limits<double>::infinity();
    double previous_x = 0.0;
    for (double x : {1e2, 1e3, 1e4}) {
      const double ratio = delta_deriv(order, x, Route::kClosed, cfg).value / asymptotic_leading(order, x);
      const double gap = std::fabs(ratio - 1.0);
      if (std::isfinite(previous_gap)) {
        PointRecord p = at(m, x);
        p.set("previous_x", previous_x);
        rep.add(make_inequality("asymptotic_gap_shrinks", p, gap, previous_gap, std::max(0.0, gap - previous_gap)));
      }
      if (x == 1e4) rep.add(make_residual("asymptotic_ratio", at(m, x), ratio, 1.0, 5e-3, ResidualKind::kAbsolute));
      previous_gap = gap;
      previous_x = x;
    }
  }
  return rep;
}

VerificationReport halfint_suite(const QuadConfig& cfg) {
  VerificationReport rep;
  rep.add(make_residual("delta_at_minus_half", at(0, -0.5), delta(-0.5), -constants().ln_pi, 1e-13,
                        ResidualKind::kRelative));
  for (int m = 1; m <= 10; ++m) {
    const DerivOrder order(m);
    rep.add(make_residual("half_integer_closed_form", at(m, -0.5), delta_deriv_half_integer(order),
                          delta_deriv(order, -0.5, Route::kClosed, cfg).value, 1e-10, ResidualKind::kRelative));
  }
  return rep;
}

VerificationReport monotonicity_suite(const QuadConfig& cfg) {
  const std::vector<double> grid{-0.9, -0.5, 0.0, 0.5, 1.0, 2.0, 10.0, 100.0};
  VerificationReport rep = check_complete_monotonicity(8, grid, cfg);
  const std::vector<double> far{1e6};
  rep.append(check_complete_monotonicity(1, far, cfg));
  return rep;
}

using SuiteFn = std::function<VerificationReport(const QuadConfig&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"routes", routes_suite},     {"recurrence", recurrence_suite}, {"prop2", prop2_suite},
      {"prop4", prop4_suite},       {"appendix", appendix_suite},     {"asymptotic", asymptotic_suite},
      {"halfint", halfint_suite},   {"specfun", specfun_suite},       {"monotonicity", monotonicity_suite},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

VerificationReport run_suite(std::string_view name, std::optional<double> tol_override, const QuadConfig& cfg) {
  cfg.validate();
  if (tol_override && !(*tol_override >= 0.0)) throw DomainError("tolerance must be >= 0");
  for (const auto& [suite_name, fn] : registry()) {
    if (suite_name != name) continue;
    const auto start = std::chrono::steady_clock::now();
    VerificationReport raw = fn(cfg);
    VerificationReport rep;
    rep.suite = suite_name;
    for (IdentityResidual check : raw.checks) {
      if (tol_override) {
        check.tolerance = *tol_override;
        check.pass = std::isfinite(check.residual) && std::fabs(check.residual) <= check.tolerance;
      }
      rep.add(std::move(check));
    }
    const auto stop = std::chrono::steady_clock::now();
    rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return rep;
  }
  throw DomainError("unknown suite: " + std::string(name));
}

const std::vector<double>& route_grid() {
  static const std::vector<double> grid{-0.9, -0.5, -0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0};
  return grid;
}

std::vector<double> make_grid(double start, double stop, int count, bool log_spacing) {
  if (count < 1) throw DomainError("grid count must be >= 1");
  if (!(start > -1.0) || !std::isfinite(start) || !std::isfinite(stop)) throw DomainError("grid start must exceed -1");
  if (stop < start) throw DomainError("grid stop must not be below start");
  if (log_spacing && !(start > 0.0)) throw DomainError("log spacing requires start > 0");
  std::vector<double> grid;
  if (count == 1) {
    grid.push_back(start);
    return grid;
  }
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    double x = log_spacing ? std::exp(std::log(start) + t * (std::log(stop) - std::log(start)))
                           : start + t * (stop - start);
    if (i == count - 1) x = stop;
    grid.push_back(x);
  }
  return grid;
}

std::vector<double> mixed_grid(int count) {
  if (count < 2) throw DomainError("mixed grid needs at least 2 points");
  const int linear = count / 2;
  std::vector<double> grid = make_grid(-0.9, 0.9, linear, false);
  const std::vector<double> tail = make_grid(1.0, 100.0, count - linear, true);
  grid.insert(grid.end(), tail.begin(), tail.end());
  return grid;
}

}  // namespace deltafn
