#include "deltafn/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "deltafn/errors.hpp"
#include "deltafn/specfun.hpp"

namespace deltafn {

namespace {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule
// (Gauss nodes are the odd-indexed Kronrod nodes).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

// One G7/K15 panel with the QUADPACK error heuristic.
Panel gk15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_sum = std::fabs(kronrod);
  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    const double pair = f1[j] + f2[j];
    kronrod += kWgk[j] * pair;
    abs_sum += kWgk[j] * (std::fabs(f1[j]) + std::fabs(f2[j]));
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  const double mean = 0.5 * kronrod;
  double asc = kWgk[7] * std::fabs(fc - mean);
  for (int j = 0; j < 7; ++j) asc += kWgk[j] * (std::fabs(f1[j] - mean) + std::fabs(f2[j] - mean));

  const double value = kronrod * half;
  const double res_abs = abs_sum * std::fabs(half);
  const double res_asc = asc * std::fabs(half);
  double err = std::fabs((kronrod - gauss) * half);
  if (res_asc != 0.0 && err != 0.0) err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  if (res_abs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(50.0 * kEps * res_abs, err);
  if (!std::isfinite(value)) throw DomainError("quadrature: integrand is not finite on the panel");
  return {a, b, value, err};
}

}  // namespace

void QuadConfig::validate() const {
  if (!(rel_tol > 0) || !(abs_tol > 0)) throw DomainError("QuadConfig: tolerances must be positive");
  if (max_subdivisions < 1) throw DomainError("QuadConfig: max_subdivisions must be >= 1");
  if (tail_intervals_max < 1) throw DomainError("QuadConfig: tail_intervals_max must be >= 1");
}

QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadConfig& cfg) {
  cfg.validate();
  if (!(a < b)) throw DomainError("integrate_finite: requires a < b");

  std::vector<Panel> panels{gk15(f, a, b)};
  double total = panels.front().value;
  double total_err = panels.front().error;
  long evals = 15;

  auto tolerance = [&] { return std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total)); };
  while (total_err > tolerance() && static_cast<int>(panels.size()) < cfg.max_subdivisions) {
    auto worst = std::max_element(panels.begin(), panels.end(),
                                  [](const Panel& l, const Panel& r) { return l.error < r.error; });
    const double mid = 0.5 * (worst->a + worst->b);
    // Stop splitting once the panel can no longer be resolved in double.
    if (!(mid > worst->a && mid < worst->b)) break;
    const Panel right = gk15(f, mid, worst->b);
    *worst = gk15(f, worst->a, mid);
    panels.push_back(right);
    evals += 30;
    // Re-sum in a fixed order so round-off does not drift.
    total = 0.0;
    total_err = 0.0;
    for (const Panel& p : panels) {
      total += p.value;
      total_err += p.error;
    }
  }

  QuadResult r;
  r.value = total;
  r.abs_err_est = total_err;
  r.n_evals = evals;
  r.converged = total_err <= tolerance();
  return r;
}

QuadResult integrate_semi_infinite(const Integrand& f, double a, const QuadConfig& cfg) {
  // x = a + (1 - t)/t maps (0, 1] onto [a, inf).
  auto mapped = [&f, a](double t) {
    const double x = a + (1.0 - t) / t;
    if (!std::isfinite(x)) return 0.0;
    const double v = f(x);
    return v == 0.0 ? 0.0 : v / (t * t);
  };
  return integrate_finite(mapped, 0.0, 1.0, cfg);
}

namespace {

// Contribution of period index s (real-valued for extrapolation):
//   c(s) = period * int_0^1 f(y, period (s + y)) dy.
QuadResult period_contribution(const FracIntegrand& f, double s, double period, const QuadConfig& cfg) {
  auto g = [&f, s, period](double y) { return f(y, period * (s + y)); };
  return integrate_finite(g, 0.0, 1.0, cfg).scaled(period);
}

}  // namespace

QuadResult integrate_unit_split(const FracIntegrand& f, double start, const QuadConfig& cfg,
                                double period) {
  cfg.validate();
  if (!(period > 0)) throw DomainError("integrate_unit_split: period must be positive");
  if (!std::isfinite(start)) throw DomainError("integrate_unit_split: start must be finite");

  QuadResult head;
  const double first_index = std::ceil(start / period);
  if (first_index * period > start) {
    const double base = first_index - 1.0;
    head = integrate_finite([&f, base, period](double x) { return f(x / period - base, x); }, start,
                            first_index * period, cfg);
  }

  QuadConfig panel_cfg = cfg;
  panel_cfg.abs_tol = std::max(cfg.abs_tol * 1e-3, std::numeric_limits<double>::min());

  // c[i] is the contribution of period first_index + i.
  std::vector<QuadResult> c;
  auto contribution = [&](std::size_t i) -> const QuadResult& {
    while (c.size() <= i) {
      c.push_back(period_contribution(f, first_index + static_cast<double>(c.size()), period, panel_cfg));
    }
    return c[i];
  };

  // Euler-Maclaurin remainder of sum_{i>=n} c(i):
  //   int_n^inf c + c(n)/2 - c'(n)/12 + c'''(n)/720
  auto tail_estimate = [&](std::size_t n, long& evals, double& err) {
    const double s0 = first_index + static_cast<double>(n);
    QuadConfig outer = cfg;
    outer.abs_tol = std::max(cfg.tail_stop * 1e-2, std::numeric_limits<double>::min());
    auto cs = [&](double s) { return period_contribution(f, s, period, panel_cfg).value; };
    const QuadResult integral = integrate_semi_infinite(cs, s0, outer);
    const double cm2 = contribution(n - 2).value;
    const double cm1 = contribution(n - 1).value;
    const double c0 = contribution(n).value;
    const double cp1 = contribution(n + 1).value;
    const double cp2 = contribution(n + 2).value;
    const double d1 = (cm2 - 8.0 * cm1 + 8.0 * cp1 - cp2) / 12.0;
    const double d3 = (cp2 - 2.0 * cp1 + 2.0 * cm1 - cm2) / 2.0;
    evals += integral.n_evals * 15;
    err += integral.abs_err_est;
    return integral.value + 0.5 * c0 - d1 / 12.0 + d3 / 720.0;
  };

  QuadResult body;
  std::size_t summed = 0;
  auto sum_to = [&](std::size_t n) {
    while (summed < n) body += contribution(summed++);
  };

  std::size_t n = 16;
  long tail_evals = 0;
  double tail_err = 0.0;
  sum_to(n);
  double previous = body.value + tail_estimate(n, tail_evals, tail_err);
  bool converged = false;
  double change = std::numeric_limits<double>::infinity();
  double total = previous;
  while (2 * n <= static_cast<std::size_t>(cfg.tail_intervals_max)) {
    n *= 2;
    sum_to(n);
    double step_err = 0.0;
    total = body.value + tail_estimate(n, tail_evals, step_err);
    change = std::fabs(total - previous);
    previous = total;
    tail_err = step_err;
    if (change <= std::max(cfg.tail_stop, cfg.rel_tol * std::fabs(total + head.value))) {
      converged = true;
      break;
    }
  }

  QuadResult r;
  r.value = head.value + total;
  r.abs_err_est = head.abs_err_est + body.abs_err_est + tail_err + change;
  long panel_evals = 0;
  for (const QuadResult& q : c) panel_evals += q.n_evals;
  r.n_evals = head.n_evals + panel_evals + tail_evals;
  r.converged = converged && head.converged && body.converged;
  return r;
}

TransformSides lemma2_transform(const std::function<double(double)>& f, double b, double c,
                                double lambda, const QuadConfig& cfg) {
  if (!(b > 0)) throw DomainError("lemma2_transform: b must be positive");
  if (!(c >= 0)) throw DomainError("lemma2_transform: c must be >= 0");
  if (!(lambda > 1)) throw DomainError("lemma2_transform: lambda must exceed 1");

  TransformSides sides;
  sides.lhs = integrate_unit_split(
      [&f, c, lambda](double y, double x) { return f(y) * std::pow(x + c, -lambda); }, 0.0, cfg, b);
  const double shift = c / b;
  sides.rhs = integrate_finite([&f, lambda, shift](double y) { return f(y) * hurwitz_zeta(lambda, y + shift); },
                               0.0, 1.0, cfg)
                  .scaled(std::pow(b, 1.0 - lambda));
  return sides;
}

}  // namespace deltafn
