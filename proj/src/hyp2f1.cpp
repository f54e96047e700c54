#include "deltafn/hyp2f1.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "deltafn/errors.hpp"
#include "deltafn/quad.hpp"
#include "deltafn/specfun.hpp"

namespace deltafn {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kLogBranchStart = 0.9;
constexpr double kPfaffBelow = -0.5;

bool nonpositive_integer(double v) { return v <= 0 && v == std::floor(v); }

QuadConfig tight_quad() {
  QuadConfig cfg;
  cfg.rel_tol = 1e-13;
  cfg.abs_tol = 1e-300;
  return cfg;
}

// The absolute tolerance is scaled by int |f| so integrals that cancel down
// to a small value stop at the round-off floor instead of failing.
double quad_or_throw(const Integrand& f, double a, double b) {
  QuadConfig rough;
  rough.rel_tol = 1e-6;
  const double magnitude = integrate_finite([&f](double u) { return std::fabs(f(u)); }, a, b, rough).value;
  QuadConfig cfg = tight_quad();
  if (magnitude > 0) cfg.abs_tol = 1e-13 * magnitude;
  const QuadResult r = integrate_finite(f, a, b, cfg);
  if (!r.converged) throw ConvergenceError("hyp2f1: quadrature did not converge");
  return r.value;
}

// Returns y if p matches 2F1(1, y; y + excess; z) with excess 1 or 2.
bool log_branch_shape(const Hyp2F1Params& p, double& y, int& excess) {
  for (int swap = 0; swap < 2; ++swap) {
    const double one = swap ? p.b : p.a;
    const double other = swap ? p.a : p.b;
    if (one != 1.0) continue;
    const double diff = p.c - other;
    if (diff == 1.0 || diff == 2.0) {
      y = other;
      excess = static_cast<int>(diff);
      return y > 0;
    }
  }
  return false;
}

double gauss_summation(const Hyp2F1Params& p) {
  const double excess = p.c - p.a - p.b;
  if (!(excess > 0)) throw DomainError("gauss_2f1: z = 1 requires c - a - b > 0");
  return std::tgamma(p.c) * std::tgamma(excess) / (std::tgamma(p.c - p.a) * std::tgamma(p.c - p.b));
}

double unit_interval(const Hyp2F1Params& p) {
  double y = 0.0;
  int excess = 0;
  if (p.z > kLogBranchStart && log_branch_shape(p, y, excess)) return gauss_2f1_log_branch(y, excess, p.z);
  return gauss_2f1_series(p);
}

}  // namespace

double pochhammer(double a, int j) {
  if (j < 0) throw DomainError("pochhammer: j must be >= 0");
  double r = 1.0;
  for (int i = 0; i < j; ++i) r *= a + i;
  return r;
}

double gauss_2f1_series(const Hyp2F1Params& p, long max_terms) {
  if (!(std::fabs(p.z) < 1)) throw DomainError("gauss_2f1_series: requires |z| < 1");
  double sum = 1.0;
  double term = 1.0;
  int quiet = 0;
  for (long k = 0; k < max_terms; ++k) {
    term *= (p.a + k) * (p.b + k) / ((p.c + k) * (k + 1.0)) * p.z;
    sum += term;
    if (term == 0.0) return sum;
    // Two consecutive negligible terms past the point where |ratio| < 1.
    const double ratio = std::fabs((p.a + k + 1) * (p.b + k + 1) / ((p.c + k + 1) * (k + 2.0)) * p.z);
    if (std::fabs(term) <= kEps * std::fabs(sum) * 0.25 && ratio < 1.0) {
      if (++quiet == 2) return sum;
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("gauss_2f1_series: no convergence within term budget");
}

double gauss_2f1_log_branch(double y, int excess, double z) {
  if (!(z >= 0 && z < 1)) throw DomainError("gauss_2f1_log_branch: requires 0 <= z < 1");
  if (excess != 1 && excess != 2) throw DomainError("gauss_2f1_log_branch: excess must be 1 or 2");
  if (!(y > 0)) throw DomainError("gauss_2f1_log_branch: y must be positive");

  const double q = 1.0 - z;
  const double log_q = std::log1p(-z);
  // Pochhammer base and digamma offset differ between the two expansions.
  const double base = excess == 1 ? y : y + 1.0;
  double psi_k1 = -constants().euler_gamma;  // psi(k+1)
  double psi_ky = digamma(base);             // psi(k+base)
  double ratio = 1.0;                        // (base)_k / k!
  double power = excess == 1 ? 1.0 : q;      // (1-z)^k or (1-z)^(k+1)
  double sum = 0.0;
  int quiet = 0;
  for (long k = 0; k < 100000; ++k) {
    const double term = ratio * (psi_k1 - psi_ky - log_q) * power;
    sum += term;
    if (std::fabs(term) <= 0.25 * kEps * std::fabs(sum) && k > base) {
      if (++quiet == 2) break;
    } else {
      quiet = 0;
    }
    psi_k1 += 1.0 / (k + 1.0);
    psi_ky += 1.0 / (k + base);
    ratio *= (base + k) / (k + 1.0);
    power *= q;
    if (k == 99999) throw ConvergenceError("gauss_2f1_log_branch: no convergence");
  }
  return excess == 1 ? y * sum : y + 1.0 - y * (y + 1.0) * sum;
}

double gauss_2f1(const Hyp2F1Params& p) {
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.c) || std::isnan(p.z)) {
    throw DomainError("gauss_2f1: parameters must be finite");
  }
  if (nonpositive_integer(p.c)) throw DomainError("gauss_2f1: c must not be a non-positive integer");
  if (p.z > 1) throw DomainError("gauss_2f1: z must be <= 1");
  if (p.z == 0) return 1.0;
  if (p.z == 1) return gauss_summation(p);
  if (p.z > 0 || p.z >= kPfaffBelow) return unit_interval(p);

  // Pfaff: 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)), or the same with
  // a and b exchanged. Prefer a unit upper parameter (log branch available),
  // then a variant whose series has positive terms.
  const double w = p.z / (p.z - 1.0);
  const double one_minus_z = 1.0 - p.z;
  const Hyp2F1Params keep_a{p.a, p.c - p.b, p.c, w};
  const Hyp2F1Params keep_b{p.c - p.a, p.b, p.c, w};
  bool use_a = true;
  if (p.a == 1.0) {
    use_a = true;
  } else if (p.b == 1.0) {
    use_a = false;
  } else if (!(p.c - p.b > 0) && p.c - p.a > 0) {
    use_a = false;
  }
  return use_a ? std::pow(one_minus_z, -p.a) * unit_interval(keep_a)
               : std::pow(one_minus_z, -p.b) * unit_interval(keep_b);
}

std::string_view identity_name(HypIdentity id) {
  switch (id) {
    case HypIdentity::kEulerTransform:
      return "euler_transform";
    case HypIdentity::kIntegralForm:
      return "integral_form";
    case HypIdentity::kContiguousStep:
      return "contiguous_step";
    case HypIdentity::kIteratedRecurrence:
      return "iterated_recurrence";
    case HypIdentity::kBaseIntegral:
      return "base_integral";
    case HypIdentity::kLogForm:
      return "log_form";
    case HypIdentity::kLogBound:
      return "log_bound";
    case HypIdentity::kArgumentTransform:
      return "argument_transform";
    case HypIdentity::kDerivativeRule:
      return "derivative_rule";
    case HypIdentity::kHypReduction:
      return "hyp_reduction";
  }
  return "unknown";
}

double default_tolerance(HypIdentity id) {
  switch (id) {
    case HypIdentity::kIteratedRecurrence:
      return 1e-9;
    case HypIdentity::kDerivativeRule:
      return 1e-6;
    case HypIdentity::kLogBound:
      return 0.0;
    default:
      return 1e-10;
  }
}

IdentityResidual hyp_identity_residual(HypIdentity id, int n, double x) {
  return hyp_identity_residual(id, n, x, default_tolerance(id));
}

IdentityResidual hyp_identity_residual(HypIdentity id, int n, double x, double tolerance) {
  if (n < 0) throw DomainError("hyp_identity_residual: n must be >= 0");
  if (!(x >= 0) || !std::isfinite(x)) throw DomainError("hyp_identity_residual: x must be >= 0");
  const std::string name(identity_name(id));
  PointRecord point;
  point.set("n", n).set("x", x);
  const double np1 = n + 1.0;
  const double np2 = n + 2.0;
  const double np3 = n + 3.0;
  constexpr auto rel = ResidualKind::kRelative;

  switch (id) {
    case HypIdentity::kEulerTransform: {
      const double lhs = gauss_2f1({np2, np2, np3, -x});
      const double rhs = std::pow(1.0 + x, -np1) * gauss_2f1({1.0, 1.0, np3, -x});
      return make_residual(name, point, lhs, rhs, tolerance, rel);
    }
    case HypIdentity::kIntegralForm: {
      const double lhs = gauss_2f1({np2, np2, np3, -x}) / np2;
      const double rhs = x == 0 ? 1.0 / np2
                                : quad_or_throw([&](double u) { return std::pow(u, np1) * std::pow(x * u + 1.0, -np2); },
                                                0.0, 1.0);
      return make_residual(name, point, lhs, rhs, tolerance, rel);
    }
    case HypIdentity::kContiguousStep: {
      const double lhs = gauss_2f1({np2, np2, np3, -x}) / np2;
      const double rhs = (std::pow(x + 1.0, -np1) - gauss_2f1({np1, np2, np3, -x}) / np2) / np1;
      return make_residual(name, point, lhs, rhs, tolerance, rel);
    }
    case HypIdentity::kIteratedRecurrence: {
      // K(p) = int_0^1 u^(n+1) (xu+1)^(-p) du obeys
      //   K(p+1) = K(p) (p - n - 2)/p + (x+1)^(-p)/p.
      // Run downward from K(n+2) to K(2) and compare with the closed form of
      // K(2); upward iteration loses about n digits of x to cancellation.
      double k = gauss_2f1({np2, np2, np3, -x}) / np2;
      for (int p = n + 1; p >= 2; --p) k = (p * k - std::pow(x + 1.0, -p)) / (p - np2);
      const double lhs = 1.0 / (1.0 + x) - np1 / np2 * gauss_2f1({1.0, np2, np3, -x});
      return make_residual(name, point, lhs, k, tolerance, rel);
    }
    case HypIdentity::kBaseIntegral: {
      const double lhs =
          quad_or_throw([&](double u) { return std::pow(u, np1) / ((x * u + 1.0) * (x * u + 1.0)); }, 0.0, 1.0);
      const double rhs = 1.0 / (1.0 + x) - np1 / np2 * gauss_2f1({1.0, np2, np3, -x});
      return make_residual(name, point, lhs, rhs, tolerance, rel);
    }
    case HypIdentity::kLogForm: {
      if (!(x > 0)) throw DomainError("log_form: requires x > 0");
      const double lhs =
          quad_or_throw([&](double u) { return std::pow(u, np1) / ((x * u + 1.0) * (x * u + 1.0)); }, 0.0, 1.0);
      const double inner = quad_or_throw([&](double v) { return (1.0 - std::pow(v, n)) / (v + 1.0); }, 0.0, x);
      const double rhs = (np1 / std::pow(x, np1) * (std::log1p(x) - inner) - 1.0 / (x + 1.0)) / x;
      return make_residual(name, point, lhs, rhs, tolerance, rel);
    }
    case HypIdentity::kLogBound: {
      if (x > 1) throw DomainError("log_bound: requires 0 <= x <= 1");
      double lower = 0.0;
      double upper = 0.0;
      if (x > 0) {
        lower = quad_or_throw([&](double v) { return (1.0 - std::pow(v, n)) / (v + 1.0); }, 0.0, x);
        upper = quad_or_throw([&](double v) { return 1.0 - std::pow(v, n); }, 0.0, x);
      }
      const double violation = std::max(0.0, lower - upper) + std::max(0.0, upper - x);
      return make_inequality(name, point, lower, upper, violation, tolerance);
    }
    case HypIdentity::kArgumentTransform: {
      const double lhs = gauss_2f1({1.0, np2, np3, x / (x + 1.0)});
      const double rhs = (x + 1.0) * gauss_2f1({1.0, 1.0, np3, -x});
      return make_residual(name, point, lhs, rhs, tolerance, rel);
    }
    case HypIdentity::kDerivativeRule: {
      IdentityResidual r = derivative_rule_residual(np2, np2, np3, x, 1e-5, tolerance);
      r.point = point;
      return r;
    }
    case HypIdentity::kHypReduction: {
      // Coefficients of the two 2F1 terms in the Hurwitz integral, first
      // with argument -x, then after Pfaff with argument x/(x+1).
      const double z = x / (x + 1.0);
      const double lhs = gauss_2f1({np2, np2, np3, -x}) / (2.0 * np2) + gauss_2f1({np1, np2, np3, -x}) / (np1 * np2);
      const double rhs = std::pow(x + 1.0, -np2) / (2.0 * np2) * gauss_2f1({1.0, np2, np3, z}) +
                         std::pow(x + 1.0, -np1) / (np1 * np2) * gauss_2f1({1.0, np1, np3, z});
      return make_residual(name, point, lhs, rhs, tolerance, rel);
    }
  }
  throw DomainError("hyp_identity_residual: unknown identity");
}

IdentityResidual derivative_rule_residual(double a, double b, double c, double x, double h, double tolerance) {
  if (!(h > 0) || !(x - h > -1)) throw DomainError("derivative_rule_residual: requires h > 0 and x - h > -1");
  const double fd = (gauss_2f1({a, b, c, -(x + h)}) - gauss_2f1({a, b, c, -(x - h)})) / (2.0 * h);
  const double exact = -(a * b / c) * gauss_2f1({a + 1.0, b + 1.0, c + 1.0, -x});
  PointRecord point;
  point.set("a", a).set("b", b).set("c", c).set("x", x);
  return make_residual(std::string(identity_name(HypIdentity::kDerivativeRule)), point, fd, exact, tolerance,
                       ResidualKind::kRelative);
}

}  // namespace deltafn
