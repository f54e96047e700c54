#pragma once

// Gauss hypergeometric function 2F1(a, b; c; z) for real positive parameter
// families on z in (-inf, 1], and residuals of the transformation,
// recurrence and derivative identities these families satisfy.

#include <string_view>

#include "deltafn/report.hpp"

namespace deltafn {

struct Hyp2F1Params {
  double a;
  double b;
  double c;
  double z;
};

/// Rising factorial (a)_j = a (a+1) ... (a+j-1), (a)_0 = 1.
double pochhammer(double a, int j);

/// 2F1(a, b; c; z). Routing: z = 0 -> 1; z = 1 -> Gauss summation (needs
/// c - a - b > 0); -1/2 <= z < 0.9 -> defining series; z < -1/2 -> Pfaff
/// transformation onto [0, 1); z > 0.9 with one upper parameter 1 and
/// c = y + 1 or y + 2 -> logarithmic expansion about z = 1.
/// Throws DomainError for c a non-positive integer, z > 1, or z = 1 without
/// positive excess; ConvergenceError if the series needs more than 1e5 terms.
double gauss_2f1(const Hyp2F1Params& p);

/// Defining series sum (a)_k (b)_k / ((c)_k k!) z^k, |z| < 1.
double gauss_2f1_series(const Hyp2F1Params& p, long max_terms = 100000);

/// Logarithmic expansion about z = 1 of 2F1(1, y; y + excess; z), excess in
/// {1, 2}, 0 <= z < 1:
///   excess 1: y sum_k (y)_k/k! [psi(k+1) - psi(k+y) - ln(1-z)] (1-z)^k
///   excess 2: y+1 - y(y+1) sum_k (y+1)_k/k! [psi(k+1) - psi(k+y+1) - ln(1-z)] (1-z)^(k+1)
double gauss_2f1_log_branch(double y, int excess, double z);

enum class HypIdentity {
  kEulerTransform,      // 2F1(n+2,n+2;n+3;-x) = (1+x)^-(n+1) 2F1(1,1;n+3;-x)
  kIntegralForm,        // int_0^1 u^(n+1)/(xu+1)^(n+2) du = 2F1(n+2,n+2;n+3;-x)/(n+2)
  kContiguousStep,      // ... = [(x+1)^-(n+1) - 2F1(n+1,n+2;n+3;-x)/(n+2)]/(n+1)
  kIteratedRecurrence,  // the step above iterated down to the (xu+1)^-2 base
  kBaseIntegral,        // int_0^1 u^(n+1)/(xu+1)^2 du = 1/(1+x) - (n+1)/(n+2) 2F1(1,n+2;n+3;-x)
  kLogForm,             // same integral through ln(x+1) and int_0^x (1-v^n)/(v+1) dv
  kLogBound,            // int_0^x (1-v^n)/(v+1) dv <= int_0^x (1-v^n) dv <= x, 0 <= x <= 1
  kArgumentTransform,   // 2F1(1,n+2;n+3;x/(x+1)) = (x+1) 2F1(1,1;n+3;-x)
  kDerivativeRule,      // d/dx 2F1(a,b;c;-x) = -(ab/c) 2F1(a+1,b+1;c+1;-x)
  kHypReduction,        // the -x and x/(x+1) forms of the Hurwitz-integral 2F1 terms agree
};

std::string_view identity_name(HypIdentity id);

/// Default tolerance for each identity (relative unless stated).
double default_tolerance(HypIdentity id);

/// Residual of the named identity at (n, x). The derivative rule uses
/// (a, b, c) = (n+2, n+2, n+3). The log form requires x > 0; the log bound
/// requires 0 <= x <= 1.
IdentityResidual hyp_identity_residual(HypIdentity id, int n, double x);
IdentityResidual hyp_identity_residual(HypIdentity id, int n, double x, double tolerance);

/// Central-difference check (step h) of the derivative rule for general (a, b, c).
IdentityResidual derivative_rule_residual(double a, double b, double c, double x, double h = 1e-5,
                                          double tolerance = 1e-6);

}  // namespace deltafn
