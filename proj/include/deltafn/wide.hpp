#pragma once

// 113-bit (IEEE binary128) evaluation of ln Gamma, psi and zeta(k, a), used
// where a formula cancels more digits than double precision can absorb.

#include <cfloat>

namespace deltafn::wide {

#if LDBL_MANT_DIG >= 113
using Real = long double;
#elif defined(__SIZEOF_FLOAT128__)
#define DELTAFN_WIDE_IS_FLOAT128 1
using Real = __float128;
#else
#error "deltafn needs a 113-bit floating type (long double or __float128)"
#endif

/// Decimal digits carried by Real.
inline constexpr int kDigits = 33;

Real from_double(double x);
double to_double(Real x);

/// ln Gamma(x), x > 0.
Real ln_gamma(Real x);

/// psi(x), x > 0.
Real digamma(Real x);

/// zeta(s, a) for integer s >= 2, a > 0.
Real hurwitz_zeta(int s, Real a);

/// psi^(order)(x), order >= -1, x > 0 (same convention as deltafn::polygamma).
Real polygamma(int order, Real x);

}  // namespace deltafn::wide
