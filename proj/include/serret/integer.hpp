// Arbitrary-precision integer support: GMP-backed Integer plus the few
// exact helpers (floor sqrt, floor division) the rest of the library needs.
#pragma once

#include <gmpxx.h>

namespace serret {

using Integer = mpz_class;

// Floor of the square root of n.  Newton iteration from above with a
// monotone termination check; no floating point. Throws std::domain_error
// for n < 0.
Integer isqrt(const Integer& n);

// True iff n >= 0 and isqrt(n)^2 == n.
bool is_perfect_square(const Integer& n);

// Quotient rounded toward -infinity.  b must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);

// Exact quotient; b must divide a. Throws std::domain_error otherwise.
Integer exact_div(const Integer& a, const Integer& b);

// Nonnegative gcd.
Integer gcd(const Integer& a, const Integer& b);

int signum(const Integer& a);

}  // namespace serret
