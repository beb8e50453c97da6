#include "serret/integer.hpp"

#include <stdexcept>

namespace serret {

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  if (n < 2) return n;
  // Start above sqrt(n): 2^ceil(bits/2) >= sqrt(n). Newton steps from
  // above decrease monotonically; the first non-decrease lands on the
  // floor.
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Integer x = 1;
  x <<= (bits + 1) / 2;
  for (;;) {
    Integer y = (x + n / x) / 2;
    if (y >= x) return x;
    x = std::move(y);
  }
}

bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  const Integer r = isqrt(n);
  return r * r == n;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw std::domain_error("floor_div: zero divisor");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer exact_div(const Integer& a, const Integer& b) {
  if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw std::domain_error("exact_div: inexact division");
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

int signum(const Integer& a) { return mpz_sgn(a.get_mpz_t()); }

}  // namespace serret
