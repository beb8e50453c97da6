#include "serret/quadratic.hpp"

#include <stdexcept>
#include <utility>

namespace serret {

namespace {

// Divides out a common square factor when doing so keeps the
// divisibility invariant; undoes the constructor's own rescaling and
// keeps printed radicands small. Purely cosmetic: equality never
// depends on it.
void try_reduce(Integer& p, Integer& d, Integer& q) {
  const Integer g = gcd(p, q);
  if (g <= 1) return;
  const Integer g2 = g * g;
  if (!mpz_divisible_p(d.get_mpz_t(), g2.get_mpz_t())) return;
  const Integer rp = exact_div(p, g);
  const Integer rd = exact_div(d, g2);
  const Integer rq = exact_div(q, g);
  if (!mpz_divisible_p(Integer(rd - rp * rp).get_mpz_t(), rq.get_mpz_t()))
    return;
  p = rp;
  d = rd;
  q = rq;
}

}  // namespace

QuadraticIrrational::QuadraticIrrational(Integer p, Integer d, Integer q)
    : p_(std::move(p)), d_(std::move(d)), q_(std::move(q)) {
  if (q_ == 0) throw std::domain_error("quadratic irrational: Q must be nonzero");
  if (d_ <= 0)
    throw std::domain_error("quadratic irrational: radicand must be positive");
  if (is_perfect_square(d_))
    throw std::domain_error(
        "value is rational: radicand is a perfect square");
  if (!mpz_divisible_p(Integer(d_ - p_ * p_).get_mpz_t(), q_.get_mpz_t())) {
    // Rescale to the equivalent form with Q | D - P^2.
    const Integer aq = abs(q_);
    p_ *= aq;
    d_ *= q_ * q_;
    q_ *= aq;
  }
  try_reduce(p_, d_, q_);
}

Integer qi_floor(const QuadraticIrrational& x) {
  const Integer s = isqrt(x.D());
  // floor((P + sqrt(D))/Q) = floor((P + floor(sqrt(D)))/Q) for Q > 0;
  // for Q < 0 rewrite as (-P - sqrt(D))/(-Q) and use
  // floor(-sqrt(D)) = -floor(sqrt(D)) - 1 (D is never a square).
  if (x.Q() > 0) return floor_div(x.P() + s, x.Q());
  return floor_div(-x.P() - s - 1, -x.Q());
}

bool qi_equal(const QuadraticIrrational& x, const QuadraticIrrational& y) {
  // Rational and irrational parts must match separately; valid because
  // the square roots are irrational.
  if (signum(x.Q()) != signum(y.Q())) return false;
  if (x.D() * y.Q() * y.Q() != y.D() * x.Q() * x.Q()) return false;
  return x.P() * y.Q() == y.P() * x.Q();
}

QuadraticIrrational qi_mobius(const UniModMatrix& m,
                              const QuadraticIrrational& x) {
  // (a x + b)/(c x + d) with x = (P + sqrt(D))/Q: multiply through by Q
  // and rationalize with the conjugate of the denominator. The sqrt(D)
  // coefficient collapses to det(m) * Q.
  const Integer n1 = m.a() * x.P() + m.b() * x.Q();
  const Integer n2 = m.c() * x.P() + m.d() * x.Q();
  Integer p = n1 * n2 - m.a() * m.c() * x.D();
  Integer coeff = m.det() * x.Q();
  Integer q = n2 * n2 - m.c() * m.c() * x.D();

  const Integer g = gcd(gcd(p, coeff), q);
  if (g > 1) {
    p = exact_div(p, g);
    coeff = exact_div(coeff, g);
    q = exact_div(q, g);
  }
  if (coeff < 0) {
    p = -p;
    coeff = -coeff;
    q = -q;
  }
  return {std::move(p), coeff * coeff * x.D(), std::move(q)};
}

}  // namespace serret
