// Exact arithmetic on quadratic irrationals (P + sqrt(D))/Q.
#pragma once

#include "serret/integer.hpp"
#include "serret/matrix.hpp"

namespace serret {

// The value (P + sqrt(D))/Q with D > 0 not a perfect square and Q != 0.
// Construction normalizes so that Q divides D - P^2, which keeps the
// continued-fraction expansion recurrence integer-only. Immutable.
class QuadraticIrrational {
 public:
  // Throws std::domain_error if Q = 0, D <= 0, or D is a perfect square
  // (the value would be rational).
  QuadraticIrrational(Integer p, Integer d, Integer q);

  const Integer& P() const { return p_; }
  const Integer& D() const { return d_; }
  const Integer& Q() const { return q_; }

 private:
  Integer p_, d_, q_;
};

// The unique integer m with m <= x < m + 1; exact for either sign of Q.
Integer qi_floor(const QuadraticIrrational& x);

// Exact value equality, decided without factoring the radicands:
// sign(Qx) = sign(Qy), Dx*Qy^2 = Dy*Qx^2 and Px*Qy = Py*Qx.
bool qi_equal(const QuadraticIrrational& x, const QuadraticIrrational& y);

// The exact image (a*x + b)/(c*x + d) under a determinant +-1 matrix.
QuadraticIrrational qi_mobius(const UniModMatrix& m,
                              const QuadraticIrrational& x);

}  // namespace serret
