// Integer 2x2 matrices of determinant +-1, the elements of GL2(Z).
// Comparisons in PGL2(Z) identify M with -M; the canonical projective
// representative has c > 0, or c = 0 and d = 1.
#pragma once

#include "serret/integer.hpp"

namespace serret {

class UniModMatrix {
 public:
  // Throws std::domain_error unless ad - bc is +1 or -1.
  UniModMatrix(Integer a, Integer b, Integer c, Integer d);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

  Integer det() const { return a_ * d_ - b_ * c_; }

  // c > 0, or c = 0 and d = 1.
  bool is_canonical() const;

  // Exact inverse; integral because det is +-1.
  UniModMatrix inverse() const;

  static UniModMatrix identity();

  // Entrywise equality (not projective).
  bool operator==(const UniModMatrix& o) const = default;

 private:
  Integer a_, b_, c_, d_;
};

UniModMatrix operator*(const UniModMatrix& lhs, const UniModMatrix& rhs);

// The projectively equal matrix in canonical sign form.
UniModMatrix normalize_sign(const UniModMatrix& m);

// Equality up to global sign.
bool projectively_equal(const UniModMatrix& lhs, const UniModMatrix& rhs);

// Generator matrices: T^k = [[1,k],[0,1]] (x -> x+k),
// U = [[0,1],[1,0]] (x -> 1/x), V = [[-1,0],[0,1]] (x -> -x).
UniModMatrix mat_t(const Integer& k);
UniModMatrix mat_u();
UniModMatrix mat_v();

}  // namespace serret
