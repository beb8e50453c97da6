#include "serret/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace serret {

UniModMatrix::UniModMatrix(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const Integer det = a_ * d_ - b_ * c_;
  if (det != 1 && det != -1)
    throw std::domain_error("malformed matrix: determinant must be +1 or -1");
}

bool UniModMatrix::is_canonical() const {
  return c_ > 0 || (c_ == 0 && d_ == 1);
}

UniModMatrix UniModMatrix::inverse() const {
  // adj(M) / det with det = +-1: multiplying the adjugate by det keeps
  // the entries integral.
  const Integer e = det();
  return {e * d_, e * -b_, e * -c_, e * a_};
}

UniModMatrix UniModMatrix::identity() { return {1, 0, 0, 1}; }

UniModMatrix operator*(const UniModMatrix& lhs, const UniModMatrix& rhs) {
  return {lhs.a() * rhs.a() + lhs.b() * rhs.c(),
          lhs.a() * rhs.b() + lhs.b() * rhs.d(),
          lhs.c() * rhs.a() + lhs.d() * rhs.c(),
          lhs.c() * rhs.b() + lhs.d() * rhs.d()};
}

UniModMatrix normalize_sign(const UniModMatrix& m) {
  // c = 0 forces |d| = 1, so a global sign flip always reaches the
  // canonical representative.
  if (m.c() < 0 || (m.c() == 0 && m.d() < 0))
    return {-m.a(), -m.b(), -m.c(), -m.d()};
  return m;
}

bool projectively_equal(const UniModMatrix& lhs, const UniModMatrix& rhs) {
  return normalize_sign(lhs) == normalize_sign(rhs);
}

UniModMatrix mat_t(const Integer& k) { return {1, k, 0, 1}; }

UniModMatrix mat_u() { return {0, 1, 1, 0}; }

UniModMatrix mat_v() { return {-1, 0, 0, 1}; }

}  // namespace serret
