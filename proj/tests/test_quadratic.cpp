#include <doctest.h>

#include <stdexcept>

#include "serret/quadratic.hpp"
#include "support.hpp"

using namespace serret;

TEST_CASE("construction rejects rationals and zero denominators") {
  CHECK_THROWS_AS(QuadraticIrrational(0, 9, 1), std::domain_error);
  CHECK_THROWS_AS(QuadraticIrrational(1, 4, 2), std::domain_error);
  CHECK_THROWS_AS(QuadraticIrrational(1, 0, 1), std::domain_error);
  CHECK_THROWS_AS(QuadraticIrrational(1, -2, 1), std::domain_error);
  CHECK_THROWS_AS(QuadraticIrrational(1, 5, 0), std::domain_error);
}

TEST_CASE("construction restores the divisibility invariant") {
  testing::Rng rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    const QuadraticIrrational x = testing::rand_qi(rng, 500);
    const Integer rem = (x.D() - x.P() * x.P()) % x.Q();
    CHECK(rem == 0);
    CHECK(x.D() > 0);
    CHECK(!is_perfect_square(x.D()));
    CHECK(x.Q() != 0);
  }
}

TEST_CASE("qi_floor on known values") {
  // (1+sqrt(5))/2, the golden ratio, lies in (1, 2).
  CHECK(qi_floor({1, 5, 2}) == 1);
  CHECK(qi_floor({0, 2, 1}) == 1);
  // 1 - sqrt(2) written with negative denominator.
  CHECK(qi_floor({-1, 2, -1}) == -1);
  CHECK(qi_floor({0, 2, -1}) == -2);   // -sqrt(2)
  CHECK(qi_floor({7, 2, 1}) == 8);     // 7 + sqrt(2)
  CHECK(qi_floor({-7, 2, 1}) == -6);   // sqrt(2) - 7
}

TEST_CASE("qi_floor brackets the value exactly") {
  testing::Rng rng(102);
  for (int trial = 0; trial < 1000; ++trial) {
    const QuadraticIrrational x = testing::rand_qi(rng, 400);
    const Integer m = qi_floor(x);
    CHECK(!testing::qi_less_than_int(x, m));     // m <= x
    CHECK(testing::qi_less_than_int(x, m + 1));  // x < m + 1
  }
}

TEST_CASE("qi_equal on known pairs") {
  CHECK(qi_equal({1, 5, 2}, {1, 5, 2}));
  CHECK(qi_equal({1, 5, 2}, {2, 20, 4}));
  CHECK(!qi_equal({0, 2, 1}, {0, 3, 1}));
  // Same modulus, opposite sign.
  CHECK(!qi_equal({0, 2, 1}, {0, 2, -1}));
  // sqrt(2) vs sqrt(8)/2 = sqrt(2).
  CHECK(qi_equal({0, 2, 1}, {0, 8, 2}));
}

TEST_CASE("qi_equal is an equivalence relation on scaled copies") {
  testing::Rng rng(103);
  for (int trial = 0; trial < 1000; ++trial) {
    const QuadraticIrrational x = testing::rand_qi(rng, 200);
    const Integer k = testing::rand_long(rng, 1, 20);
    const Integer l = testing::rand_long(rng, 1, 20);
    const QuadraticIrrational y(x.P() * k, x.D() * k * k, x.Q() * k);
    const QuadraticIrrational z(x.P() * l, x.D() * l * l, x.Q() * l);
    CHECK(qi_equal(x, x));
    CHECK(qi_equal(x, y));
    CHECK(qi_equal(y, x));
    CHECK(qi_equal(y, z));
    CHECK(qi_equal(x, z));
  }
}

TEST_CASE("qi_mobius on known maps") {
  const QuadraticIrrational sqrt2(0, 2, 1);
  const QuadraticIrrational phi(1, 5, 2);

  CHECK(qi_equal(qi_mobius(UniModMatrix::identity(), sqrt2), sqrt2));
  // 1/sqrt(2) = sqrt(2)/2, rationalized by the conjugate.
  CHECK(qi_equal(qi_mobius(mat_u(), sqrt2), {0, 2, 2}));
  // phi + 1 = (3+sqrt(5))/2.
  CHECK(qi_equal(qi_mobius(mat_t(1), phi), {3, 5, 2}));
  // And (3+sqrt(5))/2 - 1 = phi again.
  CHECK(qi_equal(qi_mobius(mat_t(-1), {3, 5, 2}), phi));
}

TEST_CASE("qi_mobius respects composition and inverses") {
  testing::Rng rng(104);
  for (int trial = 0; trial < 1000; ++trial) {
    const QuadraticIrrational x = testing::rand_qi(rng, 100);
    const UniModMatrix m1 = testing::rand_matrix(rng);
    const UniModMatrix m2 = testing::rand_matrix(rng);
    CHECK(qi_equal(qi_mobius(m2, qi_mobius(m1, x)), qi_mobius(m2 * m1, x)));
    CHECK(qi_equal(qi_mobius(m1.inverse(), qi_mobius(m1, x)), x));
  }
}
