#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "qweyl/error.hpp"
#include "qweyl/qcomb.hpp"
#include "qweyl/qscalar.hpp"

using namespace qweyl;

namespace {

IntPoly P(std::initializer_list<long> c) { return oracle::from_longs(std::vector<long>(c)); }

}  // namespace

TEST_CASE("q_integer") {
  CHECK(q_integer(0) == IntPoly());
  CHECK(q_integer(1) == P({1}));
  CHECK(q_integer(3) == P({1, 1, 1}));
  CHECK_THROWS_AS(q_integer(-1), std::invalid_argument);
}

TEST_CASE("q_factorial") {
  CHECK(q_factorial(0) == P({1}));
  CHECK(q_factorial(2) == P({1, 1}));
  CHECK(q_factorial(3) == P({1, 2, 2, 1}));
  CHECK_THROWS_AS(q_factorial(-2), std::invalid_argument);
}

TEST_CASE("gauss_binomial examples and boundaries") {
  CHECK(gauss_binomial(4, 0) == P({1}));
  CHECK(gauss_binomial(2, 1) == P({1, 1}));
  CHECK(gauss_binomial(4, 2) == P({1, 1, 2, 1, 1}));
  CHECK(gauss_binomial(4, -1).is_zero());
  CHECK(gauss_binomial(4, 5).is_zero());
  CHECK(gauss_binomial(0, 0) == P({1}));
}

TEST_CASE("gauss_binomial agrees with partition counting and the factorial quotient") {
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const IntPoly g = gauss_binomial(n, k);
      CHECK(g == oracle::from_longs(oracle::gauss_by_partitions(n, k)));
      const auto quotient = divide_exact(q_factorial(n), q_factorial(k) * q_factorial(n - k));
      REQUIRE(quotient.has_value());
      CHECK(g == *quotient);
    }
  }
}

TEST_CASE("gauss_binomial symmetry and q-Pascal") {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(gauss_binomial(n, k) == gauss_binomial(n, n - k));
      CHECK(gauss_binomial(n, k) == gauss_binomial(n - 1, k - 1) + gauss_binomial(n - 1, k).shifted(k));
    }
  }
}

TEST_CASE("q=1 specializations") {
  for (int n = 0; n <= 12; ++n) {
    CHECK(eval_q(QScalar(q_integer(n)), 1) == n);
    CHECK(eval_q(QScalar(q_factorial(n)), 1) == mpq_class(factorial(n)));
    for (int k = 0; k <= n; ++k) CHECK(eval_q(QScalar(gauss_binomial(n, k)), 1) == mpq_class(binomial(n, k)));
  }
}

TEST_CASE("odd double factorial and even product") {
  CHECK(q_odd_double_factorial(0) == P({1}));
  CHECK(q_odd_double_factorial(1) == P({1}));
  CHECK(q_odd_double_factorial(2) == P({1, 1, 1}));
  CHECK(q_even_product(0) == P({1}));
  CHECK(q_even_product(1) == P({1, 1}));
  CHECK(q_even_product(2) == P({1, 1, 1, 1}));
  // [2j]! = [2j-1]!! (1+q)...(1+q^j) [j]!
  for (int j = 0; j <= 6; ++j) {
    CHECK(q_factorial(2 * j) == q_odd_double_factorial(j) * q_even_product(j) * q_factorial(j));
  }
}

TEST_CASE("to_polynomial") {
  const QScalar a(P({1, 0, 0, -1}), P({1, -1}));
  CHECK(to_polynomial(a) == P({1, 1, 1}));
  CHECK(to_polynomial(QScalar(5)) == P({5}));
  CHECK_THROWS_AS(to_polynomial(QScalar(P({1}), P({1, -1}))), NotPolynomial);
  CHECK_THROWS_AS(to_polynomial(QScalar(P({1}), P({2}))), NotPolynomial);
}

TEST_CASE("eval_q") {
  CHECK(eval_q(QScalar(P({1, 1, 1})), 1) == 3);
  CHECK_THROWS_AS(eval_q(QScalar(P({1, 1}), P({1, -1})), 1), PoleAtPoint);
  CHECK(eval_q(QScalar(P({3, 5, 3, 1})), 1) == 12);
  CHECK(eval_q(QScalar(P({1, 1}), P({1, -1})), mpq_class(1, 2)) == 3);
}

TEST_CASE("QScalar canonical form") {
  // (q^2-1)/(q-1) and (2q+2)/2 both reduce to 1+q.
  CHECK(QScalar(P({-1, 0, 1}), P({-1, 1})) == QScalar(P({1, 1})));
  CHECK(QScalar(P({2, 2}), P({2})) == QScalar(P({1, 1})));
  // Sign goes to the numerator.
  const QScalar neg(P({1}), P({-1, -1}));
  CHECK(neg.den().lead() > 0);
  CHECK(neg.num() == P({-1}));
  // Content is cancelled together with the polynomial gcd.
  const QScalar c(P({6, 6}), P({4, 0, -4}));
  CHECK(c.num() == P({-3}));
  CHECK(c.den() == P({-2, 2}));
  CHECK(QScalar(P({0}), P({7, 1})).den() == P({1}));
  CHECK_THROWS_AS(QScalar(P({1}), IntPoly()), std::domain_error);
}

TEST_CASE("QScalar reduction is canonical over random representatives") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly num = oracle::random_intpoly(rng, 4, 5);
    IntPoly den = oracle::random_intpoly(rng, 3, 5);
    IntPoly extra = oracle::random_intpoly(rng, 3, 5);
    if (den.is_zero() || extra.is_zero()) continue;
    const QScalar a(num, den);
    const QScalar b(num * extra, den * extra);
    CHECK(a == b);
    CHECK(gcd(a.num(), a.den()).is_one());
    // Field laws hold structurally.
    const QScalar c(extra, den);
    CHECK((a + c) - c == a);
    if (!c.is_zero()) CHECK((a * c) / c == a);
  }
}

TEST_CASE("to_polynomial succeeds iff the reduced denominator is 1, and round-trips") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const IntPoly num = oracle::random_intpoly(rng, 5, 6);
    const IntPoly den = oracle::random_intpoly(rng, 2, 3);
    if (den.is_zero()) continue;
    const QScalar a(num, den);
    if (a.den().is_one()) {
      CHECK(QScalar(to_polynomial(a)) == a);
    } else {
      CHECK_THROWS_AS(to_polynomial(a), NotPolynomial);
    }
  }
}

TEST_CASE("IntPoly gcd and division") {
  const IntPoly a = P({1, 1}) * P({1, 0, 1}) * P({3});
  const IntPoly b = P({1, 1}) * P({2, 1}) * P({6});
  CHECK(gcd(a, b) == P({3, 3}));
  CHECK(gcd(IntPoly(), P({-2, -4})) == P({2, 4}));
  CHECK_FALSE(divide_exact(P({1, 0, 1}), P({1, 1})).has_value());
  CHECK(divide_exact(P({-1, 0, 0, 1}), P({-1, 1})) == P({1, 1, 1}));
  CHECK(pow(P({1, 1}), 3) == P({1, 3, 3, 1}));
}
