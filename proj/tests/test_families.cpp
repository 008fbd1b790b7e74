#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "oracle.hpp"
#include "qweyl/error.hpp"
#include "qweyl/families.hpp"
#include "qweyl/qcomb.hpp"

using namespace qweyl;

namespace {

IntPoly P(std::initializer_list<long> c) { return oracle::from_longs(std::vector<long>(c)); }
QScalar Q(std::initializer_list<long> c) { return QScalar(P(c)); }

const QScalar q = QScalar::q();

XSPoly mono(int a, int b, const QScalar& c = 1) { return XSPoly::monomial(c, a, b); }

// Descending product F(n) = (X + q^(n-1) s D)...(X + s D).
NormalOp f_product(int n) {
  std::vector<NormalOp> f;
  for (int i = n - 1; i >= 0; --i) f.push_back(affine_factor(QScalar::q_pow(i), q));
  return product(f, q);
}

// G(n) = (X + q s D)(X + q^3 s D)...(X + q^(2n-1) s D).
NormalOp g_product(int n) {
  std::vector<NormalOp> f;
  for (int i = 1; i <= n; ++i) f.push_back(affine_factor(QScalar::q_pow(2 * i - 1), q));
  return product(f, q);
}

// Multiplies p(X, s) by s^k D^k on the right.
NormalOp times_sd(const XSPoly& p, int k) {
  NormalOp out(q);
  for (const auto& [m, c] : p.terms()) out.add_term({m.x, k, m.s + k}, c);
  return out;
}

}  // namespace

TEST_CASE("hermite examples") {
  CHECK(hermite(0) == XSPoly(1));
  CHECK(hermite(1) == XSPoly::x());
  CHECK(hermite(2) == mono(2, 0) + mono(0, 1));
  CHECK(hermite(4) == mono(4, 0) + mono(2, 1, 6) + mono(0, 2, 3));
}

TEST_CASE("hermite paths agree") {
  for (int n = 0; n <= 12; ++n) {
    CHECK(hermite_closed(n) == hermite(n));
    CHECK(hermite_coeff_recurrence(n) == hermite(n));
    // (X + sD)^n 1 with twist 1
    CHECK(apply(power(affine_factor(1, 1), n), XSPoly(1)) == hermite(n));
  }
}

TEST_CASE("weyl_binomial") {
  for (int n = 0; n <= 8; ++n) {
    for (int m = 0; m <= n; ++m) CHECK(weyl_binomial(n, m, 0) == binomial(n, m));
  }
  CHECK(weyl_binomial(4, 2, 1) == 12);
  CHECK(weyl_binomial(4, 2, 2) == 3);
  CHECK_THROWS_AS(weyl_binomial(4, 1, 2), IndexOutOfRange);
  CHECK_THROWS_AS(weyl_binomial(4, 3, 2), IndexOutOfRange);
}

TEST_CASE("weyl_binomial symmetry") {
  for (int n = 0; n <= 12; ++n) {
    for (int m = 0; m <= n; ++m) {
      for (int j = 0; j <= std::min(m, n - m); ++j) {
        CHECK(weyl_binomial(n, m, j) == weyl_binomial(n, n - m, j));
        CHECK(weyl_binomial(n, m, j) == binomial(n - 2 * j, m - j) * weyl_binomial(n, j, j));
      }
    }
  }
}

TEST_CASE("h_poly examples") {
  CHECK(h_poly(0) == XSPoly(1));
  CHECK(h_poly(1) == XSPoly::x());
  CHECK(h_poly(2) == mono(2, 0) + mono(0, 1, q));
  CHECK(h_poly(3) == mono(3, 0) + mono(1, 1, Q({0, 1, 1, 1})));
}

TEST_CASE("h_poly paths") {
  for (int n = 0; n <= 12; ++n) {
    CHECK(h_poly_descending_recurrence(n) == h_poly(n));
    CHECK(h_poly_odd_recurrence(n) == h_poly(n));
    CHECK(dilate(h_poly(n), 1, 2) == h_poly(n) * QScalar::q_pow(n));
    if (n >= 1) CHECK(dq(h_poly(n)) == h_poly(n - 1) * QScalar(q_integer(n)));
  }
  for (int n = 0; n <= 8; ++n) {
    CHECK(apply(f_product(n), XSPoly(1)) == h_poly(n));
    CHECK(apply(g_product(n), XSPoly(1)) == h_poly(n));
  }
}

TEST_CASE("literal product with leading factor X + sD does not give h_n") {
  // (X + s D)(X + q^2 s D) 1 = x^2 + s, while h_2 = x^2 + q s.
  const std::vector<NormalOp> f{affine_factor(1, q), affine_factor(QScalar::q_pow(2), q)};
  const XSPoly value = apply(product(f, q), XSPoly(1));
  CHECK(value == mono(2, 0) + mono(0, 1));
  CHECK_FALSE(value == h_poly(2));
}

TEST_CASE("apply_exp_q2") {
  CHECK(apply_exp_q2(XSPoly(1)) == XSPoly(1));
  CHECK(apply_exp_q2(mono(2, 0)) == mono(2, 0) + mono(0, 1, q));
  for (int n = 0; n <= 8; ++n) CHECK(apply_exp_q2(mono(n, 0)) == h_poly(n));
}

TEST_CASE("g_coeff") {
  CHECK(g_coeff(2, 1) == mono(1, 0, Q({1, 0, 1})));
  CHECK(g_coeff(2, 2) == XSPoly(q));
  CHECK_THROWS_AS(g_coeff(2, 3), IndexOutOfRange);
  CHECK_THROWS_AS(g_coeff(2, -1), IndexOutOfRange);
  for (int n = 0; n <= 8; ++n) {
    CHECK(g_coeff(n, 0) == h_poly(n));
    NormalOp rhs(q);
    for (int k = 0; k <= n; ++k) {
      CHECK(g_coeff_recurrence(n, k) == g_coeff(n, k));
      rhs += times_sd(g_coeff(n, k), k);
    }
    CHECK(f_product(n) == rhs);
  }
}

TEST_CASE("corollary coefficients") {
  CHECK(corollary2_coeff(3, 3, 0) == QScalar(1));
  CHECK(corollary2_coeff(2, 1, 0) == Q({1, 0, 1}));
  CHECK(corollary2_coeff(2, 0, 0) == q);
  CHECK(corollary3_coeff(3, 3, 0) == QScalar(1));
  CHECK(corollary3_coeff(2, 1, 0) == Q({0, 0, 1, 1}));
  CHECK(corollary3_coeff(2, 0, 0) == QScalar::q_pow(4));
  CHECK_THROWS_AS(corollary2_coeff(4, 1, 2), IndexOutOfRange);
  CHECK_THROWS_AS(corollary3_coeff(4, 1, 2), IndexOutOfRange);
  for (int n = 1; n <= 7; ++n) {
    const NormalOp f = f_product(n), g = g_product(n);
    std::size_t count = 0;
    for (int m = 0; m <= n; ++m) {
      for (int j = 0; j <= std::min(m, n - m); ++j) {
        CHECK(f.coeff(m - j, n - m - j, n - m) == corollary2_coeff(n, m, j));
        CHECK(g.coeff(m - j, n - m - j, n - m) == corollary3_coeff(n, m, j));
        ++count;
      }
    }
    CHECK(f.terms().size() == count);
    CHECK(g.terms().size() == count);
  }
}

TEST_CASE("G(n) as a sum of h_(n-k)(X,s) (sD)^k") {
  for (int n = 0; n <= 7; ++n) {
    NormalOp rhs(q);
    for (int k = 0; k <= n; ++k) {
      rhs += times_sd(h_poly(n - k) * (QScalar(gauss_binomial(n, k)) * QScalar::q_pow(k * n)), k);
    }
    CHECK(g_product(n) == rhs);
  }
}

TEST_CASE("big_hermite") {
  CHECK(big_hermite(1) == XSPoly::x());
  CHECK(big_hermite(2) == mono(2, 0) + mono(0, 1));
  CHECK(big_hermite(3) == mono(3, 0) + mono(1, 1, Q({2, 1})));
  for (int n = 0; n <= 10; ++n) {
    XSPoly sum;
    for (int l = 0; 2 * l <= n; ++l) sum += mono(n - 2 * l, l, QScalar(qweyl_binomial(n, l, l, QWeylPath::closed)));
    CHECK(big_hermite(n) == sum);
    CHECK(specialize_q(big_hermite(n), 1) == hermite(n));
  }
}

TEST_CASE("lucas first values") {
  CHECK(lucas(0) == XSPoly(1));
  CHECK(lucas(1) == XSPoly::x());
  CHECK(lucas(2) == mono(2, 0) + mono(0, 1, Q({1, 1})));
  CHECK(lucas(3) == mono(3, 0) + mono(1, 1, Q({1, 1, 1})));
  CHECK(lucas(4) == mono(4, 0) + mono(2, 1, Q({1, 1, 1, 1})) + mono(0, 2, Q({0, 1, 0, 1})));
}

TEST_CASE("lucas at q=1") {
  // n/(n-k) C(n-k,k) s^k x^(n-2k)
  for (int n = 1; n <= 10; ++n) {
    XSPoly expect;
    for (int k = 0; 2 * k <= n; ++k) {
      const mpz_class c = mpz_class(n) * binomial(n - k, k) / (n - k);
      expect += mono(n - 2 * k, k, QScalar(IntPoly(c)));
    }
    CHECK(specialize_q(lucas(n), 1) == expect);
  }
}

TEST_CASE("lucas_k") {
  for (int n = 0; n <= 8; ++n) CHECK(lucas_k(n, 0) == lucas(n));
  for (int k = 0; k <= 5; ++k) CHECK(lucas_k(0, k) == XSPoly(1));
  CHECK(lucas_k(1, 1) == mono(1, 0, Q({1, 1})));
}

TEST_CASE("a_coeff gives the normal form of (X + (1-q) s D)^n") {
  for (int n = 0; n <= 6; ++n) CHECK(a_coeff(n, n) == XSPoly(1));
  CHECK(a_coeff(2, 1) == mono(1, 0, Q({1, 1})));
  CHECK_THROWS_AS(a_coeff(2, 3), IndexOutOfRange);
  const QScalar one_minus_q = Q({1, -1});
  for (int n = 0; n <= 7; ++n) {
    CHECK(a_coeff(n, 0) == hermite_lucas_expand(n));
    NormalOp rhs(q);
    for (int k = 0; k <= n; ++k) rhs += times_sd(a_coeff(n, k) * pow(one_minus_q, k), k);
    CHECK(power(affine_factor(one_minus_q, q), n) == rhs);
  }
}

TEST_CASE("hermite_lucas_expand") {
  CHECK(hermite_lucas_expand(0) == XSPoly(1));
  CHECK(hermite_lucas_expand(1) == XSPoly::x());
  CHECK(hermite_lucas_expand(2) == mono(2, 0) + mono(0, 1, Q({1, -1})));
  for (int n = 0; n <= 10; ++n) CHECK(hermite_lucas_expand(n) == scale_s(big_hermite(n), Q({1, -1})));
}

TEST_CASE("qweyl_binomial examples") {
  for (auto path : {QWeylPath::closed, QWeylPath::factored, QWeylPath::recurrence}) {
    CHECK(qweyl_binomial(5, 0, 0, path) == P({1}));
    CHECK(qweyl_binomial(2, 1, 0, path) == P({1, 1}));
    CHECK(qweyl_binomial(4, 2, 1, path) == P({3, 5, 3, 1}));
    CHECK(qweyl_binomial(4, 1, 2, path).is_zero());
    CHECK(qweyl_binomial(4, 5, 0, path).is_zero());
  }
  CHECK(eval_q(QScalar(qweyl_binomial(4, 2, 1, QWeylPath::closed)), 1) == 12);
}

TEST_CASE("qweyl_binomial paths agree with the oracle and collapse at q=1") {
  for (int n = 0; n <= 10; ++n) {
    const NormalOp pw = power(affine_factor(1, q), n);
    const auto tri = qweyl_triangle(n);
    for (int m = 0; m <= n; ++m) {
      for (int l = 0; l <= std::min(m, n - m); ++l) {
        const IntPoly c = qweyl_binomial(n, m, l, QWeylPath::closed);
        CHECK(qweyl_binomial(n, m, l, QWeylPath::factored) == c);
        CHECK(qweyl_binomial(n, m, l, QWeylPath::recurrence) == c);
        CHECK(tri[static_cast<std::size_t>(m)][static_cast<std::size_t>(l)] == c);
        CHECK(pw.coeff(m - l, n - m - l, n - m) == QScalar(c));
        // by-s-power indexing is the mirrored convention
        CHECK(qweyl_binomial_by_s_power(n, n - m, l) == c);
        CHECK(eval_q(QScalar(c), 1) == mpq_class(weyl_binomial(n, m, l)));
      }
    }
  }
}
