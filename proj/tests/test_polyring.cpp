#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "qweyl/error.hpp"
#include "qweyl/families.hpp"
#include "qweyl/qcomb.hpp"

using namespace qweyl;

namespace {

IntPoly P(std::initializer_list<long> c) { return oracle::from_longs(std::vector<long>(c)); }

XSPoly mono(int a, int b, const QScalar& c = 1) { return XSPoly::monomial(c, a, b); }

XSPoly at_q1(const XSPoly& p) { return specialize_q(p, 1); }

}  // namespace

TEST_CASE("dq examples") {
  CHECK(dq(XSPoly(1)).is_zero());
  CHECK(dq(mono(3, 0)) == mono(2, 0, QScalar(P({1, 1, 1}))));
  CHECK(dq(mono(2, 1)) == mono(1, 1, QScalar(P({1, 1}))));
}

TEST_CASE("ddx examples") {
  CHECK(ddx(mono(2, 0)) == mono(1, 0, 2));
  const XSPoly h3 = mono(3, 0) + mono(1, 1, 3);
  CHECK(ddx(h3) == (mono(2, 0) + mono(0, 1)) * QScalar(3));
  CHECK(ddx(XSPoly(1)).is_zero());
}

TEST_CASE("dilate examples") {
  CHECK(dilate(XSPoly::x(), 1, 0) == mono(1, 0, QScalar::q()));
  CHECK(dilate(XSPoly::s(), 0, 1) == mono(0, 1, QScalar::q()));
  const XSPoly h2 = mono(2, 0) + mono(0, 1, QScalar::q());
  CHECK(dilate(h2, 1, 2) == h2 * QScalar::q_pow(2));
}

TEST_CASE("eval examples") {
  CHECK(eval(mono(2, 0) + mono(0, 1), 2, 1, 1) == 5);
  CHECK(eval(XSPoly(), 3, 4, 5) == 0);
  const XSPoly l2 = mono(2, 0) + mono(0, 1, QScalar(P({1, 1})));
  CHECK(eval(l2, 1, 1, 2) == 4);
  CHECK_THROWS_AS(eval(mono(1, 0, QScalar(P({1}), P({-1, 1}))), 1, 1, 1), PoleAtPoint);
}

TEST_CASE("no zero coefficient is stored") {
  XSPoly p = mono(2, 1, 3);
  p += mono(2, 1, -3);
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
  p.add_term({1, 1}, 0);
  CHECK(p.terms().empty());
}

TEST_CASE("dq agrees with the difference quotient") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const XSPoly p = oracle::random_xspoly(rng, 7);
    CHECK(dq(p) == oracle::difference_quotient(p));
  }
}

TEST_CASE("dq is linear and satisfies the twisted Leibniz rule") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const XSPoly f = oracle::random_xspoly(rng, 6);
    const XSPoly g = oracle::random_xspoly(rng, 6);
    const QScalar c(oracle::random_intpoly(rng, 2, 3));
    CHECK(dq(f * c + g) == dq(f) * c + dq(g));
    CHECK(dq(f * g) == dq(f) * g + dilate(f, 1, 0) * dq(g));
  }
}

TEST_CASE("dq specializes to ddx at q=1") {
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; b <= 8; ++b) {
      CHECK(at_q1(dq(mono(a, b))) == ddx(mono(a, b)));
    }
  }
}

TEST_CASE("dilate composes additively") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const XSPoly p = oracle::random_xspoly(rng, 6);
    for (int a = -1; a <= 2; ++a) {
      for (int d = -1; d <= 2; ++d) CHECK(dilate(dilate(p, a, 1), 2, d) == dilate(p, a + 2, 1 + d));
    }
  }
}

TEST_CASE("scale_s and shift") {
  const XSPoly p = mono(2, 0) + mono(0, 1, 3) + mono(1, 2);
  CHECK(scale_s(p, QScalar(-1)) == mono(2, 0) + mono(0, 1, -3) + mono(1, 2));
  CHECK(shift(p, 1, 2) == p * mono(1, 2));
}

TEST_CASE("polynomial multiplication agrees with evaluation") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const XSPoly f = oracle::random_xspoly(rng, 5);
    const XSPoly g = oracle::random_xspoly(rng, 5);
    const mpq_class x0(3, 2), s0(-2, 5), q0(5, 7);
    CHECK(eval(f * g, x0, s0, q0) == eval(f, x0, s0, q0) * eval(g, x0, s0, q0));
  }
}
