#pragma once

#include "qweyl/intpoly.hpp"

namespace qweyl {

/// Element of the rational function field Q(q), kept as a reduced fraction
/// num/den of integer polynomials.
///
/// Invariants: den != 0, gcd(num, den) = 1 in Z[q] (content included), and
/// lead(den) > 0. Zero is 0/1. Under these rules every field element has one
/// representation, so operator== is structural.
class QScalar {
 public:
  QScalar() : den_(1) {}
  QScalar(long value) : num_(value), den_(1) {}  // NOLINT
  QScalar(IntPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  QScalar(IntPoly num, IntPoly den);
  static QScalar from_rational(const mpq_class& r);

  static QScalar q() { return QScalar(IntPoly::q()); }
  // q^k for any integer k.
  static QScalar q_pow(int k);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  QScalar& operator+=(const QScalar& other);
  QScalar& operator-=(const QScalar& other);
  QScalar& operator*=(const QScalar& other);
  QScalar& operator/=(const QScalar& other);

  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
  friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }
  friend QScalar operator-(QScalar a) {
    a.num_ = -a.num_;
    return a;
  }
  friend bool operator==(const QScalar& a, const QScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Reduced {};
  QScalar(IntPoly num, IntPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();

  IntPoly num_;
  IntPoly den_;
};

QScalar pow(const QScalar& base, int exponent);

// The polynomial num/den; throws NotPolynomial when den does not divide num.
IntPoly to_polynomial(const QScalar& a);

// Exact value at q = r; throws PoleAtPoint when den(r) = 0.
mpq_class eval_q(const QScalar& a, const mpq_class& r);

}  // namespace qweyl
