#include "qweyl/qscalar.hpp"

#include <stdexcept>

#include "qweyl/error.hpp"

namespace qweyl {

QScalar::QScalar(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("QScalar: zero denominator");
  reduce();
}

QScalar QScalar::from_rational(const mpq_class& r) {
  return QScalar(IntPoly(r.get_num()), IntPoly(r.get_den()), Reduced{});
}

QScalar QScalar::q_pow(int k) {
  if (k >= 0) return QScalar(IntPoly::monomial(1, k));
  return QScalar(IntPoly(1), IntPoly::monomial(1, -k), Reduced{});
}

void QScalar::reduce() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (!den_.is_one()) {
    const IntPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

QScalar& QScalar::operator+=(const QScalar& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_.is_one() && other.den_.is_one()) {
    num_ += other.num_;
    return *this;
  }
  if (den_ == other.den_) {
    num_ += other.num_;
    reduce();
    return *this;
  }
  num_ = num_ * other.den_ + other.num_ * den_;
  den_ *= other.den_;
  reduce();
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& other) { return *this += -other; }

QScalar& QScalar::operator*=(const QScalar& other) {
  if (is_zero()) return *this;
  if (other.is_zero()) return *this = QScalar();
  if (den_.is_one() && other.den_.is_one()) {
    num_ *= other.num_;
    return *this;
  }
  // Cross-cancel so that the product is already reduced.
  IntPoly a = num_, b = den_, c = other.num_, d = other.den_;
  if (!d.is_one()) {
    const IntPoly g = gcd(a, d);
    if (!g.is_one()) {
      a = *divide_exact(a, g);
      d = *divide_exact(d, g);
    }
  }
  if (!b.is_one()) {
    const IntPoly g = gcd(c, b);
    if (!g.is_one()) {
      c = *divide_exact(c, g);
      b = *divide_exact(b, g);
    }
  }
  num_ = a * c;
  den_ = b * d;
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

QScalar& QScalar::operator/=(const QScalar& other) {
  if (other.is_zero()) throw std::domain_error("QScalar: division by zero");
  return *this *= QScalar(other.den_, other.num_);
}

QScalar pow(const QScalar& base, int exponent) {
  if (exponent < 0) return QScalar(1) / pow(base, -exponent);
  return QScalar(pow(base.num(), exponent), pow(base.den(), exponent));
}

IntPoly to_polynomial(const QScalar& a) {
  if (a.den().is_one()) return a.num();
  auto quotient = divide_exact(a.num(), a.den());
  if (!quotient) throw NotPolynomial("to_polynomial: denominator does not divide numerator");
  return *quotient;
}

mpq_class eval_q(const QScalar& a, const mpq_class& r) {
  const mpq_class den = a.den().eval(r);
  if (den == 0) throw PoleAtPoint("eval_q: denominator vanishes at the evaluation point");
  mpq_class out = a.num().eval(r) / den;
  out.canonicalize();
  return out;
}

}  // namespace qweyl
