#pragma once

#include <compare>
#include <map>

#include "qweyl/qscalar.hpp"

namespace qweyl {

/// Exponent pair of a monomial x^x s^s.
struct XSMonomial {
  int x = 0;
  int s = 0;
  friend auto operator<=>(const XSMonomial&, const XSMonomial&) = default;
};

/// Polynomial in x and s with coefficients in Q(q). No zero coefficient is
/// ever stored.
class XSPoly {
 public:
  using TermMap = std::map<XSMonomial, QScalar>;

  XSPoly() = default;
  XSPoly(QScalar constant);  // NOLINT
  XSPoly(long constant) : XSPoly(QScalar(constant)) {}  // NOLINT

  static XSPoly monomial(const QScalar& coeff, int x_degree, int s_degree);
  static XSPoly x() { return monomial(1, 1, 0); }
  static XSPoly s() { return monomial(1, 0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QScalar coeff(int x_degree, int s_degree) const;
  void add_term(XSMonomial mono, const QScalar& coeff);

  XSPoly& operator+=(const XSPoly& other);
  XSPoly& operator-=(const XSPoly& other);
  XSPoly& operator*=(const QScalar& c);

  friend XSPoly operator+(XSPoly a, const XSPoly& b) { return a += b; }
  friend XSPoly operator-(XSPoly a, const XSPoly& b) { return a -= b; }
  friend XSPoly operator*(XSPoly a, const QScalar& c) { return a *= c; }
  friend XSPoly operator*(const QScalar& c, XSPoly a) { return a *= c; }
  friend XSPoly operator*(const XSPoly& a, const XSPoly& b);
  friend XSPoly operator-(XSPoly a) { return a *= QScalar(-1); }
  friend bool operator==(const XSPoly& a, const XSPoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

// Multiplies by x^x_degree s^s_degree.
XSPoly shift(const XSPoly& p, int x_degree, int s_degree);

/// q-derivative in x: x^a s^b -> [a] x^(a-1) s^b. s is a passive parameter.
XSPoly dq(const XSPoly& p);

/// Ordinary derivative in x.
XSPoly ddx(const XSPoly& p);

/// Substitution x -> q^a x, s -> q^b s.
XSPoly dilate(const XSPoly& p, int a, int b);

/// Substitution s -> c s.
XSPoly scale_s(const XSPoly& p, const QScalar& c);

/// Replaces every coefficient by its value at q = r (result is q-free).
XSPoly specialize_q(const XSPoly& p, const mpq_class& r);

/// Exact value at (x0, s0, q0). Throws PoleAtPoint.
mpq_class eval(const XSPoly& p, const mpq_class& x0, const mpq_class& s0, const mpq_class& q0);

}  // namespace qweyl
