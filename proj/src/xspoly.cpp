#include "qweyl/xspoly.hpp"

#include "qweyl/qcomb.hpp"

namespace qweyl {

XSPoly::XSPoly(QScalar constant) {
  if (!constant.is_zero()) terms_.emplace(XSMonomial{0, 0}, std::move(constant));
}

XSPoly XSPoly::monomial(const QScalar& coeff, int x_degree, int s_degree) {
  XSPoly p;
  p.add_term({x_degree, s_degree}, coeff);
  return p;
}

QScalar XSPoly::coeff(int x_degree, int s_degree) const {
  auto it = terms_.find({x_degree, s_degree});
  return it == terms_.end() ? QScalar() : it->second;
}

void XSPoly::add_term(XSMonomial mono, const QScalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

XSPoly& XSPoly::operator+=(const XSPoly& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

XSPoly& XSPoly::operator-=(const XSPoly& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

XSPoly& XSPoly::operator*=(const QScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= c;
  return *this;
}

XSPoly operator*(const XSPoly& a, const XSPoly& b) {
  XSPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term({ma.x + mb.x, ma.s + mb.s}, ca * cb);
  }
  return out;
}

XSPoly shift(const XSPoly& p, int x_degree, int s_degree) {
  XSPoly out;
  for (const auto& [mono, c] : p.terms()) out.add_term({mono.x + x_degree, mono.s + s_degree}, c);
  return out;
}

XSPoly dq(const XSPoly& p) {
  XSPoly out;
  for (const auto& [mono, c] : p.terms()) {
    if (mono.x == 0) continue;
    out.add_term({mono.x - 1, mono.s}, c * QScalar(q_integer(mono.x)));
  }
  return out;
}

XSPoly ddx(const XSPoly& p) {
  XSPoly out;
  for (const auto& [mono, c] : p.terms()) {
    if (mono.x == 0) continue;
    out.add_term({mono.x - 1, mono.s}, c * QScalar(mono.x));
  }
  return out;
}

XSPoly dilate(const XSPoly& p, int a, int b) {
  XSPoly out;
  for (const auto& [mono, c] : p.terms()) out.add_term(mono, c * QScalar::q_pow(a * mono.x + b * mono.s));
  return out;
}

XSPoly scale_s(const XSPoly& p, const QScalar& c) {
  XSPoly out;
  for (const auto& [mono, coeff] : p.terms()) out.add_term(mono, coeff * pow(c, mono.s));
  return out;
}

XSPoly specialize_q(const XSPoly& p, const mpq_class& r) {
  XSPoly out;
  for (const auto& [mono, c] : p.terms()) out.add_term(mono, QScalar::from_rational(eval_q(c, r)));
  return out;
}

mpq_class eval(const XSPoly& p, const mpq_class& x0, const mpq_class& s0, const mpq_class& q0) {
  mpq_class total = 0;
  for (const auto& [mono, c] : p.terms()) {
    mpq_class term = eval_q(c, q0);
    for (int i = 0; i < mono.x; ++i) term *= x0;
    for (int i = 0; i < mono.s; ++i) term *= s0;
    total += term;
  }
  total.canonicalize();
  return total;
}

}  // namespace qweyl
