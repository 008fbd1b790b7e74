#include "qweyl/intpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qweyl {

IntPoly::IntPoly(long value) {
  if (value != 0) coeffs_.emplace_back(value);
}

IntPoly::IntPoly(const mpz_class& value) {
  if (value != 0) coeffs_.push_back(value);
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const mpz_class& coeff, int degree) {
  if (degree < 0) throw std::invalid_argument("IntPoly::monomial: negative degree");
  IntPoly p;
  if (coeff != 0) {
    p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, mpz_class(0));
    p.coeffs_.back() = coeff;
  }
  return p;
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

std::size_t IntPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c != 0; }));
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (lead() < 0) g = -g;
  if (g == 1) return *this;
  IntPoly r = *this;
  for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

IntPoly IntPoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("IntPoly::shifted: negative shift");
  if (is_zero() || k == 0) return *this;
  IntPoly r;
  r.coeffs_.assign(static_cast<std::size_t>(k), mpz_class(0));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

IntPoly IntPoly::scaled(const mpz_class& c) const {
  if (c == 0) return {};
  IntPoly r = *this;
  for (auto& v : r.coeffs_) v *= c;
  return r;
}

mpq_class IntPoly::eval(const mpq_class& at) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  acc.canonicalize();
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), mpz_class(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), mpz_class(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& other) {
  *this = *this * other;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly operator-(IntPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

IntPoly pow(const IntPoly& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("pow(IntPoly): negative exponent");
  IntPoly result = 1;
  IntPoly b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;

  std::vector<mpz_class> rem = a.coeffs();
  const auto& den = b.coeffs();
  const mpz_class& lb = den.back();
  const int db = b.degree();
  std::vector<mpz_class> quot(static_cast<std::size_t>(a.degree() - db) + 1, mpz_class(0));

  for (int d = a.degree(); d >= db; --d) {
    mpz_class& top = rem[static_cast<std::size_t>(d)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_class factor;
    mpz_divexact(factor.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    const int shift = d - db;
    for (int i = 0; i <= db; ++i) {
      mpz_submul(rem[static_cast<std::size_t>(shift + i)].get_mpz_t(), factor.get_mpz_t(),
                 den[static_cast<std::size_t>(i)].get_mpz_t());
    }
    quot[static_cast<std::size_t>(shift)] = factor;
  }
  for (int i = 0; i < db; ++i) {
    if (rem[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  }
  return IntPoly(std::move(quot));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_remainder: zero divisor");
  std::vector<mpz_class> rem = a.coeffs();
  const auto& den = b.coeffs();
  const mpz_class& lb = den.back();
  const int db = b.degree();
  int dr = a.degree();
  while (dr >= db) {
    const mpz_class top = rem[static_cast<std::size_t>(dr)];
    const int shift = dr - db;
    for (auto& c : rem) c *= lb;
    for (int i = 0; i <= db; ++i) {
      mpz_submul(rem[static_cast<std::size_t>(shift + i)].get_mpz_t(), top.get_mpz_t(),
                 den[static_cast<std::size_t>(i)].get_mpz_t());
    }
    rem.resize(static_cast<std::size_t>(dr));
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    dr = static_cast<int>(rem.size()) - 1;
  }
  return IntPoly(std::move(rem));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part().scaled(b.content());
  if (b.is_zero()) return a.primitive_part().scaled(a.content());

  mpz_class c;
  const mpz_class ca = a.content();
  const mpz_class cb = b.content();
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());

  IntPoly u = a.primitive_part();
  IntPoly v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    if (v.degree() == 0) {
      u = 1;
      break;
    }
    IntPoly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.primitive_part();
  }
  return u.primitive_part().scaled(c);
}

}  // namespace qweyl
