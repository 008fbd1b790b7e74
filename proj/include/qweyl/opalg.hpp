#pragma once

// Operator algebra generated by X (multiplication by x) and D, subject to the
// single commutation rule  D X = c X D + 1, where the twist c is q for the
// q-derivative and 1 for the ordinary derivative. s is a central parameter
// carried as a power on each term.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qweyl/xspoly.hpp"

namespace qweyl {

/// A word over {X, D}. Construction rejects any other letter.
class Word {
 public:
  Word() = default;
  explicit Word(std::string_view letters);
  static Word x_pow_d_pow(int x_power, int d_power);

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_normal() const;  // all X's precede all D's

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::string letters_;
};

struct OpTerm {
  QScalar coeff;
  int s_power = 0;
  Word word;
};

/// Unreduced operator: a formal sum of weighted words, repeats allowed.
class OpExpr {
 public:
  OpExpr() = default;
  OpExpr(std::initializer_list<OpTerm> terms) : terms_(terms) {}

  void add(QScalar coeff, int s_power, Word word);
  const std::vector<OpTerm>& terms() const { return terms_; }

 private:
  std::vector<OpTerm> terms_;
};

/// Exponents of X^x D^d s^s. Ordered by (d, x, s), the serialization order.
struct OpMonomial {
  int x = 0;
  int d = 0;
  int s = 0;

  friend bool operator==(const OpMonomial&, const OpMonomial&) = default;
  friend auto operator<=>(const OpMonomial& a, const OpMonomial& b) {
    if (auto c = a.d <=> b.d; c != 0) return c;
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.s <=> b.s;
  }
};

/// Normally ordered operator  sum c_{x,d,s} X^x D^d s^s  over a fixed twist.
class NormalOp {
 public:
  using TermMap = std::map<OpMonomial, QScalar>;

  explicit NormalOp(QScalar twist) : twist_(std::move(twist)) {}

  static NormalOp identity(const QScalar& twist);
  static NormalOp x(const QScalar& twist);
  static NormalOp d(const QScalar& twist);
  /// f(X, s) * D^d_power, already normal.
  static NormalOp from_poly(const XSPoly& f, int d_power, const QScalar& twist);

  const QScalar& twist() const { return twist_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QScalar coeff(int x, int d, int s) const;
  void add_term(OpMonomial mono, const QScalar& coeff);

  NormalOp& operator+=(const NormalOp& other);
  NormalOp& operator*=(const QScalar& c);
  friend NormalOp operator+(NormalOp a, const NormalOp& b) { return a += b; }
  friend NormalOp operator*(NormalOp a, const QScalar& c) { return a *= c; }
  friend bool operator==(const NormalOp& a, const NormalOp& b) {
    return a.twist_ == b.twist_ && a.terms_ == b.terms_;
  }

 private:
  QScalar twist_;
  TermMap terms_;
};

/// Which adjacent D X pair the rewriting engine reduces next.
struct RewriteOrder {
  enum class Kind { leftmost, random } kind = Kind::leftmost;
  std::uint64_t seed = 0;

  static RewriteOrder leftmost() { return {}; }
  static RewriteOrder random(std::uint64_t seed) { return {Kind::random, seed}; }
};

/// Rewrites every D X into  twist X D + 1  until all words are X^a D^b and
/// collects like terms. The result does not depend on the order.
NormalOp normal_order(const OpExpr& e, const QScalar& twist,
                      RewriteOrder order = RewriteOrder::leftmost());

/// Lets an operator act on a polynomial: X multiplies by x, D is dq (twist q)
/// or ddx (twist 1), s multiplies by s. Other twists throw std::invalid_argument.
XSPoly apply(const NormalOp& op, const XSPoly& p);

/// Normal form of left * right (OpenMP kernel). Throws TwistMismatch.
NormalOp mul(const NormalOp& left, const NormalOp& right);

/// X + c s D
NormalOp affine_factor(const QScalar& c, const QScalar& twist);

/// factors[0] * factors[1] * ... ; identity for an empty list.
/// An empty list has no twist to take, hence the explicit argument.
NormalOp product(std::span<const NormalOp> factors, const QScalar& twist);

NormalOp power(const NormalOp& base, int n);

/// Replaces every coefficient by its value at q = r.
NormalOp specialize_q(const NormalOp& op, const mpq_class& r, const QScalar& new_twist);

namespace serial {

/// Single-threaded reference for qweyl::mul, kept for testing and benchmarks.
NormalOp mul(const NormalOp& left, const NormalOp& right);

NormalOp power(const NormalOp& base, int n);

}  // namespace serial

}  // namespace qweyl
