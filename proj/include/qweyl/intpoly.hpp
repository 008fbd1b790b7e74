#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace qweyl {

/// Univariate polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored as an ascending coefficient vector with no trailing zeros, so the
/// zero polynomial is the empty vector and `degree()` is -1 for it.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long value);  // NOLINT: integers embed implicitly
  explicit IntPoly(const mpz_class& value);
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly q() { return monomial(1, 1); }
  static IntPoly monomial(const mpz_class& coeff, int degree);

  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // Leading coefficient; zero for the zero polynomial.
  mpz_class lead() const { return coeffs_.empty() ? mpz_class(0) : coeffs_.back(); }
  mpz_class coeff(int i) const;
  std::size_t term_count() const;

  // Nonnegative gcd of the coefficients (0 for the zero polynomial).
  mpz_class content() const;
  IntPoly primitive_part() const;
  // Multiplies by q^k (k >= 0).
  IntPoly shifted(int k) const;
  IntPoly scaled(const mpz_class& c) const;

  mpq_class eval(const mpq_class& at) const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

IntPoly pow(const IntPoly& base, int exponent);

// Exact quotient a / b in Z[q], or nullopt when b does not divide a.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

// lc(b)^(deg a - deg b + 1) * a  mod  b, up to a nonzero integer factor.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

// Greatest common divisor in Z[q], normalized to a positive leading coefficient.
// gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

}  // namespace qweyl
