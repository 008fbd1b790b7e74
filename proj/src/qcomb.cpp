#include "qweyl/qcomb.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qweyl {

namespace {

void require_nonnegative(int n, const char* who) {
  if (n < 0) throw std::invalid_argument(std::string(who) + ": negative index " + std::to_string(n));
}

}  // namespace

IntPoly q_integer(int n) {
  require_nonnegative(n, "q_integer");
  return IntPoly(std::vector<mpz_class>(static_cast<std::size_t>(n), mpz_class(1)));
}

IntPoly q_factorial(int n) {
  require_nonnegative(n, "q_factorial");
  IntPoly out = 1;
  for (int i = 2; i <= n; ++i) out *= q_integer(i);
  return out;
}

IntPoly gauss_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return {};
  k = std::min(k, n - k);
  // row[j] holds [r, j] for the current r; j runs up to k only.
  std::vector<IntPoly> row(static_cast<std::size_t>(k) + 1);
  row[0] = 1;
  for (int r = 1; r <= n; ++r) {
    for (int j = std::min(r, k); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)].shifted(j);
    }
  }
  return row[static_cast<std::size_t>(k)];
}

IntPoly q_odd_double_factorial(int j) {
  require_nonnegative(j, "q_odd_double_factorial");
  IntPoly out = 1;
  for (int i = 2; i <= j; ++i) out *= q_integer(2 * i - 1);
  return out;
}

IntPoly one_plus_q_pow(int k) {
  require_nonnegative(k, "one_plus_q_pow");
  return IntPoly(1) + IntPoly::monomial(1, k);
}

IntPoly q_even_product(int j) {
  require_nonnegative(j, "q_even_product");
  IntPoly out = 1;
  for (int i = 1; i <= j; ++i) out *= one_plus_q_pow(i);
  return out;
}

mpz_class factorial(int n) {
  require_nonnegative(n, "factorial");
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

mpz_class binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace qweyl
