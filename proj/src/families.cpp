#include "qweyl/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qweyl/error.hpp"
#include "qweyl/qcomb.hpp"

namespace qweyl {

namespace {

int choose2(int k) { return k * (k - 1) / 2; }

QScalar qpow(int k) { return QScalar::q_pow(k); }

// [a]/[b] as an element of Q(q). The 0/0 case stands for the initial value
// L_0 = 1 of the Lucas family and is taken to be 1.
QScalar bracket_ratio(int a, int b) {
  if (b == 0) {
    if (a == 0) return 1;
    throw NotPolynomial("bracket_ratio: [" + std::to_string(a) + "]/[0]");
  }
  return QScalar(q_integer(a), q_integer(b));
}

void require_triangle(int n, int m, int j, const char* who) {
  if (n < 0 || m < 0 || j < 0 || m > n || j > std::min(m, n - m)) {
    throw IndexOutOfRange(std::string(who) + ": need 0 <= j <= min(m, n-m), got n=" + std::to_string(n) +
                          " m=" + std::to_string(m) + " j=" + std::to_string(j));
  }
}

void require_nonnegative(int n, const char* who) {
  if (n < 0) throw std::invalid_argument(std::string(who) + ": negative index");
}

// Builds sum_j coeffs[j] s^j x^(degree - 2j).
XSPoly from_coefficients(const std::vector<IntPoly>& coeffs, int degree) {
  XSPoly out;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    out.add_term({degree - 2 * static_cast<int>(j), static_cast<int>(j)}, QScalar(coeffs[j]));
  }
  return out;
}

const IntPoly& at(const std::vector<IntPoly>& row, int j) {
  static const IntPoly zero;
  if (j < 0 || j >= static_cast<int>(row.size())) return zero;
  return row[static_cast<std::size_t>(j)];
}

}  // namespace

XSPoly hermite(int n) {
  require_nonnegative(n, "hermite");
  XSPoly prev = 1;
  if (n == 0) return prev;
  XSPoly cur = XSPoly::x();
  for (int i = 2; i <= n; ++i) {
    XSPoly next = XSPoly::x() * cur + XSPoly::monomial(i - 1, 0, 1) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

XSPoly hermite_closed(int n) {
  require_nonnegative(n, "hermite_closed");
  XSPoly out;
  for (int j = 0; 2 * j <= n; ++j) out.add_term({n - 2 * j, j}, QScalar(IntPoly(weyl_binomial(n, j, j))));
  return out;
}

XSPoly hermite_coeff_recurrence(int n) {
  require_nonnegative(n, "hermite_coeff_recurrence");
  std::vector<IntPoly> row{IntPoly(1)};
  for (int r = 1; r <= n; ++r) {
    std::vector<IntPoly> next(static_cast<std::size_t>(r / 2) + 1);
    for (int j = 0; 2 * j <= r; ++j) {
      next[static_cast<std::size_t>(j)] = at(row, j) + at(row, j - 1) * IntPoly(r + 1 - 2 * j);
    }
    row = std::move(next);
  }
  return from_coefficients(row, n);
}

mpz_class weyl_binomial(int n, int m, int j) {
  require_triangle(n, m, j, "weyl_binomial");
  mpz_class den = factorial(j) * factorial(m - j) * factorial(n - m - j);
  den <<= static_cast<mp_bitcnt_t>(j);
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), factorial(n).get_mpz_t(), den.get_mpz_t());
  return out;
}

XSPoly h_poly(int n) {
  require_nonnegative(n, "h_poly");
  XSPoly out;
  const IntPoly nfact = q_factorial(n);
  for (int j = 0; 2 * j <= n; ++j) {
    const QScalar c = qpow(j * j) * QScalar(nfact, q_even_product(j) * q_factorial(j) * q_factorial(n - 2 * j));
    out.add_term({n - 2 * j, j}, QScalar(to_polynomial(c)));
  }
  return out;
}

XSPoly h_poly_descending_recurrence(int n) {
  require_nonnegative(n, "h_poly_descending_recurrence");
  std::vector<IntPoly> row{IntPoly(1)};
  for (int r = 1; r <= n; ++r) {
    std::vector<IntPoly> next(static_cast<std::size_t>(r / 2) + 1);
    for (int j = 0; 2 * j <= r; ++j) {
      next[static_cast<std::size_t>(j)] = at(row, j) + (q_integer(r + 1 - 2 * j) * at(row, j - 1)).shifted(r - 1);
    }
    row = std::move(next);
  }
  return from_coefficients(row, n);
}

XSPoly h_poly_odd_recurrence(int n) {
  require_nonnegative(n, "h_poly_odd_recurrence");
  std::vector<IntPoly> row{IntPoly(1)};
  for (int r = 1; r <= n; ++r) {
    std::vector<IntPoly> next(static_cast<std::size_t>(r / 2) + 1);
    for (int j = 0; 2 * j <= r; ++j) {
      IntPoly c = at(row, j).shifted(2 * j);
      if (j >= 1) c += (q_integer(r + 1 - 2 * j) * at(row, j - 1)).shifted(2 * j - 1);
      next[static_cast<std::size_t>(j)] = std::move(c);
    }
    row = std::move(next);
  }
  return from_coefficients(row, n);
}

XSPoly apply_exp_q2(const XSPoly& p) {
  XSPoly out;
  XSPoly deriv = p;
  for (int j = 0; !deriv.is_zero(); ++j) {
    const QScalar weight = qpow(j * j) / QScalar(q_even_product(j) * q_factorial(j));
    out += shift(deriv, 0, j) * weight;
    deriv = dq(dq(deriv));
  }
  return out;
}

XSPoly g_coeff(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw IndexOutOfRange("g_coeff: need 0 <= k <= n");
  XSPoly out;
  const QScalar outer(gauss_binomial(n, k));
  for (int j = 0; 2 * j <= n - k; ++j) {
    QScalar c = outer * qpow(j * j + k * j + choose2(k)) * QScalar(gauss_binomial(n - k, 2 * j)) *
                QScalar(q_odd_double_factorial(j));
    for (int i = 0; i < k; ++i) c *= QScalar(one_plus_q_pow(n - j - i), one_plus_q_pow(j + 1 + i));
    out.add_term({n - k - 2 * j, j}, QScalar(to_polynomial(c)));
  }
  return out;
}

XSPoly g_coeff_recurrence(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw IndexOutOfRange("g_coeff_recurrence: need 0 <= k <= n");
  // table[k'][j] = c(r, k', j) for the current r.
  std::vector<std::vector<IntPoly>> table{{IntPoly(1)}};
  auto lookup = [](const std::vector<std::vector<IntPoly>>& t, int kk, int j) -> const IntPoly& {
    static const IntPoly zero;
    if (kk < 0 || kk >= static_cast<int>(t.size())) return zero;
    return at(t[static_cast<std::size_t>(kk)], j);
  };
  for (int r = 1; r <= n; ++r) {
    std::vector<std::vector<IntPoly>> next(static_cast<std::size_t>(std::min(r, k)) + 1);
    for (int kk = 0; kk <= std::min(r, k); ++kk) {
      auto& row = next[static_cast<std::size_t>(kk)];
      row.resize(static_cast<std::size_t>((r - kk) / 2) + 1);
      for (int j = 0; 2 * j <= r - kk; ++j) {
        IntPoly c = lookup(table, kk, j);
        c += lookup(table, kk - 1, j).shifted(2 * r - 1 - kk - 2 * j);
        c += (q_integer(r + 1 - kk - 2 * j) * lookup(table, kk, j - 1)).shifted(r - 1);
        row[static_cast<std::size_t>(j)] = std::move(c);
      }
    }
    table = std::move(next);
  }
  return from_coefficients(table[static_cast<std::size_t>(k)], n - k);
}

QScalar corollary2_coeff(int n, int m, int j) {
  require_triangle(n, m, j, "corollary2_coeff");
  IntPoly num = q_factorial(n);
  for (int i = m + 1; i <= n - j; ++i) num *= one_plus_q_pow(i);
  const IntPoly den = q_even_product(n - m) * q_factorial(j) * q_factorial(m - j) * q_factorial(n - m - j);
  const QScalar c = qpow(choose2(j + 1) + choose2(n - m)) * QScalar(num, den);
  return QScalar(to_polynomial(c));
}

QScalar corollary3_coeff(int n, int m, int j) {
  require_triangle(n, m, j, "corollary3_coeff");
  const IntPoly den = q_even_product(j) * q_factorial(j) * q_factorial(m - j) * q_factorial(n - m - j);
  const QScalar c = qpow(n * n + j * j - (m + j) * n) * QScalar(q_factorial(n), den);
  return QScalar(to_polynomial(c));
}

XSPoly big_hermite(int n) {
  require_nonnegative(n, "big_hermite");
  const QScalar twist = QScalar::q();
  return apply(power(affine_factor(1, twist), n), 1);
}

XSPoly lucas(int n) {
  require_nonnegative(n, "lucas");
  if (n == 0) return 1;
  XSPoly out;
  for (int k = 0; 2 * k <= n; ++k) {
    const QScalar c = qpow(choose2(k)) * bracket_ratio(n, n - k) * QScalar(gauss_binomial(n - k, k));
    out.add_term({n - 2 * k, k}, QScalar(to_polynomial(c)));
  }
  return out;
}

XSPoly lucas_k(int n, int k) {
  require_nonnegative(n, "lucas_k");
  require_nonnegative(k, "lucas_k");
  if (n == 0) return 1;
  XSPoly out;
  for (int j = 0; 2 * j <= n; ++j) {
    const QScalar c = qpow(choose2(j)) * bracket_ratio(n + k, n + k - j) *
                      QScalar(gauss_binomial(n + k - j, k) * gauss_binomial(n - j, j));
    out.add_term({n - 2 * j, j}, QScalar(to_polynomial(c)));
  }
  return out;
}

XSPoly a_coeff(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw IndexOutOfRange("a_coeff: need 0 <= k <= n");
  XSPoly out;
  for (int i = 0; 2 * i <= n - k; ++i) {
    out += shift(scale_s(lucas_k(n - 2 * i - k, k), -1), 0, i) * QScalar(IntPoly(binomial(n, i)));
  }
  return out;
}

XSPoly hermite_lucas_expand(int n) {
  require_nonnegative(n, "hermite_lucas_expand");
  XSPoly out;
  for (int j = 0; 2 * j <= n; ++j) {
    out += shift(scale_s(lucas(n - 2 * j), -1), 0, j) * QScalar(IntPoly(binomial(n, j)));
  }
  return out;
}

namespace {

bool in_weyl_range(int n, int m, int l) { return n >= 0 && m >= 0 && l >= 0 && m <= n && l <= std::min(m, n - m); }

// {n l}_l, the diagonal entries that generate the rest of the table.
IntPoly qweyl_diagonal(int n, int l) {
  QScalar sum;
  for (int i = 0; i <= l; ++i) {
    QScalar term = QScalar(IntPoly(binomial(n, i))) * qpow(choose2(l - i)) * bracket_ratio(n - 2 * i, n - i - l) *
                   QScalar(gauss_binomial(n - l - i, l - i));
    if ((l - i) % 2 != 0) term = -term;
    sum += term;
  }
  const QScalar one_minus_q(IntPoly(1) - IntPoly::q());
  return to_polynomial(sum / pow(one_minus_q, l));
}

}  // namespace

IntPoly qweyl_binomial_by_s_power(int n, int m, int l) {
  if (!in_weyl_range(n, m, l)) return {};
  QScalar sum;
  for (int i = 0; i <= l; ++i) {
    QScalar term = QScalar(IntPoly(binomial(n, i))) * qpow(choose2(l - i)) * bracket_ratio(n - 2 * i, n - i - l) *
                   QScalar(gauss_binomial(n - i - l, m - l) * gauss_binomial(n - m - i, l - i));
    if ((l - i) % 2 != 0) term = -term;
    sum += term;
  }
  const QScalar one_minus_q(IntPoly(1) - IntPoly::q());
  return to_polynomial(sum / pow(one_minus_q, l));
}

std::vector<std::vector<IntPoly>> qweyl_triangle(int n) {
  require_nonnegative(n, "qweyl_triangle");
  // cur[m][l] for the current power r; sized generously, entries outside range stay zero.
  auto blank = [](int size) {
    return std::vector<std::vector<IntPoly>>(static_cast<std::size_t>(size) + 1,
                                             std::vector<IntPoly>(static_cast<std::size_t>(size) + 1));
  };
  auto cur = blank(n);
  cur[0][0] = 1;
  auto get = [&](const std::vector<std::vector<IntPoly>>& t, int m, int l) -> IntPoly {
    if (m < 0 || l < 0 || m > n || l > n) return {};
    return t[static_cast<std::size_t>(m)][static_cast<std::size_t>(l)];
  };
  for (int r = 0; r < n; ++r) {
    auto next = blank(n);
    for (int m = 0; m <= r + 1; ++m) {
      for (int l = 0; l <= std::min(m, r + 1 - m); ++l) {
        IntPoly c = get(cur, m - 1, l);
        if (l >= 1) c += q_integer(m + 1 - l) * get(cur, m, l - 1);
        c += get(cur, m, l).shifted(m - l);
        next[static_cast<std::size_t>(m)][static_cast<std::size_t>(l)] = std::move(c);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

IntPoly qweyl_binomial(int n, int m, int l, QWeylPath path) {
  if (!in_weyl_range(n, m, l)) return {};
  switch (path) {
    case QWeylPath::closed:
      // The target term X^(m-l) s^(n-m) D^(n-m-l) has s-power n-m.
      return qweyl_binomial_by_s_power(n, n - m, l);
    case QWeylPath::factored:
      return gauss_binomial(n - 2 * l, m - l) * qweyl_diagonal(n, l);
    case QWeylPath::recurrence:
      return qweyl_triangle(n)[static_cast<std::size_t>(m)][static_cast<std::size_t>(l)];
  }
  throw std::logic_error("qweyl_binomial: unknown path");
}

}  // namespace qweyl
