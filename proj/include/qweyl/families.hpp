#pragma once

// Polynomial families and closed-form normal-ordering coefficients for the
// operators X + c s D. Every closed form here is checked against the rewriting
// engine in opalg; several also have an independent recurrence path.
//
// Internal divisions happen in Q(q). Whenever a result is claimed to be a
// polynomial in q it is passed through to_polynomial, so a transcription error
// surfaces as NotPolynomial instead of a silently wrong rational value.

#include "qweyl/opalg.hpp"
#include "qweyl/xspoly.hpp"

namespace qweyl {

// --- classical (twist 1) ---------------------------------------------------

/// H_n(x,s) from H_n = x H_{n-1} + (n-1) s H_{n-2}, H_0 = 1, H_1 = x.
XSPoly hermite(int n);

/// H_n(x,s) as sum_j {n j}_j s^j x^(n-2j).
XSPoly hermite_closed(int n);

/// H_n(x,s) from the coefficient recurrence c(n,j) = c(n-1,j) + (n+1-2j) c(n-1,j-1).
XSPoly hermite_coeff_recurrence(int n);

/// n! / (2^j j! (m-j)! (n-m-j)!). Throws IndexOutOfRange unless j <= min(m, n-m).
mpz_class weyl_binomial(int n, int m, int j);

// --- descending product (X + q^(n-1) s D)...(X + s D) ----------------------

/// h_n(x,s) = sum_j q^(j^2) s^j [n]! / ((1+q)...(1+q^j) [j]! [n-2j]!) x^(n-2j)
XSPoly h_poly(int n);

/// h_n from c(n,j) = c(n-1,j) + [n+1-2j] q^(n-1) c(n-1,j-1).
XSPoly h_poly_descending_recurrence(int n);

/// h_n from c(n,j) = q^(2j) c(n-1,j) + [n+1-2j] q^(2j-1) c(n-1,j-1)
/// (the odd-power product (X+q s D)(X+q^3 s D)... applied to 1).
XSPoly h_poly_odd_recurrence(int n);

/// sum_j q^(j^2) s^j / ((1+q)...(1+q^j) [j]!) dq^(2j)(p). Finite for polynomials.
XSPoly apply_exp_q2(const XSPoly& p);

/// g_n(k, x, s): coefficient polynomial of s^k D^k in the descending product.
/// Throws IndexOutOfRange unless 0 <= k <= n.
XSPoly g_coeff(int n, int k);

/// g_n(k, x, s) rebuilt from
/// c(n,k,j) = c(n-1,k,j) + q^(2n-1-k-2j) c(n-1,k-1,j) + q^(n-1) [n+1-k-2j] c(n-1,k,j-1).
XSPoly g_coeff_recurrence(int n, int k);

/// Coefficient of s^(n-m) X^(m-j) D^(n-m-j) in the descending product.
QScalar corollary2_coeff(int n, int m, int j);

/// Coefficient of s^(n-m) X^(m-j) D^(n-m-j) in (X+q s D)(X+q^3 s D)...(X+q^(2n-1) s D).
QScalar corollary3_coeff(int n, int m, int j);

// --- (X + s D_q)^n -----------------------------------------------------------

/// H_n(x,s|q) = (X + s D_q)^n 1, computed with the rewriting engine.
XSPoly big_hermite(int n);

/// q-Lucas polynomial L_n(x,s); L_0 = 1.
XSPoly lucas(int n);

/// Generalized q-Lucas polynomial L_n^(k)(x,s); L_0^(k) = 1.
XSPoly lucas_k(int n, int k);

/// A(n,k,x) = sum_i C(n,i) s^i L^(k)_(n-2i-k)(x,-s). Throws IndexOutOfRange unless 0 <= k <= n.
XSPoly a_coeff(int n, int k);

/// sum_j C(n,j) s^j L_(n-2j)(x,-s), which equals H_n(x,(1-q)s|q).
XSPoly hermite_lucas_expand(int n);

enum class QWeylPath { closed, factored, recurrence };

/// q-Weyl binomial: the coefficient of X^(m-l) s^(n-m) D_q^(n-m-l) in (X + s D_q)^n.
/// Zero unless 0 <= l <= min(m, n-m). Each path is computed independently.
IntPoly qweyl_binomial(int n, int m, int l, QWeylPath path);

/// The same coefficients indexed by s-power: the coefficient of
/// X^(n-m-l) s^m D_q^(m-l) in (X + s D_q)^n, from the closed alternating sum
/// with its 1/(1-q)^l prefactor. Zero outside 0 <= l <= min(m, n-m).
IntPoly qweyl_binomial_by_s_power(int n, int m, int l);

/// The whole table {n m}_l for fixed n via the recurrence, indexed [m][l].
std::vector<std::vector<IntPoly>> qweyl_triangle(int n);

}  // namespace qweyl
