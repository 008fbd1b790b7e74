#pragma once

// q-combinatorial building blocks. All results live in Z[q].

#include "qweyl/intpoly.hpp"

namespace qweyl {

/// [n] = 1 + q + ... + q^(n-1); [0] = 0. Throws std::invalid_argument for n < 0.
IntPoly q_integer(int n);

/// [n]! = [1][2]...[n]; [0]! = 1.
IntPoly q_factorial(int n);

/// Gaussian binomial, computed with the q-Pascal rule
/// [n, k] = [n-1, k-1] + q^k [n-1, k]. Zero for k < 0 or k > n.
IntPoly gauss_binomial(int n, int k);

/// [1][3]...[2j-1]
IntPoly q_odd_double_factorial(int j);

/// (1+q)(1+q^2)...(1+q^j)
IntPoly q_even_product(int j);

/// 1 + q^k
IntPoly one_plus_q_pow(int k);

mpz_class factorial(int n);
/// Ordinary binomial coefficient; zero outside 0 <= k <= n.
mpz_class binomial(int n, int k);

}  // namespace qweyl
