#pragma once

// Test-only oracles. Nothing here calls the code path it is used to check.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qweyl/opalg.hpp"

namespace qweyl::oracle {

// Coefficient list of the Gaussian binomial by counting partitions of each
// size that fit in a k x (n-k) box.
inline std::vector<long> gauss_by_partitions(int n, int k) {
  if (k < 0 || k > n) return {};
  const int width = n - k;
  std::vector<long> counts(static_cast<std::size_t>(k * width) + 1, 0);
  // Enumerate non-increasing sequences of length k with parts in [0, width].
  std::function<void(int, int, int)> rec = [&](int row, int max_part, int total) {
    if (row == k) {
      ++counts[static_cast<std::size_t>(total)];
      return;
    }
    for (int part = 0; part <= max_part; ++part) rec(row + 1, part, total + part);
  };
  rec(0, width, 0);
  return counts;
}

inline IntPoly from_longs(const std::vector<long>& c) {
  std::vector<mpz_class> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

// (f(qx) - f(x)) / ((q - 1) x), done with field division.
inline XSPoly difference_quotient(const XSPoly& f) {
  const XSPoly diff = dilate(f, 1, 0) - f;
  const QScalar q_minus_one(IntPoly::q() - IntPoly(1));
  XSPoly out;
  for (const auto& [mono, c] : diff.terms()) {
    // Every surviving term has x-degree >= 1 since constants cancel.
    out.add_term({mono.x - 1, mono.s}, c / q_minus_one);
  }
  return out;
}

// Normal form of a product obtained by expanding into raw words and running
// the rewriting engine once on the concatenations.
inline NormalOp product_by_words(const std::vector<NormalOp>& factors, const QScalar& twist) {
  struct Partial {
    QScalar c;
    int s;
    std::string w;
  };
  std::vector<Partial> acc{{1, 0, ""}};
  for (const auto& f : factors) {
    std::vector<Partial> next;
    for (const auto& p : acc) {
      for (const auto& [mono, c] : f.terms()) {
        next.push_back({p.c * c, p.s + mono.s,
                        p.w + std::string(static_cast<std::size_t>(mono.x), 'X') +
                            std::string(static_cast<std::size_t>(mono.d), 'D')});
      }
    }
    acc = std::move(next);
  }
  OpExpr e;
  for (auto& p : acc) e.add(p.c, p.s, Word(p.w));
  return normal_order(e, twist);
}

inline IntPoly random_intpoly(std::mt19937_64& rng, int max_degree, int bound) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-bound, bound);
  std::vector<mpz_class> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng));
  return IntPoly(std::move(c));
}

inline XSPoly random_xspoly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), count(0, 5);
  XSPoly p;
  const int terms = count(rng);
  for (int i = 0; i < terms; ++i) p.add_term({deg(rng), deg(rng) / 2}, QScalar(random_intpoly(rng, 3, 4)));
  return p;
}

inline NormalOp random_normalop(std::mt19937_64& rng, const QScalar& twist, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), count(1, 4);
  NormalOp op(twist);
  const int terms = count(rng);
  for (int i = 0; i < terms; ++i) op.add_term({deg(rng), deg(rng), deg(rng) / 2}, QScalar(random_intpoly(rng, 2, 3)));
  return op;
}

}  // namespace qweyl::oracle
