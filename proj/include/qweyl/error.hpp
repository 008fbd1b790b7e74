#pragma once

#include <stdexcept>
#include <string>

namespace qweyl {

// A quantity that must lie in Z[q] turned out to have a nontrivial
// denominator. Upstream this always means a formula was transcribed wrongly.
class NotPolynomial : public std::runtime_error {
 public:
  explicit NotPolynomial(const std::string& what) : std::runtime_error(what) {}
};

class PoleAtPoint : public std::runtime_error {
 public:
  explicit PoleAtPoint(const std::string& what) : std::runtime_error(what) {}
};

class TwistMismatch : public std::runtime_error {
 public:
  explicit TwistMismatch(const std::string& what) : std::runtime_error(what) {}
};

class IndexOutOfRange : public std::out_of_range {
 public:
  explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace qweyl
