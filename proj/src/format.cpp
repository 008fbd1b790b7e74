#include "qweyl/format.hpp"

#include <algorithm>
#include <vector>

namespace qweyl {

namespace {

std::string power_factor(const char* var, int e) {
  if (e == 0) return {};
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

std::string paren_if_compound(const IntPoly& p) {
  return p.term_count() > 1 ? "(" + format(p) + ")" : format(p);
}

// One signed summand: coefficient times the given factors ("s^2", "X", ...).
struct Summand {
  bool negative = false;
  std::string body;
};

Summand make_summand(const QScalar& c, const std::vector<std::string>& factors) {
  std::vector<std::string> present;
  for (const auto& f : factors) {
    if (!f.empty()) present.push_back(f);
  }
  std::vector<std::string> parts;
  bool negative = false;
  if (c.is_polynomial() && c.num().term_count() == 1) {
    IntPoly mag = c.num();
    if (mag.lead() < 0) {
      negative = true;
      mag = -mag;
    }
    if (!mag.is_one() || present.empty()) parts.push_back(format(mag));
  } else {
    parts.push_back("(" + format(c) + ")");
  }
  parts.insert(parts.end(), present.begin(), present.end());
  std::string body;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) body += '*';
    body += parts[i];
  }
  return {negative, body};
}

std::string join(const std::vector<Summand>& summands) {
  if (summands.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (i == 0) {
      out += summands[i].negative ? "-" : "";
    } else {
      out += summands[i].negative ? " - " : " + ";
    }
    out += summands[i].body;
  }
  return out;
}

}  // namespace

std::string format(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int d = 0; d <= p.degree(); ++d) {
    const mpz_class c = p.coeff(d);
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    std::string term;
    if (d == 0) {
      term = mag.get_str();
    } else if (mag == 1) {
      term = power_factor("q", d);
    } else {
      term = mag.get_str() + "*" + power_factor("q", d);
    }
    if (c < 0) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    out += term;
    first = false;
  }
  return out;
}

std::string format(const QScalar& c) {
  if (c.is_polynomial()) return format(c.num());
  return paren_if_compound(c.num()) + "/" + paren_if_compound(c.den());
}

std::string format(const XSPoly& p) {
  std::vector<Summand> summands;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [mono, c] = *it;
    summands.push_back(make_summand(c, {power_factor("s", mono.s), power_factor("x", mono.x)}));
  }
  return join(summands);
}

std::string format(const NormalOp& op) {
  std::vector<std::pair<OpMonomial, QScalar>> terms(op.terms().begin(), op.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.s != b.first.s) return a.first.s > b.first.s;
    if (a.first.d != b.first.d) return a.first.d > b.first.d;
    return a.first.x < b.first.x;
  });
  std::vector<Summand> summands;
  for (const auto& [mono, c] : terms) {
    summands.push_back(
        make_summand(c, {power_factor("s", mono.s), power_factor("X", mono.x), power_factor("D", mono.d)}));
  }
  return join(summands);
}

}  // namespace qweyl
