#include "qweyl/opalg.hpp"

#include <omp.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

#include "qweyl/error.hpp"

namespace qweyl {

Word::Word(std::string_view letters) : letters_(letters) {
  for (char c : letters_) {
    if (c != 'X' && c != 'D') throw std::invalid_argument("Word: letters must be X or D");
  }
}

Word Word::x_pow_d_pow(int x_power, int d_power) {
  Word w;
  w.letters_.assign(static_cast<std::size_t>(x_power), 'X');
  w.letters_.append(static_cast<std::size_t>(d_power), 'D');
  return w;
}

bool Word::is_normal() const { return letters_.find("DX") == std::string::npos; }

void OpExpr::add(QScalar coeff, int s_power, Word word) {
  if (s_power < 0) throw std::invalid_argument("OpExpr: negative s power");
  terms_.push_back({std::move(coeff), s_power, std::move(word)});
}

NormalOp NormalOp::identity(const QScalar& twist) {
  NormalOp op(twist);
  op.add_term({0, 0, 0}, 1);
  return op;
}

NormalOp NormalOp::x(const QScalar& twist) {
  NormalOp op(twist);
  op.add_term({1, 0, 0}, 1);
  return op;
}

NormalOp NormalOp::d(const QScalar& twist) {
  NormalOp op(twist);
  op.add_term({0, 1, 0}, 1);
  return op;
}

NormalOp NormalOp::from_poly(const XSPoly& f, int d_power, const QScalar& twist) {
  NormalOp op(twist);
  for (const auto& [mono, c] : f.terms()) op.add_term({mono.x, d_power, mono.s}, c);
  return op;
}

QScalar NormalOp::coeff(int x, int d, int s) const {
  auto it = terms_.find({x, d, s});
  return it == terms_.end() ? QScalar() : it->second;
}

void NormalOp::add_term(OpMonomial mono, const QScalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NormalOp& NormalOp::operator+=(const NormalOp& other) {
  if (!(twist_ == other.twist_)) throw TwistMismatch("NormalOp::operator+=: twists differ");
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

NormalOp& NormalOp::operator*=(const QScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= c;
  return *this;
}

namespace {

using PendingKey = std::pair<Word, int>;
using Pending = std::map<PendingKey, QScalar>;

void accumulate(Pending& pending, NormalOp& done, PendingKey key, const QScalar& c) {
  if (c.is_zero()) return;
  if (key.first.is_normal()) {
    const auto& w = key.first.letters();
    const int xs = static_cast<int>(std::count(w.begin(), w.end(), 'X'));
    done.add_term({xs, static_cast<int>(w.size()) - xs, key.second}, c);
    return;
  }
  auto [it, inserted] = pending.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) pending.erase(it);
  }
}

}  // namespace

NormalOp normal_order(const OpExpr& e, const QScalar& twist, RewriteOrder order) {
  NormalOp done(twist);
  Pending pending;
  for (const auto& t : e.terms()) accumulate(pending, done, {t.word, t.s_power}, t.coeff);

  std::mt19937_64 rng(order.seed);
  while (!pending.empty()) {
    auto it = pending.begin();
    if (order.kind == RewriteOrder::Kind::random) {
      std::uniform_int_distribution<std::size_t> pick(0, pending.size() - 1);
      std::advance(it, static_cast<std::ptrdiff_t>(pick(rng)));
    }
    auto node = pending.extract(it);
    const std::string& w = node.key().first.letters();
    const int s_power = node.key().second;
    const QScalar& c = node.mapped();

    std::size_t pos = w.find("DX");
    if (order.kind == RewriteOrder::Kind::random) {
      std::vector<std::size_t> sites;
      for (std::size_t p = pos; p != std::string::npos; p = w.find("DX", p + 1)) sites.push_back(p);
      std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
      pos = sites[pick(rng)];
    }

    std::string swapped = w;
    swapped[pos] = 'X';
    swapped[pos + 1] = 'D';
    std::string dropped = w.substr(0, pos) + w.substr(pos + 2);
    accumulate(pending, done, {Word(swapped), s_power}, c * twist);
    accumulate(pending, done, {Word(dropped), s_power}, c);
  }
  return done;
}

XSPoly apply(const NormalOp& op, const XSPoly& p) {
  XSPoly (*derivative)(const XSPoly&) = nullptr;
  if (op.twist() == QScalar::q()) {
    derivative = &dq;
  } else if (op.twist().is_one()) {
    derivative = &ddx;
  } else {
    throw std::invalid_argument("apply: twist must be q or 1");
  }

  std::vector<XSPoly> derivs{p};
  XSPoly out;
  for (const auto& [mono, c] : op.terms()) {
    while (static_cast<int>(derivs.size()) <= mono.d) derivs.push_back(derivative(derivs.back()));
    out += shift(derivs[static_cast<std::size_t>(mono.d)], mono.x, mono.s) * c;
  }
  return out;
}

namespace {

// D^b X^c rewritten into normal form, as a flat list of (X power, D power, coefficient).
struct ReorderEntry {
  int x;
  int d;
  QScalar coeff;
};
using ReorderTable = std::map<std::pair<int, int>, std::vector<ReorderEntry>>;

ReorderTable build_reorder_table(const NormalOp& left, const NormalOp& right) {
  std::set<int> ds, xs;
  for (const auto& [mono, c] : left.terms()) ds.insert(mono.d);
  for (const auto& [mono, c] : right.terms()) xs.insert(mono.x);

  ReorderTable table;
  for (int b : ds) {
    for (int c : xs) {
      Word w(std::string(static_cast<std::size_t>(b), 'D') + std::string(static_cast<std::size_t>(c), 'X'));
      OpExpr e;
      e.add(1, 0, std::move(w));
      const NormalOp nf = normal_order(e, left.twist());
      auto& entries = table[{b, c}];
      for (const auto& [mono, coeff] : nf.terms()) entries.push_back({mono.x, mono.d, coeff});
    }
  }
  return table;
}

void check_twists(const NormalOp& left, const NormalOp& right) {
  if (!(left.twist() == right.twist())) throw TwistMismatch("mul: operands have different twists");
}

void multiply_term(NormalOp::TermMap& out, const OpMonomial& lm, const QScalar& lc,
                   const NormalOp& right, const ReorderTable& table) {
  for (const auto& [rm, rc] : right.terms()) {
    const QScalar weight = lc * rc;
    for (const auto& entry : table.at({lm.d, rm.x})) {
      const OpMonomial mono{lm.x + entry.x, entry.d + rm.d, lm.s + rm.s};
      QScalar c = weight * entry.coeff;
      auto [it, inserted] = out.try_emplace(mono, c);
      if (!inserted) it->second += c;
    }
  }
}

NormalOp collect(const QScalar& twist, const std::vector<NormalOp::TermMap>& partials) {
  NormalOp out(twist);
  for (const auto& part : partials) {
    for (const auto& [mono, c] : part) out.add_term(mono, c);
  }
  return out;
}

}  // namespace

NormalOp mul(const NormalOp& left, const NormalOp& right) {
  check_twists(left, right);
  const ReorderTable table = build_reorder_table(left, right);
  const std::vector<std::pair<OpMonomial, QScalar>> lterms(left.terms().begin(), left.terms().end());

  std::vector<NormalOp::TermMap> partials(static_cast<std::size_t>(omp_get_max_threads()));
  const long count = static_cast<long>(lterms.size());
#pragma omp parallel
  {
    auto& local = partials[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
      const auto& [lm, lc] = lterms[static_cast<std::size_t>(i)];
      multiply_term(local, lm, lc, right, table);
    }
  }
  return collect(left.twist(), partials);
}

namespace serial {

NormalOp mul(const NormalOp& left, const NormalOp& right) {
  check_twists(left, right);
  const ReorderTable table = build_reorder_table(left, right);
  std::vector<NormalOp::TermMap> partials(1);
  for (const auto& [lm, lc] : left.terms()) multiply_term(partials[0], lm, lc, right, table);
  return collect(left.twist(), partials);
}

NormalOp power(const NormalOp& base, int n) {
  if (n < 0) throw std::invalid_argument("power: negative exponent");
  NormalOp acc = NormalOp::identity(base.twist());
  for (int i = 0; i < n; ++i) acc = serial::mul(acc, base);
  return acc;
}

}  // namespace serial

NormalOp affine_factor(const QScalar& c, const QScalar& twist) {
  NormalOp op(twist);
  op.add_term({1, 0, 0}, 1);
  op.add_term({0, 1, 1}, c);
  return op;
}

NormalOp product(std::span<const NormalOp> factors, const QScalar& twist) {
  NormalOp acc = NormalOp::identity(twist);
  for (const auto& f : factors) acc = mul(acc, f);
  return acc;
}

NormalOp power(const NormalOp& base, int n) {
  if (n < 0) throw std::invalid_argument("power: negative exponent");
  NormalOp acc = NormalOp::identity(base.twist());
  for (int i = 0; i < n; ++i) acc = mul(acc, base);
  return acc;
}

NormalOp specialize_q(const NormalOp& op, const mpq_class& r, const QScalar& new_twist) {
  NormalOp out(new_twist);
  for (const auto& [mono, c] : op.terms()) out.add_term(mono, QScalar::from_rational(eval_q(c, r)));
  return out;
}

}  // namespace qweyl
