#include "qweyl/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

#include "qweyl/error.hpp"
#include "qweyl/families.hpp"
#include "qweyl/qcomb.hpp"

namespace qweyl {

namespace {

struct Comparison {
  std::string check;
  TermTable lhs;  // oracle side
  TermTable rhs;  // closed-form side
};

using Comparisons = std::vector<Comparison>;

const QScalar kQ = QScalar::q();
const QScalar kOne = QScalar(1);
const QScalar kOneMinusQ = QScalar(IntPoly(1) - IntPoly::q());

TermTable table(const NormalOp& op) {
  TermTable t{{"x", "d", "s"}, {}};
  for (const auto& [mono, c] : op.terms()) t.terms.emplace(std::vector<int>{mono.x, mono.d, mono.s}, c);
  return t;
}

TermTable table(const XSPoly& p) {
  TermTable t{{"x", "s"}, {}};
  for (const auto& [mono, c] : p.terms()) t.terms.emplace(std::vector<int>{mono.x, mono.s}, c);
  return t;
}

// Coefficient triangle indexed by (m, l).
template <typename Fn>
TermTable triangle(int n, const char* second_axis, Fn&& value) {
  TermTable t{{"m", second_axis}, {}};
  for (int m = 0; m <= n; ++m) {
    for (int l = 0; l <= std::min(m, n - m); ++l) {
      QScalar c = value(m, l);
      if (!c.is_zero()) t.terms.emplace(std::vector<int>{m, l}, std::move(c));
    }
  }
  return t;
}

// Prefixes every key of `part` with `index` under a new leading axis.
void stack_into(TermTable& into, const std::string& axis, int index, const TermTable& part) {
  if (into.axes.empty()) {
    into.axes.push_back(axis);
    into.axes.insert(into.axes.end(), part.axes.begin(), part.axes.end());
  }
  for (const auto& [key, c] : part.terms) {
    std::vector<int> k{index};
    k.insert(k.end(), key.begin(), key.end());
    into.terms.emplace(std::move(k), c);
  }
}

NormalOp oracle_q_power(int n) { return power(affine_factor(1, kQ), n); }

NormalOp descending_product(int n) {
  std::vector<NormalOp> factors;
  for (int i = 0; i < n; ++i) factors.push_back(affine_factor(QScalar::q_pow(n - 1 - i), kQ));
  return product(factors, kQ);
}

NormalOp odd_product(int n) {
  std::vector<NormalOp> factors;
  for (int i = 0; i < n; ++i) factors.push_back(affine_factor(QScalar::q_pow(2 * i + 1), kQ));
  return product(factors, kQ);
}

// sum_{m,l} coeff(m,l) X^(m-l) s^(n-m) D^(n-m-l)
template <typename Fn>
NormalOp weyl_shaped(int n, const QScalar& twist, Fn&& coeff) {
  NormalOp op(twist);
  for (int m = 0; m <= n; ++m) {
    for (int l = 0; l <= std::min(m, n - m); ++l) op.add_term({m - l, n - m - l, n - m}, coeff(m, l));
  }
  return op;
}

XSPoly h_or_zero(int n) { return n < 0 ? XSPoly() : h_poly(n); }

// --- operator identities ----------------------------------------------------

Comparisons case_t1(int n) {
  const NormalOp lhs = power(affine_factor(1, kOne), n);
  NormalOp rhs(kOne);
  for (int k = 0; k <= n; ++k) {
    rhs += NormalOp::from_poly(shift(hermite(n - k), 0, k), k, kOne) * QScalar(IntPoly(binomial(n, k)));
  }
  const NormalOp q_power_at_one = specialize_q(oracle_q_power(n), 1, kOne);
  return {
      {"(X+sD)^n vs sum_k C(n,k) H_(n-k)(X,s) s^k D^k", table(lhs), table(rhs)},
      {"(X+sD_q)^n at q=1 vs sum_k C(n,k) H_(n-k)(X,s) s^k D^k", table(q_power_at_one), table(rhs)},
      {"(X+sD)^n 1 vs H_n recurrence", table(apply(lhs, 1)), table(hermite(n))},
      {"H_n recurrence vs closed sum", table(hermite(n)), table(hermite_closed(n))},
      {"H_n recurrence vs coefficient recurrence", table(hermite(n)), table(hermite_coeff_recurrence(n))},
  };
}

Comparisons case_c1(int n) {
  const NormalOp lhs = power(affine_factor(1, kOne), n);
  const NormalOp rhs = weyl_shaped(n, kOne, [&](int m, int j) { return QScalar(IntPoly(weyl_binomial(n, m, j))); });
  return {{"(X+sD)^n vs Weyl binomial expansion", table(lhs), table(rhs)}};
}

Comparisons case_t2(int n) {
  const NormalOp lhs = descending_product(n);
  NormalOp closed(kQ), recurrence(kQ);
  for (int k = 0; k <= n; ++k) {
    closed += NormalOp::from_poly(shift(g_coeff(n, k), 0, k), k, kQ);
    recurrence += NormalOp::from_poly(shift(g_coeff_recurrence(n, k), 0, k), k, kQ);
  }
  return {
      {"descending product vs sum_k g_n(k,X,s) s^k D^k", table(lhs), table(closed)},
      {"descending product vs c(n,k,j) recurrence", table(lhs), table(recurrence)},
  };
}

Comparisons case_c2(int n) {
  const NormalOp rhs = weyl_shaped(n, kQ, [&](int m, int j) { return corollary2_coeff(n, m, j); });
  return {{"descending product vs termwise coefficients", table(descending_product(n)), table(rhs)}};
}

Comparisons case_t3(int n) {
  NormalOp rhs(kQ);
  for (int k = 0; k <= n; ++k) {
    rhs += NormalOp::from_poly(shift(h_poly(n - k), 0, k), k, kQ) * (QScalar(gauss_binomial(n, k)) * QScalar::q_pow(k * n));
  }
  return {{"odd product vs sum_k [n,k] q^(kn) h_(n-k)(X,s) s^k D^k", table(odd_product(n)), table(rhs)}};
}

Comparisons case_c3(int n) {
  const NormalOp rhs = weyl_shaped(n, kQ, [&](int m, int j) { return corollary3_coeff(n, m, j); });
  return {{"odd product vs termwise coefficients", table(odd_product(n)), table(rhs)}};
}

Comparisons case_t4(int n) {
  const NormalOp lhs = power(affine_factor(kOneMinusQ, kQ), n);
  NormalOp rhs(kQ);
  for (int k = 0; k <= n; ++k) {
    rhs += NormalOp::from_poly(shift(a_coeff(n, k), 0, k), k, kQ) * pow(kOneMinusQ, k);
  }
  return {{"(X+(1-q)sD_q)^n vs sum_k A(n,k,X) (1-q)^k s^k D^k", table(lhs), table(rhs)}};
}

// --- polynomial and coefficient identities ---------------------------------

Comparisons case_hderiv(int n) {
  return {{"ddx H_n vs n H_(n-1)", table(ddx(hermite(n))), table(hermite(n - 1) * QScalar(n))}};
}

Comparisons case_op_commute(int n) {
  const XSPoly hn = hermite(n);
  const XSPoly hn1 = hermite(n - 1) * QScalar(n);
  const NormalOp lhs = mul(NormalOp::d(kOne), NormalOp::from_poly(hn, 0, kOne));
  const NormalOp rhs = NormalOp::from_poly(hn, 1, kOne) + NormalOp::from_poly(hn1, 0, kOne);

  TermTable applied_lhs, applied_rhs;
  for (int m = 0; m <= 8; ++m) {
    const XSPoly xm = XSPoly::monomial(1, m, 0);
    stack_into(applied_lhs, "m", m, table(ddx(hn * xm)));
    stack_into(applied_rhs, "m", m, table(hn * ddx(xm) + hn1 * xm));
  }
  return {
      {"D H_n(X) vs H_n(X) D + n H_(n-1)(X)", table(lhs), table(rhs)},
      {"action on x^m, m <= 8", applied_lhs, applied_rhs},
  };
}

Comparisons case_weyl_symmetry(int n) {
  auto w = [&](int m, int j) { return QScalar(IntPoly(weyl_binomial(n, m, j))); };
  const TermTable base = triangle(n, "j", w);
  return {
      {"{n m}_j vs {n n-m}_j", base, triangle(n, "j", [&](int m, int j) { return w(n - m, j); })},
      {"{n m}_j vs C(n-2j, m-j) {n j}_j", base,
       triangle(n, "j", [&](int m, int j) { return QScalar(IntPoly(binomial(n - 2 * j, m - j))) * w(j, j); })},
  };
}

Comparisons case_h_closed(int n) {
  return {
      {"descending product applied to 1 vs h_n", table(apply(descending_product(n), 1)), table(h_poly(n))},
      {"c(n,j) recurrence vs h_n", table(h_poly_descending_recurrence(n)), table(h_poly(n))},
  };
}

Comparisons case_exp_form(int n) {
  return {{"E_(q^2)(q s D_q^2/[2]) x^n vs h_n", table(apply_exp_q2(XSPoly::monomial(1, n, 0))), table(h_poly(n))}};
}

Comparisons case_dq_lowering(int n) {
  return {{"D_q h_n vs [n] h_(n-1)", table(dq(h_poly(n))), table(h_poly(n - 1) * QScalar(q_integer(n)))}};
}

Comparisons case_rec28(int n) {
  const XSPoly rhs = XSPoly::x() * h_poly(n - 1) +
                     shift(h_or_zero(n - 2), 0, 1) * (QScalar::q_pow(n - 1) * QScalar(q_integer(n - 1)));
  return {{"h_n vs x h_(n-1) + q^(n-1) s [n-1] h_(n-2)", table(h_poly(n)), table(rhs)}};
}

Comparisons case_rec33(int n) {
  const XSPoly prev = dilate(h_poly(n - 1), 0, 2);
  const XSPoly rhs = XSPoly::x() * prev + shift(dq(prev), 0, 1) * kQ;
  return {
      {"h_n vs x h_(n-1)(x,q^2 s) + q s D_q h_(n-1)(x,q^2 s)", table(h_poly(n)), table(rhs)},
      {"odd product applied to 1 vs h_n", table(apply(odd_product(n), 1)), table(h_poly(n))},
      {"odd-product c(n,j) recurrence vs h_n", table(h_poly_odd_recurrence(n)), table(h_poly(n))},
  };
}

Comparisons case_scaling(int n) {
  return {{"h_n(qx, q^2 s) vs q^n h_n(x,s)", table(dilate(h_poly(n), 1, 2)), table(h_poly(n) * QScalar::q_pow(n))}};
}

Comparisons case_lucas(int n) {
  auto lm = [](int k) { return scale_s(lucas(k), -1); };
  const XSPoly lhs = apply(affine_factor(kOneMinusQ, kQ), lm(n));
  XSPoly rhs;
  std::string check;
  if (n == 0) {
    rhs = lm(1);
    check = "(X+(1-q)sD_q) L_0(x,-s) vs L_1(x,-s)";
  } else if (n == 1) {
    rhs = lm(2) + shift(lm(0), 0, 1) + XSPoly::s();
    check = "(X+(1-q)sD_q) L_1(x,-s) vs L_2(x,-s) + s L_0(x,-s) + s";
  } else {
    rhs = lm(n + 1) + shift(lm(n - 1), 0, 1);
    check = "(X+(1-q)sD_q) L_n(x,-s) vs L_(n+1)(x,-s) + s L_(n-1)(x,-s)";
  }
  return {{check, table(lhs), table(rhs)}};
}

Comparisons case_hermite_lucas(int n) {
  const XSPoly lhs = scale_s(big_hermite(n), kOneMinusQ);
  return {
      {"H_n(x,(1-q)s|q) vs sum_j C(n,j) s^j L_(n-2j)(x,-s)", table(lhs), table(hermite_lucas_expand(n))},
      {"H_n(x,(1-q)s|q) vs A(n,0,x)", table(lhs), table(a_coeff(n, 0))},
  };
}

Comparisons case_closed414(int n) {
  const NormalOp oracle = oracle_q_power(n);
  XSPoly diagonal;
  for (int l = 0; 2 * l <= n; ++l) {
    diagonal.add_term({n - 2 * l, l}, QScalar(qweyl_binomial(n, l, l, QWeylPath::closed)));
  }
  NormalOp by_s_power(kQ);
  for (int m = 0; m <= n; ++m) {
    for (int l = 0; l <= std::min(m, n - m); ++l) {
      by_s_power.add_term({n - m - l, m - l, m}, QScalar(qweyl_binomial_by_s_power(n, m, l)));
    }
  }
  return {
      {"H_n(x,s|q) vs sum_l {n l}_l x^(n-2l) s^l", table(big_hermite(n)), table(diagonal)},
      {"(X+sD_q)^n vs closed q-Weyl coefficients", table(oracle),
       table(weyl_shaped(n, kQ, [&](int m, int l) { return QScalar(qweyl_binomial(n, m, l, QWeylPath::closed)); }))},
      {"(X+sD_q)^n vs s-power indexed display", table(oracle), table(by_s_power)},
  };
}

Comparisons case_factor416(int n) {
  auto path = [n](QWeylPath p) {
    return [n, p](int m, int l) { return QScalar(qweyl_binomial(n, m, l, p)); };
  };
  return {
      {"closed vs factored", triangle(n, "l", path(QWeylPath::closed)), triangle(n, "l", path(QWeylPath::factored))},
      {"(X+sD_q)^n vs factored", table(oracle_q_power(n)), table(weyl_shaped(n, kQ, path(QWeylPath::factored)))},
  };
}

Comparisons case_rec417(int n) {
  const auto tri = qweyl_triangle(n);
  auto rec = [&](int m, int l) { return QScalar(tri[static_cast<std::size_t>(m)][static_cast<std::size_t>(l)]); };
  auto closed = [n](int m, int l) { return QScalar(qweyl_binomial(n, m, l, QWeylPath::closed)); };
  return {
      {"closed vs recurrence", triangle(n, "l", closed), triangle(n, "l", rec)},
      {"(X+sD_q)^n vs recurrence", table(oracle_q_power(n)), table(weyl_shaped(n, kQ, rec))},
  };
}

Comparisons case_q1_collapse(int n) {
  auto weyl = [n](int m, int l) { return QScalar(IntPoly(weyl_binomial(n, m, l))); };
  auto at_one = [n](QWeylPath p) {
    return [n, p](int m, int l) { return QScalar::from_rational(eval_q(QScalar(qweyl_binomial(n, m, l, p)), 1)); };
  };
  return {
      {"recurrence at q=1 vs Weyl binomial", triangle(n, "l", at_one(QWeylPath::recurrence)), triangle(n, "l", weyl)},
      {"closed at q=1 vs Weyl binomial", triangle(n, "l", at_one(QWeylPath::closed)), triangle(n, "l", weyl)},
      {"(X+sD_q)^n at q=1 vs (X+sD)^n", table(specialize_q(oracle_q_power(n), 1, kOne)),
       table(power(affine_factor(1, kOne), n))},
  };
}

using CaseFn = Comparisons (*)(int);

struct CaseEntry {
  CaseInfo info;
  CaseFn fn;
};

const std::vector<CaseEntry>& registry() {
  static const std::vector<CaseEntry> entries = {
      {{CaseId::T1, "T1", true, 1, 10}, case_t1},
      {{CaseId::T2, "T2", true, 1, 8}, case_t2},
      {{CaseId::T3, "T3", true, 1, 8}, case_t3},
      {{CaseId::T4, "T4", true, 1, 8}, case_t4},
      {{CaseId::C1, "C1", true, 1, 10}, case_c1},
      {{CaseId::C2, "C2", true, 1, 8}, case_c2},
      {{CaseId::C3, "C3", true, 1, 8}, case_c3},
      {{CaseId::HDeriv, "H-deriv-1.9", false, 1, 12}, case_hderiv},
      {{CaseId::OpCommute, "op-1.10", false, 1, 12}, case_op_commute},
      {{CaseId::WeylSymmetry, "sym-1.13", false, 0, 12}, case_weyl_symmetry},
      {{CaseId::HClosedVsProduct, "h-closed-2.1-vs-2.3", false, 0, 8}, case_h_closed},
      {{CaseId::ExpForm, "exp-2.6", false, 0, 12}, case_exp_form},
      {{CaseId::DqLowering, "dq-2.7", false, 1, 12}, case_dq_lowering},
      {{CaseId::Rec28, "rec-2.8", false, 1, 12}, case_rec28},
      {{CaseId::Rec33, "rec-3.3", false, 1, 12}, case_rec33},
      {{CaseId::Scaling, "scale-3", false, 0, 12}, case_scaling},
      {{CaseId::LucasRelations, "lucas-4.4-4.6", false, 0, 12}, case_lucas},
      {{CaseId::HermiteLucas, "expand-4.7", false, 0, 10}, case_hermite_lucas},
      {{CaseId::Closed414, "closed-4.14", false, 0, 10}, case_closed414},
      {{CaseId::Factor416, "factor-4.16", false, 0, 10}, case_factor416},
      {{CaseId::Rec417, "rec-4.17", false, 0, 10}, case_rec417},
      {{CaseId::Q1Collapse, "q1-collapse", false, 0, 10}, case_q1_collapse},
  };
  return entries;
}

const CaseEntry& entry(CaseId id) {
  for (const auto& e : registry()) {
    if (e.info.id == id) return e;
  }
  throw std::invalid_argument("unknown case id");
}

struct Range {
  int lo;
  int hi;
  int n_max;
};

Range range_for(const CaseInfo& info, std::optional<int> n_max) {
  const int requested = n_max.value_or(info.default_n_max);
  if (requested < 1) throw std::invalid_argument("n_max must be at least 1");
  const int hi = info.is_theorem ? requested : std::min(requested, info.default_n_max);
  return {info.first_n, hi, requested};
}

Comparisons evaluate_guarded(const CaseEntry& e, int n) {
  try {
    return e.fn(n);
  } catch (const std::exception& ex) {
    // A thrown NotPolynomial or similar is a failed identity, not a crash.
    TermTable marker{{}, {{std::vector<int>{}, QScalar(1)}}};
    return {{std::string("error: ") + ex.what(), marker, TermTable{{}, {}}}};
  }
}

void inject_fault(std::vector<Comparisons>& per_n, const CaseInfo& info, FaultInjection fault) {
  std::size_t total = 0;
  for (const auto& comps : per_n) {
    for (const auto& c : comps) total += c.rhs.terms.size();
  }
  if (total == 0) return;
  std::mt19937_64 rng(fault.seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(info.id) + 1)));
  std::size_t pick = std::uniform_int_distribution<std::size_t>(0, total - 1)(rng);
  for (auto& comps : per_n) {
    for (auto& c : comps) {
      if (pick < c.rhs.terms.size()) {
        auto it = std::next(c.rhs.terms.begin(), static_cast<std::ptrdiff_t>(pick));
        it->second = -it->second;
        return;
      }
      pick -= c.rhs.terms.size();
    }
  }
}

std::optional<Failure> first_difference(int n, const Comparison& c, std::uint64_t seed) {
  if (sampled_agree(c.lhs, c.rhs, seed) && c.lhs.terms == c.rhs.terms) return std::nullopt;
  std::vector<std::vector<int>> keys;
  for (const auto& [k, v] : c.lhs.terms) keys.push_back(k);
  for (const auto& [k, v] : c.rhs.terms) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  auto lookup = [](const TermTable& t, const std::vector<int>& k) {
    auto it = t.terms.find(k);
    return it == t.terms.end() ? QScalar() : it->second;
  };
  for (const auto& k : keys) {
    QScalar l = lookup(c.lhs, k), r = lookup(c.rhs, k);
    if (!(l == r)) {
      const auto& axes = c.lhs.axes.empty() ? c.rhs.axes : c.lhs.axes;
      return Failure{n, c.check, axes, k, std::move(l), std::move(r)};
    }
  }
  // Only reachable if the sampled check disagreed with structurally equal tables.
  return Failure{n, c.check + " (sampled evaluation mismatch)", c.lhs.axes, {}, {}, {}};
}

VerificationReport assemble(const CaseInfo& info, const Range& range, std::vector<Comparisons> per_n,
                            std::optional<FaultInjection> fault) {
  if (fault) inject_fault(per_n, info, *fault);
  VerificationReport report{std::string(info.name), range.n_max, range.lo, range.hi, true, std::nullopt};
  for (int n = range.lo; n <= range.hi && report.pass; ++n) {
    for (const auto& c : per_n[static_cast<std::size_t>(n - range.lo)]) {
      if (auto f = first_difference(n, c, static_cast<std::uint64_t>(n) * 7919 + 17)) {
        report.pass = false;
        report.first_failure = std::move(f);
        break;
      }
    }
  }
  return report;
}

struct Job {
  std::size_t case_index;
  int n;
};

std::vector<VerificationReport> run_cases(std::span<const CaseId> cases, std::optional<int> n_max,
                                          std::optional<FaultInjection> fault, bool parallel) {
  std::vector<const CaseEntry*> entries;
  std::vector<Range> ranges;
  std::vector<std::vector<Comparisons>> results;
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    entries.push_back(&entry(cases[i]));
    ranges.push_back(range_for(entries.back()->info, n_max));
    const int count = std::max(0, ranges.back().hi - ranges.back().lo + 1);
    results.emplace_back(static_cast<std::size_t>(count));
    for (int n = ranges.back().lo; n <= ranges.back().hi; ++n) jobs.push_back({i, n});
  }
  // Larger n first so the long jobs do not trail at the end of the schedule.
  std::stable_sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) { return a.n > b.n; });

  const long job_count = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long j = 0; j < job_count; ++j) {
    const Job& job = jobs[static_cast<std::size_t>(j)];
    const auto slot = static_cast<std::size_t>(job.n - ranges[job.case_index].lo);
    results[job.case_index][slot] = evaluate_guarded(*entries[job.case_index], job.n);
  }

  std::vector<VerificationReport> reports;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    reports.push_back(assemble(entries[i]->info, ranges[i], std::move(results[i]), fault));
  }
  return reports;
}

}  // namespace

const std::vector<CaseInfo>& all_cases() {
  static const std::vector<CaseInfo> infos = [] {
    std::vector<CaseInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const CaseInfo& case_info(CaseId id) { return entry(id).info; }

std::optional<CaseId> parse_case_id(std::string_view name) {
  for (const auto& e : registry()) {
    if (e.info.name == name) return e.info.id;
  }
  return std::nullopt;
}

VerificationReport verify_theorem(CaseId id, int n_max, std::optional<FaultInjection> fault) {
  if (!case_info(id).is_theorem) throw std::invalid_argument("verify_theorem: not a theorem case");
  const CaseId ids[] = {id};
  return run_cases(ids, n_max, fault, true).front();
}

VerificationReport verify_identity(CaseId id, int n_max, std::optional<FaultInjection> fault) {
  if (case_info(id).is_theorem) throw std::invalid_argument("verify_identity: not an identity case");
  const CaseId ids[] = {id};
  return run_cases(ids, n_max, fault, true).front();
}

VerificationReport verify_case(CaseId id, int n_max, std::optional<FaultInjection> fault) {
  const CaseId ids[] = {id};
  return run_cases(ids, n_max, fault, true).front();
}

std::vector<VerificationReport> run_suite(std::span<const CaseId> cases, std::optional<int> n_max) {
  return run_cases(cases, n_max, std::nullopt, true);
}

namespace serial {

std::vector<VerificationReport> run_suite(std::span<const CaseId> cases, std::optional<int> n_max) {
  return run_cases(cases, n_max, std::nullopt, false);
}

}  // namespace serial

bool sampled_agree(const TermTable& lhs, const TermTable& rhs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(2, 97), den(1, 13);
  auto draw = [&] { return mpq_class(num(rng), den(rng)); };
  const mpq_class q0 = draw();
  const std::size_t arity = std::max(lhs.axes.size(), rhs.axes.size());
  std::vector<mpq_class> point;
  for (std::size_t i = 0; i < arity; ++i) point.push_back(draw());

  auto value = [&](const TermTable& t) -> std::optional<mpq_class> {
    mpq_class total = 0;
    for (const auto& [key, c] : t.terms) {
      mpq_class term;
      try {
        term = eval_q(c, q0);
      } catch (const PoleAtPoint&) {
        return std::nullopt;
      }
      for (std::size_t i = 0; i < key.size() && i < point.size(); ++i) {
        for (int e = 0; e < key[i]; ++e) term *= point[i];
      }
      total += term;
    }
    return total;
  };
  const auto a = value(lhs);
  const auto b = value(rhs);
  if (!a || !b) return true;  // inconclusive
  return *a == *b;
}

}  // namespace qweyl
