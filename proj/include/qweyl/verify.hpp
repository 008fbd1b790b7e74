#pragma once

// Verification harness. Each case builds, for every n in its range, one or
// more comparisons between an oracle side (normally the rewriting engine) and
// a closed-form side, and compares them term by term in exact arithmetic.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qweyl/qscalar.hpp"

namespace qweyl {

enum class CaseId {
  // operator identities
  T1, T2, T3, T4, C1, C2, C3,
  // polynomial and coefficient identities
  HDeriv, OpCommute, WeylSymmetry, HClosedVsProduct, ExpForm, DqLowering, Rec28, Rec33,
  Scaling, LucasRelations, HermiteLucas, Closed414, Factor416, Rec417, Q1Collapse,
};

struct CaseInfo {
  CaseId id;
  std::string_view name;  // as used on the command line and in reports
  bool is_theorem;
  int first_n;
  int default_n_max;
};

const std::vector<CaseInfo>& all_cases();
const CaseInfo& case_info(CaseId id);
std::optional<CaseId> parse_case_id(std::string_view name);

/// A sparse table of exact coefficients keyed by an exponent vector; `axes`
/// names the vector's components (e.g. {"x","d","s"}).
struct TermTable {
  std::vector<std::string> axes;
  std::map<std::vector<int>, QScalar> terms;
  friend bool operator==(const TermTable&, const TermTable&) = default;
};

struct Failure {
  int n = 0;
  std::string check;
  std::vector<std::string> axes;
  std::vector<int> exponents;
  QScalar lhs;
  QScalar rhs;
};

struct VerificationReport {
  std::string case_id;
  int n_max = 0;
  int n_lo = 0;
  int n_hi = 0;
  bool pass = true;
  std::optional<Failure> first_failure;
};

/// Negates one coefficient, chosen by `seed`, on the closed-form side of the
/// case before comparison. Used to show the harness sees single-term errors.
struct FaultInjection {
  std::uint64_t seed = 0;
};

/// T1..T4 and C1..C3. Throws std::invalid_argument for other ids or n_max < 1.
VerificationReport verify_theorem(CaseId id, int n_max, std::optional<FaultInjection> fault = {});

/// Polynomial/coefficient identities; the case's own range is capped at n_max.
VerificationReport verify_identity(CaseId id, int n_max, std::optional<FaultInjection> fault = {});

VerificationReport verify_case(CaseId id, int n_max, std::optional<FaultInjection> fault = {});

/// Runs the given cases with each (case, n) pair as an independent OpenMP task.
/// n_max unset means each case's default range. Reports come back in input order.
std::vector<VerificationReport> run_suite(std::span<const CaseId> cases, std::optional<int> n_max = {});

/// Fast randomized pre-check: evaluates both tables at a random rational point
/// (q and one value per axis). A mismatch proves inequality; agreement does not
/// prove equality.
bool sampled_agree(const TermTable& lhs, const TermTable& rhs, std::uint64_t seed);

namespace serial {

/// Single-threaded reference for qweyl::run_suite.
std::vector<VerificationReport> run_suite(std::span<const CaseId> cases, std::optional<int> n_max = {});

}  // namespace serial

}  // namespace qweyl
