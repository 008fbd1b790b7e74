#include "qweyl/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "qweyl/families.hpp"
#include "qweyl/format.hpp"
#include "qweyl/json_io.hpp"
#include "qweyl/qcomb.hpp"
#include "qweyl/verify.hpp"

namespace qweyl::cli {

namespace {

constexpr int kUsageError = 2;

struct Options {
  std::string kind;
  std::string name;
  std::string coeff;
  int n = 0;
  std::optional<int> k;
  bool json = false;
  std::vector<std::string> cases;
  std::optional<int> n_max;
  std::optional<std::uint64_t> fault_seed;
};

NormalOp expand(const std::string& kind, int n) {
  const QScalar q = QScalar::q();
  if (kind == "classical") return power(affine_factor(1, 1), n);
  if (kind == "qpower") return power(affine_factor(1, q), n);
  if (kind == "qtheorem4") return power(affine_factor(QScalar(IntPoly(1) - IntPoly::q()), q), n);
  std::vector<NormalOp> factors;
  for (int i = 0; i < n; ++i) {
    const int e = kind == "qdesc" ? n - 1 - i : 2 * i + 1;
    factors.push_back(affine_factor(QScalar::q_pow(e), q));
  }
  return product(factors, q);
}

XSPoly family(const Options& o) {
  if (o.name == "hermite") return hermite(o.n);
  if (o.name == "h") return h_poly(o.n);
  if (o.name == "bigH") return big_hermite(o.n);
  if (o.name == "lucas") return lucas(o.n);
  return lucas_k(o.n, *o.k);
}

int emit_table(const Options& o, std::ostream& out) {
  const bool weyl = o.coeff == "weyl";
  const char* second = weyl ? "j" : "l";
  Json entries = Json::array();
  std::ostringstream text;
  std::vector<std::vector<IntPoly>> tri;
  if (!weyl) tri = qweyl_triangle(o.n);
  for (int m = 0; m <= o.n; ++m) {
    for (int l = 0; l <= std::min(m, o.n - m); ++l) {
      Json e = Json::object();
      e["m"] = m;
      e[second] = l;
      if (weyl) {
        const mpz_class v = weyl_binomial(o.n, m, l);
        e["value"] = to_json(IntPoly(v)).at(0);
        text << "m=" << m << ' ' << second << '=' << l << ": " << v.get_str() << '\n';
      } else {
        const IntPoly& v = tri[static_cast<std::size_t>(m)][static_cast<std::size_t>(l)];
        e["value"] = to_json(v);
        text << "m=" << m << ' ' << second << '=' << l << ": " << format(v) << '\n';
      }
      entries.push_back(std::move(e));
    }
  }
  if (o.json) {
    Json j = Json::object();
    j["coeff"] = o.coeff;
    j["n"] = o.n;
    j["entries"] = std::move(entries);
    out << j.dump(2) << '\n';
  } else {
    out << text.str();
  }
  return 0;
}

std::string describe(const Failure& f) {
  std::ostringstream s;
  s << "n=" << f.n << " [" << f.check << "]";
  if (!f.exponents.empty()) {
    s << " term";
    for (std::size_t i = 0; i < f.exponents.size() && i < f.axes.size(); ++i) {
      s << ' ' << f.axes[i] << '=' << f.exponents[i];
    }
  }
  s << ": lhs=" << format(f.lhs) << " rhs=" << format(f.rhs);
  return s.str();
}

int emit_verify(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<CaseId> ids;
  if (o.cases.empty()) {
    for (const auto& info : all_cases()) ids.push_back(info.id);
  } else {
    for (const auto& name : o.cases) ids.push_back(*parse_case_id(name));
  }

  std::vector<VerificationReport> reports;
  if (o.fault_seed) {
    for (CaseId id : ids) {
      const int n_max = o.n_max.value_or(case_info(id).default_n_max);
      reports.push_back(verify_case(id, n_max, FaultInjection{*o.fault_seed}));
    }
  } else {
    reports = run_suite(ids, o.n_max);
  }

  const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
  if (o.json) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out << arr.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      out << (r.pass ? "PASS " : "FAIL ") << r.case_id << " n=" << r.n_lo << ".." << r.n_hi;
      if (r.first_failure) out << "  first failure " << describe(*r.first_failure);
      out << '\n';
    }
  }
  if (!all_pass) err << "verification failed\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal ordering of X + c s D operators in the q-Weyl algebra", "qweyl"};
  app.require_subcommand(1);
  Options o;

  auto* expand_cmd = app.add_subcommand("expand", "Normal-order a power or product of X + c s D");
  expand_cmd->add_option("--kind", o.kind, "classical | qpower | qdesc | qodd | qtheorem4")
      ->required()
      ->check(CLI::IsMember({"classical", "qpower", "qdesc", "qodd", "qtheorem4"}));
  expand_cmd->add_option("--n", o.n, "Number of factors")->required()->check(CLI::NonNegativeNumber);
  expand_cmd->add_flag("--json", o.json, "Emit JSON");

  auto* family_cmd = app.add_subcommand("family", "Print a polynomial family member");
  family_cmd->add_option("--name", o.name, "hermite | h | bigH | lucas | lucasK")
      ->required()
      ->check(CLI::IsMember({"hermite", "h", "bigH", "lucas", "lucasK"}));
  family_cmd->add_option("--n", o.n, "Index")->required()->check(CLI::NonNegativeNumber);
  family_cmd->add_option("--k", o.k, "Second index (lucasK only)")->check(CLI::NonNegativeNumber);
  family_cmd->add_flag("--json", o.json, "Emit JSON");

  auto* table_cmd = app.add_subcommand("table", "Emit a coefficient triangle");
  table_cmd->add_option("--coeff", o.coeff, "weyl | qweyl")->required()->check(CLI::IsMember({"weyl", "qweyl"}));
  table_cmd->add_option("--n", o.n, "Row index")->required()->check(CLI::NonNegativeNumber);
  table_cmd->add_flag("--json", o.json, "Emit JSON");

  std::vector<std::string> case_names;
  for (const auto& info : all_cases()) case_names.emplace_back(info.name);
  auto* verify_cmd = app.add_subcommand("verify", "Run verification cases");
  verify_cmd->add_option("--case", o.cases, "Case id (repeatable); default all")->check(CLI::IsMember(case_names));
  verify_cmd->add_option("--n-max", o.n_max, "Largest n to check")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--inject-fault", o.fault_seed, "Negate one closed-form coefficient chosen by this seed");
  verify_cmd->add_flag("--json", o.json, "Emit JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (family_cmd->parsed()) {
      if (o.name == "lucasK" && !o.k) throw CLI::ValidationError("--k", "lucasK needs --k");
      if (o.name != "lucasK" && o.k) throw CLI::ValidationError("--k", "--k only applies to lucasK");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageError;
  }

  if (expand_cmd->parsed()) {
    const NormalOp op = expand(o.kind, o.n);
    out << (o.json ? to_json(op).dump(2) : format(op)) << '\n';
    return 0;
  }
  if (family_cmd->parsed()) {
    const XSPoly p = family(o);
    out << (o.json ? to_json(p).dump(2) : format(p)) << '\n';
    return 0;
  }
  if (table_cmd->parsed()) return emit_table(o, out);
  return emit_verify(o, out, err);
}

}  // namespace qweyl::cli
