#include "qweyl/json_io.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace qweyl {

namespace {

Json integer_to_json(const mpz_class& v) {
  if (v.fits_slong_p() && sizeof(long) >= sizeof(std::int64_t)) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad integer string");
    return v;
  }
  throw std::invalid_argument("expected an integer");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

Json to_json(const IntPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(integer_to_json(c));
  return arr;
}

Json to_json(const QScalar& c) {
  Json j = Json::object();
  j["num"] = to_json(c.num());
  j["den"] = to_json(c.den());
  return j;
}

Json to_json(const XSPoly& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json t = Json::object();
    t["x"] = it->first.x;
    t["s"] = it->first.s;
    t["coef"] = to_json(it->second);
    terms.push_back(std::move(t));
  }
  Json j = Json::object();
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const NormalOp& op) {
  Json terms = Json::array();
  for (const auto& [mono, c] : op.terms()) {
    Json t = Json::object();
    t["x"] = mono.x;
    t["d"] = mono.d;
    t["s"] = mono.s;
    t["coef"] = to_json(c);
    terms.push_back(std::move(t));
  }
  Json j = Json::object();
  j["twist"] = to_json(op.twist());
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j = Json::object();
  j["case"] = r.case_id;
  j["n_max"] = r.n_max;
  j["n_range"] = Json::array({r.n_lo, r.n_hi});
  j["status"] = r.pass ? "pass" : "fail";
  if (r.first_failure) {
    const Failure& f = *r.first_failure;
    Json term = Json::object();
    for (std::size_t i = 0; i < f.axes.size() && i < f.exponents.size(); ++i) term[f.axes[i]] = f.exponents[i];
    Json jf = Json::object();
    jf["n"] = f.n;
    jf["check"] = f.check;
    jf["term"] = std::move(term);
    jf["lhs"] = to_json(f.lhs);
    jf["rhs"] = to_json(f.rhs);
    j["first_failure"] = std::move(jf);
  } else {
    j["first_failure"] = nullptr;
  }
  return j;
}

IntPoly intpoly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("IntPoly: expected an array");
  std::vector<mpz_class> coeffs;
  for (const auto& c : j) coeffs.push_back(integer_from_json(c));
  return IntPoly(std::move(coeffs));
}

QScalar qscalar_from_json(const Json& j) {
  IntPoly den = intpoly_from_json(field(j, "den"));
  if (den.is_zero()) throw std::invalid_argument("QScalar: zero denominator");
  return QScalar(intpoly_from_json(field(j, "num")), std::move(den));
}

XSPoly xspoly_from_json(const Json& j) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw std::invalid_argument("XSPoly: 'terms' must be an array");
  XSPoly p;
  for (const auto& t : terms) {
    const int x = int_field(t, "x"), s = int_field(t, "s");
    if (x < 0 || s < 0) throw std::invalid_argument("XSPoly: negative exponent");
    p.add_term({x, s}, qscalar_from_json(field(t, "coef")));
  }
  return p;
}

NormalOp normalop_from_json(const Json& j) {
  NormalOp op(qscalar_from_json(field(j, "twist")));
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw std::invalid_argument("NormalOp: 'terms' must be an array");
  for (const auto& t : terms) {
    const int x = int_field(t, "x"), d = int_field(t, "d"), s = int_field(t, "s");
    if (x < 0 || d < 0 || s < 0) throw std::invalid_argument("NormalOp: negative exponent");
    op.add_term({x, d, s}, qscalar_from_json(field(t, "coef")));
  }
  return op;
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  r.case_id = field(j, "case").get<std::string>();
  r.n_max = int_field(j, "n_max");
  const Json& range = field(j, "n_range");
  if (!range.is_array() || range.size() != 2) throw std::invalid_argument("report: bad n_range");
  r.n_lo = range[0].get<int>();
  r.n_hi = range[1].get<int>();
  const std::string status = field(j, "status").get<std::string>();
  if (status != "pass" && status != "fail") throw std::invalid_argument("report: bad status");
  r.pass = status == "pass";
  const Json& f = field(j, "first_failure");
  if (!f.is_null()) {
    Failure fail;
    fail.n = int_field(f, "n");
    fail.check = field(f, "check").get<std::string>();
    for (const auto& [axis, e] : field(f, "term").items()) {
      fail.axes.push_back(axis);
      fail.exponents.push_back(e.get<int>());
    }
    fail.lhs = qscalar_from_json(field(f, "lhs"));
    fail.rhs = qscalar_from_json(field(f, "rhs"));
    r.first_failure = std::move(fail);
  }
  if (r.pass != !r.first_failure.has_value()) throw std::invalid_argument("report: status and first_failure disagree");
  return r;
}

}  // namespace qweyl
