#pragma once

// JSON encodings of the exchanged values. Keys are emitted in the documented
// order (ordered_json), so dump(parse(dump(x))) is byte-identical.
//
//   IntPoly    [c0, c1, ...]              ascending; a coefficient outside int64
//                                         range is written as a decimal string
//   QScalar    {"num": IntPoly, "den": IntPoly}
//   XSPoly     {"terms": [{"x","s","coef"}]}          descending x, then s
//   NormalOp   {"twist": QScalar, "terms": [{"x","d","s","coef"}]}
//                                                     ascending d, x, s
//   Report     {"case", "n_max", "n_range", "status", "first_failure"}

#include <json.hpp>

#include "qweyl/opalg.hpp"
#include "qweyl/verify.hpp"

namespace qweyl {

using Json = nlohmann::ordered_json;

Json to_json(const IntPoly& p);
Json to_json(const QScalar& c);
Json to_json(const XSPoly& p);
Json to_json(const NormalOp& op);
Json to_json(const VerificationReport& r);

// Parsers throw std::invalid_argument on malformed input.
IntPoly intpoly_from_json(const Json& j);
QScalar qscalar_from_json(const Json& j);
XSPoly xspoly_from_json(const Json& j);
NormalOp normalop_from_json(const Json& j);
VerificationReport report_from_json(const Json& j);

}  // namespace qweyl
