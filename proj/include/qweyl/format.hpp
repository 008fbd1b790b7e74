#pragma once

// Plain-text rendering in the style the identities are usually printed in,
// e.g. "s^2*D^2 + (1+q)*s*X*D + s + X^2" and "x^3 + (1+q+q^2)*s*x".

#include <string>

#include "qweyl/opalg.hpp"

namespace qweyl {

/// Ascending powers: "3+5*q+3*q^2+q^3". Zero renders as "0".
std::string format(const IntPoly& p);

/// A polynomial renders like IntPoly; otherwise "num/den" with parenthesized
/// multi-term parts.
std::string format(const QScalar& c);

/// Descending x-degree, then descending s-degree.
std::string format(const XSPoly& p);

/// Descending s-degree, then descending D-degree, then ascending X-degree.
std::string format(const NormalOp& op);

}  // namespace qweyl
