#pragma once

#include <string>

#include "qihou/polycore/polynomial.hpp"

namespace qihou {

/// Canonical text form: signed sum of terms `c*v1^e1*...*vk^ek` in graded
/// lexicographic order, coefficient printed as "num" or "num/den" and omitted
/// when it is +-1 (unless the term is constant), exponent 1 omitted.
/// The zero polynomial prints as "0".
std::string to_string(const Polynomial& p);

/// Inverse of to_string. Accepts arbitrary term order, repeated variables
/// within a term, and redundant whitespace; parse(to_string(p)) == p.
/// Throws std::invalid_argument on malformed input or unknown variables.
Polynomial parse_polynomial(const std::string& text, const VarRegistry::Ptr& reg);

}  // namespace qihou
