#pragma once

#include <string>

#include "qihou/formlab/forms.hpp"

namespace qihou {

enum class IdentityKind {
  eq6,               // octic composition: o_prime(xz^2, xyw, zw^2, xzw) = x^4 z^6 w^6 · o
  eq7,               // quartic composition: q(zw^3, xyw^2, yzw^2, xw^3, xyzw, w^4) = w^8 · o_prime
  eq10,              // divisor decomposition of the (n,k) form; needs n, k
  eq11,              // block-term renaming to the reduced form; needs n, k, d
  cyclic,            // cyclic invariance of the (4,1) form + the four rotated substitutions
  lemma1_expansion,  // o(y^2, y, z, w) expanded by powers of y
  q_special          // q(s,t,t,s,s,t) = q(t,s,s,t,t,s) = 2(s^2 - t^2)^2
};

struct IdentityCheck {
  bool ok = false;
  Polynomial residual;  // left minus right; zero iff ok (first failing part)
  std::string description;
};

/// Computes left minus right exactly for the selected identity. Parameters
/// are only read where the kind needs them. Throws on invalid parameters.
IdentityCheck verify_identity(IdentityKind kind, std::size_t n = 0, std::size_t k = 0,
                              std::size_t d = 0);

}  // namespace qihou
