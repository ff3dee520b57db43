#pragma once

#include "qihou/polycore/polynomial.hpp"

namespace qihou {

/// Step-by-step record of the two-stage discriminant computation that pins
/// the senary quartic's free parameter. Everything symbolic and exact; the
/// comparison flags state which of the two reference expressions the
/// computation reproduces, without asserting either.
struct ReplayReport {
  VarRegistry::Ptr reg;  // {p, q, s, t, u, v, a4, a7, alpha}

  Polynomial f;             // a4·(st - uv)(pq - uv) + alpha·(senary quartic)
  Polynomial f_sub;         // f at t = v^2, u = 1
  Polynomial neg_disc_p;    // -D(f_sub, p) = 4AC - B^2 in the variable p
  Polynomial disc_s;        // D(neg_disc_p, s)
  Polynomial q6_coeff;      // coefficient of q^6 in disc_s
  std::uint32_t q_degree;   // degree of disc_s in q

  Polynomial display_neg_disc;      // the reference -D expression (in a7)
  bool neg_disc_matches_display;    // computed == display as written
  bool neg_disc_matches_display_a7_as_a4;  // computed == display with a7 renamed a4

  Polynomial neg_disc_alpha_only;   // computed -D at a4 = 0
  Polynomial display_alpha_only;    // display at a7 = 0
  bool alpha_only_matches;

  Polynomial display_q6;            // 32·alpha^2·v^2·(a7^2 - 16·alpha^2·v^2)
  bool q6_matches_display;          // computed q6 == display as written
  bool q6_matches_display_a7_as_a4; // computed q6 == display with a7 renamed a4
};

ReplayReport proof_replay_q41();

}  // namespace qihou
