#include "qihou/formlab/replay.hpp"

#include <map>

#include "qihou/formlab/forms.hpp"

namespace qihou {

ReplayReport proof_replay_q41() {
  auto reg = VarRegistry::make({"p", "q", "s", "t", "u", "v", "a4", "a7", "alpha"});
  auto var = [&](const char* name) { return Polynomial::variable(reg, reg->id(name)); };
  Polynomial p = var("p"), q = var("q"), s = var("s"), t = var("t"), u = var("u"), v = var("v");
  Polynomial a4 = var("a4"), a7 = var("a7"), alpha = var("alpha");

  SpecialForms sf = special_forms();
  std::map<VarId, Polynomial> embed;
  const char* names[6] = {"p", "q", "s", "t", "u", "v"};
  for (const char* name : names) embed.emplace(sf.pqstuv->id(name), var(name));
  Polynomial quartic = sf.q.substitute(embed, reg);

  Polynomial f = a4 * (s * t - u * v) * (p * q - u * v) + alpha * quartic;

  std::map<VarId, Polynomial> pin = {{reg->id("t"), v.pow(2)},
                                     {reg->id("u"), Polynomial::constant(reg, Rational(1))}};
  Polynomial f_sub = f.substitute(pin);

  Polynomial neg_disc_p = -quadratic_discriminant(f_sub, reg->id("p"));
  Polynomial disc_s = quadratic_discriminant(neg_disc_p, reg->id("s"));
  Polynomial q6 = coefficient_in(disc_s, reg->id("q"), 6);

  // Published -D(F, p), organized by powers of s.
  Polynomial s2 = (alpha.pow(2) * q.pow(2)).scale(4) + (alpha.pow(2) * q.pow(4)).scale(8) +
                  (alpha.pow(2) * v.pow(4)).scale(8) - a7.pow(2) * q.pow(2) * v.pow(4) +
                  (a7 * alpha * q.pow(2) * v.pow(4)).scale(4) +
                  (alpha.pow(2) * q.pow(2) * v.pow(4)).scale(12);
  Polynomial s1 = (a7 * alpha * v.pow(3)).scale(4) + (alpha.pow(2) * v.pow(3)).scale(16) -
                  (a7.pow(2) * q.pow(2) * v.pow(3)).scale(2) +
                  (a7 * alpha * q.pow(2) * v.pow(3)).scale(4) +
                  (alpha.pow(2) * q.pow(2) * v.pow(3)).scale(48);
  Polynomial s0 = (a7 * alpha * v.pow(2)).scale(4) + (alpha.pow(2) * v.pow(2)).scale(8) -
                  a7.pow(2) * q.pow(2) * v.pow(2) + (alpha.pow(2) * v.pow(4)).scale(8) +
                  (alpha.pow(2) * q.pow(2) * v.pow(4)).scale(16);
  Polynomial display_neg_disc = s2 * s.pow(2) - s1 * s + s0;

  Polynomial display_q6 =
      (alpha.pow(2) * v.pow(2) * a7.pow(2)).scale(32) - (alpha.pow(4) * v.pow(4)).scale(512);

  std::map<VarId, Polynomial> a7_to_a4 = {{reg->id("a7"), a4}};
  std::map<VarId, Polynomial> a4_zero = {{reg->id("a4"), Polynomial(reg)}};
  std::map<VarId, Polynomial> a7_zero = {{reg->id("a7"), Polynomial(reg)}};

  ReplayReport r{reg,
                 f,
                 f_sub,
                 neg_disc_p,
                 disc_s,
                 q6,
                 disc_s.degree_in(reg->id("q")),
                 display_neg_disc,
                 false,
                 false,
                 neg_disc_p.substitute(a4_zero),
                 display_neg_disc.substitute(a7_zero),
                 false,
                 display_q6,
                 false,
                 false};
  r.neg_disc_matches_display = neg_disc_p == display_neg_disc;
  r.neg_disc_matches_display_a7_as_a4 = neg_disc_p == display_neg_disc.substitute(a7_to_a4);
  r.alpha_only_matches = r.neg_disc_alpha_only == r.display_alpha_only;
  r.q6_matches_display = q6 == display_q6;
  r.q6_matches_display_a7_as_a4 = q6 == display_q6.substitute(a7_to_a4);
  return r;
}

}  // namespace qihou
