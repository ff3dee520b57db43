#include "qihou/formlab/identities.hpp"

#include <map>
#include <stdexcept>

namespace qihou {

namespace {

IdentityCheck check_eq6() {
  SpecialForms sf = special_forms();
  auto var = [&](const char* name) { return Polynomial::variable(sf.xyzw, sf.xyzw->id(name)); };
  Polynomial x = var("x"), y = var("y"), z = var("z"), w = var("w");
  std::map<VarId, Polynomial> sub = {
      {sf.xyzw->id("x"), x * z.pow(2)},
      {sf.xyzw->id("y"), x * y * w},
      {sf.xyzw->id("z"), z * w.pow(2)},
      {sf.xyzw->id("w"), x * z * w},
  };
  Polynomial lhs = sf.o_prime.substitute(sub);
  Polynomial rhs = x.pow(4) * z.pow(6) * w.pow(6) * sf.o;
  IdentityCheck r{false, lhs - rhs,
                  "octic composed with (xz^2, xyw, zw^2, xzw) against x^4 z^6 w^6 times o"};
  r.ok = r.residual.is_zero();
  return r;
}

IdentityCheck check_eq7() {
  SpecialForms sf = special_forms();
  auto var = [&](const char* name) { return Polynomial::variable(sf.xyzw, sf.xyzw->id(name)); };
  Polynomial x = var("x"), y = var("y"), z = var("z"), w = var("w");
  std::map<VarId, Polynomial> sub = {
      {sf.pqstuv->id("p"), z * w.pow(3)},  {sf.pqstuv->id("q"), x * y * w.pow(2)},
      {sf.pqstuv->id("s"), y * z * w.pow(2)}, {sf.pqstuv->id("t"), x * w.pow(3)},
      {sf.pqstuv->id("u"), x * y * z * w}, {sf.pqstuv->id("v"), w.pow(4)},
  };
  Polynomial lhs = sf.q.substitute(sub, sf.xyzw);
  Polynomial rhs = w.pow(8) * sf.o_prime;
  IdentityCheck r{false, lhs - rhs,
                  "quartic composed with (zw^3, xyw^2, yzw^2, xw^3, xyzw, w^4) against w^8 "
                  "times o_prime"};
  r.ok = r.residual.is_zero();
  return r;
}

IdentityCheck check_eq10(std::size_t n, std::size_t k) {
  if (k < 1 || n % k != 0 || n / k < 2)
    throw std::invalid_argument("verify_identity: eq10 needs k | n with n/k >= 2");
  Polynomial sum = Polynomial(make_xy_registry(n));
  for (std::size_t d = 1; d <= k; ++d) sum = sum + block_term(n, k, d).poly();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (i % k != j % k) sum = sum + cross_square(n, i, j).poly();
  IdentityCheck r{false, qi_hou_form(n, k).poly() - sum,
                  "form split into residue-class terms plus cross squares"};
  r.ok = r.residual.is_zero();
  return r;
}

IdentityCheck check_eq11(std::size_t n, std::size_t k, std::size_t d) {
  RenameResult rr = rename_to_reduced(n, k, d);
  IdentityCheck r{false, rr.renamed.poly() - qi_hou_form(n / k, 1).poly(),
                  "renamed block term against the reduced form (shift on the x index)"};
  r.ok = r.residual.is_zero();
  return r;
}

IdentityCheck check_cyclic() {
  BiquadraticForm b41 = qi_hou_form(4, 1);
  Permutation cyc = Permutation::shift(4, 1);
  Polynomial inv_residual = permute_form(b41, cyc).poly() - b41.poly();
  IdentityCheck r{false, inv_residual, "invariance of the (4,1) form under the cyclic shift"};
  if (!inv_residual.is_zero()) return r;

  SpecialForms sf = special_forms();
  auto var = [&](const char* name) { return Polynomial::variable(sf.pqstuv, sf.pqstuv->id(name)); };
  Polynomial p = var("p"), q = var("q"), s = var("s"), t = var("t"), u = var("u"), v = var("v");
  const Polynomial subs[4][8] = {
      {p, s, u, v, q, t, v, u},
      {s, u, v, p, t, v, u, q},
      {u, v, p, s, v, u, q, t},
      {v, p, s, u, u, q, t, v},
  };
  for (const auto& row : subs) {
    std::map<VarId, Polynomial> sub;
    for (std::uint32_t i = 0; i < 8; ++i) sub.emplace(VarId{i}, row[i]);
    Polynomial value = b41.poly().substitute(sub, sf.pqstuv);
    r.residual = value - sf.q;
    if (!r.residual.is_zero()) {
      r.description = "rotated substitution against the senary quartic";
      return r;
    }
  }
  r.ok = true;
  r.description = "cyclic invariance and all four rotated substitutions";
  return r;
}

IdentityCheck check_lemma1() {
  SpecialForms sf = special_forms();
  auto var = [&](const char* name) { return Polynomial::variable(sf.xyzw, sf.xyzw->id(name)); };
  Polynomial y = var("y"), z = var("z"), w = var("w");
  Polynomial one = Polynomial::constant(sf.xyzw, Rational(1));
  std::map<VarId, Polynomial> sub = {{sf.xyzw->id("x"), y.pow(2)}};
  Polynomial lhs = sf.o.substitute(sub);
  Polynomial rhs = (one + z.pow(2)) * w.pow(2) * y.pow(8) +
                   (z.pow(2) - w.pow(2).scale(Rational(4))) * z.pow(2) * y.pow(6) +
                   y.pow(2) * z.pow(2) * w.pow(4);
  IdentityCheck r{false, lhs - rhs, "octic at (y^2, y, z, w) against its expansion by powers of y"};
  r.ok = r.residual.is_zero();
  return r;
}

IdentityCheck check_q_special() {
  SpecialForms sf = special_forms();
  auto st = VarRegistry::make({"s", "t"});
  Polynomial s = Polynomial::variable(st, st->id("s"));
  Polynomial t = Polynomial::variable(st, st->id("t"));
  Polynomial target = (s.pow(2) - t.pow(2)).pow(2).scale(Rational(2));
  const Polynomial rows[2][6] = {
      {s, t, t, s, s, t},
      {t, s, s, t, t, s},
  };
  IdentityCheck r{false, Polynomial(st), "quartic pinned to two variables against 2(s^2 - t^2)^2"};
  for (const auto& row : rows) {
    std::map<VarId, Polynomial> sub;
    for (std::uint32_t i = 0; i < 6; ++i) sub.emplace(VarId{i}, row[i]);
    r.residual = sf.q.substitute(sub, st) - target;
    if (!r.residual.is_zero()) return r;
  }
  r.ok = true;
  return r;
}

}  // namespace

IdentityCheck verify_identity(IdentityKind kind, std::size_t n, std::size_t k, std::size_t d) {
  switch (kind) {
    case IdentityKind::eq6:
      return check_eq6();
    case IdentityKind::eq7:
      return check_eq7();
    case IdentityKind::eq10:
      return check_eq10(n, k);
    case IdentityKind::eq11:
      return check_eq11(n, k, d);
    case IdentityKind::cyclic:
      return check_cyclic();
    case IdentityKind::lemma1_expansion:
      return check_lemma1();
    case IdentityKind::q_special:
      return check_q_special();
  }
  throw std::invalid_argument("verify_identity: unknown identity kind");
}

}  // namespace qihou
