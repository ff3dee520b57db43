#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "qihou/formlab/certificates.hpp"
#include "qihou/formlab/identities.hpp"
#include "qihou/mapcore/psd.hpp"
#include "qihou/polycore/format.hpp"

using namespace qihou;

namespace {

std::vector<Rational> ones(std::size_t count) {
  return std::vector<Rational>(count, Rational(1));
}

Polynomial parse_xy(std::size_t n, const std::string& text) {
  return parse_polynomial(text, make_xy_registry(n));
}

}  // namespace

TEST_CASE("form construction matches hand expansions") {
  CHECK(qi_hou_form(2, 1).poly() == parse_xy(2, "x1^2*y2^2 - 2*x1*x2*y1*y2 + x2^2*y1^2"));
  CHECK(qi_hou_form(3, 1).poly() ==
        parse_xy(3,
                 "x1^2*y1^2 + x2^2*y2^2 + x3^2*y3^2 + x2^2*y1^2 + x3^2*y2^2 + x1^2*y3^2"
                 " - 2*x1*x2*y1*y2 - 2*x1*x3*y1*y3 - 2*x2*x3*y2*y3"));
  CHECK_THROWS_AS(qi_hou_form(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(qi_hou_form(4, 4), std::invalid_argument);
}

TEST_CASE("form evaluations") {
  CHECK(qi_hou_form(3, 1).poly().evaluate(
            {Rational(1), Rational(0), Rational(0), Rational(1), Rational(0), Rational(0)}) ==
        Rational(1));
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::size_t k = 1; k < n; ++k)
      CHECK(qi_hou_form(n, k).poly().evaluate(ones(2 * n)) == Rational());
}

TEST_CASE("closed form equals the map-derived form") {
  for (std::size_t n = 3; n <= 8; ++n)
    for (std::size_t k = 1; k < n; ++k)
      CHECK(qi_hou_form(n, k) == biquadratic_of_map(qi_hou_map(n, k)));
}

TEST_CASE("block terms and cross squares") {
  CHECK(block_term(4, 2, 1).poly() == parse_xy(4, "x1^2*y3^2 - 2*x1*x3*y1*y3 + x3^2*y1^2"));
  CHECK(cross_square(4, 1, 3).poly() == parse_xy(4, "x1^2*y1^2 - 2*x1*x3*y1*y3 + x3^2*y3^2"));
  CHECK_THROWS_AS(block_term(4, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(block_term(4, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(block_term(4, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(cross_square(4, 2, 2), std::invalid_argument);
}

TEST_CASE("residue class splitting") {
  for (auto [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{
           {4, 2}, {6, 2}, {6, 3}, {8, 2}, {8, 4}}) {
    IdentityCheck c = verify_identity(IdentityKind::eq10, n, k);
    CHECK(c.ok);
    CHECK(c.residual.is_zero());
  }
  CHECK_THROWS_AS(verify_identity(IdentityKind::eq10, 4, 3), std::invalid_argument);
}

TEST_CASE("block term renaming conventions") {
  for (std::size_t n = 3; n <= 8; ++n)
    for (std::size_t k = 1; k <= n / 2; ++k) {
      if (n % k != 0) continue;
      for (std::size_t d = 1; d <= k; ++d) {
        RenameResult r = rename_to_reduced(n, k, d);
        CHECK(r.matches_reduced);
        CHECK(r.matches_shift_on_x);
        CHECK(r.matches_shift_on_y == (n / k == 2));
        CHECK(verify_identity(IdentityKind::eq11, n, k, d).ok);
      }
    }
}

TEST_CASE("intertwining permutation") {
  CHECK(mu_permutation(4, 3).one_based_image() == std::vector<std::uint32_t>{1, 4, 3, 2});
  CHECK(mu_permutation(5, 2).one_based_image() == std::vector<std::uint32_t>{1, 3, 5, 2, 4});
  CHECK(mu_permutation(6, 2).is_identity());
  for (std::size_t n = 3; n <= 8; ++n)
    for (std::size_t q = 1; q < n; ++q) {
      std::size_t k = std::gcd(n, q);
      Permutation mu = mu_permutation(n, q);
      CHECK(mu.compose(Permutation::shift(n, k)) == Permutation::shift(n, q).compose(mu));
    }
}

TEST_CASE("permuting the gcd form gives the shifted form") {
  CHECK(permute_form(qi_hou_form(5, 1), mu_permutation(5, 2)) == qi_hou_form(5, 2));
  CHECK(permute_form(qi_hou_form(6, 2), mu_permutation(6, 4)) == qi_hou_form(6, 4));
  CHECK(permute_form(qi_hou_form(4, 1), Permutation::identity(4)) == qi_hou_form(4, 1));
  for (std::size_t n = 3; n <= 8; ++n)
    for (std::size_t q = 1; q < n; ++q)
      CHECK(permute_form(qi_hou_form(n, std::gcd(n, q)), mu_permutation(n, q)) ==
            qi_hou_form(n, q));
}

TEST_CASE("named special forms") {
  SpecialForms sf = special_forms();
  CHECK(sf.o.evaluate({Rational(1), Rational(1), Rational(1), Rational(1)}) == Rational());
  CHECK(sf.o_prime.evaluate({Rational(0), Rational(0), Rational(0), Rational(1)}) == Rational(1));
  CHECK(coefficient_in(sf.o, sf.xyzw->id("x"), 4) == parse_polynomial("z^2*w^2", sf.xyzw));
  CHECK(coefficient_in(sf.o, sf.xyzw->id("x"), 3) == Polynomial(sf.xyzw));
  CHECK(sign_symmetrize(sf.o, {sf.xyzw->id("y"), sf.xyzw->id("z"), sf.xyzw->id("w")}) == sf.o);
  CHECK(sf.q.total_degree() == 4);
  CHECK(coefficient_in(sf.q, sf.pqstuv->id("v"), 4).evaluate(
            {Rational(), Rational(), Rational(), Rational(), Rational(), Rational()}) ==
        Rational(1));
}

TEST_CASE("substitution identities") {
  for (IdentityKind kind : {IdentityKind::eq6, IdentityKind::eq7, IdentityKind::cyclic,
                            IdentityKind::lemma1_expansion, IdentityKind::q_special}) {
    IdentityCheck c = verify_identity(kind);
    CHECK(c.ok);
    CHECK(c.residual.is_zero());
  }
}

TEST_CASE("the octic divides its composed image") {
  SpecialForms sf = special_forms();
  VarId x = sf.xyzw->id("x"), y = sf.xyzw->id("y"), z = sf.xyzw->id("z"), w = sf.xyzw->id("w");
  std::map<VarId, Polynomial> repl{
      {x, parse_polynomial("x*z^2", sf.xyzw)},
      {y, parse_polynomial("x*y*w", sf.xyzw)},
      {z, parse_polynomial("z*w^2", sf.xyzw)},
      {w, parse_polynomial("x*z*w", sf.xyzw)}};
  Polynomial left = sf.o_prime.substitute(repl);
  auto quotient = left.exact_divide(sf.o);
  REQUIRE(quotient.has_value());
  CHECK(*quotient == parse_polynomial("x^4*z^6*w^6", sf.xyzw));
}

TEST_CASE("nonnegativity scan basics") {
  BiquadraticForm square(2, parse_xy(2, "x1^2*y2^2 - 2*x1*x2*y1*y2 + x2^2*y1^2"));
  ScanResult r = nonnegativity_scan(square, 200, 1e-9, 42);
  CHECK(r.min_found >= -1e-9);
  CHECK(r.all_nonneg_evidence);
  CHECK(r.restarts == 200);

  BiquadraticForm negative(2, parse_xy(2, "-x1^2*y1^2"));
  ScanResult neg = nonnegativity_scan(negative, 100, 1e-9, 42);
  CHECK(neg.min_found < -1e-9);
  CHECK_FALSE(neg.all_nonneg_evidence);

  BiquadraticForm family(4, qi_hou_form(4, 1).poly());
  ScanResult fam = nonnegativity_scan(family, 500, 1e-9, 7);
  CHECK(fam.min_found >= -1e-9);
  CHECK(fam.min_found <= 1e-9);
  CHECK(qi_hou_form(4, 1).poly().evaluate(ones(8)) == Rational());
}

TEST_CASE("scan reproducibility and validation") {
  BiquadraticForm b(3, qi_hou_form(3, 1).poly());
  ScanResult a = nonnegativity_scan(b, 150, 1e-9, 11);
  ScanResult c = nonnegativity_scan(b, 150, 1e-9, 11);
  CHECK(a.min_found == c.min_found);
  CHECK(a.argmin == c.argmin);

  auto reg = make_xy_registry(2);
  Polynomial p = parse_polynomial("x1^2*y1^2", reg);
  std::vector<VarId> xs{reg->id("x1"), reg->id("x2")};
  std::vector<VarId> ys{reg->id("y1"), reg->id("y2")};
  CHECK_THROWS_AS(nonnegativity_scan(p, {xs}, 10, 1e-9, 1), std::invalid_argument);
  CHECK_THROWS_AS(nonnegativity_scan(p, {xs, xs}, 10, 1e-9, 1), std::invalid_argument);
  CHECK_THROWS_AS(
      nonnegativity_scan(parse_polynomial("x1*y1 + x1^2*y1^2", reg), {xs, ys}, 10, 1e-9, 1),
      std::invalid_argument);
  CHECK_THROWS_AS(nonnegativity_scan(p, {xs, ys}, 0, 1e-9, 1), std::invalid_argument);
}

TEST_CASE("divisor splitting certificates") {
  DecompositionCertificate d42 = divisor_decomposition(4, 2);
  CHECK(d42.summands.size() == 6);
  d42.validate();
  DecompositionCertificate d62 = divisor_decomposition(6, 2);
  CHECK(d62.summands.size() == 11);
  DecompositionCertificate d63 = divisor_decomposition(6, 3);
  CHECK(d63.summands.size() == 15);
  CHECK_THROWS_AS(divisor_decomposition(5, 2), std::invalid_argument);
  CHECK_THROWS_AS(divisor_decomposition(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(divisor_decomposition(4, 4), std::invalid_argument);
}

TEST_CASE("non-extremality certificates") {
  NonExtremalityCertificate c = non_extremality_certificate(4, 2, 60, 1e-9, 3);
  c.validate();
  CHECK(c.decomposition.summands.size() == 6);
  std::size_t blocks = 0;
  for (const auto& s : c.decomposition.summands) {
    REQUIRE(s.evidence.has_value());
    CHECK(s.evidence->all_nonneg_evidence);
    if (s.kind == SummandKind::block_term) ++blocks;
  }
  CHECK(blocks == 2);

  for (std::size_t i = 0; i < c.summand_maps.size(); ++i) {
    MapClassification cls = classify_map(c.summand_maps[i]);
    if (c.decomposition.summands[i].kind == SummandKind::cross_square)
      CHECK(cls.completely_positive);
    else
      CHECK(cls.completely_copositive);
  }

  NonExtremalityCertificate c63 = non_extremality_certificate(6, 3, 40, 1e-9, 5);
  c63.validate();
  CHECK(c63.decomposition.summands.size() == 15);
  CHECK(c63.target_map == qi_hou_map(6, 3));

  NonExtremalityCertificate c64 = non_extremality_certificate(6, 4, 40, 1e-9, 5);
  c64.validate();
  REQUIRE(c64.decomposition.mu.has_value());
  CHECK(c64.decomposition.target == qi_hou_form(6, 4));

  CHECK_THROWS_WITH_AS(non_extremality_certificate(5, 2), doctest::Contains("gcd"),
                       std::invalid_argument);
}

TEST_CASE("decomposability certificates") {
  for (std::size_t n : {4ul, 6ul}) {
    DecomposabilityCertificate c = decomposability_certificate(n);
    c.validate();
    CHECK(c.p_verdict.psd);
    CHECK(c.q_verdict.psd);
    auto [choi, witness] = choi_and_witness(qi_hou_map(n, n / 2));
    CHECK(c.p + partial_transpose(c.q) == witness);
  }
  CHECK_THROWS_AS(decomposability_certificate(3), std::invalid_argument);
  CHECK_THROWS_AS(decomposability_certificate(5), std::invalid_argument);
}
