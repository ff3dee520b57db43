#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "qihou/formlab/biquadratic.hpp"
#include "qihou/mapcore/block_matrix.hpp"
#include "qihou/mapcore/linear_map.hpp"
#include "qihou/mapcore/permutation.hpp"
#include "qihou/mapcore/psd.hpp"
#include "qihou/polycore/format.hpp"
#include "qihou/util/rng.hpp"

using namespace qihou;

namespace {

RatMatrix diag(std::vector<Rational> d) {
  RatMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

Rational random_rational(Rng& rng) {
  return Rational(static_cast<long>(rng.bits() % 7) - 3, static_cast<long>(rng.bits() % 3) + 1);
}

RatMatrix random_symmetric(Rng& rng, std::size_t n) {
  RatMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.at(i, j) = m.at(j, i) = random_rational(rng);
  return m;
}

Rational det2(const RatMatrix& m, std::size_t a, std::size_t b) {
  return m.at(a, a) * m.at(b, b) - m.at(a, b) * m.at(b, a);
}

// A real symmetric matrix is psd exactly when every elementary symmetric
// function of its eigenvalues (equivalently, every sum of principal minors
// of one size) is nonnegative.
bool psd_by_char_poly(const RatMatrix& m) {
  const std::size_t n = m.dim();
  Rational zero;
  if (n == 2) return m.trace() >= zero && det2(m, 0, 1) >= zero;
  REQUIRE(n == 3);
  Rational e2 = det2(m, 0, 1) + det2(m, 0, 2) + det2(m, 1, 2);
  Rational e3 = m.at(0, 0) * det2(m, 1, 2) -
                m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
                m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
  return m.trace() >= zero && e2 >= zero && e3 >= zero;
}

BiquadraticForm parse_form(std::size_t n, const std::string& text) {
  return BiquadraticForm(n, parse_polynomial(text, make_xy_registry(n)));
}

}  // namespace

TEST_CASE("shift permutations") {
  CHECK(Permutation::shift(4, 1).one_based_image() == std::vector<std::uint32_t>{2, 3, 4, 1});
  CHECK(Permutation::shift(5, 2).one_based_image() == std::vector<std::uint32_t>{3, 4, 5, 1, 2});
  CHECK(Permutation::shift(5, 2) == Permutation::shift(5, 1).compose(Permutation::shift(5, 1)));
  CHECK(Permutation::shift(6, 2).inverse() == Permutation::shift(6, 4));
  CHECK(Permutation::identity(3).is_identity());
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_one_based({1, 3}), std::invalid_argument);
}

TEST_CASE("rational matrix basics") {
  RatMatrix i3 = RatMatrix::identity(3);
  CHECK(i3.trace() == Rational(3));
  CHECK(i3.is_symmetric());
  RatMatrix e = RatMatrix::unit(3, 0, 2);
  CHECK_FALSE(e.is_symmetric());
  CHECK(e.transpose() == RatMatrix::unit(3, 2, 0));
  CHECK((e + e.transpose()).is_symmetric());
  CHECK(e.scale(Rational(2)).at(0, 2) == Rational(2));
  CHECK((-e).at(0, 2) == Rational(-1));
  CHECK(RatMatrix(2).is_zero());
  CHECK_THROWS_AS(i3.at(3, 0), std::out_of_range);
  RatMatrix s = diag({Rational(2), Rational(-5)});
  CHECK(s.quadratic_form({Rational(1), Rational(1)}) == Rational(-3));
}

TEST_CASE("map construction on the diagonal replacement family") {
  LinearMap m31 = qi_hou_map(3, 1);
  CHECK(apply_map(m31, RatMatrix::unit(3, 0, 0)) == diag({Rational(1), Rational(0), Rational(1)}));
  CHECK(apply_map(m31, RatMatrix::identity(3)) == RatMatrix::identity(3).scale(Rational(2)));
  LinearMap m42 = qi_hou_map(4, 2);
  CHECK(apply_map(m42, RatMatrix::unit(4, 2, 2)) ==
        diag({Rational(1), Rational(0), Rational(2), Rational(0)}));
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::size_t k = 1; k < n; ++k)
      CHECK(apply_map(qi_hou_map(n, k), RatMatrix::identity(n)) ==
            RatMatrix::identity(n).scale(Rational(static_cast<long>(n) - 1)));
  CHECK(apply_map(m31, RatMatrix(3)).is_zero());
  CHECK_THROWS_AS(qi_hou_map(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(qi_hou_map(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(qi_hou_map(4, 4), std::invalid_argument);
}

TEST_CASE("off-diagonal blocks are negated units") {
  LinearMap m = qi_hou_map(4, 1);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) CHECK(m.block(i, j) == -RatMatrix::unit(4, i, j));
}

TEST_CASE("worked example map from a single square") {
  LinearMap m = map_from_biquadratic(parse_form(3, "x1^2*y3^2 - 2*x1*y1*x3*y3 + x3^2*y1^2"));
  CHECK(apply_map(m, RatMatrix::unit(3, 0, 0)) == RatMatrix::unit(3, 2, 2));
  CHECK(apply_map(m, RatMatrix::unit(3, 2, 2)) == RatMatrix::unit(3, 0, 0));
  CHECK(apply_map(m, RatMatrix::unit(3, 0, 2)) == -RatMatrix::unit(3, 0, 2));
  MapClassification c = classify_map(m);
  CHECK_FALSE(c.completely_positive);
  CHECK(c.completely_copositive);
}

TEST_CASE("choi assembly and witness scaling") {
  LinearMap id2 = LinearMap::identity(2);
  auto [c2, w2] = choi_and_witness(id2);
  RatMatrix expected(4);
  expected.at(0, 0) = expected.at(0, 3) = expected.at(3, 0) = expected.at(3, 3) = Rational(1);
  CHECK(c2.full() == expected);
  CHECK(w2.full() == expected.scale(Rational(1, 2)));

  auto [c31, w31] = choi_and_witness(qi_hou_map(3, 1));
  CHECK(c31.block(0, 0) == diag({Rational(1), Rational(0), Rational(1)}));
  CHECK(c31.block(1, 1) == diag({Rational(1), Rational(1), Rational(0)}));
  CHECK(c31.block(2, 2) == diag({Rational(0), Rational(1), Rational(1)}));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) CHECK(c31.block(i, j) == -RatMatrix::unit(3, i, j));
  for (std::size_t r = 0; r < 9; ++r)
    for (std::size_t c = 0; c < 9; ++c)
      CHECK(w31.at(r, c) == c31.at(r, c) * Rational(1, 3));
}

TEST_CASE("trace of the choi matrix") {
  for (std::size_t n = 3; n <= 8; ++n)
    for (std::size_t k = 1; k < n; ++k) {
      auto [c, w] = choi_and_witness(qi_hou_map(n, k));
      CHECK(c.full().trace() == Rational(static_cast<long>(n * (n - 1))));
    }
}

TEST_CASE("partial transpose") {
  LinearMap id2 = LinearMap::identity(2);
  auto [c2, w2] = choi_and_witness(id2);
  BlockMatrix swapped = partial_transpose(c2);
  RatMatrix expected(4);
  expected.at(0, 0) = expected.at(3, 3) = expected.at(1, 2) = expected.at(2, 1) = Rational(1);
  CHECK(swapped.full() == expected);

  Rng rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    BlockMatrix b(3);
    for (std::size_t r = 0; r < 9; ++r)
      for (std::size_t c = 0; c < 9; ++c) b.at(r, c) = random_rational(rng);
    CHECK(partial_transpose(partial_transpose(b)) == b);
  }

  BlockMatrix d(2);
  d.set_block(0, 0, diag({Rational(1), Rational(2)}));
  d.set_block(1, 1, diag({Rational(3), Rational(4)}));
  CHECK(partial_transpose(d) == d);
}

TEST_CASE("exact psd verdicts on fixed matrices") {
  CHECK(is_psd_exact(RatMatrix::identity(3)).psd);

  PsdVerdict bad = is_psd_exact(diag({Rational(1), Rational(-1)}));
  CHECK_FALSE(bad.psd);
  CHECK(bad.witness == std::vector<Rational>{Rational(0), Rational(1)});
  CHECK(bad.witness_value == Rational(-1));

  RatMatrix m(2);
  m.at(0, 0) = m.at(1, 1) = Rational(2);
  m.at(0, 1) = m.at(1, 0) = Rational(-1);
  PsdVerdict good = is_psd_exact(m);
  CHECK(good.psd);
  CHECK(good.pivots == std::vector<Rational>{Rational(2), Rational(3, 2)});

  CHECK(is_psd_exact(RatMatrix(3)).psd);
  CHECK_THROWS_AS(is_psd_exact(RatMatrix::unit(2, 0, 1)), std::invalid_argument);
}

TEST_CASE("psd verdicts agree with the characteristic polynomial oracle") {
  Rng rng(1234);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = 2 + trial % 2;
    RatMatrix m = random_symmetric(rng, n);
    PsdVerdict v = is_psd_exact(m);
    CHECK(v.psd == psd_by_char_poly(m));
    if (!v.psd) {
      CHECK(m.quadratic_form(v.witness) == v.witness_value);
      CHECK(v.witness_value.sign() < 0);
    } else {
      for (const auto& piv : v.pivots) CHECK(piv.sign() > 0);
    }
  }
}

TEST_CASE("classification of the family and the identity") {
  MapClassification idc = classify_map(LinearMap::identity(3));
  CHECK(idc.completely_positive);

  MapClassification qc = classify_map(qi_hou_map(4, 1));
  CHECK_FALSE(qc.completely_positive);
  CHECK_FALSE(qc.completely_copositive);
  auto [c, w] = choi_and_witness(qi_hou_map(4, 1));
  CHECK(c.full().quadratic_form(qc.cp_verdict.witness) == qc.cp_verdict.witness_value);
  CHECK(qc.cp_verdict.witness_value.sign() < 0);
  CHECK(partial_transpose(c).full().quadratic_form(qc.ccp_verdict.witness) ==
        qc.ccp_verdict.witness_value);
  CHECK(qc.ccp_verdict.witness_value.sign() < 0);
}

TEST_CASE("hermiticity preservation is enforced") {
  LinearMap m(2);
  CHECK(m.is_hermiticity_preserving());
  std::vector<std::vector<RatMatrix>> blocks{
      {RatMatrix(2), RatMatrix::unit(2, 0, 1)},
      {RatMatrix::unit(2, 0, 1), RatMatrix(2)}};
  CHECK_THROWS_AS(LinearMap(2, blocks), std::invalid_argument);
  blocks[1][0] = RatMatrix::unit(2, 1, 0);
  CHECK(LinearMap(2, blocks).is_hermiticity_preserving());
}

TEST_CASE("map and form round trips") {
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::size_t k = 1; k < n; ++k) {
      LinearMap m = qi_hou_map(n, k);
      CHECK(map_from_biquadratic(biquadratic_of_map(m)) == m);
    }

  Rng rng(777);
  auto xy = make_xy_registry(3);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial poly(xy);
    for (int t = 0; t < 6; ++t) {
      std::uint32_t xi = static_cast<std::uint32_t>(rng.bits() % 3);
      std::uint32_t xj = static_cast<std::uint32_t>(rng.bits() % 3);
      std::uint32_t yk = static_cast<std::uint32_t>(rng.bits() % 3);
      std::uint32_t yl = static_cast<std::uint32_t>(rng.bits() % 3);
      Monomial m = Monomial::variable(VarId{xi}) * Monomial::variable(VarId{xj}) *
                   Monomial::variable(VarId{3 + yk}) * Monomial::variable(VarId{3 + yl});
      poly = poly + Polynomial::monomial(xy, m, random_rational(rng));
    }
    BiquadraticForm b(3, poly);
    LinearMap m1 = map_from_biquadratic(b);
    CHECK(biquadratic_of_map(m1) == b);
    CHECK(map_from_biquadratic(biquadratic_of_map(m1)) == m1);
  }
}
