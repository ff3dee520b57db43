#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "qihou/formlab/forms.hpp"
#include "qihou/spanscan/spanscan.hpp"

using namespace qihou;

namespace {

BlockMatrix witness_of(std::size_t n, std::size_t k) {
  return choi_and_witness(qi_hou_map(n, k)).second;
}

ProductVector basis_pair(std::size_t n, std::size_t i, std::size_t j) {
  ProductVector v{Eigen::VectorXcd::Zero(n), Eigen::VectorXcd::Zero(n)};
  v.xi(i) = 1.0;
  v.eta(j) = 1.0;
  return v;
}

}  // namespace

TEST_CASE("product expectation agrees with the exact form") {
  const std::size_t n = 3;
  BlockMatrix w = witness_of(n, 1);
  BiquadraticForm b = qi_hou_form(n, 1);
  std::mt19937_64 gen(9);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Rational> pt(2 * n);
    ProductVector v{Eigen::VectorXcd(n), Eigen::VectorXcd(n)};
    for (std::size_t i = 0; i < n; ++i) {
      Rational xr(num(gen), den(gen));
      Rational yr(num(gen), den(gen));
      pt[i] = xr;
      pt[n + i] = yr;
      v.xi(i) = xr.to_double();
      v.eta(i) = yr.to_double();
    }
    double exact = (b.poly().evaluate(pt) / Rational(static_cast<long>(n))).to_double();
    CHECK(std::abs(product_expectation(w, v) - exact) <= 1e-12 * (1.0 + std::abs(exact)));
  }
}

TEST_CASE("expectation landmarks and phase invariance") {
  const std::size_t n = 3;
  BlockMatrix w = witness_of(n, 1);
  CHECK(product_expectation(w, basis_pair(n, 0, 0)) == doctest::Approx(1.0 / 3.0));

  ProductVector ones{Eigen::VectorXcd::Constant(n, 1.0 / std::sqrt(3.0)),
                     Eigen::VectorXcd::Constant(n, 1.0 / std::sqrt(3.0))};
  CHECK(std::abs(product_expectation(w, ones)) <= 1e-12);

  ProductVector rotated = ones;
  rotated.xi *= std::polar(1.0, 0.7);
  rotated.eta *= std::polar(1.0, -1.9);
  CHECK(std::abs(product_expectation(w, rotated) - product_expectation(w, ones)) <= 1e-12);

  ProductVector wrong{Eigen::VectorXcd::Ones(2), Eigen::VectorXcd::Ones(3)};
  CHECK_THROWS_AS(product_expectation(w, wrong), std::invalid_argument);
}

TEST_CASE("witness fingerprints separate witnesses") {
  BlockMatrix w31 = witness_of(3, 1);
  CHECK(witness_fingerprint(w31) == witness_fingerprint(w31));
  CHECK(witness_fingerprint(w31) != witness_fingerprint(witness_of(3, 2)));
  CHECK(witness_fingerprint(w31) != witness_fingerprint(partial_transpose(w31)));
  CHECK(witness_fingerprint(w31) != witness_fingerprint(w31.scale(Rational(3))));
}

TEST_CASE("seesaw never dips below a psd target") {
  const std::size_t n = 3;
  BlockMatrix id(n);
  for (std::size_t r = 0; r < n * n; ++r) id.at(r, r) = Rational(1);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto [v, value] = seesaw_minimize(id, seed);
    CHECK(value == doctest::Approx(1.0));
    CHECK(v.xi.norm() == doctest::Approx(1.0));
    CHECK(v.eta.norm() == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(seesaw_minimize(id, 1, 0), std::invalid_argument);
}

TEST_CASE("seesaw reaches the zero set of the witness") {
  BlockMatrix w = witness_of(4, 1);
  ZeroSet z = collect_zero_set(w, 100, 1e-9, 1);
  CHECK(z.total_found > 0);
  CHECK(z.tol == 1e-9);
  CHECK(z.witness_fingerprint == witness_fingerprint(w));
  REQUIRE(!z.vectors.empty());
  for (std::size_t i = 0; i < z.vectors.size(); ++i) {
    CHECK(std::abs(z.expectations[i]) <= 1e-9);
    CHECK(std::abs(product_expectation(w, z.vectors[i]) - z.expectations[i]) <= 1e-12);
    CHECK(z.vectors[i].xi.norm() == doctest::Approx(1.0));
    CHECK(z.vectors[i].eta.norm() == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(collect_zero_set(w, 0, 1e-9, 1), std::invalid_argument);
}

TEST_CASE("a positive definite target has an empty zero set") {
  const std::size_t n = 3;
  BlockMatrix id(n);
  for (std::size_t r = 0; r < n * n; ++r) id.at(r, r) = Rational(1);
  ZeroSet z = collect_zero_set(id, 50, 1e-9, 1);
  CHECK(z.total_found == 0);
  CHECK(z.vectors.empty());
}

TEST_CASE("zero set collection is deterministic across thread counts") {
  BlockMatrix w = witness_of(3, 1);
  setenv("QIHOU_THREADS", "1", 1);
  ZeroSet a = collect_zero_set(w, 60, 1e-9, 17);
  setenv("QIHOU_THREADS", "4", 1);
  ZeroSet b = collect_zero_set(w, 60, 1e-9, 17);
  unsetenv("QIHOU_THREADS");

  CHECK(a.total_found == b.total_found);
  REQUIRE(a.vectors.size() == b.vectors.size());
  CHECK(a.expectations == b.expectations);
  for (std::size_t i = 0; i < a.vectors.size(); ++i) {
    CHECK((a.vectors[i].xi - b.vectors[i].xi).norm() == 0.0);
    CHECK((a.vectors[i].eta - b.vectors[i].eta).norm() == 0.0);
  }
}

TEST_CASE("span report separates the witness from its block transpose") {
  BlockMatrix w = witness_of(4, 1);
  SpanReport direct = span_report(w, 400, 1e-9, 1e-6, 1, false);
  CHECK(direct.n == 4);
  CHECK(direct.rank < 16);
  CHECK_FALSE(direct.has_spanning);
  CHECK(direct.singular_values.size() == std::min<std::size_t>(direct.zeros.vectors.size(), 16));

  SpanReport flipped = span_report(w, 1500, 1e-9, 1e-6, 1, true);
  CHECK(flipped.used_partial_transpose);
  CHECK(flipped.zeros.witness_fingerprint == witness_fingerprint(partial_transpose(w)));
  CHECK(flipped.rank == 16);
  CHECK(flipped.has_spanning);
}

TEST_CASE("rank never drops when restarts grow") {
  BlockMatrix w = witness_of(3, 1);
  SpanReport small = span_report(w, 40, 1e-9, 1e-6, 1, false);
  SpanReport large = span_report(w, 160, 1e-9, 1e-6, 1, false);
  CHECK(small.restarts == 40);
  CHECK(large.zeros.total_found >= small.zeros.total_found);
  CHECK(large.rank >= small.rank);
}
