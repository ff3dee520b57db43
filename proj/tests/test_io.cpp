#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "qihou/io/json_io.hpp"
#include "qihou/polycore/format.hpp"

using namespace qihou;
using nlohmann::json;

TEST_CASE("rational matrix round trip") {
  RatMatrix m(2);
  m.at(0, 0) = Rational(1, 3);
  m.at(0, 1) = Rational(-2);
  m.at(1, 0) = Rational(-2);
  m.at(1, 1) = Rational(7, 5);
  json j = to_json(m);
  CHECK(j.at("schema") == "qihou/rat-matrix/v1");
  CHECK(j.at("dim") == 2);
  CHECK(j.at("entries").at(0) == "1/3");
  CHECK(j.at("entries").at(1) == "-2");
  RatMatrix back = rat_matrix_from_json(j);
  CHECK(back == m);
  CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("block matrix and linear map round trips") {
  auto [choi, witness] = choi_and_witness(qi_hou_map(3, 1));
  CHECK(block_matrix_from_json(to_json(choi)) == choi);
  CHECK(block_matrix_from_json(to_json(witness)) == witness);

  LinearMap m = qi_hou_map(4, 2);
  json j = to_json(m);
  CHECK(j.at("schema") == "qihou/linear-map/v1");
  CHECK(j.at("n") == 4);
  REQUIRE(j.at("blocks").size() == 4);
  REQUIRE(j.at("blocks").at(0).size() == 4);
  CHECK(j.at("blocks").at(0).at(1).at("schema") == "qihou/rat-matrix/v1");
  CHECK(linear_map_from_json(j) == m);
}

TEST_CASE("polynomial round trip") {
  Polynomial p = qi_hou_form(3, 2).poly();
  json j = to_json(p);
  CHECK(j.at("schema") == "qihou/polynomial/v1");
  CHECK(j.at("variables") == std::vector<std::string>{"x1", "x2", "x3", "y1", "y2", "y3"});
  CHECK(polynomial_from_json(j) == p);

  Polynomial zero(p.registry());
  CHECK(polynomial_from_json(to_json(zero)) == zero);
}

TEST_CASE("verdict and scan round trips") {
  auto [choi, witness] = choi_and_witness(qi_hou_map(3, 1));
  PsdVerdict v = is_psd_exact(choi.full());
  json j = to_json(v);
  PsdVerdict back = psd_verdict_from_json(j);
  CHECK(back.psd == v.psd);
  CHECK(back.pivot_order == v.pivot_order);
  CHECK(back.pivots == v.pivots);
  CHECK(to_json(back).dump() == j.dump());

  ScanResult s = nonnegativity_scan(qi_hou_form(3, 1), 50, 1e-9, 5);
  ScanResult s2 = scan_result_from_json(to_json(s));
  CHECK(s2.min_found == s.min_found);
  CHECK(s2.argmin == s.argmin);
  CHECK(s2.seed == s.seed);
  CHECK(to_json(s2).dump() == to_json(s).dump());
}

TEST_CASE("certificate round trips survive validation") {
  DecompositionCertificate dec = divisor_decomposition(6, 2);
  json jd = to_json(dec);
  DecompositionCertificate dec2 = decomposition_certificate_from_json(jd);
  dec2.validate();
  CHECK(to_json(dec2).dump() == jd.dump());
  ValidationResult vr = validate_certificate_json(jd);
  CHECK(vr.ok);
  CHECK(vr.schema == "qihou/decomposition-certificate/v1");

  NonExtremalityCertificate ne = non_extremality_certificate(4, 2, 40, 1e-9, 2);
  json jn = to_json(ne);
  NonExtremalityCertificate ne2 = non_extremality_certificate_from_json(jn);
  ne2.validate();
  CHECK(to_json(ne2).dump() == jn.dump());
  CHECK(validate_certificate_json(jn).ok);

  DecomposabilityCertificate dc = decomposability_certificate(4);
  json jc = to_json(dc);
  DecomposabilityCertificate dc2 = decomposability_certificate_from_json(jc);
  dc2.validate();
  CHECK(to_json(dc2).dump() == jc.dump());
  CHECK(validate_certificate_json(jc).ok);
}

TEST_CASE("tampered certificates are rejected semantically") {
  json jd = to_json(divisor_decomposition(4, 2));
  jd["summands"][0]["form"]["text"] = "x1^2*y1^2";
  ValidationResult broken_sum = validate_certificate_json(jd);
  CHECK_FALSE(broken_sum.ok);
  CHECK(broken_sum.detail.find("sum") != std::string::npos);

  json jq = to_json(divisor_decomposition(4, 2));
  jq["q"] = 3;
  CHECK_FALSE(validate_certificate_json(jq).ok);

  json jn = to_json(non_extremality_certificate(4, 2, 40, 1e-9, 2));
  json first = jn["summand_maps"][0];
  jn["summand_maps"][0] = jn["summand_maps"][1];
  jn["summand_maps"][1] = first;
  CHECK_FALSE(validate_certificate_json(jn).ok);

  json jn2 = to_json(non_extremality_certificate(4, 2, 40, 1e-9, 2));
  jn2["decomposition"]["summands"][0]["evidence"] = nullptr;
  CHECK_FALSE(validate_certificate_json(jn2).ok);

  json jc = to_json(decomposability_certificate(4));
  jc["p"]["entries"][0] = "-5";
  CHECK_FALSE(validate_certificate_json(jc).ok);
}

TEST_CASE("malformed documents throw instead of failing softly") {
  CHECK_THROWS_AS(validate_certificate_json(json::array()), std::invalid_argument);
  CHECK_THROWS_AS(validate_certificate_json(json{{"schema", 7}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_certificate_json(json{{"schema", "qihou/polynomial/v1"}}),
                  std::invalid_argument);

  json jd = to_json(divisor_decomposition(4, 2));
  jd.erase("summands");
  CHECK_THROWS_AS(validate_certificate_json(jd), std::invalid_argument);

  json jm = to_json(qi_hou_map(3, 1));
  jm["blocks"][0].erase(0);
  CHECK_THROWS_AS(linear_map_from_json(jm), std::invalid_argument);
  CHECK_THROWS_AS(rat_matrix_from_json(jm), std::invalid_argument);

  json jp = to_json(qi_hou_form(3, 1).poly());
  jp["text"] = "x1 +";
  CHECK_THROWS_AS(polynomial_from_json(jp), std::invalid_argument);
}

TEST_CASE("identity and replay reports serialize with their schemas") {
  json j = to_json(verify_identity(IdentityKind::eq6));
  CHECK(j.at("schema") == "qihou/identity-check/v1");
  CHECK(j.at("ok") == true);
  CHECK(j.at("residual").at("text") == "0");

  json r = to_json(proof_replay_q41());
  CHECK(r.at("schema") == "qihou/replay-report/v1");
  CHECK(r.at("q_degree") == 6);
  CHECK(r.at("neg_disc_matches_display_a7_as_a4") == true);
}

TEST_CASE("span reports flag a missing spanning set as sampling evidence") {
  auto [choi, witness] = choi_and_witness(qi_hou_map(3, 1));
  SpanReport r = span_report(witness, 30, 1e-9, 1e-6, 1, false);
  json j = to_json(r);
  CHECK(j.at("schema") == "qihou/span-report/v1");
  CHECK(j.at("zeros").at("witness_fingerprint") == witness_fingerprint(witness));
  if (!r.has_spanning) {
    REQUIRE(j.contains("note"));
    std::string note = j.at("note").get<std::string>();
    CHECK(note.find("sampling evidence") != std::string::npos);
    CHECK(note.find("not a proof") != std::string::npos);
  }
}
