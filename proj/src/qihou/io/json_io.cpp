#include "qihou/io/json_io.hpp"

#include <stdexcept>
#include <utility>

#include "qihou/polycore/format.hpp"

namespace qihou {

using nlohmann::json;

namespace {

constexpr const char* kRatMatrix = "qihou/rat-matrix/v1";
constexpr const char* kBlockMatrix = "qihou/block-matrix/v1";
constexpr const char* kLinearMap = "qihou/linear-map/v1";
constexpr const char* kPolynomial = "qihou/polynomial/v1";
constexpr const char* kPsdVerdict = "qihou/psd-verdict/v1";
constexpr const char* kMapClassification = "qihou/map-classification/v1";
constexpr const char* kScanResult = "qihou/scan-result/v1";
constexpr const char* kDecomposition = "qihou/decomposition-certificate/v1";
constexpr const char* kNonExtremality = "qihou/non-extremality-certificate/v1";
constexpr const char* kDecomposability = "qihou/decomposability-certificate/v1";
constexpr const char* kIdentityCheck = "qihou/identity-check/v1";
constexpr const char* kReplayReport = "qihou/replay-report/v1";
constexpr const char* kSpanReport = "qihou/span-report/v1";

void require_schema(const json& j, const char* schema) {
  if (!j.is_object() || !j.contains("schema") || !j.at("schema").is_string() ||
      j.at("schema").get<std::string>() != schema)
    throw std::invalid_argument(std::string("expected a document with schema ") + schema);
}

template <typename F>
auto decoded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string(what) + ": malformed document: " + e.what());
  }
}

json rationals_to_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(r.to_string());
  return a;
}

std::vector<Rational> rationals_from_json(const json& a) {
  std::vector<Rational> v;
  v.reserve(a.size());
  for (const auto& s : a) v.push_back(Rational::from_string(s.get<std::string>()));
  return v;
}

const char* summand_kind_name(SummandKind k) {
  return k == SummandKind::block_term ? "block_term" : "cross_square";
}

SummandKind summand_kind_from_name(const std::string& s) {
  if (s == "block_term") return SummandKind::block_term;
  if (s == "cross_square") return SummandKind::cross_square;
  throw std::invalid_argument("unknown summand kind: " + s);
}

json complex_vector_to_json(const Eigen::VectorXcd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    a.push_back(json::array({v(i).real(), v(i).imag()}));
  return a;
}

}  // namespace

json to_json(const RatMatrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) entries.push_back(m.at(i, j).to_string());
  return json{{"schema", kRatMatrix}, {"dim", m.dim()}, {"entries", std::move(entries)}};
}

RatMatrix rat_matrix_from_json(const json& j) {
  return decoded("rat_matrix_from_json", [&] {
    require_schema(j, kRatMatrix);
    const auto n = j.at("dim").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != n * n)
      throw std::invalid_argument("rat_matrix_from_json: entry count does not match dim");
    RatMatrix m(n);
    std::size_t pos = 0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        m.at(r, c) = Rational::from_string(entries.at(pos++).get<std::string>());
    return m;
  });
}

json to_json(const BlockMatrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) entries.push_back(m.at(i, j).to_string());
  return json{
      {"schema", kBlockMatrix}, {"block_dim", m.block_dim()}, {"entries", std::move(entries)}};
}

BlockMatrix block_matrix_from_json(const json& j) {
  return decoded("block_matrix_from_json", [&] {
    require_schema(j, kBlockMatrix);
    const auto n = j.at("block_dim").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != n * n * n * n)
      throw std::invalid_argument("block_matrix_from_json: entry count does not match block_dim");
    BlockMatrix m(n);
    std::size_t pos = 0;
    for (std::size_t r = 0; r < n * n; ++r)
      for (std::size_t c = 0; c < n * n; ++c)
        m.at(r, c) = Rational::from_string(entries.at(pos++).get<std::string>());
    return m;
  });
}

json to_json(const LinearMap& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_json(m.block(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"schema", kLinearMap}, {"n", m.dim()}, {"blocks", std::move(rows)}};
}

LinearMap linear_map_from_json(const json& j) {
  return decoded("linear_map_from_json", [&] {
    require_schema(j, kLinearMap);
    const auto n = j.at("n").get<std::size_t>();
    const auto& rows = j.at("blocks");
    if (!rows.is_array() || rows.size() != n)
      throw std::invalid_argument("linear_map_from_json: block grid does not match n");
    std::vector<std::vector<RatMatrix>> blocks;
    blocks.reserve(n);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n)
        throw std::invalid_argument("linear_map_from_json: block grid does not match n");
      std::vector<RatMatrix> out;
      out.reserve(n);
      for (const auto& b : row) out.push_back(rat_matrix_from_json(b));
      blocks.push_back(std::move(out));
    }
    return LinearMap(n, std::move(blocks));
  });
}

json to_json(const Polynomial& p) {
  return json{
      {"schema", kPolynomial}, {"variables", p.registry()->names()}, {"text", to_string(p)}};
}

Polynomial polynomial_from_json(const json& j) {
  return decoded("polynomial_from_json", [&] {
    require_schema(j, kPolynomial);
    auto reg = VarRegistry::make(j.at("variables").get<std::vector<std::string>>());
    return parse_polynomial(j.at("text").get<std::string>(), reg);
  });
}

json to_json(const PsdVerdict& v) {
  return json{{"schema", kPsdVerdict},
              {"psd", v.psd},
              {"pivot_order", v.pivot_order},
              {"pivots", rationals_to_json(v.pivots)},
              {"witness", rationals_to_json(v.witness)},
              {"witness_value", v.witness_value.to_string()}};
}

PsdVerdict psd_verdict_from_json(const json& j) {
  return decoded("psd_verdict_from_json", [&] {
    require_schema(j, kPsdVerdict);
    PsdVerdict v;
    v.psd = j.at("psd").get<bool>();
    v.pivot_order = j.at("pivot_order").get<std::vector<std::size_t>>();
    v.pivots = rationals_from_json(j.at("pivots"));
    v.witness = rationals_from_json(j.at("witness"));
    v.witness_value = Rational::from_string(j.at("witness_value").get<std::string>());
    return v;
  });
}

json to_json(const MapClassification& c) {
  return json{{"schema", kMapClassification},
              {"completely_positive", c.completely_positive},
              {"completely_copositive", c.completely_copositive},
              {"cp_verdict", to_json(c.cp_verdict)},
              {"ccp_verdict", to_json(c.ccp_verdict)}};
}

json to_json(const ScanResult& r) {
  return json{{"schema", kScanResult},
              {"min_found", r.min_found},
              {"argmin", r.argmin},
              {"all_nonneg_evidence", r.all_nonneg_evidence},
              {"restarts", r.restarts},
              {"tol", r.tol},
              {"seed", r.seed}};
}

ScanResult scan_result_from_json(const json& j) {
  return decoded("scan_result_from_json", [&] {
    require_schema(j, kScanResult);
    ScanResult r;
    r.min_found = j.at("min_found").get<double>();
    r.argmin = j.at("argmin").get<std::vector<double>>();
    r.all_nonneg_evidence = j.at("all_nonneg_evidence").get<bool>();
    r.restarts = j.at("restarts").get<std::size_t>();
    r.tol = j.at("tol").get<double>();
    r.seed = j.at("seed").get<std::uint64_t>();
    return r;
  });
}

json to_json(const DecompositionCertificate& c) {
  json summands = json::array();
  for (const auto& s : c.summands) {
    json e{{"kind", summand_kind_name(s.kind)},
           {"d", s.d},
           {"i", s.i},
           {"j", s.j},
           {"form", to_json(s.form.poly())}};
    e["evidence"] = s.evidence ? to_json(*s.evidence) : json(nullptr);
    summands.push_back(std::move(e));
  }
  json mu = c.mu ? json(c.mu->one_based_image()) : json(nullptr);
  return json{{"schema", kDecomposition},
              {"n", c.n},
              {"k", c.k},
              {"q", c.q},
              {"target", to_json(c.target.poly())},
              {"summands", std::move(summands)},
              {"mu", std::move(mu)}};
}

DecompositionCertificate decomposition_certificate_from_json(const json& j) {
  return decoded("decomposition_certificate_from_json", [&] {
    require_schema(j, kDecomposition);
    const auto n = j.at("n").get<std::size_t>();
    DecompositionCertificate c{n,
                               j.at("k").get<std::size_t>(),
                               j.at("q").get<std::size_t>(),
                               BiquadraticForm(n, polynomial_from_json(j.at("target"))),
                               {},
                               std::nullopt};
    for (const auto& e : j.at("summands")) {
      FormSummand s{summand_kind_from_name(e.at("kind").get<std::string>()),
                    BiquadraticForm(n, polynomial_from_json(e.at("form"))),
                    e.at("d").get<std::size_t>(),
                    e.at("i").get<std::size_t>(),
                    e.at("j").get<std::size_t>(),
                    std::nullopt};
      if (!e.at("evidence").is_null()) s.evidence = scan_result_from_json(e.at("evidence"));
      c.summands.push_back(std::move(s));
    }
    if (!j.at("mu").is_null())
      c.mu = Permutation::from_one_based(j.at("mu").get<std::vector<std::uint32_t>>());
    return c;
  });
}

json to_json(const NonExtremalityCertificate& c) {
  json maps = json::array();
  for (const auto& m : c.summand_maps) maps.push_back(to_json(m));
  return json{{"schema", kNonExtremality},
              {"decomposition", to_json(c.decomposition)},
              {"target_map", to_json(c.target_map)},
              {"summand_maps", std::move(maps)}};
}

NonExtremalityCertificate non_extremality_certificate_from_json(const json& j) {
  return decoded("non_extremality_certificate_from_json", [&] {
    require_schema(j, kNonExtremality);
    NonExtremalityCertificate c{
        decomposition_certificate_from_json(j.at("decomposition")),
        linear_map_from_json(j.at("target_map")),
        {}};
    for (const auto& m : j.at("summand_maps")) c.summand_maps.push_back(linear_map_from_json(m));
    return c;
  });
}

json to_json(const DecomposabilityCertificate& c) {
  return json{{"schema", kDecomposability},
              {"n", c.n},
              {"p", to_json(c.p)},
              {"q", to_json(c.q)},
              {"p_verdict", to_json(c.p_verdict)},
              {"q_verdict", to_json(c.q_verdict)}};
}

DecomposabilityCertificate decomposability_certificate_from_json(const json& j) {
  return decoded("decomposability_certificate_from_json", [&] {
    require_schema(j, kDecomposability);
    return DecomposabilityCertificate{j.at("n").get<std::size_t>(),
                                      block_matrix_from_json(j.at("p")),
                                      block_matrix_from_json(j.at("q")),
                                      psd_verdict_from_json(j.at("p_verdict")),
                                      psd_verdict_from_json(j.at("q_verdict"))};
  });
}

json to_json(const IdentityCheck& c) {
  return json{{"schema", kIdentityCheck},
              {"ok", c.ok},
              {"description", c.description},
              {"residual", to_json(c.residual)}};
}

json to_json(const ReplayReport& r) {
  return json{{"schema", kReplayReport},
              {"variables", r.reg->names()},
              {"f", to_string(r.f)},
              {"f_sub", to_string(r.f_sub)},
              {"neg_disc_p", to_string(r.neg_disc_p)},
              {"disc_s", to_string(r.disc_s)},
              {"q6_coeff", to_string(r.q6_coeff)},
              {"q_degree", r.q_degree},
              {"display_neg_disc", to_string(r.display_neg_disc)},
              {"neg_disc_matches_display", r.neg_disc_matches_display},
              {"neg_disc_matches_display_a7_as_a4", r.neg_disc_matches_display_a7_as_a4},
              {"neg_disc_alpha_only", to_string(r.neg_disc_alpha_only)},
              {"display_alpha_only", to_string(r.display_alpha_only)},
              {"alpha_only_matches", r.alpha_only_matches},
              {"display_q6", to_string(r.display_q6)},
              {"q6_matches_display", r.q6_matches_display},
              {"q6_matches_display_a7_as_a4", r.q6_matches_display_a7_as_a4}};
}

json to_json(const SpanReport& r) {
  json vectors = json::array();
  for (const auto& pv : r.zeros.vectors)
    vectors.push_back(
        json{{"xi", complex_vector_to_json(pv.xi)}, {"eta", complex_vector_to_json(pv.eta)}});
  json zeros{{"total_found", r.zeros.total_found},
             {"tol", r.zeros.tol},
             {"witness_fingerprint", r.zeros.witness_fingerprint},
             {"expectations", r.zeros.expectations},
             {"vectors", std::move(vectors)}};
  json doc{{"schema", kSpanReport},
           {"n", r.n},
           {"restarts", r.restarts},
           {"zero_tol", r.zero_tol},
           {"rank_tol", r.rank_tol},
           {"seed", r.seed},
           {"used_partial_transpose", r.used_partial_transpose},
           {"singular_values", r.singular_values},
           {"rank", r.rank},
           {"has_spanning", r.has_spanning},
           {"zeros", std::move(zeros)}};
  if (!r.has_spanning)
    doc["note"] = "no spanning set found within " + std::to_string(r.restarts) +
                  " restarts; sampling evidence only, not a proof of absence";
  return doc;
}

ValidationResult validate_certificate_json(const json& j) {
  if (!j.is_object() || !j.contains("schema") || !j.at("schema").is_string())
    throw std::invalid_argument("validate: document has no schema field");
  const std::string schema = j.at("schema").get<std::string>();

  if (schema == kDecomposition) {
    DecompositionCertificate c = decomposition_certificate_from_json(j);
    try {
      c.validate();
      if (c.target != qi_hou_form(c.n, c.q))
        throw std::logic_error("decomposition: target is not the declared form");
    } catch (const std::exception& e) {
      return {false, schema, e.what()};
    }
    return {true, schema, "exact sum, summand count, and target replayed"};
  }

  if (schema == kNonExtremality) {
    NonExtremalityCertificate c = non_extremality_certificate_from_json(j);
    try {
      c.validate();
      const auto n = c.decomposition.n;
      const auto q = c.decomposition.q;
      if (c.decomposition.target != qi_hou_form(n, q))
        throw std::logic_error("non-extremality: target form is not the declared form");
      if (c.target_map != qi_hou_map(n, q))
        throw std::logic_error("non-extremality: target map is not the declared map");
    } catch (const std::exception& e) {
      return {false, schema, e.what()};
    }
    return {true, schema, "map-level sum, proportionality, evidence, and target replayed"};
  }

  if (schema == kDecomposability) {
    DecomposabilityCertificate c = decomposability_certificate_from_json(j);
    try {
      c.validate();
    } catch (const std::exception& e) {
      return {false, schema, e.what()};
    }
    return {true, schema, "witness sum and both exact psd checks replayed"};
  }

  throw std::invalid_argument("validate: schema " + schema + " is not a certificate");
}

}  // namespace qihou
