#pragma once

#include <string>

#include "json.hpp"
#include "qihou/formlab/certificates.hpp"
#include "qihou/formlab/identities.hpp"
#include "qihou/formlab/replay.hpp"
#include "qihou/mapcore/psd.hpp"
#include "qihou/spanscan/spanscan.hpp"

namespace qihou {

// Every structured value serializes with a "schema" field of the shape
// "qihou/<type>/v1". Matrices encode as row-major arrays of "num/den"
// strings, polynomials as their canonical text plus the registry names,
// doubles verbatim. Decoders reject on missing or ill-typed fields.

nlohmann::json to_json(const RatMatrix& m);
nlohmann::json to_json(const BlockMatrix& m);
nlohmann::json to_json(const LinearMap& m);
nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const PsdVerdict& v);
nlohmann::json to_json(const MapClassification& c);
nlohmann::json to_json(const ScanResult& r);
nlohmann::json to_json(const DecompositionCertificate& c);
nlohmann::json to_json(const NonExtremalityCertificate& c);
nlohmann::json to_json(const DecomposabilityCertificate& c);
nlohmann::json to_json(const IdentityCheck& c);
nlohmann::json to_json(const ReplayReport& r);
nlohmann::json to_json(const SpanReport& r);

RatMatrix rat_matrix_from_json(const nlohmann::json& j);
BlockMatrix block_matrix_from_json(const nlohmann::json& j);
LinearMap linear_map_from_json(const nlohmann::json& j);
Polynomial polynomial_from_json(const nlohmann::json& j);
PsdVerdict psd_verdict_from_json(const nlohmann::json& j);
ScanResult scan_result_from_json(const nlohmann::json& j);
DecompositionCertificate decomposition_certificate_from_json(const nlohmann::json& j);
NonExtremalityCertificate non_extremality_certificate_from_json(const nlohmann::json& j);
DecomposabilityCertificate decomposability_certificate_from_json(const nlohmann::json& j);

struct ValidationResult {
  bool ok = false;
  std::string schema;
  std::string detail;  // failure reason when !ok, short confirmation when ok
};

/// Re-checks a loaded certificate from scratch: decodes by schema, replays
/// the certificate's own validation, and re-derives the target object from
/// the stored parameters. Throws std::invalid_argument when the document is
/// not a certificate or is structurally malformed; a semantically invalid
/// certificate comes back with ok = false and the reason in detail.
ValidationResult validate_certificate_json(const nlohmann::json& j);

}  // namespace qihou
