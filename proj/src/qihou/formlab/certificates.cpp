#include "qihou/formlab/certificates.hpp"

#include <numeric>
#include <stdexcept>

namespace qihou {

void DecompositionCertificate::validate() const {
  if (summands.size() < 2)
    throw std::logic_error("decomposition: needs at least two summands");
  Polynomial sum(target.registry());
  for (const auto& s : summands) {
    if (s.form.n() != n) throw std::logic_error("decomposition: summand dimension mismatch");
    sum = sum + s.form.poly();
    if (is_scalar_multiple(s.form.poly(), target.poly()))
      throw std::logic_error("decomposition: summand proportional to the target");
  }
  if (sum != target.poly())
    throw std::logic_error("decomposition: summands do not sum to the target");
}

DecompositionCertificate divisor_decomposition(std::size_t n, std::size_t k) {
  if (k < 2) throw std::invalid_argument("divisor_decomposition: k must be at least 2");
  if (n % k != 0 || n / k < 2)
    throw std::invalid_argument("divisor_decomposition: k must divide n with n/k >= 2");
  DecompositionCertificate cert{n, k, k, qi_hou_form(n, k), {}, std::nullopt};
  for (std::size_t d = 1; d <= k; ++d)
    cert.summands.push_back(
        {SummandKind::block_term, block_term(n, k, d), d, 0, 0, std::nullopt});
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (i % k != j % k)
        cert.summands.push_back(
            {SummandKind::cross_square, cross_square(n, i, j), 0, i, j, std::nullopt});
  cert.validate();
  return cert;
}

void NonExtremalityCertificate::validate() const {
  decomposition.validate();
  if (summand_maps.size() != decomposition.summands.size())
    throw std::logic_error("non-extremality: map list out of step with summands");
  LinearMap sum(target_map.dim());
  for (std::size_t i = 0; i < summand_maps.size(); ++i) {
    if (map_from_biquadratic(decomposition.summands[i].form) != summand_maps[i])
      throw std::logic_error("non-extremality: summand map does not match its form");
    sum = sum + summand_maps[i];
    if (is_scalar_multiple(summand_maps[i], target_map))
      throw std::logic_error("non-extremality: summand map proportional to the target");
  }
  if (sum != target_map)
    throw std::logic_error("non-extremality: summand maps do not sum to the target");
  for (const auto& s : decomposition.summands) {
    if (!s.evidence)
      throw std::logic_error("non-extremality: summand lacks scan evidence");
    if (!s.evidence->all_nonneg_evidence)
      throw std::logic_error("non-extremality: summand scan found a negative value");
  }
}

NonExtremalityCertificate non_extremality_certificate(std::size_t n, std::size_t q,
                                                      std::size_t scan_restarts, double scan_tol,
                                                      std::uint64_t scan_seed) {
  if (n < 3) throw std::invalid_argument("non_extremality_certificate: n must be at least 3");
  if (q < 1 || q > n - 1)
    throw std::invalid_argument("non_extremality_certificate: q must be in [1, n-1]");
  const std::size_t k = std::gcd(n, q);
  if (k < 2)
    throw std::invalid_argument(
        "non_extremality_certificate: gcd(n, q) = 1 admits no splitting certificate; single "
        "shift classes leave nothing to split");

  DecompositionCertificate base = divisor_decomposition(n, k);
  Permutation mu = mu_permutation(n, q);

  NonExtremalityCertificate cert{
      DecompositionCertificate{n, k, q, permute_form(base.target, mu), {}, mu},
      qi_hou_map(n, q),
      {}};
  if (cert.decomposition.target != qi_hou_form(n, q))
    throw std::logic_error("non_extremality_certificate: permuted target is not the (n,q) form");

  for (std::size_t i = 0; i < base.summands.size(); ++i) {
    FormSummand s = base.summands[i];
    s.form = permute_form(s.form, mu);
    s.evidence = nonnegativity_scan(s.form, scan_restarts, scan_tol,
                                    scan_seed + 1000003 * (i + 1));
    cert.decomposition.summands.push_back(std::move(s));
    cert.summand_maps.push_back(map_from_biquadratic(cert.decomposition.summands.back().form));
  }
  cert.validate();
  return cert;
}

void DecomposabilityCertificate::validate() const {
  if (n % 2 != 0 || n < 4) throw std::logic_error("decomposability: n must be even, at least 4");
  auto [choi, witness] = choi_and_witness(qi_hou_map(n, n / 2));
  if (p + partial_transpose(q) != witness)
    throw std::logic_error("decomposability: parts do not sum to the witness");
  PsdVerdict vp = is_psd_exact(p.full());
  PsdVerdict vq = is_psd_exact(q.full());
  if (!vp.psd || !vq.psd)
    throw std::logic_error("decomposability: a part failed the exact psd check");
}

DecomposabilityCertificate decomposability_certificate(std::size_t n) {
  if (n % 2 != 0 || n < 4)
    throw std::invalid_argument("decomposability_certificate: n must be even, at least 4");
  const std::size_t k = n / 2;
  DecompositionCertificate dec = divisor_decomposition(n, k);

  BlockMatrix p(n), q(n);
  const Rational inv_n(1, static_cast<long>(n));
  for (const auto& s : dec.summands) {
    auto [choi, witness] = choi_and_witness(map_from_biquadratic(s.form));
    if (s.kind == SummandKind::cross_square)
      p = p + choi.scale(inv_n);
    else
      q = q + partial_transpose(choi).scale(inv_n);
  }

  DecomposabilityCertificate cert{n, p, q, is_psd_exact(p.full()), is_psd_exact(q.full())};
  if (!cert.p_verdict.psd || !cert.q_verdict.psd)
    throw std::logic_error("decomposability_certificate: a part failed the exact psd check");
  auto [choi, witness] = choi_and_witness(qi_hou_map(n, k));
  if (cert.p + partial_transpose(cert.q) != witness)
    throw std::logic_error("decomposability_certificate: parts do not sum to the witness");
  return cert;
}

}  // namespace qihou
