#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qihou/formlab/biquadratic.hpp"
#include "qihou/formlab/forms.hpp"
#include "qihou/formlab/nonneg_scan.hpp"
#include "qihou/mapcore/psd.hpp"

namespace qihou {

enum class SummandKind { block_term, cross_square };

struct FormSummand {
  SummandKind kind;
  BiquadraticForm form;
  // Provenance of the summand before any permutation was applied:
  // the residue class d for block terms, the index pair (i, j) for squares.
  std::size_t d = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  std::optional<ScanResult> evidence;
};

/// An exact splitting of a target form into at least two summands, none of
/// them proportional to the target. The exact-sum and non-proportionality
/// invariants are enforced at construction; an object of this type that
/// exists has already passed them.
struct DecompositionCertificate {
  std::size_t n = 0;
  std::size_t k = 0;  // divisor used for the residue-class split
  std::size_t q = 0;  // shift parameter of the target form (q = k when unpermuted)
  BiquadraticForm target;
  std::vector<FormSummand> summands;
  std::optional<Permutation> mu;

  /// Re-checks the exact sum, the summand count, and non-proportionality.
  void validate() const;
};

/// The residue-class splitting of the (n,k) form, k | n with n/k >= 2 and
/// k >= 2: one block term per residue class plus one cross square per index
/// pair straddling classes.
DecompositionCertificate divisor_decomposition(std::size_t n, std::size_t k);

/// The decomposition above pushed through the intertwining permutation so
/// the target becomes the (n,q) form, with every summand converted to a
/// linear map. The map-level sum is checked exactly, and every summand form
/// carries scan evidence of nonnegativity. Requires gcd(n,q) >= 2.
struct NonExtremalityCertificate {
  DecompositionCertificate decomposition;
  LinearMap target_map;
  std::vector<LinearMap> summand_maps;

  void validate() const;
};

NonExtremalityCertificate non_extremality_certificate(std::size_t n, std::size_t q,
                                                      std::size_t scan_restarts = 1000,
                                                      double scan_tol = 1e-9,
                                                      std::uint64_t scan_seed = 1);

/// Exact witness splitting W = P + Q^Γ for the half-shift map, with both
/// parts certified positive semidefinite by exact elimination. P collects
/// the Choi matrices of the cross-square summands, Q the partially
/// transposed Choi matrices of the block squares, both scaled by 1/n.
struct DecomposabilityCertificate {
  std::size_t n = 0;
  BlockMatrix p;
  BlockMatrix q;
  PsdVerdict p_verdict;
  PsdVerdict q_verdict;

  void validate() const;
};

DecomposabilityCertificate decomposability_certificate(std::size_t n);

}  // namespace qihou
