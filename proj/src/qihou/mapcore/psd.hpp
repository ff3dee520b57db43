#pragma once

#include <cstddef>
#include <vector>

#include "qihou/mapcore/linear_map.hpp"
#include "qihou/mapcore/rat_matrix.hpp"

namespace qihou {

/// Outcome of the exact semidefiniteness test. A psd verdict carries the
/// pivot sequence of the symmetric elimination it ran; a not-psd verdict
/// carries a rational vector whose quadratic form is negative, together
/// with that exactly evaluated value.
struct PsdVerdict {
  bool psd = false;
  std::vector<std::size_t> pivot_order;  // indices eliminated, in order
  std::vector<Rational> pivots;          // matching positive pivot values
  std::vector<Rational> witness;         // when !psd: v with v^T S v < 0
  Rational witness_value;                // v^T S v, negative when !psd
};

/// Exact semidefiniteness of a symmetric rational matrix by symmetric
/// elimination with greatest-diagonal pivoting. Never approximates; a
/// negative verdict is returned with its witness already re-verified
/// against the input. Throws on non-symmetric input.
PsdVerdict is_psd_exact(const RatMatrix& s);

struct MapClassification {
  bool completely_positive = false;
  bool completely_copositive = false;
  PsdVerdict cp_verdict;
  PsdVerdict ccp_verdict;
};

/// Complete positivity and complete copositivity, decided exactly from the
/// Choi matrix and its partial transpose.
MapClassification classify_map(const LinearMap& m);

}  // namespace qihou
