#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "qihou/mapcore/block_matrix.hpp"

namespace qihou {

/// A unit product vector: the pair (xi, eta), each a unit complex n-vector.
struct ProductVector {
  Eigen::VectorXcd xi;
  Eigen::VectorXcd eta;
};

/// Product vectors with expectation value within tol of zero against one
/// fixed witness, identified by a fingerprint of its exact entries.
struct ZeroSet {
  std::vector<ProductVector> vectors;   // deduplicated, capped sample
  std::vector<double> expectations;     // parallel to vectors
  std::size_t total_found = 0;          // before deduplication and capping
  double tol = 0.0;
  std::string witness_fingerprint;
};

struct SpanReport {
  std::size_t n = 0;
  ZeroSet zeros;
  std::vector<double> singular_values;  // of the stacked xi⊗eta matrix
  std::size_t rank = 0;
  bool has_spanning = false;  // rank == n²
  std::size_t restarts = 0;
  double zero_tol = 0.0;
  double rank_tol = 0.0;
  std::uint64_t seed = 0;
  bool used_partial_transpose = false;
};

/// Hash of the exact entries, so reports can be tied to the witness they
/// were run against.
std::string witness_fingerprint(const BlockMatrix& w);

/// <xi,eta| W |xi,eta> for the real symmetric witness; the value is real up
/// to roundoff and returned as its real part.
double product_expectation(const BlockMatrix& w, const ProductVector& v);

/// Alternating eigenvector descent: fixing one factor turns the expectation
/// into a Hermitian quadratic form in the other, minimized exactly by the
/// bottom eigenvector. The objective never increases; iteration stops when
/// it stalls by less than tol or after max_iters rounds.
std::pair<ProductVector, double> seesaw_minimize(const BlockMatrix& w, std::uint64_t seed,
                                                 std::size_t max_iters = 200, double tol = 1e-14);

/// Runs seesaw_minimize from `restarts` independent starts (start r seeded
/// with seed + r) and keeps the converged vectors with |value| <= zero_tol.
ZeroSet collect_zero_set(const BlockMatrix& w, std::size_t restarts, double zero_tol,
                         std::uint64_t seed);

/// Stacks the kept xi⊗eta rows, takes singular values, counts those above
/// rank_tol relative to the largest. With use_partial_transpose the scan
/// runs against the block-transposed witness instead.
SpanReport span_report(const BlockMatrix& w, std::size_t restarts, double zero_tol,
                       double rank_tol, std::uint64_t seed, bool use_partial_transpose);

}  // namespace qihou
