#pragma once

#include <cstdint>
#include <vector>

#include "qihou/formlab/biquadratic.hpp"

namespace qihou {

/// Evidence record from a multistart minimization. Never a proof: a
/// nonnegative minimum over finitely many descents only supports the claim.
struct ScanResult {
  double min_found = 0.0;
  std::vector<double> argmin;  // one coordinate per registry variable
  bool all_nonneg_evidence = false;
  std::size_t restarts = 0;
  double tol = 0.0;
  std::uint64_t seed = 0;
};

/// Multistart projected-descent minimization of p over the product of the
/// unit spheres of the given variable blocks. Blocks must be disjoint,
/// cover every used variable, and p must be homogeneous in each block.
/// Restart r draws its start from seed + r, so the result is independent
/// of scheduling and reproducible.
ScanResult nonnegativity_scan(const Polynomial& p, const std::vector<std::vector<VarId>>& blocks,
                              std::size_t restarts, double tol, std::uint64_t seed);

/// Same scan with the natural two blocks of a biquadratic form.
ScanResult nonnegativity_scan(const BiquadraticForm& b, std::size_t restarts, double tol,
                              std::uint64_t seed);

}  // namespace qihou
