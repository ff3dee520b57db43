#pragma once

#include <utility>
#include <vector>

#include "qihou/mapcore/block_matrix.hpp"
#include "qihou/mapcore/permutation.hpp"
#include "qihou/mapcore/rat_matrix.hpp"

namespace qihou {

/// A linear map on n×n real matrices, stored by its values on matrix units:
/// block(i, j) = value on E_ij (0-based). Hermiticity preservation, here
/// block(j, i) = block(i, j)^T, is enforced at construction.
class LinearMap {
 public:
  explicit LinearMap(std::size_t n);
  LinearMap(std::size_t n, std::vector<std::vector<RatMatrix>> blocks);

  static LinearMap identity(std::size_t n);

  std::size_t dim() const { return n_; }
  const RatMatrix& block(std::size_t i, std::size_t j) const;
  void set_block(std::size_t i, std::size_t j, const RatMatrix& b);

  /// Re-checks block(j,i) = block(i,j)^T; set_block edits can break it
  /// transiently while assembling a map.
  bool is_hermiticity_preserving() const;
  void require_hermiticity_preserving() const;

  LinearMap operator+(const LinearMap& o) const;
  LinearMap scale(const Rational& c) const;

  bool operator==(const LinearMap& o) const;
  bool operator!=(const LinearMap& o) const { return !(*this == o); }

 private:
  std::size_t n_;
  std::vector<std::vector<RatMatrix>> blocks_;
};

/// The map A -> diag(b) - A with b_i = (n-1)·a_ii + a_{s(i),s(i)},
/// s the cyclic shift by k. Requires n >= 3 and 1 <= k <= n-1.
LinearMap qi_hou_map(std::size_t n, std::size_t k);

/// Linear extension over the stored blocks: A -> sum_ij a_ij · block(i,j).
RatMatrix apply_map(const LinearMap& m, const RatMatrix& a);

/// Choi matrix C (block (i,j) = map block (i,j)) and witness W = C / n.
std::pair<BlockMatrix, BlockMatrix> choi_and_witness(const LinearMap& m);

/// True iff one map is a nonzero rational multiple of the other.
bool is_scalar_multiple(const LinearMap& a, const LinearMap& b);

}  // namespace qihou
