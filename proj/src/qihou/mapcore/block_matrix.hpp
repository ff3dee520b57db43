#pragma once

#include "qihou/mapcore/rat_matrix.hpp"

namespace qihou {

/// An n² × n² rational matrix carrying an n×n block structure: entry
/// ((i,k),(j,l)) of the tensor-product indexing lives at row i·n+k,
/// column j·n+l. Block (i,j) is the n×n submatrix at those offsets.
class BlockMatrix {
 public:
  explicit BlockMatrix(std::size_t block_dim);

  std::size_t block_dim() const { return n_; }
  std::size_t dim() const { return n_ * n_; }

  const RatMatrix& full() const { return m_; }

  const Rational& at(std::size_t row, std::size_t col) const { return m_.at(row, col); }
  Rational& at(std::size_t row, std::size_t col) { return m_.at(row, col); }

  RatMatrix block(std::size_t i, std::size_t j) const;
  void set_block(std::size_t i, std::size_t j, const RatMatrix& b);

  BlockMatrix operator+(const BlockMatrix& o) const;
  BlockMatrix operator-(const BlockMatrix& o) const;
  BlockMatrix scale(const Rational& c) const;

  bool operator==(const BlockMatrix& o) const { return n_ == o.n_ && m_ == o.m_; }
  bool operator!=(const BlockMatrix& o) const { return !(*this == o); }

 private:
  std::size_t n_;
  RatMatrix m_;
};

/// Transposes every block in place (transposition of the second tensor
/// factor). An involution.
BlockMatrix partial_transpose(const BlockMatrix& b);

}  // namespace qihou
