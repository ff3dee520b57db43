#include "qihou/mapcore/block_matrix.hpp"

#include <stdexcept>

namespace qihou {

BlockMatrix::BlockMatrix(std::size_t block_dim) : n_(block_dim), m_(block_dim * block_dim) {
  if (block_dim == 0) throw std::invalid_argument("BlockMatrix: block dimension must be positive");
}

RatMatrix BlockMatrix::block(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw std::out_of_range("BlockMatrix: block index out of range");
  RatMatrix b(n_);
  for (std::size_t k = 0; k < n_; ++k)
    for (std::size_t l = 0; l < n_; ++l) b.at(k, l) = m_.at(i * n_ + k, j * n_ + l);
  return b;
}

void BlockMatrix::set_block(std::size_t i, std::size_t j, const RatMatrix& b) {
  if (i >= n_ || j >= n_) throw std::out_of_range("BlockMatrix: block index out of range");
  if (b.dim() != n_) throw std::invalid_argument("BlockMatrix: block dimension mismatch");
  for (std::size_t k = 0; k < n_; ++k)
    for (std::size_t l = 0; l < n_; ++l) m_.at(i * n_ + k, j * n_ + l) = b.at(k, l);
}

BlockMatrix BlockMatrix::operator+(const BlockMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("BlockMatrix: dimension mismatch");
  BlockMatrix r(n_);
  r.m_ = m_ + o.m_;
  return r;
}

BlockMatrix BlockMatrix::operator-(const BlockMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("BlockMatrix: dimension mismatch");
  BlockMatrix r(n_);
  r.m_ = m_ - o.m_;
  return r;
}

BlockMatrix BlockMatrix::scale(const Rational& c) const {
  BlockMatrix r(n_);
  r.m_ = m_.scale(c);
  return r;
}

BlockMatrix partial_transpose(const BlockMatrix& b) {
  BlockMatrix r(b.block_dim());
  for (std::size_t i = 0; i < b.block_dim(); ++i)
    for (std::size_t j = 0; j < b.block_dim(); ++j) r.set_block(i, j, b.block(i, j).transpose());
  return r;
}

}  // namespace qihou
