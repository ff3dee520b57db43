#include "qihou/mapcore/linear_map.hpp"

#include <stdexcept>

namespace qihou {

LinearMap::LinearMap(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("LinearMap: dimension must be positive");
  blocks_.assign(n, std::vector<RatMatrix>(n, RatMatrix(n)));
}

LinearMap::LinearMap(std::size_t n, std::vector<std::vector<RatMatrix>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n == 0) throw std::invalid_argument("LinearMap: dimension must be positive");
  if (blocks_.size() != n) throw std::invalid_argument("LinearMap: block grid mismatch");
  for (const auto& row : blocks_) {
    if (row.size() != n) throw std::invalid_argument("LinearMap: block grid mismatch");
    for (const auto& b : row)
      if (b.dim() != n) throw std::invalid_argument("LinearMap: block dimension mismatch");
  }
  require_hermiticity_preserving();
}

LinearMap LinearMap::identity(std::size_t n) {
  LinearMap m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.blocks_[i][j] = RatMatrix::unit(n, i, j);
  return m;
}

const RatMatrix& LinearMap::block(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw std::out_of_range("LinearMap: block index out of range");
  return blocks_[i][j];
}

void LinearMap::set_block(std::size_t i, std::size_t j, const RatMatrix& b) {
  if (i >= n_ || j >= n_) throw std::out_of_range("LinearMap: block index out of range");
  if (b.dim() != n_) throw std::invalid_argument("LinearMap: block dimension mismatch");
  blocks_[i][j] = b;
}

bool LinearMap::is_hermiticity_preserving() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      if (blocks_[j][i] != blocks_[i][j].transpose()) return false;
  return true;
}

void LinearMap::require_hermiticity_preserving() const {
  if (!is_hermiticity_preserving())
    throw std::invalid_argument("LinearMap: blocks are not hermiticity-preserving");
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
  if (n_ != o.n_) throw std::invalid_argument("LinearMap: dimension mismatch");
  LinearMap r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r.blocks_[i][j] = blocks_[i][j] + o.blocks_[i][j];
  return r;
}

LinearMap LinearMap::scale(const Rational& c) const {
  LinearMap r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r.blocks_[i][j] = blocks_[i][j].scale(c);
  return r;
}

bool LinearMap::operator==(const LinearMap& o) const {
  return n_ == o.n_ && blocks_ == o.blocks_;
}

LinearMap qi_hou_map(std::size_t n, std::size_t k) {
  if (n < 3) throw std::invalid_argument("qi_hou_map: n must be at least 3");
  if (k < 1 || k > n - 1) throw std::invalid_argument("qi_hou_map: k must be in [1, n-1]");
  LinearMap m(n);
  for (std::size_t j = 0; j < n; ++j) {
    // E_jj -> (n-2) E_jj + E_rr with r the shift-by-k preimage of j.
    std::size_t r = (j + n - k) % n;
    RatMatrix d(n);
    d.at(j, j) = Rational(static_cast<long>(n) - 2);
    d.at(r, r) += Rational(1);
    m.set_block(j, j, d);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m.set_block(i, j, -RatMatrix::unit(n, i, j));
  m.require_hermiticity_preserving();
  return m;
}

RatMatrix apply_map(const LinearMap& m, const RatMatrix& a) {
  if (a.dim() != m.dim()) throw std::invalid_argument("apply_map: dimension mismatch");
  RatMatrix r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const Rational& c = a.at(i, j);
      if (c.is_zero()) continue;
      r = r + m.block(i, j).scale(c);
    }
  return r;
}

std::pair<BlockMatrix, BlockMatrix> choi_and_witness(const LinearMap& m) {
  BlockMatrix c(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) c.set_block(i, j, m.block(i, j));
  BlockMatrix w = c.scale(Rational(1, static_cast<long>(m.dim())));
  return {std::move(c), std::move(w)};
}

bool is_scalar_multiple(const LinearMap& a, const LinearMap& b) {
  if (a.dim() != b.dim()) return false;
  std::size_t n = a.dim();
  Rational ratio(0);
  bool have_ratio = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Rational& x = a.block(i, j).at(k, l);
          const Rational& y = b.block(i, j).at(k, l);
          if (x.is_zero() && y.is_zero()) continue;
          if (x.is_zero() || y.is_zero()) return false;
          Rational q = x / y;
          if (!have_ratio) {
            ratio = q;
            have_ratio = true;
          } else if (q != ratio) {
            return false;
          }
        }
  return have_ratio;
}

}  // namespace qihou
