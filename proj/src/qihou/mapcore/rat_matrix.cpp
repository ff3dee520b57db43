#include "qihou/mapcore/rat_matrix.hpp"

#include <stdexcept>

namespace qihou {

RatMatrix::RatMatrix(std::size_t n) : n_(n), e_(n * n) {
  if (n == 0) throw std::invalid_argument("RatMatrix: dimension must be positive");
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RatMatrix RatMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  RatMatrix m(n);
  m.at(i, j) = Rational(1);
  return m;
}

const Rational& RatMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw std::out_of_range("RatMatrix: index out of range");
  return e_[i * n_ + j];
}

Rational& RatMatrix::at(std::size_t i, std::size_t j) {
  if (i >= n_ || j >= n_) throw std::out_of_range("RatMatrix: index out of range");
  return e_[i * n_ + j];
}

bool RatMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool RatMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (e_[i * n_ + j] != e_[j * n_ + i]) return false;
  return true;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m.e_[j * n_ + i] = e_[i * n_ + j];
  return m;
}

Rational RatMatrix::trace() const {
  Rational t(0);
  for (std::size_t i = 0; i < n_; ++i) t += e_[i * n_ + i];
  return t;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("RatMatrix: dimension mismatch");
  RatMatrix m(n_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
  return m;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("RatMatrix: dimension mismatch");
  RatMatrix m(n_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
  return m;
}

RatMatrix RatMatrix::operator-() const {
  RatMatrix m(n_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
  return m;
}

RatMatrix RatMatrix::scale(const Rational& c) const {
  RatMatrix m(n_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * c;
  return m;
}

Rational RatMatrix::quadratic_form(const std::vector<Rational>& v) const {
  if (v.size() != n_) throw std::invalid_argument("quadratic_form: dimension mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (v[i].is_zero()) continue;
    Rational row(0);
    for (std::size_t j = 0; j < n_; ++j)
      if (!v[j].is_zero()) row += e_[i * n_ + j] * v[j];
    s += v[i] * row;
  }
  return s;
}

}  // namespace qihou
