#pragma once

#include <cstddef>
#include <vector>

#include "qihou/polycore/rational.hpp"

namespace qihou {

/// Dense square matrix of exact rationals. Indices are 0-based.
class RatMatrix {
 public:
  explicit RatMatrix(std::size_t n);

  static RatMatrix identity(std::size_t n);
  static RatMatrix unit(std::size_t n, std::size_t i, std::size_t j);  // E_ij

  std::size_t dim() const { return n_; }

  const Rational& at(std::size_t i, std::size_t j) const;
  Rational& at(std::size_t i, std::size_t j);

  bool is_zero() const;
  bool is_symmetric() const;

  RatMatrix transpose() const;
  Rational trace() const;

  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator-() const;
  RatMatrix scale(const Rational& c) const;

  bool operator==(const RatMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }

  /// v^T (this) v, exact.
  Rational quadratic_form(const std::vector<Rational>& v) const;

 private:
  std::size_t n_;
  std::vector<Rational> e_;  // row-major
};

}  // namespace qihou
