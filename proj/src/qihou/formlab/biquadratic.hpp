#pragma once

#include <cstddef>

#include "qihou/mapcore/linear_map.hpp"
#include "qihou/polycore/polynomial.hpp"

namespace qihou {

/// A polynomial over {x1..xn, y1..yn} in which every monomial has degree
/// exactly 2 in the x block and exactly 2 in the y block.
class BiquadraticForm {
 public:
  /// Validates the registry shape and the bidegree of every term.
  BiquadraticForm(std::size_t n, Polynomial p);

  std::size_t n() const { return n_; }
  const Polynomial& poly() const { return p_; }
  const VarRegistry::Ptr& registry() const { return p_.registry(); }

  /// 1-based accessors matching the subscript notation.
  VarId x(std::size_t i) const;
  VarId y(std::size_t i) const;

  BiquadraticForm operator+(const BiquadraticForm& o) const;
  BiquadraticForm operator-(const BiquadraticForm& o) const;
  BiquadraticForm scale(const Rational& c) const;

  bool operator==(const BiquadraticForm& o) const { return n_ == o.n_ && p_ == o.p_; }
  bool operator!=(const BiquadraticForm& o) const { return !(*this == o); }

 private:
  std::size_t n_;
  Polynomial p_;
};

/// Symbolic expansion of y^T [m(x x^T)] y with x, y as variable vectors.
BiquadraticForm biquadratic_of_map(const LinearMap& m);

/// The reverse direction: reads the coefficient of x_i x_j y_k y_l and
/// splits it between the block entries (i,j)(k,l) and (j,i)(l,k), so the
/// result is hermiticity-preserving and biquadratic_of_map inverts it
/// exactly. Off-diagonal coefficients admit a one-parameter antisymmetric
/// gauge; this constructor fixes the gauge in which paired entries are
/// equal, which contains every map built from a form in this project.
LinearMap map_from_biquadratic(const BiquadraticForm& b);

/// True iff a = c·b for some nonzero rational c (both nonzero).
bool is_scalar_multiple(const Polynomial& a, const Polynomial& b);

}  // namespace qihou
