#include "qihou/formlab/biquadratic.hpp"

#include <stdexcept>

namespace qihou {

namespace {

// Degree of m in the variable index range [lo, hi).
std::uint32_t range_degree(const Monomial& m, std::uint32_t lo, std::uint32_t hi) {
  std::uint32_t d = 0;
  for (const auto& [v, e] : m.factors())
    if (v.index >= lo && v.index < hi) d += e;
  return d;
}

}  // namespace

BiquadraticForm::BiquadraticForm(std::size_t n, Polynomial p) : n_(n), p_(std::move(p)) {
  if (n < 2) throw std::invalid_argument("BiquadraticForm: n must be at least 2");
  auto expected = make_xy_registry(n);
  if (!same_registry(p_.registry(), expected))
    throw std::invalid_argument("BiquadraticForm: registry is not {x1..xn, y1..yn}");
  const auto nn = static_cast<std::uint32_t>(n);
  for (const auto& [m, c] : p_.terms()) {
    if (range_degree(m, 0, nn) != 2 || range_degree(m, nn, 2 * nn) != 2)
      throw std::invalid_argument("BiquadraticForm: term is not of bidegree (2,2)");
  }
}

VarId BiquadraticForm::x(std::size_t i) const {
  if (i < 1 || i > n_) throw std::out_of_range("BiquadraticForm: x index out of range");
  return VarId{static_cast<std::uint32_t>(i - 1)};
}

VarId BiquadraticForm::y(std::size_t i) const {
  if (i < 1 || i > n_) throw std::out_of_range("BiquadraticForm: y index out of range");
  return VarId{static_cast<std::uint32_t>(n_ + i - 1)};
}

BiquadraticForm BiquadraticForm::operator+(const BiquadraticForm& o) const {
  if (n_ != o.n_) throw std::invalid_argument("BiquadraticForm: dimension mismatch");
  return BiquadraticForm(n_, p_ + o.p_);
}

BiquadraticForm BiquadraticForm::operator-(const BiquadraticForm& o) const {
  if (n_ != o.n_) throw std::invalid_argument("BiquadraticForm: dimension mismatch");
  return BiquadraticForm(n_, p_ - o.p_);
}

BiquadraticForm BiquadraticForm::scale(const Rational& c) const {
  return BiquadraticForm(n_, p_.scale(c));
}

BiquadraticForm biquadratic_of_map(const LinearMap& m) {
  m.require_hermiticity_preserving();
  const std::size_t n = m.dim();
  auto reg = make_xy_registry(n);
  Polynomial::TermMap terms;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const RatMatrix& b = m.block(i, j);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const Rational& c = b.at(k, l);
          if (c.is_zero()) continue;
          Monomial mono = Monomial::variable(VarId{static_cast<std::uint32_t>(i)}) *
                          Monomial::variable(VarId{static_cast<std::uint32_t>(j)}) *
                          Monomial::variable(VarId{static_cast<std::uint32_t>(n + k)}) *
                          Monomial::variable(VarId{static_cast<std::uint32_t>(n + l)});
          auto [it, inserted] = terms.emplace(std::move(mono), c);
          if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
          }
        }
    }
  return BiquadraticForm(n, Polynomial(std::move(reg), std::move(terms)));
}

LinearMap map_from_biquadratic(const BiquadraticForm& b) {
  const std::size_t n = b.n();
  const auto nn = static_cast<std::uint32_t>(n);
  std::vector<std::vector<RatMatrix>> blocks(n, std::vector<RatMatrix>(n, RatMatrix(n)));
  const Rational half(1, 2);
  for (const auto& [mono, c] : b.poly().terms()) {
    // Split the monomial into x factors (i <= j) and y factors (k <= l);
    // factor lists are sorted, and the bidegree is validated on construction.
    std::uint32_t xs[2], ys[2];
    std::size_t nx = 0, ny = 0;
    for (const auto& [v, e] : mono.factors()) {
      for (std::uint32_t r = 0; r < e; ++r) {
        if (v.index < nn)
          xs[nx++] = v.index;
        else
          ys[ny++] = v.index - nn;
      }
    }
    const std::uint32_t i = xs[0], j = xs[1], k = ys[0], l = ys[1];
    if (i == j && k == l) {
      blocks[i][i].at(k, k) += c;
    } else if (i == j) {
      blocks[i][i].at(k, l) += c * half;
      blocks[i][i].at(l, k) += c * half;
    } else if (k == l) {
      blocks[i][j].at(k, k) += c * half;
      blocks[j][i].at(k, k) += c * half;
    } else {
      blocks[i][j].at(k, l) += c * half;
      blocks[j][i].at(l, k) += c * half;
    }
  }
  return LinearMap(n, std::move(blocks));
}

bool is_scalar_multiple(const Polynomial& a, const Polynomial& b) {
  if (!same_registry(a.registry(), b.registry())) return false;
  if (a.is_zero() || b.is_zero()) return false;
  if (a.term_count() != b.term_count()) return false;
  const auto& la = *a.terms().begin();
  const auto& lb = *b.terms().begin();
  if (la.first != lb.first) return false;
  Rational c = la.second / lb.second;
  return a == b.scale(c);
}

}  // namespace qihou
