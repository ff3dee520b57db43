#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qihou/polycore/rational.hpp"
#include "qihou/polycore/variables.hpp"

namespace qihou {

// Sparse exponent vector, kept sorted by variable index with all exponents
// positive.  The empty monomial is the constant 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<VarId, std::uint32_t>> factors);

  static Monomial variable(VarId v, std::uint32_t e = 1);

  const std::vector<std::pair<VarId, std::uint32_t>>& factors() const { return factors_; }
  bool is_constant() const { return factors_.empty(); }
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(VarId v) const;

  Monomial operator*(const Monomial& o) const;

  // Componentwise quotient; empty if some exponent of d exceeds ours.
  std::optional<Monomial> divide_by(const Monomial& d) const;

  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
  bool operator!=(const Monomial& o) const { return factors_ != o.factors_; }

 private:
  std::vector<std::pair<VarId, std::uint32_t>> factors_;
};

// Graded lexicographic order, wrapped so that std::map iteration starts at
// the leading term: higher total degree first, then lexicographically larger
// (smaller variable index, then higher exponent) first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Immutable multivariate polynomial with exact rational coefficients over a
// fixed variable registry.  All arithmetic requires matching registries.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  explicit Polynomial(VarRegistry::Ptr reg);
  Polynomial(VarRegistry::Ptr reg, TermMap terms);

  static Polynomial constant(VarRegistry::Ptr reg, const Rational& c);
  static Polynomial variable(VarRegistry::Ptr reg, VarId v);
  static Polynomial monomial(VarRegistry::Ptr reg, Monomial m, const Rational& c);

  const VarRegistry::Ptr& registry() const { return reg_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::uint32_t total_degree() const;  // 0 for the zero polynomial
  std::uint32_t degree_in(VarId v) const;
  std::set<VarId> used_vars() const;

  Rational coefficient_of(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scale(const Rational& c) const;
  Polynomial pow(std::uint32_t e) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Replaces each mapped variable by the given polynomial (over the same
  // registry as the replacements, which may differ from ours); unmapped
  // variables must be present in the target registry under the same name.
  Polynomial substitute(const std::map<VarId, Polynomial>& repl,
                        const VarRegistry::Ptr& target) const;

  // Substitution within the same registry, mapped variables replaced,
  // the rest untouched.
  Polynomial substitute(const std::map<VarId, Polynomial>& repl) const;

  Rational evaluate(const std::vector<Rational>& point) const;
  double evaluate_double(const std::vector<double>& point) const;

  // Exact polynomial quotient; empty when the division leaves a remainder.
  std::optional<Polynomial> exact_divide(const Polynomial& divisor) const;

 private:
  void check_same(const Polynomial& o) const;

  VarRegistry::Ptr reg_;
  TermMap terms_;  // nonzero coefficients only
};

// The polynomial q with p = ... + q·v^e + ... when p is written out by
// powers of v; q does not involve v.
Polynomial coefficient_in(const Polynomial& p, VarId v, std::uint32_t e);

// Averages p over all sign flips of the given variables, which keeps exactly
// the terms of even degree in each of them. Idempotent and linear.
Polynomial sign_symmetrize(const Polynomial& p, const std::set<VarId>& vars);

// B^2 - 4AC for a polynomial of degree at most 2 in v, written
// A v^2 + B v + C.  Throws if the degree in v exceeds 2.
Polynomial quadratic_discriminant(const Polynomial& p, VarId v);

}  // namespace qihou
