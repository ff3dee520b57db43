#pragma once

#include "qihou/formlab/biquadratic.hpp"
#include "qihou/mapcore/permutation.hpp"

namespace qihou {

/// The closed-form biquadratic of the diagonal-replacement map:
/// (n-2)·sum x_i^2 y_i^2 + sum x_{s(i)}^2 y_i^2 - 2·sum_{i<j} x_i y_i x_j y_j,
/// s the shift by k. n = 2 is accepted for the degenerate reduced case,
/// where the form collapses to (x1 y2 - x2 y1)^2.
BiquadraticForm qi_hou_form(std::size_t n, std::size_t k);

/// The restriction of the form to one residue class of indices: the same
/// three sums taken only over i ≡ d (mod k), 1 <= d <= k, with the diagonal
/// coefficient n/k - 2. Requires k | n and n/k >= 2.
BiquadraticForm block_term(std::size_t n, std::size_t k, std::size_t d);

/// The square (x_i y_i - x_j y_j)^2 in dimension n, 1-based indices.
BiquadraticForm cross_square(std::size_t n, std::size_t i, std::size_t j);

/// The permutation sending d + k·j to d + q·j (mod n, 1-based) for
/// k = gcd(n, q); it intertwines the shifts: mu ∘ shift_k = shift_q ∘ mu,
/// which is re-checked pointwise on construction.
Permutation mu_permutation(std::size_t n, std::size_t q);

/// Simultaneous renaming x_i -> x_{mu(i)}, y_i -> y_{mu(i)}.
BiquadraticForm permute_form(const BiquadraticForm& b, const Permutation& mu);

struct RenameResult {
  BiquadraticForm renamed;   // block_term(n,k,d) over {x1..x_{n/k}, y1..y_{n/k}}
  bool matches_reduced;      // renamed == qi_hou_form(n/k, 1)
  bool matches_shift_on_x;   // reduced form with the shift on the x index (same test)
  bool matches_shift_on_y;   // variant with the shift on the y index instead
};

/// Renames x_{d+ik} -> x_{i+1}, y_{d+ik} -> y_{i+1} in block_term(n,k,d) and
/// compares against the reduced form under both index conventions. The shift
/// lands on the x index; the y variant agrees only in the degenerate
/// two-index case, where the shift is an involution.
RenameResult rename_to_reduced(std::size_t n, std::size_t k, std::size_t d);

struct SpecialForms {
  VarRegistry::Ptr xyzw;    // {x, y, z, w}
  VarRegistry::Ptr pqstuv;  // {p, q, s, t, u, v}
  Polynomial o;             // quaternary octic, built two ways and cross-checked
  Polynomial o_prime;       // quaternary octic
  Polynomial q;             // senary quartic, built two ways and cross-checked
};

/// The three named forms. o and q are constructed both from their explicit
/// monomial displays and by substitution into the n=4, k=1 biquadratic;
/// construction throws if the two ways disagree.
SpecialForms special_forms();

}  // namespace qihou
