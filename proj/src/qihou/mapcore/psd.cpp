#include "qihou/mapcore/psd.hpp"

#include <stdexcept>

namespace qihou {

namespace {

struct Elimination {
  std::size_t r;
  Rational d;
  std::vector<Rational> row;  // row r of the working matrix when r was eliminated
};

// Extends a residual witness backwards through the eliminations so that the
// quadratic form value is preserved against the original matrix. Processing
// in reverse keeps not-yet-lifted coordinates at zero, so stale row entries
// of earlier pivots never contribute.
std::vector<Rational> lift_witness(std::vector<Rational> u,
                                   const std::vector<Elimination>& elims) {
  for (auto it = elims.rbegin(); it != elims.rend(); ++it) {
    Rational s(0);
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (j == it->r || u[j].is_zero()) continue;
      s += it->row[j] * u[j];
    }
    u[it->r] = -s / it->d;
  }
  return u;
}

}  // namespace

PsdVerdict is_psd_exact(const RatMatrix& s) {
  if (!s.is_symmetric()) throw std::invalid_argument("is_psd_exact: matrix is not symmetric");
  const std::size_t n = s.dim();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = s.at(i, j);

  std::vector<bool> remaining(n, true);
  std::vector<Elimination> elims;
  PsdVerdict v;

  auto finish_not_psd = [&](std::vector<Rational> u) {
    v.psd = false;
    v.witness = lift_witness(std::move(u), elims);
    v.witness_value = s.quadratic_form(v.witness);
    if (v.witness_value.sign() >= 0)
      throw std::logic_error("is_psd_exact: witness lifting lost negativity");
    return v;
  };

  while (true) {
    std::size_t best = n;
    for (std::size_t r = 0; r < n; ++r) {
      if (!remaining[r]) continue;
      int sg = a[r][r].sign();
      if (sg < 0) {
        std::vector<Rational> u(n, Rational(0));
        u[r] = Rational(1);
        return finish_not_psd(std::move(u));
      }
      if (sg > 0 && (best == n || a[r][r] > a[best][best])) best = r;
    }

    if (best == n) {
      // Every remaining diagonal entry is zero; any nonzero residual entry
      // exposes an indefinite 2x2 principal submatrix.
      for (std::size_t i = 0; i < n; ++i) {
        if (!remaining[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!remaining[j] || a[i][j].is_zero()) continue;
          std::vector<Rational> u(n, Rational(0));
          u[i] = Rational(1);
          u[j] = Rational(a[i][j].sign() > 0 ? -1 : 1);
          return finish_not_psd(std::move(u));
        }
      }
      v.psd = true;
      return v;
    }

    const Rational d = a[best][best];
    elims.push_back({best, d, a[best]});
    v.pivot_order.push_back(best);
    v.pivots.push_back(d);
    for (std::size_t i = 0; i < n; ++i) {
      if (!remaining[i] || i == best || a[i][best].is_zero()) continue;
      const Rational f = a[i][best] / d;
      for (std::size_t j = 0; j < n; ++j) {
        if (!remaining[j] || j == best) continue;
        a[i][j] -= f * a[best][j];
      }
    }
    remaining[best] = false;
  }
}

MapClassification classify_map(const LinearMap& m) {
  m.require_hermiticity_preserving();
  auto [c, w] = choi_and_witness(m);
  MapClassification r;
  r.cp_verdict = is_psd_exact(c.full());
  r.ccp_verdict = is_psd_exact(partial_transpose(c).full());
  r.completely_positive = r.cp_verdict.psd;
  r.completely_copositive = r.ccp_verdict.psd;
  return r;
}

}  // namespace qihou
