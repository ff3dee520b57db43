#include "qihou/spanscan/spanscan.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qihou/util/parallel.hpp"
#include "qihou/util/rng.hpp"

namespace qihou {

namespace {

Eigen::MatrixXd to_dense(const BlockMatrix& w) {
  const std::size_t d = w.dim();
  Eigen::MatrixXd m(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = w.at(r, c).to_double();
  return m;
}

Eigen::VectorXcd random_unit(Rng& rng, std::size_t n) {
  Eigen::VectorXcd v(n);
  for (std::size_t i = 0; i < n; ++i) {
    double re = rng.normal();
    double im = rng.normal();
    v(static_cast<Eigen::Index>(i)) = std::complex<double>(re, im);
  }
  double norm = v.norm();
  if (norm <= 0.0) {
    v.setZero();
    v(0) = 1.0;
    return v;
  }
  return v / norm;
}

// eta-side contraction: M(k,l) = sum_ij conj(xi_i) xi_j W[(i,k),(j,l)].
Eigen::MatrixXcd contract_xi(const Eigen::MatrixXd& w, const Eigen::VectorXcd& xi) {
  const auto n = xi.size();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      std::complex<double> c = std::conj(xi(i)) * xi(j);
      if (c == std::complex<double>(0.0, 0.0)) continue;
      for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index l = 0; l < n; ++l) m(k, l) += c * w(i * n + k, j * n + l);
    }
  return m;
}

// xi-side contraction: N(i,j) = sum_kl conj(eta_k) eta_l W[(i,k),(j,l)].
Eigen::MatrixXcd contract_eta(const Eigen::MatrixXd& w, const Eigen::VectorXcd& eta) {
  const auto n = eta.size();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index l = 0; l < n; ++l) {
      std::complex<double> c = std::conj(eta(k)) * eta(l);
      if (c == std::complex<double>(0.0, 0.0)) continue;
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) += c * w(i * n + k, j * n + l);
    }
  return m;
}

std::pair<Eigen::VectorXcd, double> bottom_eigenvector(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("seesaw: eigendecomposition failed");
  Eigen::VectorXcd v = es.eigenvectors().col(0);
  v /= v.norm();
  return {v, es.eigenvalues()(0)};
}

std::pair<ProductVector, double> seesaw_from(const Eigen::MatrixXd& w, std::size_t n,
                                             std::uint64_t seed, std::size_t max_iters,
                                             double tol) {
  Rng rng(seed);
  ProductVector pv{random_unit(rng, n), random_unit(rng, n)};
  double prev = std::numeric_limits<double>::infinity();
  for (std::size_t it = 0; it < max_iters; ++it) {
    auto [eta, val_eta] = bottom_eigenvector(contract_xi(w, pv.xi));
    pv.eta = eta;
    auto [xi, val] = bottom_eigenvector(contract_eta(w, pv.eta));
    pv.xi = xi;
    if (it > 0 && val > prev + 1e-9 * (1.0 + std::abs(prev)))
      throw std::logic_error("seesaw: objective increased");
    if (it > 0 && std::abs(prev - val) < tol) {
      prev = val;
      break;
    }
    prev = val;
  }
  return {pv, prev};
}

// <xi,eta| W |xi,eta> evaluated in exact arithmetic: doubles are dyadic
// rationals and the witness entries are rational, so the expectation of the
// returned pair has an exact value free of floating-point noise.
Rational exact_expectation(const BlockMatrix& w, const ProductVector& pv) {
  const auto n = pv.xi.size();
  std::vector<Rational> re(static_cast<std::size_t>(n * n));
  std::vector<Rational> im(static_cast<std::size_t>(n * n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k) {
      Rational xr{mpq_class(pv.xi(i).real())}, xi_{mpq_class(pv.xi(i).imag())};
      Rational yr{mpq_class(pv.eta(k).real())}, yi{mpq_class(pv.eta(k).imag())};
      re[static_cast<std::size_t>(i * n + k)] = xr * yr - xi_ * yi;
      im[static_cast<std::size_t>(i * n + k)] = xr * yi + xi_ * yr;
    }
  // v^dagger W v for real symmetric W: the imaginary part cancels exactly.
  Rational acc;
  const std::size_t d = w.dim();
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      const Rational& wrc = w.at(r, c);
      if (wrc.is_zero()) continue;
      acc += wrc * (re[r] * re[c] + im[r] * im[c]);
    }
  return acc;
}

// Converged candidates sit within ~1e-7 of the zero set (the eigensolver
// noise floor of the descent), so their exact expectation is at most ~1e-13.
// The descent can instead run out of its iteration budget inside flat
// valleys of the objective, a finite distance from the zero set: there the
// value is quartic in that distance, so a drifting point 1e-3 away still
// shows a value around 1e-10 — inside any practical acceptance window, yet
// far enough out to pollute the span estimate with spurious directions. The
// exact expectation separates the two populations by three orders of
// magnitude; candidates above this cut are dropped as unconverged.
constexpr double kConvergedValueTol = 1e-12;

// A drifting candidate crawls along a valley toward a zero supported on a
// coordinate subspace, its off-support components decaying only algebraically.
// Its limit is recovered directly: zero out the small components of each
// factor, renormalize, and keep the result only if its exact expectation
// confirms it lies on the zero set. Components are split by a relative cut;
// the populations sit at O(1) and below a few times 1e-2, so the cut is not
// delicate.
constexpr double kSnapRelCut = 0.05;

ProductVector snap_to_support(const ProductVector& pv) {
  ProductVector out = pv;
  for (auto* vec : {&out.xi, &out.eta}) {
    double top = 0.0;
    for (Eigen::Index i = 0; i < vec->size(); ++i) top = std::max(top, std::abs((*vec)(i)));
    for (Eigen::Index i = 0; i < vec->size(); ++i)
      if (std::abs((*vec)(i)) < kSnapRelCut * top) (*vec)(i) = 0.0;
    *vec /= vec->norm();
  }
  return out;
}

bool near_duplicate(const ProductVector& a, const ProductVector& b) {
  double overlap = std::abs(a.xi.dot(b.xi)) * std::abs(a.eta.dot(b.eta));
  return overlap >= 1.0 - 1e-6;
}

constexpr std::size_t kZeroSetCap = 2048;

}  // namespace

std::string witness_fingerprint(const BlockMatrix& w) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= static_cast<unsigned char>(';');
    h *= 1099511628211ull;
  };
  mix(std::to_string(w.block_dim()));
  for (std::size_t r = 0; r < w.dim(); ++r)
    for (std::size_t c = 0; c < w.dim(); ++c) mix(w.at(r, c).to_string());
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

double product_expectation(const BlockMatrix& w, const ProductVector& v) {
  const auto n = static_cast<Eigen::Index>(w.block_dim());
  if (v.xi.size() != n || v.eta.size() != n)
    throw std::invalid_argument("product_expectation: dimension mismatch");
  Eigen::MatrixXcd m = contract_xi(to_dense(w), v.xi);
  std::complex<double> val = v.eta.dot(m * v.eta);  // dot conjugates its left argument
  return val.real();
}

std::pair<ProductVector, double> seesaw_minimize(const BlockMatrix& w, std::uint64_t seed,
                                                 std::size_t max_iters, double tol) {
  if (max_iters < 1) throw std::invalid_argument("seesaw_minimize: max_iters must be >= 1");
  return seesaw_from(to_dense(w), w.block_dim(), seed, max_iters, tol);
}

ZeroSet collect_zero_set(const BlockMatrix& w, std::size_t restarts, double zero_tol,
                         std::uint64_t seed) {
  if (restarts < 1) throw std::invalid_argument("collect_zero_set: restarts must be >= 1");
  const std::size_t n = w.block_dim();
  Eigen::MatrixXd dense = to_dense(w);

  struct Candidate {
    ProductVector pv;
    double value = 0.0;
    bool converged = false;
  };
  std::vector<Candidate> slots(restarts);
  parallel_for(restarts, [&](std::size_t i) {
    auto [pv, value] = seesaw_from(dense, n, seed + i, 200, 1e-14);
    Candidate c{std::move(pv), value, false};
    if (std::abs(value) <= zero_tol) {
      c.value = exact_expectation(w, c.pv).to_double();
      c.converged = c.value <= kConvergedValueTol;
      if (!c.converged) {
        ProductVector snapped = snap_to_support(c.pv);
        const double snapped_value = exact_expectation(w, snapped).to_double();
        if (snapped_value <= kConvergedValueTol) {
          c.pv = std::move(snapped);
          c.value = snapped_value;
          c.converged = true;
        }
      }
    }
    slots[i] = std::move(c);
  });

  ZeroSet z;
  z.tol = zero_tol;
  z.witness_fingerprint = witness_fingerprint(w);
  for (const auto& [pv, value, converged] : slots) {
    if (!converged || std::abs(value) > zero_tol) continue;
    ++z.total_found;
    if (z.vectors.size() >= kZeroSetCap) continue;
    bool dup = false;
    for (const auto& kept : z.vectors)
      if (near_duplicate(pv, kept)) {
        dup = true;
        break;
      }
    if (!dup) {
      z.vectors.push_back(pv);
      z.expectations.push_back(value);
    }
  }
  return z;
}

SpanReport span_report(const BlockMatrix& w, std::size_t restarts, double zero_tol,
                       double rank_tol, std::uint64_t seed, bool use_partial_transpose) {
  const BlockMatrix target = use_partial_transpose ? partial_transpose(w) : w;
  SpanReport r;
  r.n = w.block_dim();
  r.restarts = restarts;
  r.zero_tol = zero_tol;
  r.rank_tol = rank_tol;
  r.seed = seed;
  r.used_partial_transpose = use_partial_transpose;
  r.zeros = collect_zero_set(target, restarts, zero_tol, seed);

  const auto n = static_cast<Eigen::Index>(r.n);
  const auto rows = static_cast<Eigen::Index>(r.zeros.vectors.size());
  if (rows == 0) return r;
  Eigen::MatrixXcd stacked(rows, n * n);
  for (Eigen::Index m = 0; m < rows; ++m) {
    const ProductVector& pv = r.zeros.vectors[static_cast<std::size_t>(m)];
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index k = 0; k < n; ++k) stacked(m, i * n + k) = pv.xi(i) * pv.eta(k);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked);
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    r.singular_values.push_back(svd.singularValues()(i));
  if (!r.singular_values.empty()) {
    double cut = rank_tol * r.singular_values.front();
    for (double s : r.singular_values)
      if (s > cut) ++r.rank;
  }
  r.has_spanning = r.rank == r.n * r.n;
  return r;
}

}  // namespace qihou
