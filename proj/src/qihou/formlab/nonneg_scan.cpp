#include "qihou/formlab/nonneg_scan.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "qihou/util/parallel.hpp"
#include "qihou/util/rng.hpp"

namespace qihou {

namespace {

struct Term {
  double c;
  std::vector<std::uint32_t> vars;  // variable indices, repeated per exponent
};

struct Compiled {
  std::size_t nvars = 0;
  std::vector<Term> value;
  std::vector<std::vector<Term>> grad;  // per variable
};

Compiled compile(const Polynomial& p) {
  Compiled c;
  c.nvars = p.registry()->size();
  c.grad.resize(c.nvars);
  for (const auto& [m, coef] : p.terms()) {
    Term t;
    t.c = coef.to_double();
    for (const auto& [v, e] : m.factors())
      for (std::uint32_t r = 0; r < e; ++r) t.vars.push_back(v.index);
    c.value.push_back(std::move(t));
    for (const auto& [v, e] : m.factors()) {
      Term g;
      g.c = coef.to_double() * e;
      for (const auto& [w, we] : m.factors()) {
        std::uint32_t reps = (w == v) ? we - 1 : we;
        for (std::uint32_t r = 0; r < reps; ++r) g.vars.push_back(w.index);
      }
      c.grad[v.index].push_back(std::move(g));
    }
  }
  return c;
}

double eval_terms(const std::vector<Term>& terms, const std::vector<double>& x) {
  double s = 0.0;
  for (const auto& t : terms) {
    double p = t.c;
    for (std::uint32_t u : t.vars) p *= x[u];
    s += p;
  }
  return s;
}

struct Restart {
  double value = std::numeric_limits<double>::infinity();
  std::vector<double> point;
};

class SphereDescent {
 public:
  SphereDescent(const Compiled& c, const std::vector<std::vector<std::uint32_t>>& blocks)
      : c_(c), blocks_(blocks) {}

  Restart run(std::uint64_t seed) const {
    Rng rng(seed);
    std::vector<double> x(c_.nvars, 0.0);
    for (const auto& blk : blocks_)
      for (std::uint32_t v : blk) x[v] = rng.normal();
    project(x);

    std::vector<double> g(c_.nvars), rg(c_.nvars), prev_x, prev_rg;
    Restart best;
    double f = eval_terms(c_.value, x);
    best.value = f;
    best.point = x;

    double alpha = 1e-2;
    for (int iter = 0; iter < 400; ++iter) {
      for (std::size_t v = 0; v < c_.nvars; ++v) g[v] = eval_terms(c_.grad[v], x);
      riemannian(x, g, rg);
      double rg2 = 0.0;
      for (std::size_t v = 0; v < c_.nvars; ++v) rg2 += rg[v] * rg[v];
      if (rg2 < 1e-26) break;

      if (iter > 0) {
        double sy = 0.0, ss = 0.0;
        for (std::size_t v = 0; v < c_.nvars; ++v) {
          double dx = x[v] - prev_x[v];
          double dg = rg[v] - prev_rg[v];
          ss += dx * dx;
          sy += dx * dg;
        }
        alpha = (sy > 1e-30) ? ss / sy : 1e-3;
        if (alpha < 1e-12) alpha = 1e-12;
        if (alpha > 1e2) alpha = 1e2;
      }
      prev_x = x;
      prev_rg = rg;

      double step = alpha;
      bool moved = false;
      for (int bt = 0; bt < 40; ++bt) {
        std::vector<double> cand = prev_x;
        for (std::size_t v = 0; v < c_.nvars; ++v) cand[v] -= step * rg[v];
        project(cand);
        double fc = eval_terms(c_.value, cand);
        if (fc <= f - 1e-4 * step * rg2 || fc < f) {
          x = std::move(cand);
          f = fc;
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) break;
      if (f < best.value) {
        best.value = f;
        best.point = x;
      }
    }
    return best;
  }

 private:
  void project(std::vector<double>& x) const {
    for (const auto& blk : blocks_) {
      double n2 = 0.0;
      for (std::uint32_t v : blk) n2 += x[v] * x[v];
      if (n2 <= 0.0) {
        for (std::uint32_t v : blk) x[v] = 0.0;
        x[blk.front()] = 1.0;
        continue;
      }
      double inv = 1.0 / std::sqrt(n2);
      for (std::uint32_t v : blk) x[v] *= inv;
    }
  }

  void riemannian(const std::vector<double>& x, const std::vector<double>& g,
                  std::vector<double>& rg) const {
    for (std::size_t v = 0; v < c_.nvars; ++v) rg[v] = 0.0;
    for (const auto& blk : blocks_) {
      double dot = 0.0;
      for (std::uint32_t v : blk) dot += g[v] * x[v];
      for (std::uint32_t v : blk) rg[v] = g[v] - dot * x[v];
    }
  }

  const Compiled& c_;
  const std::vector<std::vector<std::uint32_t>>& blocks_;
};

}  // namespace

ScanResult nonnegativity_scan(const Polynomial& p, const std::vector<std::vector<VarId>>& blocks,
                              std::size_t restarts, double tol, std::uint64_t seed) {
  if (restarts < 1) throw std::invalid_argument("nonnegativity_scan: restarts must be >= 1");
  if (blocks.empty()) throw std::invalid_argument("nonnegativity_scan: no variable blocks");

  std::set<std::uint32_t> seen;
  std::vector<std::vector<std::uint32_t>> blk;
  for (const auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("nonnegativity_scan: empty variable block");
    std::vector<std::uint32_t> ids;
    for (VarId v : b) {
      if (v.index >= p.registry()->size())
        throw std::invalid_argument("nonnegativity_scan: block variable outside registry");
      if (!seen.insert(v.index).second)
        throw std::invalid_argument("nonnegativity_scan: blocks overlap");
      ids.push_back(v.index);
    }
    blk.push_back(std::move(ids));
  }
  for (VarId v : p.used_vars())
    if (!seen.count(v.index))
      throw std::invalid_argument("nonnegativity_scan: used variable not covered by any block");
  for (const auto& b : blocks) {
    long deg = -1;
    for (const auto& [m, c] : p.terms()) {
      long d = 0;
      for (VarId v : b) d += m.degree_in(v);
      if (deg < 0) deg = d;
      if (d != deg)
        throw std::invalid_argument("nonnegativity_scan: polynomial not homogeneous in a block");
    }
  }

  Compiled c = compile(p);
  SphereDescent descent(c, blk);
  std::vector<Restart> slots(restarts);
  parallel_for(restarts, [&](std::size_t i) { slots[i] = descent.run(seed + i); });

  ScanResult r;
  r.restarts = restarts;
  r.tol = tol;
  r.seed = seed;
  r.min_found = std::numeric_limits<double>::infinity();
  for (const auto& s : slots) {
    if (s.value < r.min_found) {
      r.min_found = s.value;
      r.argmin = s.point;
    }
  }
  if (r.argmin.empty()) r.argmin.assign(c.nvars, 0.0);
  r.all_nonneg_evidence = r.min_found >= -tol;
  return r;
}

ScanResult nonnegativity_scan(const BiquadraticForm& b, std::size_t restarts, double tol,
                              std::uint64_t seed) {
  std::vector<std::vector<VarId>> blocks(2);
  for (std::size_t i = 1; i <= b.n(); ++i) {
    blocks[0].push_back(b.x(i));
    blocks[1].push_back(b.y(i));
  }
  return nonnegativity_scan(b.poly(), blocks, restarts, tol, seed);
}

}  // namespace qihou
