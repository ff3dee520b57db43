#include "qihou/formlab/forms.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace qihou {

namespace {

Monomial xy_monomial(std::size_t n, std::size_t xi, std::size_t xj, std::size_t yk,
                     std::size_t yl) {
  // 1-based indices; xi and xj (resp. yk, yl) may coincide.
  auto x = [&](std::size_t i) { return VarId{static_cast<std::uint32_t>(i - 1)}; };
  auto y = [&](std::size_t i) { return VarId{static_cast<std::uint32_t>(n + i - 1)}; };
  return Monomial::variable(x(xi)) * Monomial::variable(x(xj)) * Monomial::variable(y(yk)) *
         Monomial::variable(y(yl));
}

void add_term(Polynomial::TermMap& t, Monomial m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

std::size_t shift_index(std::size_t i, std::size_t k, std::size_t n) {
  return (i - 1 + k) % n + 1;
}

}  // namespace

BiquadraticForm qi_hou_form(std::size_t n, std::size_t k) {
  if (n < 2) throw std::invalid_argument("qi_hou_form: n must be at least 2");
  if (k < 1 || k > n - 1) throw std::invalid_argument("qi_hou_form: k must be in [1, n-1]");
  auto reg = make_xy_registry(n);
  Polynomial::TermMap t;
  const Rational diag(static_cast<long>(n) - 2);
  for (std::size_t i = 1; i <= n; ++i) {
    add_term(t, xy_monomial(n, i, i, i, i), diag);
    std::size_t s = shift_index(i, k, n);
    add_term(t, xy_monomial(n, s, s, i, i), Rational(1));
  }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      add_term(t, xy_monomial(n, i, j, i, j), Rational(-2));
  return BiquadraticForm(n, Polynomial(std::move(reg), std::move(t)));
}

BiquadraticForm block_term(std::size_t n, std::size_t k, std::size_t d) {
  if (k < 1 || n % k != 0) throw std::invalid_argument("block_term: k must divide n");
  const std::size_t m = n / k;
  if (m < 2) throw std::invalid_argument("block_term: n/k must be at least 2");
  if (d < 1 || d > k) throw std::invalid_argument("block_term: d must be in [1, k]");
  auto reg = make_xy_registry(n);
  Polynomial::TermMap t;
  const Rational diag(static_cast<long>(m) - 2);
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < m; ++j) idx.push_back(d + j * k);
  for (std::size_t i : idx) {
    add_term(t, xy_monomial(n, i, i, i, i), diag);
    std::size_t s = shift_index(i, k, n);
    add_term(t, xy_monomial(n, s, s, i, i), Rational(1));
  }
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      add_term(t, xy_monomial(n, idx[a], idx[b], idx[a], idx[b]), Rational(-2));
  return BiquadraticForm(n, Polynomial(std::move(reg), std::move(t)));
}

BiquadraticForm cross_square(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw std::invalid_argument("cross_square: indices must be distinct and in [1, n]");
  auto reg = make_xy_registry(n);
  Polynomial::TermMap t;
  add_term(t, xy_monomial(n, i, i, i, i), Rational(1));
  add_term(t, xy_monomial(n, j, j, j, j), Rational(1));
  add_term(t, xy_monomial(n, std::min(i, j), std::max(i, j), std::min(i, j), std::max(i, j)),
           Rational(-2));
  return BiquadraticForm(n, Polynomial(std::move(reg), std::move(t)));
}

Permutation mu_permutation(std::size_t n, std::size_t q) {
  if (n < 3) throw std::invalid_argument("mu_permutation: n must be at least 3");
  if (q < 1 || q > n - 1) throw std::invalid_argument("mu_permutation: q must be in [1, n-1]");
  const std::size_t k = std::gcd(n, q);
  std::vector<std::uint32_t> image_one_based(n);
  for (std::size_t d = 1; d <= k; ++d)
    for (std::size_t j = 0; j < n / k; ++j) {
      std::size_t src = d + k * j;
      std::size_t img = (d + q * j - 1) % n + 1;
      image_one_based[src - 1] = static_cast<std::uint32_t>(img);
    }
  Permutation mu = Permutation::from_one_based(image_one_based);
  Permutation sk = Permutation::shift(n, k);
  Permutation sq = Permutation::shift(n, q);
  if (mu.compose(sk) != sq.compose(mu))
    throw std::logic_error("mu_permutation: intertwining check failed");
  return mu;
}

BiquadraticForm permute_form(const BiquadraticForm& b, const Permutation& mu) {
  const std::size_t n = b.n();
  if (mu.size() != n) throw std::invalid_argument("permute_form: dimension mismatch");
  const auto& reg = b.registry();
  std::map<VarId, Polynomial> repl;
  for (std::uint32_t i = 0; i < n; ++i) {
    repl.emplace(VarId{i}, Polynomial::variable(reg, VarId{mu(i)}));
    repl.emplace(VarId{static_cast<std::uint32_t>(n + i)},
                 Polynomial::variable(reg, VarId{static_cast<std::uint32_t>(n) + mu(i)}));
  }
  return BiquadraticForm(n, b.poly().substitute(repl));
}

RenameResult rename_to_reduced(std::size_t n, std::size_t k, std::size_t d) {
  BiquadraticForm bt = block_term(n, k, d);
  const std::size_t m = n / k;
  auto reduced_reg = make_xy_registry(m);
  std::map<VarId, Polynomial> repl;
  for (std::uint32_t j = 0; j < m; ++j) {
    auto src_x = static_cast<std::uint32_t>(d - 1 + j * k);
    auto src_y = static_cast<std::uint32_t>(n + d - 1 + j * k);
    repl.emplace(VarId{src_x}, Polynomial::variable(reduced_reg, VarId{j}));
    repl.emplace(VarId{src_y},
                 Polynomial::variable(reduced_reg, VarId{static_cast<std::uint32_t>(m) + j}));
  }
  BiquadraticForm renamed(m, bt.poly().substitute(repl, reduced_reg));

  BiquadraticForm reduced_x = qi_hou_form(m, 1);
  Polynomial::TermMap t;
  const Rational diag(static_cast<long>(m) - 2);
  for (std::size_t i = 1; i <= m; ++i) {
    add_term(t, xy_monomial(m, i, i, i, i), diag);
    std::size_t s = shift_index(i, 1, m);
    add_term(t, xy_monomial(m, i, i, s, s), Rational(1));
  }
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j)
      add_term(t, xy_monomial(m, i, j, i, j), Rational(-2));
  BiquadraticForm reduced_y(m, Polynomial(reduced_reg, std::move(t)));

  RenameResult r{renamed, false, false, false};
  r.matches_shift_on_x = renamed == reduced_x;
  r.matches_shift_on_y = renamed == reduced_y;
  r.matches_reduced = r.matches_shift_on_x;
  return r;
}

SpecialForms special_forms() {
  auto xyzw = VarRegistry::make({"x", "y", "z", "w"});
  auto pqstuv = VarRegistry::make({"p", "q", "s", "t", "u", "v"});
  auto var = [](const VarRegistry::Ptr& r, const char* name) {
    return Polynomial::variable(r, r->id(name));
  };
  Polynomial x = var(xyzw, "x"), y = var(xyzw, "y"), z = var(xyzw, "z"), w = var(xyzw, "w");

  Polynomial o_direct = x.pow(4) * z.pow(2) * w.pow(2) + y.pow(4) * x.pow(2) * w.pow(2) +
                        z.pow(4) * x.pow(2) * y.pow(2) + w.pow(4) * y.pow(2) * z.pow(2) -
                        (x * y * z * w).pow(2).scale(Rational(4));

  BiquadraticForm b41 = qi_hou_form(4, 1);
  std::map<VarId, Polynomial> sub_o;
  const Polynomial xs[4] = {y * z * w, z * w * x, w * x * y, x * y * z};
  const Polynomial ys[4] = {x, y, z, w};
  for (std::uint32_t i = 0; i < 4; ++i) {
    sub_o.emplace(VarId{i}, xs[i]);
    sub_o.emplace(VarId{4 + i}, ys[i]);
  }
  Polynomial o_sub = b41.poly().substitute(sub_o, xyzw);
  if (o_sub != o_direct)
    throw std::logic_error("special_forms: octic substitution disagrees with its display");

  Polynomial o_prime = w.pow(8) + x.pow(4) * y.pow(2) * z.pow(2) + y.pow(4) * x.pow(2) * z.pow(2) +
                       z.pow(4) * x.pow(2) * y.pow(2) -
                       (x.pow(2) * y.pow(2) * z.pow(2) * w.pow(2)).scale(Rational(4));

  Polynomial p = var(pqstuv, "p"), q = var(pqstuv, "q"), s = var(pqstuv, "s"),
             t = var(pqstuv, "t"), u = var(pqstuv, "u"), v = var(pqstuv, "v");
  Polynomial q_direct = v.pow(4) +
                        (p.pow(2) * q.pow(2) + s.pow(2) * t.pow(2) + u.pow(2) * v.pow(2))
                            .scale(Rational(2)) +
                        q.pow(2) * s.pow(2) + t.pow(2) * u.pow(2) + p.pow(2) * u.pow(2) -
                        (p * q * s * t).scale(Rational(2)) - (p * q * u * v).scale(Rational(4)) -
                        (s * t * u * v).scale(Rational(4));

  std::map<VarId, Polynomial> sub_q;
  const Polynomial qxs[4] = {p, s, u, v};
  const Polynomial qys[4] = {q, t, v, u};
  for (std::uint32_t i = 0; i < 4; ++i) {
    sub_q.emplace(VarId{i}, qxs[i]);
    sub_q.emplace(VarId{4 + i}, qys[i]);
  }
  Polynomial q_sub = b41.poly().substitute(sub_q, pqstuv);
  if (q_sub != q_direct)
    throw std::logic_error("special_forms: quartic substitution disagrees with its display");

  return SpecialForms{std::move(xyzw), std::move(pqstuv), std::move(o_direct),
                      std::move(o_prime), std::move(q_direct)};
}

}  // namespace qihou
