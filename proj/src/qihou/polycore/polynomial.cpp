#include "qihou/polycore/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace qihou {

Monomial::Monomial(std::vector<std::pair<VarId, std::uint32_t>> factors)
    : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].second == 0)
      throw std::invalid_argument("Monomial: zero exponent");
    if (i + 1 < factors_.size() && factors_[i].first == factors_[i + 1].first)
      throw std::invalid_argument("Monomial: repeated variable");
  }
}

Monomial Monomial::variable(VarId v, std::uint32_t e) {
  Monomial m;
  if (e > 0) m.factors_.push_back({v, e});
  return m;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

std::uint32_t Monomial::degree_in(VarId v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + o.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < factors_.size() && j < o.factors_.size()) {
    if (factors_[i].first < o.factors_[j].first) {
      r.factors_.push_back(factors_[i++]);
    } else if (o.factors_[j].first < factors_[i].first) {
      r.factors_.push_back(o.factors_[j++]);
    } else {
      r.factors_.push_back({factors_[i].first, factors_[i].second + o.factors_[j].second});
      ++i;
      ++j;
    }
  }
  while (i < factors_.size()) r.factors_.push_back(factors_[i++]);
  while (j < o.factors_.size()) r.factors_.push_back(o.factors_[j++]);
  return r;
}

std::optional<Monomial> Monomial::divide_by(const Monomial& d) const {
  Monomial r;
  std::size_t i = 0;
  for (const auto& [v, e] : d.factors_) {
    while (i < factors_.size() && factors_[i].first < v) {
      r.factors_.push_back(factors_[i++]);
    }
    if (i == factors_.size() || !(factors_[i].first == v) || factors_[i].second < e)
      return std::nullopt;
    if (factors_[i].second > e) r.factors_.push_back({v, factors_[i].second - e});
    ++i;
  }
  while (i < factors_.size()) r.factors_.push_back(factors_[i++]);
  return r;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  std::uint32_t da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (!(fa[i].first == fb[j].first)) return fa[i].first < fb[j].first;
    if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
    ++i;
    ++j;
  }
  return i < fa.size();
}

Polynomial::Polynomial(VarRegistry::Ptr reg) : reg_(std::move(reg)) {
  if (!reg_) throw std::invalid_argument("Polynomial: null registry");
}

Polynomial::Polynomial(VarRegistry::Ptr reg, TermMap terms)
    : reg_(std::move(reg)), terms_(std::move(terms)) {
  if (!reg_) throw std::invalid_argument("Polynomial: null registry");
  for (auto it = terms_.begin(); it != terms_.end();) {
    for (const auto& [v, e] : it->first.factors())
      if (v.index >= reg_->size())
        throw std::invalid_argument("Polynomial: variable outside registry");
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

Polynomial Polynomial::constant(VarRegistry::Ptr reg, const Rational& c) {
  TermMap t;
  if (!c.is_zero()) t.emplace(Monomial{}, c);
  return Polynomial(std::move(reg), std::move(t));
}

Polynomial Polynomial::variable(VarRegistry::Ptr reg, VarId v) {
  TermMap t;
  t.emplace(Monomial::variable(v), Rational(1));
  return Polynomial(std::move(reg), std::move(t));
}

Polynomial Polynomial::monomial(VarRegistry::Ptr reg, Monomial m, const Rational& c) {
  TermMap t;
  if (!c.is_zero()) t.emplace(std::move(m), c);
  return Polynomial(std::move(reg), std::move(t));
}

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

std::uint32_t Polynomial::degree_in(VarId v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
  return d;
}

std::set<VarId> Polynomial::used_vars() const {
  std::set<VarId> s;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) s.insert(v);
  return s;
}

Rational Polynomial::coefficient_of(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::check_same(const Polynomial& o) const {
  if (!same_registry(reg_, o.reg_))
    throw std::invalid_argument("Polynomial: mixed variable registries");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same(o);
  TermMap t = terms_;
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = t.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) t.erase(it);
    }
  }
  return Polynomial(reg_, std::move(t));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_same(o);
  TermMap t = terms_;
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = t.emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) t.erase(it);
    }
  }
  return Polynomial(reg_, std::move(t));
}

Polynomial Polynomial::operator-() const {
  TermMap t;
  for (const auto& [m, c] : terms_) t.emplace(m, -c);
  return Polynomial(reg_, std::move(t));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same(o);
  TermMap t;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma * mb;
      Rational c = ca * cb;
      auto [it, inserted] = t.emplace(std::move(m), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
      }
    }
  }
  return Polynomial(reg_, std::move(t));
}

Polynomial Polynomial::scale(const Rational& c) const {
  if (c.is_zero()) return Polynomial(reg_);
  TermMap t;
  for (const auto& [m, k] : terms_) t.emplace(m, k * c);
  return Polynomial(reg_, std::move(t));
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result = constant(reg_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return same_registry(reg_, o.reg_) && terms_ == o.terms_;
}

Polynomial Polynomial::substitute(const std::map<VarId, Polynomial>& repl,
                                  const VarRegistry::Ptr& target) const {
  for (const auto& [v, p] : repl)
    if (!same_registry(p.registry(), target))
      throw std::invalid_argument("substitute: replacement over wrong registry");

  std::map<VarId, std::vector<Polynomial>> powers;  // powers[v][e] = repl(v)^e
  auto replacement_power = [&](VarId v, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(constant(target, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * repl.at(v));
    return cache[e];
  };

  Polynomial result(target);
  for (const auto& [m, c] : terms_) {
    Polynomial term = constant(target, c);
    Monomial passthrough;
    for (const auto& [v, e] : m.factors()) {
      if (repl.count(v)) {
        term = term * replacement_power(v, e);
      } else {
        VarId tv = target->id(reg_->name(v));
        passthrough = passthrough * Monomial::variable(tv, e);
      }
    }
    if (!passthrough.is_constant())
      term = term * monomial(target, passthrough, Rational(1));
    result = result + term;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::map<VarId, Polynomial>& repl) const {
  return substitute(repl, reg_);
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != reg_->size())
    throw std::invalid_argument("evaluate: point dimension mismatch");
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m.factors()) t *= qihou::pow(point[v.index], e);
    sum += t;
  }
  return sum;
}

double Polynomial::evaluate_double(const std::vector<double>& point) const {
  if (point.size() != reg_->size())
    throw std::invalid_argument("evaluate_double: point dimension mismatch");
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c.to_double();
    for (const auto& [v, e] : m.factors()) {
      double base = point[v.index];
      for (std::uint32_t r = 0; r < e; ++r) t *= base;
    }
    sum += t;
  }
  return sum;
}

Polynomial sign_symmetrize(const Polynomial& p, const std::set<VarId>& vars) {
  Polynomial::TermMap t;
  for (const auto& [m, c] : p.terms()) {
    bool even = true;
    for (VarId v : vars)
      if (m.degree_in(v) % 2 != 0) {
        even = false;
        break;
      }
    if (even) t.emplace(m, c);
  }
  return Polynomial(p.registry(), std::move(t));
}

std::optional<Polynomial> Polynomial::exact_divide(const Polynomial& divisor) const {
  check_same(divisor);
  if (divisor.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
  Polynomial remainder = *this;
  TermMap quotient;
  const Monomial& dlm = divisor.terms_.begin()->first;
  const Rational& dlc = divisor.terms_.begin()->second;
  while (!remainder.is_zero()) {
    const Monomial& rlm = remainder.terms_.begin()->first;
    const Rational& rlc = remainder.terms_.begin()->second;
    auto q = rlm.divide_by(dlm);
    if (!q) return std::nullopt;
    Rational qc = rlc / dlc;
    Polynomial step = monomial(reg_, *q, qc);
    quotient.emplace(std::move(*q), qc);
    remainder = remainder - step * divisor;
  }
  return Polynomial(reg_, std::move(quotient));
}

Polynomial coefficient_in(const Polynomial& p, VarId v, std::uint32_t e) {
  const auto& reg = p.registry();
  Polynomial::TermMap t;
  for (const auto& [m, c] : p.terms()) {
    if (m.degree_in(v) != e) continue;
    std::vector<std::pair<VarId, std::uint32_t>> rest;
    for (const auto& [w, we] : m.factors())
      if (!(w == v)) rest.push_back({w, we});
    t.emplace(Monomial(std::move(rest)), c);
  }
  return Polynomial(reg, std::move(t));
}

Polynomial quadratic_discriminant(const Polynomial& p, VarId v) {
  if (p.degree_in(v) > 2)
    throw std::invalid_argument("quadratic_discriminant: degree in variable exceeds 2");
  Polynomial a = coefficient_in(p, v, 2);
  Polynomial b = coefficient_in(p, v, 1);
  Polynomial c = coefficient_in(p, v, 0);
  return b * b - a * c.scale(Rational(4));
}

}  // namespace qihou
