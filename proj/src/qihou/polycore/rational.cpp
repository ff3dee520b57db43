#include "qihou/polycore/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace qihou {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

Rational Rational::from_string(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0)
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
  v.canonicalize();
  return Rational(v);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational pow(const Rational& base, unsigned exp) {
  Rational r(1);
  Rational b = base;
  while (exp > 0) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

}  // namespace qihou
