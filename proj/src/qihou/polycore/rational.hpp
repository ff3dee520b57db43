#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace qihou {

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always kept canonical: gcd(|num|, den) = 1, den > 0, zero is 0/1.
/// Backed by GMP's mpq_class; the wrapper pins the canonical-form invariant
/// and the string format used across the project ("num" or "num/den").
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}           // NOLINT: implicit by design
  Rational(long n, long d);
  explicit Rational(const mpq_class& v);

  /// Parses "num" or "num/den" with optional sign. Throws on malformed input
  /// or zero denominator.
  static Rational from_string(const std::string& s);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  double to_double() const { return v_.get_d(); }

  /// "num" when the denominator is 1, else "num/den".
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

Rational pow(const Rational& base, unsigned exp);

}  // namespace qihou
