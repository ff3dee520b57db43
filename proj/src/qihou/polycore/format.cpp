#include "qihou/polycore/format.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace qihou {

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool neg = c.sign() < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    Rational a = c.abs();
    if (m.is_constant()) {
      out += a.to_string();
    } else {
      bool printed = false;
      if (!a.is_one()) {
        out += a.to_string();
        printed = true;
      }
      for (const auto& [v, e] : m.factors()) {
        if (printed) out += "*";
        out += p.registry()->name(v);
        if (e > 1) {
          out += "^";
          out += std::to_string(e);
        }
        printed = true;
      }
    }
    first = false;
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_polynomial: " + what + " at position " +
                                std::to_string(pos));
  }

  std::string read_while(bool (*pred)(char)) {
    std::size_t start = pos;
    while (pos < text.size() && pred(text[pos])) ++pos;
    return text.substr(start, pos - start);
  }
};

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

Rational read_rational(Cursor& cur) {
  std::string digits = cur.read_while(is_digit);
  if (digits.empty()) cur.fail("expected number");
  if (!cur.done() && cur.peek() == '/') {
    ++cur.pos;
    std::string den = cur.read_while(is_digit);
    if (den.empty()) cur.fail("expected denominator");
    return Rational::from_string(digits + "/" + den);
  }
  return Rational::from_string(digits);
}

std::uint32_t read_exponent(Cursor& cur) {
  std::string digits = cur.read_while(is_digit);
  if (digits.empty()) cur.fail("expected exponent");
  unsigned long e = 0;
  try {
    e = std::stoul(digits);
  } catch (const std::exception&) {
    cur.fail("exponent out of range");
  }
  if (e > 0xffffffffUL) cur.fail("exponent out of range");
  return static_cast<std::uint32_t>(e);
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const VarRegistry::Ptr& reg) {
  if (!reg) throw std::invalid_argument("parse_polynomial: null registry");
  Cursor cur{text};
  Polynomial::TermMap terms;
  bool first = true;
  cur.skip_ws();
  if (cur.done()) cur.fail("empty input");
  while (true) {
    cur.skip_ws();
    if (cur.done()) break;
    int sign = 1;
    if (cur.peek() == '+' || cur.peek() == '-') {
      sign = cur.peek() == '-' ? -1 : 1;
      ++cur.pos;
      cur.skip_ws();
    } else if (!first) {
      cur.fail("expected '+' or '-' between terms");
    }
    Rational coeff(1);
    std::map<VarId, std::uint64_t> exps;
    while (true) {
      cur.skip_ws();
      if (cur.done()) cur.fail("unexpected end of term");
      char c = cur.peek();
      if (is_digit(c)) {
        coeff *= read_rational(cur);
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string name = cur.read_while(is_name_char);
        VarId v = reg->id(name);
        std::uint32_t e = 1;
        cur.skip_ws();
        if (!cur.done() && cur.peek() == '^') {
          ++cur.pos;
          cur.skip_ws();
          e = read_exponent(cur);
        }
        exps[v] += e;
      } else {
        cur.fail("unexpected character");
      }
      cur.skip_ws();
      if (!cur.done() && cur.peek() == '*') {
        ++cur.pos;
        continue;
      }
      break;
    }
    if (sign < 0) coeff = -coeff;
    std::vector<std::pair<VarId, std::uint32_t>> factors;
    for (const auto& [v, e] : exps) {
      if (e > 0xffffffffUL) cur.fail("exponent out of range");
      if (e > 0) factors.push_back({v, static_cast<std::uint32_t>(e)});
    }
    Monomial m(std::move(factors));
    auto [it, inserted] = terms.emplace(std::move(m), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms.erase(it);
    }
    first = false;
  }
  return Polynomial(reg, std::move(terms));
}

}  // namespace qihou
