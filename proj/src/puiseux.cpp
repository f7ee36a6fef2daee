#include "trop/puiseux.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace trop {

PuiseuxScalar PuiseuxScalar::zero(bool trivial) {
  PuiseuxScalar a;
  a.trivial_ = trivial;
  return a;
}

PuiseuxScalar PuiseuxScalar::constant(const Rational& c, bool trivial) {
  PuiseuxScalar a;
  a.trivial_ = trivial;
  a.insert_term(Rational(0), c);
  return a;
}

PuiseuxScalar PuiseuxScalar::monomial(const Rational& c, const Rational& exponent) {
  PuiseuxScalar a;
  a.insert_term(exponent, c);
  a.check_trivial();
  return a;
}

PuiseuxScalar PuiseuxScalar::as_puiseux() const {
  PuiseuxScalar a = *this;
  a.trivial_ = false;
  return a;
}

void PuiseuxScalar::insert_term(const Rational& exponent, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, fresh] = terms_.emplace(exponent, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void PuiseuxScalar::check_trivial() const {
  if (!trivial_) return;
  for (const auto& [q, c] : terms_)
    if (!q.is_zero()) throw DomainError("trivial-mode scalar with a nonzero exponent");
}

bool PuiseuxScalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

ExtRat PuiseuxScalar::valuation() const {
  if (terms_.empty()) return ExtRat::infinity();
  return ExtRat(terms_.begin()->first);
}

Rational PuiseuxScalar::residue_leading() const {
  if (terms_.empty()) throw DomainError("residue of zero");
  return terms_.begin()->second;
}

PuiseuxScalar PuiseuxScalar::operator+(const PuiseuxScalar& o) const {
  PuiseuxScalar out;
  out.trivial_ = trivial_ && o.trivial_;
  out.terms_ = terms_;
  for (const auto& [q, c] : o.terms_) out.insert_term(q, c);
  return out;
}

PuiseuxScalar PuiseuxScalar::operator-() const {
  PuiseuxScalar out = *this;
  for (auto& [q, c] : out.terms_) c = -c;
  return out;
}

PuiseuxScalar PuiseuxScalar::operator*(const PuiseuxScalar& o) const {
  PuiseuxScalar out;
  out.trivial_ = trivial_ && o.trivial_;
  for (const auto& [q1, c1] : terms_)
    for (const auto& [q2, c2] : o.terms_) out.insert_term(q1 + q2, c1 * c2);
  return out;
}

PuiseuxScalar PuiseuxScalar::invert_monomial() const {
  if (terms_.size() != 1)
    throw UnsupportedError("inverse supported only for single-term scalars");
  const auto& [q, c] = *terms_.begin();
  PuiseuxScalar out;
  out.trivial_ = trivial_;
  out.insert_term(-q, Rational(1) / c);
  out.check_trivial();
  return out;
}

PuiseuxScalar PuiseuxScalar::pow(long e) const {
  if (e == 0) return constant(Rational(1), trivial_);
  PuiseuxScalar base = e < 0 ? invert_monomial() : *this;
  long n = e < 0 ? -e : e;
  PuiseuxScalar acc = constant(Rational(1), trivial_);
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

std::string PuiseuxScalar::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PuiseuxScalar& a) {
  if (a.terms_.empty()) return os << "0";
  bool first = true;
  for (const auto& [q, c] : a.terms_) {
    Rational coeff = c;
    if (first) {
      if (coeff.sign() < 0) {
        os << '-';
        coeff = -coeff;
      }
      first = false;
    } else if (coeff.sign() < 0) {
      os << " - ";
      coeff = -coeff;
    } else {
      os << " + ";
    }
    bool unit = coeff == Rational(1);
    if (q.is_zero()) {
      os << coeff;
    } else {
      if (!unit) os << coeff << '*';
      os << 't';
      if (q != Rational(1)) os << '^' << q;
    }
  }
  return os;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at position " + std::to_string(i) + " in '" + s + "'");
  }
  Rational rational(bool allow_sign) {
    skip_ws();
    size_t start = i;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      fail("expected a number");
    if (i < s.size() && s[i] == '/') {
      ++i;
      size_t dstart = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == dstart) fail("expected a denominator");
    }
    return Rational::parse(s.substr(start, i - start));
  }
};

}  // namespace

PuiseuxScalar PuiseuxScalar::parse(const std::string& text, bool trivial) {
  Cursor c{text};
  PuiseuxScalar out = PuiseuxScalar::zero(trivial);
  bool negate = false;
  if (c.eat('-')) negate = true;
  while (true) {
    Rational coeff(1);
    Rational exponent(0);
    bool saw_coeff = false, saw_t = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = c.rational(false);
      saw_coeff = true;
      c.eat('*');
    }
    if (c.peek() == 't') {
      c.eat('t');
      saw_t = true;
      exponent = Rational(1);
      if (c.eat('^')) exponent = c.rational(true);
    }
    if (!saw_coeff && !saw_t) c.fail("expected a term");
    if (negate) coeff = -coeff;
    out.insert_term(exponent, coeff);
    if (c.done()) break;
    if (c.eat('+'))
      negate = false;
    else if (c.eat('-'))
      negate = true;
    else
      c.fail("expected '+' or '-'");
  }
  out.check_trivial();
  return out;
}

}  // namespace trop
