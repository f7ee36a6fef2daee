#include "trop/scalars.hpp"

#include <ostream>
#include <sstream>

namespace trop {

Rational::Rational(const BigInt& num, const BigInt& den) : v_(num) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ /= BigRat(den);
}

Rational::Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw DomainError("division by zero");
  return Rational(BigRat(v_ / o.v_));
}

BigInt Rational::floor() const {
  BigInt n = num(), d = den();
  return floor_div(n, d);
}

BigInt Rational::ceil() const { return -(-*this).floor(); }

Rational Rational::parse(const std::string& text) {
  auto bad = [&] { throw ParseError("bad rational literal: '" + text + "'"); };
  if (text.empty()) bad();
  size_t pos = 0;
  bool neg = false;
  if (text[pos] == '-' || text[pos] == '+') {
    neg = text[pos] == '-';
    ++pos;
  }
  if (pos >= text.size() || !isdigit(static_cast<unsigned char>(text[pos]))) bad();
  size_t slash = text.find('/', pos);
  auto digits = [&](size_t from, size_t to) {
    if (from == to) bad();
    for (size_t i = from; i < to; ++i)
      if (!isdigit(static_cast<unsigned char>(text[i]))) bad();
    return BigInt(text.substr(from, to - from));
  };
  BigInt n, d = 1;
  if (slash == std::string::npos) {
    n = digits(pos, text.size());
  } else {
    n = digits(pos, slash);
    d = digits(slash + 1, text.size());
    if (d == 0) bad();
  }
  if (neg) n = -n;
  return Rational(n, d);
}

std::string Rational::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  os << numerator(r.v_);
  if (denominator(r.v_) != 1) os << '/' << denominator(r.v_);
  return os;
}

Rational pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base.is_zero()) {
    if (e < 0) throw DomainError("zero to a negative power");
    return Rational(0);
  }
  Rational b = e < 0 ? Rational(1) / base : base;
  long n = e < 0 ? -e : e;
  Rational acc(1);
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

const Rational& ExtRat::finite() const {
  if (!finite_) throw DomainError("infinite value where a finite one is required");
  return r_;
}

ExtRat ExtRat::operator-() const {
  if (!finite_) throw DomainError("cannot negate infinity");
  return ExtRat(-r_);
}

std::string ExtRat::str() const {
  if (!finite_) return "inf";
  return r_.str();
}

ExtRat ExtRat::parse(const std::string& text) {
  if (text == "inf") return infinity();
  return ExtRat(Rational::parse(text));
}

std::ostream& operator<<(std::ostream& os, const ExtRat& e) {
  if (e.is_infinite()) return os << "inf";
  return os << e.finite();
}

ExtRat scale_ext(const BigInt& n, const ExtRat& x) {
  if (n == 0) return ExtRat(0);
  if (x.is_infinite()) {
    if (n < 0) throw DomainError("negative multiple of infinity");
    return ExtRat::infinity();
  }
  return ExtRat(Rational(n) * x.finite());
}

BigInt gcd(const BigInt& a, const BigInt& b) { return bmp::gcd(a, b); }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

}  // namespace trop
