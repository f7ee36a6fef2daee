#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>

#include "trop/errors.hpp"

namespace trop {

namespace bmp = boost::multiprecision;

/// Arbitrary-precision integer (expression templates off, so the type has
/// plain value semantics).
using BigInt = bmp::number<bmp::cpp_int_backend<>, bmp::et_off>;
using BigRat = bmp::number<bmp::rational_adaptor<bmp::cpp_int_backend<>>, bmp::et_off>;

/// Exact rational scalar. Always reduced, denominator > 0. Wraps the boost
/// rational so Eigen sees a plain scalar with non-template constructors.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long long n) : v_(n) {}
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den);
  Rational(long long num, long long den);

  static Rational parse(const std::string& text);

  const BigRat& raw() const { return v_; }
  BigInt num() const { return numerator(v_); }
  BigInt den() const { return denominator(v_); }
  bool is_integer() const { return denominator(v_) == 1; }
  bool is_zero() const { return v_.is_zero(); }

  Rational operator+(const Rational& o) const { return Rational(BigRat(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(BigRat(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(BigRat(v_ * o.v_)); }
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(BigRat(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const Rational& o) const {
    if (v_ < o.v_) return std::strong_ordering::less;
    if (v_ > o.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  int sign() const { return v_.sign(); }
  BigInt floor() const;
  BigInt ceil() const;
  double to_double() const { return v_.convert_to<double>(); }
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(const BigRat& v) : v_(v) {}
  BigRat v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational pow(const Rational& base, long e);

/// Element of the extended line R ∪ {∞}. Infinity is maximal and absorbing
/// under addition.
class ExtRat {
 public:
  ExtRat() : finite_(true), r_(0) {}
  ExtRat(const Rational& r) : finite_(true), r_(r) {}
  ExtRat(int n) : finite_(true), r_(n) {}
  static ExtRat infinity() { ExtRat e; e.finite_ = false; e.r_ = Rational(0); return e; }

  bool is_infinite() const { return !finite_; }
  bool is_finite() const { return finite_; }
  /// Finite value; throws on ∞.
  const Rational& finite() const;

  ExtRat operator+(const ExtRat& o) const {
    if (!finite_ || !o.finite_) return infinity();
    return ExtRat(r_ + o.r_);
  }
  ExtRat& operator+=(const ExtRat& o) { *this = *this + o; return *this; }
  ExtRat operator-() const;

  bool operator==(const ExtRat& o) const {
    return finite_ == o.finite_ && (!finite_ || r_ == o.r_);
  }
  std::strong_ordering operator<=>(const ExtRat& o) const {
    if (!finite_ && !o.finite_) return std::strong_ordering::equal;
    if (!finite_) return std::strong_ordering::greater;
    if (!o.finite_) return std::strong_ordering::less;
    return r_ <=> o.r_;
  }

  std::string str() const;
  static ExtRat parse(const std::string& text);
  friend std::ostream& operator<<(std::ostream& os, const ExtRat& e);

 private:
  bool finite_;
  Rational r_;
};

/// n·x with the monoid convention 0·∞ = 0 (exponent zero contributes nothing).
ExtRat scale_ext(const BigInt& n, const ExtRat& x);

inline const ExtRat& min(const ExtRat& a, const ExtRat& b) { return b < a ? b : a; }

BigInt gcd(const BigInt& a, const BigInt& b);
/// Floor division with sign convention matching mathematical floor.
BigInt floor_div(const BigInt& a, const BigInt& b);

}  // namespace trop
