#pragma once

#include <map>
#include <string>

#include "trop/scalars.hpp"

namespace trop {

/// Element of the valued field: a finite-support Puiseux polynomial over Q in
/// one uniformizer t, with rational exponents. Carries the valuation
/// (minimum exponent of the support, ∞ for zero).
///
/// A scalar in trivial mode models the trivially valued field k: its support
/// is contained in {0}, so every nonzero element has valuation 0.
class PuiseuxScalar {
 public:
  PuiseuxScalar() : trivial_(false) {}

  static PuiseuxScalar zero(bool trivial = false);
  static PuiseuxScalar constant(const Rational& c, bool trivial = false);
  static PuiseuxScalar monomial(const Rational& c, const Rational& exponent);
  /// The uniformizer t.
  static PuiseuxScalar uniformizer() { return monomial(Rational(1), Rational(1)); }

  bool trivial_mode() const { return trivial_; }
  /// The same coefficients reinterpreted over the Puiseux field (base change).
  PuiseuxScalar as_puiseux() const;

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  const std::map<Rational, Rational>& terms() const { return terms_; }

  ExtRat valuation() const;
  /// Coefficient of the minimum-exponent term (the residue of a/t^ν(a)).
  Rational residue_leading() const;

  PuiseuxScalar operator+(const PuiseuxScalar& o) const;
  PuiseuxScalar operator-(const PuiseuxScalar& o) const { return *this + (-o); }
  PuiseuxScalar operator-() const;
  PuiseuxScalar operator*(const PuiseuxScalar& o) const;
  /// Inverse of a single-term scalar; anything else is unsupported.
  PuiseuxScalar invert_monomial() const;
  PuiseuxScalar pow(long e) const;

  bool operator==(const PuiseuxScalar& o) const { return terms_ == o.terms_; }

  std::string str() const;
  static PuiseuxScalar parse(const std::string& text, bool trivial = false);
  friend std::ostream& operator<<(std::ostream& os, const PuiseuxScalar& a);

 private:
  void insert_term(const Rational& exponent, const Rational& coeff);
  void check_trivial() const;

  std::map<Rational, Rational> terms_;  // exponent -> nonzero coefficient
  bool trivial_;
};

}  // namespace trop
