#pragma once

#include <map>
#include <vector>

#include "trop/dense.hpp"
#include "trop/puiseux.hpp"

namespace trop {

/// Residue-field polynomial: what survives of a Laurent polynomial after
/// selecting the minimum-weight terms and reducing coefficients.
struct ResiduePoly {
  int rank = 0;
  std::map<Vec, Rational, LexLess> terms;

  bool is_zero() const { return terms.empty(); }
  bool is_monomial() const { return terms.size() == 1; }
  ResiduePoly operator*(const ResiduePoly& o) const;
  bool operator==(const ResiduePoly& o) const { return rank == o.rank && terms == o.terms; }
  std::string str() const;
};

/// Laurent polynomial over the valued field: finitely many
/// (integer exponent vector, PuiseuxScalar) terms. The tropical weight of a
/// term at v is ν(coeff) + ⟨exponent, v⟩, with minimum selection throughout.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(int rank) : rank_(rank) {}
  static LaurentPoly zero(int rank) { return LaurentPoly(rank); }
  static LaurentPoly term(const Vec& exponent, const PuiseuxScalar& coeff);
  static LaurentPoly constant(int rank, const PuiseuxScalar& c);
  static LaurentPoly variable(int rank, int i);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  const std::map<Vec, PuiseuxScalar, LexLess>& terms() const { return terms_; }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  /// All coefficients live in the trivially valued subfield.
  bool trivial_coeffs() const;
  LaurentPoly as_puiseux() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }
  LaurentPoly operator*(const LaurentPoly& o) const;
  /// Multiplication by the monomial x^u.
  LaurentPoly shift(const Vec& u) const;
  bool operator==(const LaurentPoly& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }

  /// Ψ_f(w) = min over terms of ⟨u, w⟩ + ν(coeff). Domain error on zero.
  ExtRat psi(const Vec& w) const;
  /// Terms attaining the minimum weight at v, with leading residues.
  ResiduePoly initial_form(const Vec& v) const;
  /// True iff every term has ν(coeff) + ⟨u, v⟩ ≥ 0.
  bool in_tilted_ring(const Vec& v) const;

  /// Exact evaluation; negative exponents need invertible (monomial)
  /// coordinates.
  PuiseuxScalar eval(const std::vector<PuiseuxScalar>& y) const;
  /// ν(f(y)), clearing negative exponents through monomial shifts so that
  /// non-monomial coordinates are still usable.
  ExtRat eval_valuation(const std::vector<PuiseuxScalar>& y) const;

  /// Exponent of the common monomial factor (coordinatewise minimum).
  /// Nonzero means the hypersurface carries a monomial factor; callers that
  /// care must flag it, never strip it silently.
  Vec monomial_factor() const;

  std::string str() const;
  /// Accepts `coeff * x1^e1 ... xn^en` terms joined by + or -; coefficients
  /// are rational literals, parenthesized scalar text, or bare t-powers.
  /// x, y, z, w alias x1..x4.
  static LaurentPoly parse(const std::string& text, int rank, bool trivial = false);

 private:
  void insert_term(const Vec& u, const PuiseuxScalar& c);

  int rank_ = 0;
  std::map<Vec, PuiseuxScalar, LexLess> terms_;
};

/// f(g_0, ..., g_{rank-1}) for Laurent images in a common target ring.
/// Negative powers require single-term images.
LaurentPoly substitute(const LaurentPoly& f, const std::vector<LaurentPoly>& images);

}  // namespace trop
