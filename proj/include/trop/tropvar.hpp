#pragma once

#include "trop/laurent.hpp"
#include "trop/polyhedron.hpp"

namespace trop {

/// Tropicalization of the hypersurface V(f) in the torus: the corner locus of
/// Ψ_f as a G-rational polyhedral complex, together with its source.
struct TropHypersurface {
  LaurentPoly source;
  PolyComplex complex;
  /// f carries a common monomial factor x^u, u ≠ 0. Flagged, never stripped:
  /// stripping would change closures in toric compactifications.
  bool has_monomial_factor = false;
};

/// Corner locus computed through the lower hull of the lifted exponents
/// (u_i, ν(a_i)) and regular-subdivision duality. Empty complex iff f is a
/// single term.
TropHypersurface trop_hypersurface(const LaurentPoly& f);

/// v lies in trop(V(f)) iff the initial form at v is not a monomial.
/// The zero polynomial cuts out everything.
bool contains(const LaurentPoly& f, const Vec& v);

/// Trivial-valuation tropicalization: all coefficient valuations vanish, the
/// result is the underlying set of a rational fan.
TropHypersurface trivial_trop(const LaurentPoly& f);

/// Nonemptiness of the tropical degeneration at v; in the hypersurface case
/// this coincides with membership.
bool degeneration_nonempty(const LaurentPoly& f, const Vec& v);

/// Point of the hypersurface over the Puiseux field with Trop(point) = v.
struct LiftedPoint {
  std::vector<PuiseuxScalar> coords;
  Rational precision;
};

/// Univariate polynomial with scalar coefficients, degree -> coefficient.
using UniPoly = std::map<long, PuiseuxScalar>;

/// Newton-polygon iteration: a root with prescribed leading valuation,
/// correct up to ν(g(root)) > precision (or exact). Branches whose leading
/// residue is not rational raise UnsupportedError.
PuiseuxScalar puiseux_root(const UniPoly& g, const Rational& target_valuation,
                           const Rational& precision);

/// Plane-curve lifter: x is pinned to c·t^{v1} for a deterministic generic c
/// indexed by `attempt`, y is produced by the Newton-polygon iteration.
/// Retry with the next attempt on UnsupportedError.
LiftedPoint lift_point(const LaurentPoly& f, const Vec& v, const Rational& precision,
                       int attempt = 0);
LiftedPoint lift_point_search(const LaurentPoly& f, const Vec& v, const Rational& precision,
                              int max_attempts = 16);

/// Roots of a univariate Laurent polynomial with prescribed valuation.
PuiseuxScalar lift_root_univariate(const LaurentPoly& f, const Rational& v,
                                   const Rational& precision);

/// Point-index sets of the faces of the regular subdivision induced by the
/// given heights (faces with at least two points). Exposed for cross-checks.
std::vector<std::vector<int>> subdivision_faces(const std::vector<Vec>& exponents,
                                                const std::vector<Rational>& heights);

}  // namespace trop
