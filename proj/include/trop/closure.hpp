#pragma once

#include "trop/torictrop.hpp"
#include "trop/tropvar.hpp"

namespace trop {

enum class StratumKind { Empty, Full, Complex };

/// Extended tropicalization Trop(X, ι) of a hypersurface closure: one record
/// per cone σ, carrying the tropicalization of X ∩ T_σ in N(σ)-coordinates.
/// Full marks strata whose restriction polynomial vanishes identically
/// (the closure contains the whole orbit).
///
/// Restriction strata can in principle overestimate the closure's orbit
/// intersection; the point-sampling checks in the test suite are the ground
/// truth and fail loudly on a mismatch.
struct StratifiedTrop {
  const Fan* fan = nullptr;
  std::vector<StratumKind> kinds;
  std::vector<PolyComplex> complexes;       // meaningful when kind == Complex
  std::vector<LaurentPoly> restrictions;    // restriction polynomial per stratum

  bool support_contains(const ExtendedPoint& p) const;
};

/// f multiplied by the minimal monomial making every exponent regular on the
/// chart; minimal in S_σ-divisibility, normalized canonically across units.
LaurentPoly chart_clear(const LaurentPoly& f, const Cone& sigma);

/// Terms of g living on the orbit of τ, rewritten in the character lattice of
/// T_τ (the rows of τ's quotient map). Empty optional when nothing survives.
std::optional<LaurentPoly> orbit_restriction(const LaurentPoly& g, const Cone& tau);

StratifiedTrop extended_trop(const LaurentPoly& f, const Fan& fan);

/// The orbit-closure intersection identity: the strata of Trop(X) over cones
/// containing σ0 agree with the extended tropicalization of the restriction
/// recomputed on the star fan of σ0.
bool invariant_intersection_check(const LaurentPoly& f, const Fan& fan, int sigma0);

}  // namespace trop
