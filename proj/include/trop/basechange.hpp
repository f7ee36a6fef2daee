#pragma once

#include "trop/tropvar.hpp"

namespace trop {

/// Split surjection of cocharacter lattices N -> N' (equivalently of tori),
/// carrying an integer right inverse as the splitting certificate.
struct LatticeSurjection {
  Mat matrix;
  Mat right_inv;
};

LatticeSurjection make_surjection(const Mat& a);

/// Character pullback along the surjection: exponents map through the
/// transpose.
LaurentPoly pullback(const LatticeSurjection& phi, const LaurentPoly& f_on_target);

/// Tropicalization over the trivially valued field agrees with the
/// tropicalization after base change to the Puiseux field, exactly.
bool base_change_check(const LaurentPoly& f);

/// init_v(φ*f) = init_{φ(v)}(f) after re-indexing exponents through φ*.
bool pushforward_initial_check(const LatticeSurjection& phi, const LaurentPoly& f_on_target,
                               const Vec& v);

/// Certified generic projection of a pure d-dimensional complex onto rank
/// d+1: maximal cells keep dimension d and images of distinct maximal cells
/// meet in dimension ≤ d-1. Deterministic seeded search over integer
/// matrices with escalating entry bound; exhausting bound 50 reports
/// NotFoundError rather than accepting an uncertified candidate.
LatticeSurjection generic_projection(const PolyComplex& c);

}  // namespace trop
