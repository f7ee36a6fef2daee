#pragma once

#include <vector>

#include "trop/cone.hpp"

namespace trop {

/// The monoid S_σ = σ^∨ ∩ M of characters regular on the chart U_σ, presented
/// by a minimal generating set. Units (the lineality lattice of σ^∨) are
/// listed first as ± pairs, then the irreducible elements of the pointed part.
struct DualMonoid {
  Cone cone;                 // σ^∨, in the character lattice
  std::vector<Vec> hilbert;  // minimal generating set of cone ∩ M
};

/// Minimal monoid generating set of c ∩ M. Free monoids (smooth charts) are
/// read off directly at any rank; otherwise fundamental-region enumeration
/// plus irreducibility reduction, scoped to ambient rank ≤ 3.
std::vector<Vec> hilbert_basis(const Cone& c);

DualMonoid dual_monoid(const Cone& sigma);

/// Generating relations among the Hilbert basis vectors: columns are integer
/// kernel vectors of the basis matrix.
Mat monoid_relations(const DualMonoid& m);

/// Nonnegative integer decomposition of u over the Hilbert basis; throws
/// DomainError when u is not in the monoid. Any valid decomposition is
/// equivalent under a monoid homomorphism, so the first found is returned.
std::vector<BigInt> monoid_decompose(const Vec& u, const DualMonoid& m);

}  // namespace trop
