#pragma once

#include <optional>

#include "trop/dense.hpp"

namespace trop {

/// Result of a column-style Hermite reduction A·U = H with U unimodular.
/// H has its nonzero columns first, in echelon form: pivot rows strictly
/// increase, pivots are positive, and entries left of a pivot in its row are
/// reduced into [0, pivot).
struct Hermite {
  Mat h;
  Mat u;
  int rank = 0;
};

Hermite hnf_cols(const Mat& a);

/// Basis of the integer kernel {x : A·x = 0}, as columns. Saturated by
/// construction; canonical (Hermite-reduced) so equal kernels give equal bases.
Mat kernel_z(const Mat& a);

/// Basis of the image lattice A·Z^n, as columns (the nonzero HNF columns).
Mat image_basis_z(const Mat& a);

/// True if A: Z^n -> Z^m is surjective.
bool is_surjective_z(const Mat& a);

/// Integer right inverse R with A·R = I, for surjective A. Canonical.
Mat right_inverse_z(const Mat& a);

/// One integer solution of A·x = b, if any (free variables pinned to zero
/// relative to the Hermite transform, hence deterministic).
std::optional<Vec> solve_z(const Mat& a, const Vec& b);

int rank_q(const Mat& a);

/// One rational solution of A·x = b with free variables set to zero;
/// std::nullopt when inconsistent. Deterministic.
std::optional<Vec> solve_q(const Mat& a, const Vec& b);

/// Basis of the rational kernel, as columns (reduced row echelon convention).
Mat kernel_q(const Mat& a);

/// Determinant by fraction-free elimination.
Rational det_q(const Mat& a);

/// Inverse of a square matrix; throws DomainError if singular.
Mat inverse_q(const Mat& a);

/// The canonical surjection P: Z^n -> Z^(n-d) whose kernel is the saturation
/// of the span of the given columns. Rows of P form a basis of the perp
/// lattice of that span. Deterministic.
Mat quotient_map(int rank, const Mat& span_columns);

}  // namespace trop
