#pragma once

#include <utility>
#include <vector>

#include "trop/linalg.hpp"

namespace trop {

/// Rational polyhedral cone in a lattice, stored in canonical V-representation:
/// a Hermite-reduced lineality basis plus primitive extreme rays. The dual
/// cone's generators are carried alongside, so duality is an exact involution
/// and membership tests are direct pairings.
///
/// Fan cones are strongly convex; cones on the character side (duals) may have
/// lineality or be the full space.
class Cone {
 public:
  static Cone from_gens(int rank, const std::vector<Vec>& gens);
  static Cone from_ineqs(int rank, const std::vector<Vec>& normals);
  static Cone zero(int rank) { return from_gens(rank, {}); }
  static Cone full(int rank) { return from_ineqs(rank, {}); }

  int rank() const { return rank_; }
  /// Extreme rays modulo lineality, as canonical primitive columns.
  const Mat& rays() const { return rays_; }
  /// Lineality lattice basis, canonical columns.
  const Mat& lineality() const { return lineality_; }
  /// All generators: ± each lineality column, then the rays.
  std::vector<Vec> gens() const;

  const Mat& dual_rays() const { return dual_rays_; }
  const Mat& dual_lineality() const { return dual_lineality_; }
  Cone dual() const;

  int dim() const { return dim_; }
  bool is_pointed() const { return lineality_.cols() == 0; }
  bool is_full_space() const { return lineality_.cols() == rank_; }
  bool is_zero() const { return dim_ == 0; }

  bool contains(const Vec& x) const;
  /// True when ⟨u, x⟩ = 0 for every x in the cone.
  bool orthogonal_to(const Vec& u) const;

  std::vector<Cone> faces() const;
  bool is_face_of(const Cone& sigma) const;
  Cone intersect(const Cone& other) const;

  /// Canonical surjection N -> N/Span(cone) in quotient-lattice coordinates.
  const Mat& quotient() const { return quotient_; }

  bool operator==(const Cone& o) const {
    return rank_ == o.rank_ && same(lineality_, o.lineality_) && same(rays_, o.rays_);
  }

 private:
  Cone() = default;
  static Cone from_both(int rank, std::pair<Mat, Mat> primal, std::pair<Mat, Mat> dual);

  int rank_ = 0;
  int dim_ = 0;
  Mat lineality_;
  Mat rays_;
  Mat dual_lineality_;
  Mat dual_rays_;
  Mat quotient_;
};

/// V-representation of {x : ⟨g, x⟩ ≥ 0 for all g}: lineality basis and
/// extreme rays, both canonical. The workhorse behind Cone.
std::pair<Mat, Mat> dual_generators(int rank, const std::vector<Vec>& gens);

/// The induced map N(τ) -> N(σ) for a face τ ⪯ σ, as an exact rational
/// matrix in the fixed quotient-lattice coordinates of both cones.
Mat quotient_projection(const Cone& tau, const Cone& sigma);

}  // namespace trop
