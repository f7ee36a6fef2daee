#pragma once

#include <memory>
#include <string>
#include <vector>

#include "trop/hilbert.hpp"

namespace trop {

/// A fan: strongly convex rational cones closed under taking faces, with
/// pairwise intersections along common faces (validated at construction).
/// Immutable afterwards; per-cone quotient data and chart monoids are built
/// eagerly so reads are safe concurrently.
class Fan {
 public:
  Fan(int rank, std::vector<Vec> rays, std::vector<std::vector<int>> maximal_cones);

  int rank() const { return rank_; }
  const Mat& ray_matrix() const { return rays_; }
  int num_rays() const { return static_cast<int>(rays_.cols()); }

  int num_cones() const { return static_cast<int>(cones_.size()); }
  const Cone& cone(int i) const { return cones_[static_cast<size_t>(i)]; }
  const std::vector<int>& maximal() const { return maximal_; }
  const std::vector<int>& faces_of(int i) const { return faces_of_[static_cast<size_t>(i)]; }
  const std::vector<int>& ray_indices(int i) const { return ray_indices_[static_cast<size_t>(i)]; }

  int find(const Cone& c) const;
  int zero_cone() const { return zero_; }
  bool is_face(int tau, int sigma) const;
  int a_maximal_containing(int i) const;
  /// Smallest cone containing x, or -1 when x is outside the support.
  int smallest_containing(const Vec& x) const;

  /// S_σ for cone i with its Hilbert basis (ambient rank ≤ 3).
  const DualMonoid& chart_monoid(int i) const;

  bool operator==(const Fan& o) const;

 private:
  int rank_;
  Mat rays_;
  std::vector<Cone> cones_;
  std::vector<std::vector<int>> ray_indices_;
  std::vector<std::vector<int>> faces_of_;
  std::vector<int> maximal_;
  int zero_ = -1;
  std::vector<std::shared_ptr<const DualMonoid>> monoids_;
};

/// Fan of affine space A^m: the first orthant and its faces.
Fan affine_fan(int m);
/// Fan of projective space P^m: rays e_1..e_m and -(e_1+...+e_m).
Fan projective_fan(int m);
/// Fan of the torus itself: just the zero cone.
Fan torus_fan(int m);

/// The star of a cone: the fan of the orbit closure, living in the quotient
/// lattice N(σ). Records where each original cone containing σ landed.
struct StarFan {
  Fan fan;
  Mat projection;                  // quotient map of the starred cone
  std::vector<int> from_original;  // original cone index -> star cone index (-1 off-star)
};

StarFan star_fan(const Fan& fan, int cone_index);

}  // namespace trop
