#pragma once

#include "trop/cone.hpp"

namespace trop {

/// Convex rational polyhedron, stored as its homogenization: the cone over
/// {(x, 1) : x ∈ P} together with the recession directions at height zero.
/// Inherits canonical forms, exact duality and membership from Cone, so two
/// polyhedra are equal iff their homogenizations match.
///
/// Cells of G-rational complexes use rational vertices and integral rays.
class Polyhedron {
 public:
  struct Halfspace {
    Vec normal;    // ⟨normal, x⟩ ≥ rhs
    Rational rhs;
  };

  static Polyhedron from_vrep(int rank, const std::vector<Vec>& vertices,
                              const std::vector<Vec>& rays);
  static Polyhedron from_hrep(int rank, const std::vector<Halfspace>& ineqs,
                              const std::vector<Halfspace>& eqs = {});
  /// Single rational point.
  static Polyhedron point(const Vec& v) { return from_vrep(static_cast<int>(v.size()), {v}, {}); }

  int rank() const { return rank_; }
  bool empty() const;
  /// Dimension; -1 for the empty polyhedron.
  int dim() const;

  bool contains(const Vec& x) const;
  bool subset_of(const Polyhedron& q) const;
  Polyhedron intersect(const Polyhedron& q) const;
  bool is_face_of(const Polyhedron& q) const;

  std::vector<Vec> vertices() const;
  std::vector<Vec> recession_rays() const;
  Cone recession_cone() const;
  /// A rational point in the relative interior; throws on empty input.
  Vec relative_interior_point() const;
  /// Image under an integral linear map (rows x rank).
  Polyhedron transformed(const Mat& a) const;

  const Cone& homog() const { return homog_; }
  bool operator==(const Polyhedron& o) const { return rank_ == o.rank_ && homog_ == o.homog_; }

 private:
  Polyhedron(int rank, Cone homog) : rank_(rank), homog_(std::move(homog)) {}

  int rank_ = 0;
  Cone homog_;
};

/// Polyhedral complex with rational vertices and integer-slope rays. Cells
/// are closed; the face relation is derived from containment.
struct PolyComplex {
  int rank = 0;
  std::vector<Polyhedron> cells;

  bool empty() const { return cells.empty(); }
  bool support_contains(const Vec& x) const;
  /// Support equality via mutual cell-in-cell containment.
  bool support_equal(const PolyComplex& o) const;
  int dim() const;
  std::vector<int> maximal_cells() const;
  bool pure(int d) const;
  void add_cell(Polyhedron p);
};

/// Complex of recession cones of the cells (as polyhedra based at the origin).
PolyComplex recession(const PolyComplex& c);

/// Common refinement of supports: pairwise cell intersections. Used for
/// user-asserted tropical bases, intersected hypersurface-wise.
PolyComplex intersect_complexes(const PolyComplex& a, const PolyComplex& b);

}  // namespace trop
