#pragma once

#include <optional>

#include "trop/fan.hpp"
#include "trop/laurent.hpp"

namespace trop {

/// Point of the extended tropicalization Trop(Y): a monoid homomorphism
/// S_chart -> R ∪ {∞}, stored as its value table on the chart's Hilbert basis.
/// The stratum cone σ (values are finite exactly on σ^⊥) and a rational lift
/// of the induced functional are derived views, kept for exact evaluation.
///
/// Points hold a pointer to their fan; the fan must outlive them.
class ExtendedPoint {
 public:
  static ExtendedPoint from_values(const Fan& fan, int chart, const std::vector<ExtRat>& values);
  static ExtendedPoint from_lift(const Fan& fan, int chart, int stratum, const Vec& lift);

  const Fan& fan() const { return *fan_; }
  int chart() const { return chart_; }
  int stratum() const { return stratum_; }
  const std::vector<ExtRat>& values() const { return values_; }
  const Vec& lift() const { return lift_; }

  /// φ_p(u) = ⟨u, lift⟩ when u ⊥ stratum, ∞ otherwise. Meaningful for
  /// characters in the chart monoid.
  ExtRat value_of(const Vec& u) const;
  /// Coordinates in N(σ) for the stratum σ.
  Vec stratum_coords() const;
  /// The same point presented on another chart having the stratum as a face.
  ExtendedPoint with_chart(int chart) const;

 private:
  ExtendedPoint() = default;

  const Fan* fan_ = nullptr;
  int chart_ = -1;
  int stratum_ = -1;
  std::vector<ExtRat> values_;
  Vec lift_;
};

/// Tropicalization of a K-point of the chart U_σ, given by its coordinates
/// under the Hilbert-basis embedding. Validates the monoid relations.
ExtendedPoint trop_point(const Fan& fan, int chart, const std::vector<PuiseuxScalar>& y);

/// dim N(σ) of the point's stratum: the index of the smallest stratification
/// level containing it.
int stratum_index(const ExtendedPoint& p);

/// Open axis-aligned rational box in stratum coordinates.
struct StratumBox {
  std::vector<std::pair<Rational, Rational>> bounds;
};

/// Membership in the truncated cylinder C(U, n) around the stratum of σ.
bool in_cylinder(const ExtendedPoint& p, const StratumBox& u, const Rational& n, int sigma);

/// Equality as monoid homomorphisms after restriction to the common stratum
/// chart; chart-independent.
bool glue_equal(const ExtendedPoint& p, const ExtendedPoint& q);

/// min over terms of φ_p(u_i) + ν(a_i) for a polynomial with exponents in the
/// chart monoid (∞-absorbing arithmetic).
ExtRat boundary_hom_value(const LaurentPoly& f, const ExtendedPoint& p);

/// Equivariant morphism U_src -> U_dst on the monoid side: the character
/// pullback S̄_dst -> S̄_src tabulated on the destination chart's Hilbert
/// basis, ∞ marking characters whose pullback vanishes.
class ExtendedMonoidMap {
 public:
  ExtendedMonoidMap(const Fan& src_fan, int src_chart, const Fan& dst_fan, int dst_chart,
                    std::vector<std::optional<Vec>> table);

  static ExtendedMonoidMap identity(const Fan& fan, int chart);
  /// Toric morphism from a lattice map N_src -> N_dst mapping the source
  /// chart cone into the destination chart cone.
  static ExtendedMonoidMap from_lattice_map(const Mat& a, const Fan& src_fan, int src_chart,
                                            const Fan& dst_fan, int dst_chart);
  /// Inclusion of the orbit closure of τ (presented on its star fan).
  static ExtendedMonoidMap orbit_inclusion(const Fan& fan, int tau, int chart,
                                           const StarFan& star);
  /// this ∘ other (other is applied first).
  ExtendedMonoidMap compose_after(const ExtendedMonoidMap& other) const;

  const Fan& src_fan() const { return *src_fan_; }
  const Fan& dst_fan() const { return *dst_fan_; }
  int src_chart() const { return src_chart_; }
  int dst_chart() const { return dst_chart_; }
  const std::vector<std::optional<Vec>>& table() const { return table_; }

 private:
  const Fan* src_fan_;
  const Fan* dst_fan_;
  int src_chart_;
  int dst_chart_;
  std::vector<std::optional<Vec>> table_;
};

/// Trop(φ): compose the point's homomorphism with the character pullback.
ExtendedPoint trop_morphism(const ExtendedMonoidMap& phi, const ExtendedPoint& p);

/// The underlying map on K-points (coordinates indexed by Hilbert bases).
std::vector<PuiseuxScalar> apply_map_to_point(const ExtendedMonoidMap& phi,
                                              const std::vector<PuiseuxScalar>& y);

/// Ample-polarization data: one character per maximal cone, with the
/// convexity certificate checked on adjacent pairs.
struct PolarizedFan {
  const Fan* fan;
  std::vector<Vec> characters;  // aligned with fan->maximal()
};

PolarizedFan make_polarized(const Fan& fan, std::vector<Vec> characters);

/// Assigns the vertices of a lattice polytope to the maximal cones of its
/// normal-fan-like fan: each cone receives the vertex pairing minimally with
/// its interior. Convenient for building polarizations from moment polytopes.
PolarizedFan polarize_from_vertices(const Fan& fan, const std::vector<Vec>& vertices);

/// Algebraic moment map: exp-weighted average of the polarization characters.
/// Exact exponents are normalized by their minimum before exponentiation, so
/// the only floating-point step is the final average.
Vecd moment_map(const ExtendedPoint& p, const PolarizedFan& pol);

/// Tropicalized Cox construction: the ray-indexed fan (with torus factors for
/// non-spanning ray sets) and the projection onto the original lattice.
struct CoxData {
  Fan fan;
  Mat projection;
};

CoxData cox_data(const Fan& fan);

/// A point upstairs mapping onto p under Trop of the Cox projection:
/// ∞ on the stratum's own rays, an exact linear solve elsewhere.
ExtendedPoint cox_preimage(const ExtendedPoint& p, const CoxData& cox);

/// Trop of the Cox projection as a monoid map into the given chart of the
/// original fan.
ExtendedMonoidMap cox_projection_map(const CoxData& cox, const Fan& fan, int dst_chart,
                                     int src_chart);

}  // namespace trop
