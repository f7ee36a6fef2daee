#include "trop/torictrop.hpp"

#include <algorithm>
#include <cmath>

#include "trop/errors.hpp"

namespace trop {

namespace {

void require_maximal(const Fan& fan, int chart, const char* who) {
  const auto& m = fan.maximal();
  if (std::find(m.begin(), m.end(), chart) == m.end())
    throw ChartMismatchError(std::string(who) + ": chart must be a maximal cone");
}

}  // namespace

ExtendedPoint ExtendedPoint::from_values(const Fan& fan, int chart,
                                         const std::vector<ExtRat>& values) {
  require_maximal(fan, chart, "ExtendedPoint");
  const DualMonoid& monoid = fan.chart_monoid(chart);
  if (values.size() != monoid.hilbert.size())
    throw MalformedPointError("value table does not match the Hilbert basis");

  // stratum: the face whose perp carries exactly the finite values
  int stratum = -1;
  for (int f : fan.faces_of(chart)) {
    const Cone& tau = fan.cone(f);
    bool match = true;
    for (size_t i = 0; i < values.size() && match; ++i)
      match = tau.orthogonal_to(monoid.hilbert[i]) == values[i].is_finite();
    if (match) {
      stratum = f;
      break;
    }
  }
  if (stratum < 0)
    throw MalformedPointError("finite values are not supported on a face perp");

  // lift: exact solve of the finite part; inconsistency means the table is
  // not additive
  std::vector<Eigen::Index> finite;
  for (size_t i = 0; i < values.size(); ++i)
    if (values[i].is_finite()) finite.push_back(static_cast<Eigen::Index>(i));
  Mat a(static_cast<Eigen::Index>(finite.size()), fan.rank());
  Vec b(static_cast<Eigen::Index>(finite.size()));
  for (size_t i = 0; i < finite.size(); ++i) {
    a.row(static_cast<Eigen::Index>(i)) =
        monoid.hilbert[static_cast<size_t>(finite[i])].transpose();
    b(static_cast<Eigen::Index>(i)) = values[finite[i]].finite();
  }
  auto lift = solve_q(a, b);
  if (!lift)
    throw MalformedPointError("finite values do not extend to a linear functional");

  ExtendedPoint p;
  p.fan_ = &fan;
  p.chart_ = chart;
  p.stratum_ = stratum;
  p.values_ = values;
  p.lift_ = *lift;
  return p;
}

ExtendedPoint ExtendedPoint::from_lift(const Fan& fan, int chart, int stratum, const Vec& lift) {
  require_maximal(fan, chart, "ExtendedPoint");
  if (!fan.is_face(stratum, chart))
    throw ChartMismatchError("stratum is not a face of the chart");
  const DualMonoid& monoid = fan.chart_monoid(chart);
  const Cone& tau = fan.cone(stratum);
  std::vector<ExtRat> values;
  values.reserve(monoid.hilbert.size());
  for (const auto& u : monoid.hilbert)
    values.push_back(tau.orthogonal_to(u) ? ExtRat(Rational(u.dot(lift))) : ExtRat::infinity());
  ExtendedPoint p;
  p.fan_ = &fan;
  p.chart_ = chart;
  p.stratum_ = stratum;
  p.values_ = std::move(values);
  p.lift_ = lift;
  return p;
}

ExtRat ExtendedPoint::value_of(const Vec& u) const {
  const Cone& tau = fan_->cone(stratum_);
  if (!tau.orthogonal_to(u)) return ExtRat::infinity();
  return ExtRat(Rational(u.dot(lift_)));
}

Vec ExtendedPoint::stratum_coords() const {
  return Vec(fan_->cone(stratum_).quotient() * lift_);
}

ExtendedPoint ExtendedPoint::with_chart(int chart) const {
  return from_lift(*fan_, chart, stratum_, lift_);
}

ExtendedPoint trop_point(const Fan& fan, int chart, const std::vector<PuiseuxScalar>& y) {
  require_maximal(fan, chart, "trop_point");
  const DualMonoid& monoid = fan.chart_monoid(chart);
  if (y.size() != monoid.hilbert.size())
    throw MalformedPointError("coordinate tuple does not match the Hilbert basis");

  // the tuple must satisfy the chart's monoid relations exactly
  Mat rel = monoid_relations(monoid);
  for (Eigen::Index col = 0; col < rel.cols(); ++col) {
    PuiseuxScalar lhs = PuiseuxScalar::constant(Rational(1));
    PuiseuxScalar rhs = lhs;
    for (Eigen::Index i = 0; i < rel.rows(); ++i) {
      long e = static_cast<long>(rel(i, col).num().convert_to<long long>());
      if (e > 0) lhs = lhs * y[static_cast<size_t>(i)].pow(e);
      if (e < 0) rhs = rhs * y[static_cast<size_t>(i)].pow(-e);
    }
    if (!(lhs == rhs))
      throw MalformedPointError("coordinates violate a monoid relation of the chart");
  }

  std::vector<ExtRat> values;
  values.reserve(y.size());
  for (const auto& c : y) values.push_back(c.valuation());
  return ExtendedPoint::from_values(fan, chart, values);
}

int stratum_index(const ExtendedPoint& p) {
  return p.fan().rank() - p.fan().cone(p.stratum()).dim();
}

bool in_cylinder(const ExtendedPoint& p, const StratumBox& u, const Rational& n, int sigma) {
  const Fan& fan = p.fan();
  if (!fan.is_face(p.stratum(), sigma))
    throw DomainError("point stratum is not a face of the cylinder cone");
  const Cone& sig = fan.cone(sigma);
  Vec projected = sig.quotient() * p.lift();
  if (static_cast<size_t>(projected.size()) != u.bounds.size())
    throw DomainError("box rank does not match the stratum");
  for (Eigen::Index i = 0; i < projected.size(); ++i) {
    const auto& [lo, hi] = u.bounds[static_cast<size_t>(i)];
    if (!(lo < projected(i) && projected(i) < hi)) return false;
  }
  const Cone& tau = fan.cone(p.stratum());
  for (const auto& gen : fan.chart_monoid(sigma).hilbert) {
    if (!tau.orthogonal_to(gen) || sig.orthogonal_to(gen)) continue;
    if (!(Rational(gen.dot(p.lift())) > n)) return false;
  }
  return true;
}

bool glue_equal(const ExtendedPoint& p, const ExtendedPoint& q) {
  if (&p.fan() != &q.fan() && !(p.fan() == q.fan())) return false;
  if (p.stratum() != q.stratum()) return false;
  const DualMonoid& monoid = p.fan().chart_monoid(p.stratum());
  for (const auto& h : monoid.hilbert)
    if (!(p.value_of(h) == q.value_of(h))) return false;
  return true;
}

ExtRat boundary_hom_value(const LaurentPoly& f, const ExtendedPoint& p) {
  if (f.is_zero()) throw DomainError("boundary value of the zero polynomial");
  const Cone& monoid_cone = p.fan().chart_monoid(p.chart()).cone;
  ExtRat best = ExtRat::infinity();
  for (const auto& [u, c] : f.terms()) {
    if (!monoid_cone.contains(u))
      throw DomainError("exponent lies outside the chart monoid");
    best = min(best, p.value_of(u) + c.valuation());
  }
  return best;
}

ExtendedMonoidMap::ExtendedMonoidMap(const Fan& src_fan, int src_chart, const Fan& dst_fan,
                                     int dst_chart, std::vector<std::optional<Vec>> table)
    : src_fan_(&src_fan), dst_fan_(&dst_fan), src_chart_(src_chart), dst_chart_(dst_chart),
      table_(std::move(table)) {
  require_maximal(src_fan, src_chart, "ExtendedMonoidMap");
  require_maximal(dst_fan, dst_chart, "ExtendedMonoidMap");
  const DualMonoid& dst = dst_fan.chart_monoid(dst_chart);
  const DualMonoid& src = src_fan.chart_monoid(src_chart);
  if (table_.size() != dst.hilbert.size())
    throw ChartMismatchError("pullback table does not match the Hilbert basis");
  for (const auto& entry : table_)
    if (entry && !src.cone.contains(*entry))
      throw ChartMismatchError("pullback leaves the source chart monoid");

  // pointed monoid homomorphism on the generating relations, ∞ absorbing
  Mat rel = monoid_relations(dst);
  for (Eigen::Index col = 0; col < rel.cols(); ++col) {
    bool inf_pos = false, inf_neg = false;
    Vec pos(src_fan.rank()), neg(src_fan.rank());
    for (int i = 0; i < src_fan.rank(); ++i) pos(i) = neg(i) = Rational(0);
    for (Eigen::Index i = 0; i < rel.rows(); ++i) {
      Rational e = rel(i, col);
      if (e.is_zero()) continue;
      const auto& entry = table_[static_cast<size_t>(i)];
      if (!entry) {
        (e.sign() > 0 ? inf_pos : inf_neg) = true;
        continue;
      }
      if (e.sign() > 0)
        pos += *entry * e;
      else
        neg += *entry * (-e);
    }
    bool ok = (inf_pos && inf_neg) || (!inf_pos && !inf_neg && same(pos, neg));
    if (!ok) throw DomainError("pullback table is not a monoid homomorphism");
  }
}

ExtendedMonoidMap ExtendedMonoidMap::identity(const Fan& fan, int chart) {
  std::vector<std::optional<Vec>> table;
  for (const auto& h : fan.chart_monoid(chart).hilbert) table.emplace_back(h);
  return ExtendedMonoidMap(fan, chart, fan, chart, std::move(table));
}

ExtendedMonoidMap ExtendedMonoidMap::from_lattice_map(const Mat& a, const Fan& src_fan,
                                                      int src_chart, const Fan& dst_fan,
                                                      int dst_chart) {
  if (a.rows() != dst_fan.rank() || a.cols() != src_fan.rank() || !is_integral(a))
    throw DomainError("lattice map must be an integral dst_rank x src_rank matrix");
  std::vector<std::optional<Vec>> table;
  for (const auto& h : dst_fan.chart_monoid(dst_chart).hilbert)
    table.emplace_back(Vec(a.transpose() * h));
  return ExtendedMonoidMap(src_fan, src_chart, dst_fan, dst_chart, std::move(table));
}

ExtendedMonoidMap ExtendedMonoidMap::orbit_inclusion(const Fan& fan, int tau, int chart,
                                                     const StarFan& star) {
  if (!fan.is_face(tau, chart)) throw ChartMismatchError("orbit cone is not a face of the chart");
  int src_chart = star.from_original[static_cast<size_t>(chart)];
  if (src_chart < 0) throw ChartMismatchError("chart does not meet the orbit closure");
  const Cone& tau_cone = fan.cone(tau);
  Mat pt = star.projection.transpose();
  std::vector<std::optional<Vec>> table;
  for (const auto& u : fan.chart_monoid(chart).hilbert) {
    if (!tau_cone.orthogonal_to(u)) {
      table.emplace_back(std::nullopt);
      continue;
    }
    auto c = solve_q(pt, u);
    if (!c || !is_integral(*c))
      throw DomainError("character does not descend to the orbit lattice");
    table.emplace_back(*c);
  }
  return ExtendedMonoidMap(star.fan, src_chart, fan, chart, std::move(table));
}

ExtendedMonoidMap ExtendedMonoidMap::compose_after(const ExtendedMonoidMap& other) const {
  // this: B -> C, other: A -> B; result: A -> C
  if (src_fan_ != &other.dst_fan() && !(*src_fan_ == other.dst_fan()))
    throw ChartMismatchError("composition charts do not line up");
  if (src_chart_ != other.dst_chart())
    throw ChartMismatchError("composition charts do not line up");
  const DualMonoid& mid = src_fan_->chart_monoid(src_chart_);
  std::vector<std::optional<Vec>> table;
  for (const auto& entry : table_) {
    if (!entry) {
      table.emplace_back(std::nullopt);
      continue;
    }
    auto counts = monoid_decompose(*entry, mid);
    bool inf = false;
    Vec sum(other.src_fan().rank());
    for (int i = 0; i < other.src_fan().rank(); ++i) sum(i) = Rational(0);
    for (size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] == 0) continue;
      const auto& img = other.table()[i];
      if (!img) {
        inf = true;
        break;
      }
      sum += *img * Rational(counts[i]);
    }
    if (inf)
      table.emplace_back(std::nullopt);
    else
      table.emplace_back(sum);
  }
  return ExtendedMonoidMap(other.src_fan(), other.src_chart(), *dst_fan_, dst_chart_,
                           std::move(table));
}

ExtendedPoint trop_morphism(const ExtendedMonoidMap& phi, const ExtendedPoint& p) {
  if (&p.fan() != &phi.src_fan() && !(p.fan() == phi.src_fan()))
    throw ChartMismatchError("point does not live on the source fan");
  if (p.chart() != phi.src_chart())
    throw ChartMismatchError("point chart differs from the map's source chart");
  std::vector<ExtRat> values;
  values.reserve(phi.table().size());
  for (const auto& entry : phi.table())
    values.push_back(entry ? p.value_of(*entry) : ExtRat::infinity());
  return ExtendedPoint::from_values(phi.dst_fan(), phi.dst_chart(), values);
}

std::vector<PuiseuxScalar> apply_map_to_point(const ExtendedMonoidMap& phi,
                                              const std::vector<PuiseuxScalar>& y) {
  const DualMonoid& src = phi.src_fan().chart_monoid(phi.src_chart());
  if (y.size() != src.hilbert.size())
    throw DomainError("coordinate tuple does not match the source chart");
  std::vector<PuiseuxScalar> out;
  for (const auto& entry : phi.table()) {
    if (!entry) {
      out.push_back(PuiseuxScalar::zero());
      continue;
    }
    auto counts = monoid_decompose(*entry, src);
    PuiseuxScalar prod = PuiseuxScalar::constant(Rational(1));
    for (size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] == 0) continue;
      prod = prod * y[i].pow(static_cast<long>(counts[i].convert_to<long long>()));
    }
    out.push_back(prod);
  }
  return out;
}

PolarizedFan make_polarized(const Fan& fan, std::vector<Vec> characters) {
  if (characters.size() != fan.maximal().size())
    throw DomainError("one character per maximal cone is required");
  for (const auto& u : characters)
    if (u.size() != fan.rank() || !is_integral(u))
      throw DomainError("polarization characters must be integral of ambient rank");
  // ampleness certificate on adjacent maximal cones
  for (size_t i = 0; i < fan.maximal().size(); ++i)
    for (size_t j = 0; j < fan.maximal().size(); ++j) {
      if (i == j) continue;
      const Cone& a = fan.cone(fan.maximal()[i]);
      const Cone& b = fan.cone(fan.maximal()[j]);
      if (a.intersect(b).dim() != a.dim() - 1) continue;
      Vec diff = characters[i] - characters[j];
      for (Eigen::Index r = 0; r < b.rays().cols(); ++r)
        if (Rational(diff.dot(b.rays().col(r))).sign() < 0)
          throw DomainError("polarization fails the convexity certificate");
    }
  return PolarizedFan{&fan, std::move(characters)};
}

PolarizedFan polarize_from_vertices(const Fan& fan, const std::vector<Vec>& vertices) {
  std::vector<Vec> chars;
  for (int m : fan.maximal()) {
    Vec interior(fan.rank());
    for (int i = 0; i < fan.rank(); ++i) interior(i) = Rational(0);
    for (Eigen::Index j = 0; j < fan.cone(m).rays().cols(); ++j)
      interior += fan.cone(m).rays().col(j);
    const Vec* best = nullptr;
    int ties = 0;
    for (const auto& u : vertices) {
      if (!best || Rational(u.dot(interior)) < Rational(best->dot(interior))) {
        best = &u;
        ties = 1;
      } else if (Rational(u.dot(interior)) == Rational(best->dot(interior))) {
        ++ties;
      }
    }
    if (!best || ties != 1)
      throw DomainError("polytope vertex assignment is ambiguous for a maximal cone");
    chars.push_back(*best);
  }
  return make_polarized(fan, std::move(chars));
}

Vecd moment_map(const ExtendedPoint& p, const PolarizedFan& pol) {
  const Fan& fan = p.fan();
  if (pol.fan != &fan && !(*pol.fan == fan))
    throw DomainError("polarization belongs to a different fan");
  // reference character: the one attached to the point's own chart
  int ref = -1;
  for (size_t i = 0; i < fan.maximal().size(); ++i)
    if (fan.maximal()[i] == p.chart()) ref = static_cast<int>(i);
  if (ref < 0) throw DomainError("point chart is not a maximal cone of the polarized fan");

  std::vector<ExtRat> exponents;
  exponents.reserve(pol.characters.size());
  for (const auto& u : pol.characters)
    exponents.push_back(p.value_of(Vec(u - pol.characters[static_cast<size_t>(ref)])));
  ExtRat shift = ExtRat::infinity();
  for (const auto& e : exponents) shift = min(shift, e);

  const int m = fan.rank();
  Vecd acc = Vecd::Zero(m);
  double total = 0;
  for (size_t i = 0; i < exponents.size(); ++i) {
    double w = exponents[i].is_infinite()
                   ? 0.0
                   : std::exp(-(exponents[i].finite() - shift.finite()).to_double());
    total += w;
    for (int k = 0; k < m; ++k) acc(k) += w * pol.characters[i](k).to_double();
  }
  return acc / total;
}

CoxData cox_data(const Fan& fan) {
  const int n = fan.rank();
  const Mat& rays = fan.ray_matrix();
  Mat quotient = quotient_map(n, rays);
  Mat complement = quotient.rows() == 0 ? Mat(n, 0) : right_inverse_z(quotient);
  const int k = static_cast<int>(rays.cols());
  const int extra = static_cast<int>(complement.cols());

  std::vector<Vec> cox_rays;
  for (int i = 0; i < k; ++i) {
    Vec e(k + extra);
    for (int j = 0; j < k + extra; ++j) e(j) = Rational(j == i ? 1 : 0);
    cox_rays.push_back(e);
  }
  std::vector<std::vector<int>> maximal;
  for (int mi : fan.maximal()) maximal.push_back(fan.ray_indices(mi));

  Mat projection(n, k + extra);
  projection.leftCols(k) = rays;
  projection.rightCols(extra) = complement;
  return CoxData{Fan(k + extra, cox_rays, maximal), projection};
}

ExtendedPoint cox_preimage(const ExtendedPoint& p, const CoxData& cox) {
  const Fan& fan = p.fan();
  const int total = static_cast<int>(cox.projection.cols());
  const auto& on_rays = fan.ray_indices(p.stratum());

  std::vector<bool> infinite(static_cast<size_t>(total), false);
  for (int i : on_rays) infinite[static_cast<size_t>(i)] = true;
  std::vector<int> free;
  for (int i = 0; i < total; ++i)
    if (!infinite[static_cast<size_t>(i)]) free.push_back(i);

  // solve the projection onto N(σ): the free coordinates must reproduce p
  const Mat& ptau = fan.cone(p.stratum()).quotient();
  Mat a(ptau.rows(), static_cast<Eigen::Index>(free.size()));
  for (size_t j = 0; j < free.size(); ++j)
    a.col(static_cast<Eigen::Index>(j)) = ptau * cox.projection.col(free[j]);
  auto c = solve_q(a, Vec(ptau * p.lift()));
  if (!c) throw DomainError("cox preimage: projection system is inconsistent");

  Vec lift(total);
  for (int i = 0; i < total; ++i) lift(i) = Rational(0);
  for (size_t j = 0; j < free.size(); ++j) lift(free[j]) = (*c)(static_cast<Eigen::Index>(j));

  // stratum upstairs: the orthant face on the stratum's own rays
  std::vector<Vec> gens;
  for (int i : on_rays) {
    Vec e(total);
    for (int j = 0; j < total; ++j) e(j) = Rational(j == i ? 1 : 0);
    gens.push_back(e);
  }
  int stratum = cox.fan.find(Cone::from_gens(total, gens));
  if (stratum < 0) throw DomainError("cox preimage: stratum cone missing upstairs");
  int chart = cox.fan.a_maximal_containing(stratum);
  return ExtendedPoint::from_lift(cox.fan, chart, stratum, lift);
}

ExtendedMonoidMap cox_projection_map(const CoxData& cox, const Fan& fan, int dst_chart,
                                     int src_chart) {
  return ExtendedMonoidMap::from_lattice_map(cox.projection, cox.fan, src_chart, fan, dst_chart);
}

}  // namespace trop
