#include "trop/closure.hpp"

#include "trop/errors.hpp"

namespace trop {

bool StratifiedTrop::support_contains(const ExtendedPoint& p) const {
  switch (kinds[static_cast<size_t>(p.stratum())]) {
    case StratumKind::Empty:
      return false;
    case StratumKind::Full:
      return true;
    case StratumKind::Complex:
      return complexes[static_cast<size_t>(p.stratum())].support_contains(p.stratum_coords());
  }
  return false;
}

LaurentPoly chart_clear(const LaurentPoly& f, const Cone& sigma) {
  if (f.is_zero()) throw DomainError("chart_clear of the zero polynomial");
  const int n = f.rank();
  if (sigma.rank() != n) throw DomainError("chart rank mismatch");
  const Mat& rays = sigma.rays();

  // required pairing with each ray of the chart cone
  std::vector<Rational> needed;
  for (Eigen::Index r = 0; r < rays.cols(); ++r) {
    Rational c;
    bool first = true;
    for (const auto& [u, a] : f.terms()) {
      Rational v = -u.dot(rays.col(r));
      if (first || c < v) c = v;
      first = false;
    }
    needed.push_back(c);
  }

  DualMonoid monoid = dual_monoid(sigma);
  auto valid = [&](const Vec& u) {
    for (Eigen::Index r = 0; r < rays.cols(); ++r)
      if (Rational(u.dot(rays.col(r))) < needed[static_cast<size_t>(r)]) return false;
    return true;
  };

  // start from a deep interior multiple and greedily peel off generators;
  // a valid element reducible by the monoid is reducible by a single generator
  Vec probe(n);
  for (int i = 0; i < n; ++i) probe(i) = Rational(0);
  std::vector<Vec> pointed;
  for (const auto& h : monoid.hilbert)
    if (!sigma.orthogonal_to(h)) pointed.push_back(h);
  for (const auto& h : pointed) probe += h;
  BigInt scale = 0;
  for (const auto& c : needed) {
    BigInt b = c.ceil();
    if (b > scale) scale = b;
  }
  Vec u0 = probe * Rational(scale < 0 ? BigInt(0) : scale);
  if (!valid(u0)) throw DomainError("chart_clear: interior probe failed");
  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (const auto& h : pointed) {
      Vec cand = u0 - h;
      if (valid(cand)) {
        u0 = cand;
        reduced = true;
        break;
      }
    }
  }

  // canonical representative modulo the unit lattice of the chart monoid
  const Mat& units = monoid.cone.lineality();
  for (Eigen::Index j = 0; j < units.cols(); ++j) {
    Eigen::Index pivot = 0;
    while (pivot < units.rows() && units(pivot, j).is_zero()) ++pivot;
    Rational q(floor_div(u0(pivot).num(), units(pivot, j).num()));
    u0 -= units.col(j) * q;
  }
  return f.shift(u0);
}

std::optional<LaurentPoly> orbit_restriction(const LaurentPoly& g, const Cone& tau) {
  const Mat& p = tau.quotient();
  Mat pt = p.transpose();
  LaurentPoly out(static_cast<int>(p.rows()));
  bool any = false;
  for (const auto& [u, c] : g.terms()) {
    if (!tau.orthogonal_to(u)) continue;
    auto coords = solve_q(pt, u);
    if (!coords || !is_integral(*coords))
      throw DomainError("orbit restriction: exponent outside the orbit character lattice");
    out = out + LaurentPoly::term(*coords, c);
    any = true;
  }
  if (!any) return std::nullopt;
  return out;
}

StratifiedTrop extended_trop(const LaurentPoly& f, const Fan& fan) {
  if (f.is_zero()) throw DomainError("extended tropicalization of the zero polynomial");
  if (f.rank() != fan.rank()) throw DomainError("polynomial rank differs from the fan rank");

  StratifiedTrop out;
  out.fan = &fan;
  out.kinds.resize(static_cast<size_t>(fan.num_cones()), StratumKind::Empty);
  out.complexes.resize(static_cast<size_t>(fan.num_cones()));
  out.restrictions.resize(static_cast<size_t>(fan.num_cones()));

  for (int i = 0; i < fan.num_cones(); ++i) {
    int chart = fan.a_maximal_containing(i);
    LaurentPoly cleared = chart_clear(f, fan.cone(chart));
    auto restricted = orbit_restriction(cleared, fan.cone(i));
    if (!restricted) {
      out.kinds[static_cast<size_t>(i)] = StratumKind::Full;
      out.restrictions[static_cast<size_t>(i)] =
          LaurentPoly::zero(static_cast<int>(fan.cone(i).quotient().rows()));
      continue;
    }
    out.restrictions[static_cast<size_t>(i)] = *restricted;
    if (restricted->num_terms() < 2) {
      out.kinds[static_cast<size_t>(i)] = StratumKind::Empty;
      continue;
    }
    out.kinds[static_cast<size_t>(i)] = StratumKind::Complex;
    out.complexes[static_cast<size_t>(i)] = trop_hypersurface(*restricted).complex;
  }
  return out;
}

namespace {

PolyComplex transformed(const PolyComplex& c, const Mat& t) {
  PolyComplex out;
  out.rank = static_cast<int>(t.rows());
  for (const auto& cell : c.cells) out.add_cell(cell.transformed(t));
  return out;
}

}  // namespace

bool invariant_intersection_check(const LaurentPoly& f, const Fan& fan, int sigma0) {
  StratifiedTrop whole = extended_trop(f, fan);
  StarFan star = star_fan(fan, sigma0);

  for (int i = 0; i < fan.num_cones(); ++i) {
    if (!fan.is_face(sigma0, i)) continue;
    int j = star.from_original[static_cast<size_t>(i)];
    if (j < 0) throw DomainError("star fan misses a containing cone");

    // the intersection's ideal on this chart: first restrict the cleared
    // equation to the σ0 orbit, then to the deeper orbit within the star.
    // Re-clearing inside the star would strip monomial factors and lose the
    // boundary components of X ∩ V.
    int chart = fan.a_maximal_containing(i);
    auto g = orbit_restriction(chart_clear(f, fan.cone(chart)), fan.cone(sigma0));

    StratumKind rhs_kind;
    PolyComplex rhs_complex;
    if (!g) {
      rhs_kind = StratumKind::Full;
    } else {
      auto r = orbit_restriction(*g, star.fan.cone(j));
      if (!r) {
        rhs_kind = StratumKind::Full;
      } else if (r->num_terms() < 2) {
        rhs_kind = StratumKind::Empty;
      } else {
        rhs_kind = StratumKind::Complex;
        rhs_complex = trop_hypersurface(*r).complex;
      }
    }

    StratumKind lhs_kind = whole.kinds[static_cast<size_t>(i)];
    if (lhs_kind != rhs_kind) return false;
    if (lhs_kind != StratumKind::Complex) continue;

    // align coordinates: both sides present N(σ_i), once directly and once
    // through the star fan
    Mat comp = star.fan.cone(j).quotient() * star.projection;
    const Mat& direct = fan.cone(i).quotient();
    Mat t = direct * comp.transpose() * inverse_q(Mat(comp * comp.transpose()));
    if (!is_integral(t) || !same(Mat(t * comp), direct) || abs(det_q(t)) != Rational(1))
      throw DomainError("stratum coordinate change is not unimodular");
    if (!whole.complexes[static_cast<size_t>(i)].support_equal(transformed(rhs_complex, t)))
      return false;
  }
  return true;
}

}  // namespace trop
