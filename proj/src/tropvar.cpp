#include "trop/tropvar.hpp"

#include <algorithm>
#include <set>

#include "trop/errors.hpp"

namespace trop {

std::vector<std::vector<int>> subdivision_faces(const std::vector<Vec>& exponents,
                                                const std::vector<Rational>& heights) {
  const int n = exponents.empty() ? 0 : static_cast<int>(exponents[0].size());
  const int r = static_cast<int>(exponents.size());

  // lifted polyhedron conv{(u_i, c_i)} + vertical ray
  std::vector<Vec> lifted;
  for (int i = 0; i < r; ++i) {
    Vec p(n + 1);
    p.head(n) = exponents[static_cast<size_t>(i)];
    p(n) = heights[static_cast<size_t>(i)];
    lifted.push_back(p);
  }
  Vec up(n + 1);
  for (int i = 0; i <= n; ++i) up(i) = Rational(i == n ? 1 : 0);
  Polyhedron lift_poly = Polyhedron::from_vrep(n + 1, lifted, {up});

  // lower facets: homogenized facet normals with positive height component
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> queue;
  const Cone& hc = lift_poly.homog();
  for (Eigen::Index j = 0; j < hc.dual_rays().cols(); ++j) {
    Vec d = hc.dual_rays().col(j);
    if (d(n).sign() <= 0) continue;  // vertical facet or the h >= 0 cut
    std::vector<int> tight;
    for (int i = 0; i < r; ++i) {
      Vec h(n + 2);
      h.head(n + 1) = lifted[static_cast<size_t>(i)];
      h(n + 1) = Rational(1);
      if (Rational(d.dot(h)).is_zero()) tight.push_back(i);
    }
    if (tight.size() >= 2 && found.insert(tight).second) queue.push_back(tight);
  }

  // close under taking faces of the subdivision cells
  while (!queue.empty()) {
    std::vector<int> cell = queue.back();
    queue.pop_back();
    std::vector<Vec> pts;
    for (int i : cell) pts.push_back(exponents[static_cast<size_t>(i)]);
    Polyhedron q = Polyhedron::from_vrep(n, pts, {});
    const Cone& qc = q.homog();
    for (Eigen::Index j = 0; j < qc.dual_rays().cols(); ++j) {
      Vec d = qc.dual_rays().col(j);
      std::vector<int> tight;
      for (int i : cell) {
        Vec h(n + 1);
        h.head(n) = exponents[static_cast<size_t>(i)];
        h(n) = Rational(1);
        if (Rational(d.dot(h)).is_zero()) tight.push_back(i);
      }
      if (tight.size() >= 2 && tight.size() < cell.size() && found.insert(tight).second)
        queue.push_back(tight);
    }
  }
  return {found.begin(), found.end()};
}

namespace {

PolyComplex corner_locus(const LaurentPoly& f) {
  const int n = f.rank();
  std::vector<Vec> exponents;
  std::vector<Rational> heights;
  for (const auto& [u, c] : f.terms()) {
    exponents.push_back(u);
    heights.push_back(c.valuation().finite());
  }

  PolyComplex out;
  out.rank = n;
  if (exponents.size() < 2) return out;

  for (const auto& face : subdivision_faces(exponents, heights)) {
    const int i0 = face.front();
    std::vector<Polyhedron::Halfspace> ineqs, eqs;
    std::set<int> in_face(face.begin(), face.end());
    for (int j : face) {
      if (j == i0) continue;
      eqs.push_back({Vec(exponents[static_cast<size_t>(j)] - exponents[static_cast<size_t>(i0)]),
                     heights[static_cast<size_t>(i0)] - heights[static_cast<size_t>(j)]});
    }
    for (int k = 0; k < static_cast<int>(exponents.size()); ++k) {
      if (in_face.count(k)) continue;
      ineqs.push_back({Vec(exponents[static_cast<size_t>(k)] - exponents[static_cast<size_t>(i0)]),
                       heights[static_cast<size_t>(i0)] - heights[static_cast<size_t>(k)]});
    }
    out.add_cell(Polyhedron::from_hrep(n, ineqs, eqs));
  }
  return out;
}

}  // namespace

TropHypersurface trop_hypersurface(const LaurentPoly& f) {
  if (f.is_zero()) throw DomainError("tropicalization of the zero polynomial");
  TropHypersurface out;
  out.source = f;
  out.has_monomial_factor = !is_zero(f.monomial_factor());
  out.complex = corner_locus(f);
  return out;
}

bool contains(const LaurentPoly& f, const Vec& v) {
  if (f.is_zero()) return true;
  return !f.initial_form(v).is_monomial();
}

TropHypersurface trivial_trop(const LaurentPoly& f) {
  if (f.is_zero()) throw DomainError("tropicalization of the zero polynomial");
  for (const auto& [u, c] : f.terms())
    if (!c.is_constant())
      throw DomainError("trivial tropicalization requires constant coefficients");
  return trop_hypersurface(f);
}

bool degeneration_nonempty(const LaurentPoly& f, const Vec& v) {
  // hypersurface case of the degeneration criterion: X_v nonempty iff the
  // initial form is not a monomial
  return contains(f, v);
}

namespace {

Rational lift_constant(int attempt) {
  static const long long seq[] = {2, 1, 3, 4, 9, -1, -2, 5, 16, 25, 7, -3, 36, 49, 8, 100};
  const int k = static_cast<int>(sizeof(seq) / sizeof(seq[0]));
  if (attempt < k) return Rational(seq[attempt]);
  long long b = attempt - k + 11;
  return Rational(b * b);
}

// rational roots of the residue polynomial sum_j res_j d^j, smallest first
std::vector<Rational> rational_roots(const std::map<long, Rational>& res) {
  long jmin = res.begin()->first;
  std::map<long, BigInt> z;
  BigInt lcm = 1;
  for (const auto& [j, c] : res) lcm = lcm / gcd(lcm, c.den()) * c.den();
  for (const auto& [j, c] : res) z[j - jmin] = c.num() * (lcm / c.den());
  BigInt trailing = z.begin()->second, leading = z.rbegin()->second;
  auto divisors = [](BigInt x) {
    if (x < 0) x = -x;
    std::vector<BigInt> out;
    for (BigInt d = 1; d * d <= x; ++d)
      if (x % d == 0) {
        out.push_back(d);
        out.push_back(x / d);
      }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  if (abs(Rational(trailing)) > Rational(BigInt("1000000000000")) ||
      abs(Rational(leading)) > Rational(BigInt("1000000000000")))
    throw UnsupportedError("residue root search exceeds the divisor budget");
  std::vector<Rational> candidates;
  for (const BigInt& p : divisors(trailing))
    for (const BigInt& q : divisors(leading)) {
      candidates.push_back(Rational(p, q));
      candidates.push_back(Rational(-p, q));
    }
  std::sort(candidates.begin(), candidates.end(), [](const Rational& a, const Rational& b) {
    if (abs(a) != abs(b)) return abs(a) < abs(b);
    return b < a;  // positive sign first
  });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<Rational> roots;
  for (const auto& d : candidates) {
    Rational val(0);
    for (const auto& [j, c] : z) val += Rational(c) * pow(d, j);
    if (val.is_zero()) roots.push_back(d);
  }
  return roots;
}

UniPoly shift_root(const UniPoly& g, const PuiseuxScalar& s) {
  // g(s + y) expanded by binomials
  UniPoly out;
  for (const auto& [j, b] : g) {
    // binomial coefficients C(j, i)
    BigInt binom = 1;
    PuiseuxScalar spow = PuiseuxScalar::constant(Rational(1));
    std::vector<PuiseuxScalar> spows;
    for (long i = 0; i <= j; ++i) {
      spows.push_back(spow);
      spow = spow * s;
    }
    for (long i = 0; i <= j; ++i) {
      if (i > 0) binom = binom * (j - i + 1) / i;
      else binom = 1;
      PuiseuxScalar contrib = b * spows[static_cast<size_t>(j - i)] *
                              PuiseuxScalar::constant(Rational(binom));
      auto [it, fresh] = out.emplace(i, contrib);
      if (!fresh) it->second = it->second + contrib;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

PuiseuxScalar puiseux_root(const UniPoly& g_in, const Rational& target_valuation,
                           const Rational& precision) {
  UniPoly g;
  for (const auto& [j, b] : g_in)
    if (!b.is_zero()) g.emplace(j, b);
  if (g.empty()) throw DomainError("root of the zero polynomial");

  PuiseuxScalar s = PuiseuxScalar::zero();
  Rational mu = target_valuation;
  bool first = true;
  for (int iter = 0; iter < 200; ++iter) {
    if (!first) {
      auto b0 = g.find(0);
      if (b0 == g.end()) return s;  // exact root
      ExtRat err = b0->second.valuation();
      if (err > ExtRat(precision)) return s;
      // leftmost Newton-polygon slope: the largest remaining root valuation
      bool have = false;
      Rational next;
      for (const auto& [j, b] : g) {
        if (j == 0) continue;
        Rational slope = (err.finite() - b.valuation().finite()) / Rational(j);
        if (!have || next < slope) {
          next = slope;
          have = true;
        }
      }
      if (!have) throw UnsupportedError("no further correction terms available");
      if (!(mu < next))
        throw UnsupportedError("Newton polygon slope failed to increase");
      mu = next;
    }

    // indices attaining the minimal weight at slope mu
    ExtRat m = ExtRat::infinity();
    for (const auto& [j, b] : g)
      m = min(m, b.valuation() + ExtRat(Rational(j) * mu));
    std::map<long, Rational> residue;
    for (const auto& [j, b] : g)
      if (b.valuation() + ExtRat(Rational(j) * mu) == m) residue[j] = b.residue_leading();
    if (first && residue.size() < 2)
      throw DomainError("no root with the prescribed valuation");
    std::vector<Rational> roots;
    for (const auto& d : rational_roots(residue))
      if (!d.is_zero()) roots.push_back(d);
    if (roots.empty())
      throw UnsupportedError("branch requires an irrational leading residue");
    PuiseuxScalar step = PuiseuxScalar::monomial(roots.front(), mu);
    s = s + step;
    g = shift_root(g, step);
    first = false;
  }
  throw UnsupportedError("Newton-polygon iteration exceeded its budget");
}

namespace {

// univariate view of f along variable `var`, multiplied by a monomial so all
// degrees are nonnegative; returns the degree shift applied
std::pair<UniPoly, long> univariate_in(const LaurentPoly& f, int var,
                                       const std::vector<PuiseuxScalar>& subs) {
  UniPoly g;
  for (const auto& [u, c] : f.terms()) {
    PuiseuxScalar coeff = c;
    for (int i = 0; i < f.rank(); ++i) {
      if (i == var) continue;
      long e = static_cast<long>(u(i).num().convert_to<long long>());
      if (e != 0) coeff = coeff * subs[static_cast<size_t>(i)].pow(e);
    }
    long d = static_cast<long>(u(var).num().convert_to<long long>());
    auto [it, fresh] = g.emplace(d, coeff);
    if (!fresh) it->second = it->second + coeff;
  }
  for (auto it = g.begin(); it != g.end();)
    it = it->second.is_zero() ? g.erase(it) : std::next(it);
  long shift = 0;
  if (!g.empty() && g.begin()->first < 0) shift = -g.begin()->first;
  if (shift != 0) {
    UniPoly shifted;
    for (const auto& [j, b] : g) shifted.emplace(j + shift, b);
    g = std::move(shifted);
  }
  return {g, shift};
}

}  // namespace

PuiseuxScalar lift_root_univariate(const LaurentPoly& f, const Rational& v,
                                   const Rational& precision) {
  if (f.rank() != 1) throw DomainError("univariate lift needs a rank-1 polynomial");
  if (f.is_zero()) throw DomainError("univariate lift of the zero polynomial");
  auto [g, shift] = univariate_in(f, 0, {PuiseuxScalar::zero()});
  Rational prec = precision - Rational(shift) * v;
  return puiseux_root(g, v, prec);
}

LiftedPoint lift_point(const LaurentPoly& f, const Vec& v, const Rational& precision,
                       int attempt) {
  if (f.rank() != 2) throw UnsupportedError("point lifting is scoped to plane curves");
  if (f.is_zero()) throw DomainError("lifting on the zero polynomial");
  if (!contains(f, v)) throw DomainError("point is not in the tropicalization");

  bool x_dep = false, y_dep = false;
  for (const auto& [u, c] : f.terms()) {
    if (!u(0).is_zero()) x_dep = true;
    if (!u(1).is_zero()) y_dep = true;
  }

  // pin one coordinate to a generic monomial and solve the other by the
  // Newton-polygon iteration
  auto pinned = [&](int pin, const Rational& c) {
    std::vector<PuiseuxScalar> coords(2);
    int solve = 1 - pin;
    coords[static_cast<size_t>(pin)] = PuiseuxScalar::monomial(c, v(pin));
    coords[static_cast<size_t>(solve)] = PuiseuxScalar::zero();
    auto [g, shift] = univariate_in(f, solve, coords);
    if (g.empty()) {
      // f vanishes identically on the pinned line; anything of the right
      // valuation completes the point
      coords[static_cast<size_t>(solve)] = PuiseuxScalar::monomial(Rational(1), v(solve));
      return coords;
    }
    if (g.size() == 1)
      throw UnsupportedError("substitution collapsed the Newton polygon; retry with another c");
    try {
      coords[static_cast<size_t>(solve)] =
          puiseux_root(g, v(solve), precision - Rational(shift) * v(solve));
    } catch (const DomainError&) {
      // membership was verified, so a missing segment means the substitution
      // landed on a cell this orientation cannot reach (or c cancelled a
      // residue); the caller swaps orientation or retries c
      throw UnsupportedError("substitution degenerated the Newton polygon; retry");
    }
    return coords;
  };

  std::vector<PuiseuxScalar> coords(2);
  if (!y_dep) {
    // f is univariate in x; the y coordinate is free
    auto [g, shift] = univariate_in(f, 0, {PuiseuxScalar::zero(), PuiseuxScalar::zero()});
    coords[0] = puiseux_root(g, v(0), precision - Rational(shift) * v(0));
    coords[1] = PuiseuxScalar::monomial(Rational(1), v(1));
  } else if (!x_dep) {
    auto [g, shift] = univariate_in(f, 1, {PuiseuxScalar::zero(), PuiseuxScalar::zero()});
    coords[1] = puiseux_root(g, v(1), precision - Rational(shift) * v(1));
    coords[0] = PuiseuxScalar::monomial(Rational(1), v(0));
  } else {
    Rational c = lift_constant(attempt);
    try {
      coords = pinned(0, c);
    } catch (const UnsupportedError&) {
      coords = pinned(1, c);
    }
  }

  ExtRat check = f.eval_valuation(coords);
  if (check.is_finite() && !(precision < check.finite()))
    throw Error("lifted point failed its precision check");
  if (!(coords[0].valuation() == ExtRat(v(0))) || !(coords[1].valuation() == ExtRat(v(1))))
    throw Error("lifted point has the wrong coordinate valuations");
  return LiftedPoint{coords, precision};
}

LiftedPoint lift_point_search(const LaurentPoly& f, const Vec& v, const Rational& precision,
                              int max_attempts) {
  for (int attempt = 0;; ++attempt) {
    try {
      return lift_point(f, v, precision, attempt);
    } catch (const UnsupportedError&) {
      if (attempt + 1 >= max_attempts) throw;
    }
  }
}

}  // namespace trop
