#include "trop/anlim.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "trop/errors.hpp"

namespace trop {

Presentation::Presentation(std::vector<std::string> vars, std::vector<LaurentPoly> relations,
                           std::vector<Chart> charts, bool trivial)
    : vars_(std::move(vars)), relations_(std::move(relations)), charts_(std::move(charts)),
      trivial_(trivial) {
  const int n = num_vars();
  if (n == 0) throw PresentationError("presentation needs at least one generator");
  std::set<std::string> names(vars_.begin(), vars_.end());
  if (static_cast<int>(names.size()) != n) throw PresentationError("generator names collide");
  for (const auto& r : relations_)
    if (r.rank() != n) throw PresentationError("relation rank mismatch");
  if (charts_.empty()) throw PresentationError("presentation needs at least one chart");
  for (const auto& c : charts_) {
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int i : c.free) {
      if (i < 0 || i >= n || seen[static_cast<size_t>(i)])
        throw PresentationError("chart free set is not a subset of the generators");
      seen[static_cast<size_t>(i)] = true;
    }
    for (const auto& [i, expr] : c.bound) {
      if (i < 0 || i >= n || seen[static_cast<size_t>(i)])
        throw PresentationError("chart bound set overlaps the free set");
      seen[static_cast<size_t>(i)] = true;
      if (expr.rank() != static_cast<int>(c.free.size()))
        throw PresentationError("bound expression rank mismatch");
      if (expr.is_zero()) throw PresentationError("bound expression must be nonzero");
    }
    for (bool s : seen)
      if (!s) throw PresentationError("chart does not cover every generator");
  }
  // certify: every relation dies on every chart
  for (int c = 0; c < num_charts(); ++c)
    for (const auto& r : relations_)
      if (!reduce(r, c).is_zero())
        throw PresentationError("chart does not solve relation " + r.str());
}

LaurentPoly Presentation::reduce(const LaurentPoly& f, int chart) const {
  if (f.rank() != num_vars()) throw PresentationError("expression rank mismatch");
  const Chart& c = charts_[static_cast<size_t>(chart)];
  const int out_rank = static_cast<int>(c.free.size());
  std::vector<LaurentPoly> images(static_cast<size_t>(num_vars()), LaurentPoly(out_rank));
  for (int k = 0; k < out_rank; ++k)
    images[static_cast<size_t>(c.free[static_cast<size_t>(k)])] =
        LaurentPoly::variable(out_rank, k);
  for (const auto& [i, expr] : c.bound) images[static_cast<size_t>(i)] = expr;
  try {
    return substitute(f, images);
  } catch (const UnsupportedError& e) {
    throw PresentationError(std::string("expression is not regular on the chart: ") + e.what());
  }
}

SeminormPoint SeminormPoint::k_point(const Presentation& p, std::vector<PuiseuxScalar> coords) {
  if (static_cast<int>(coords.size()) != p.num_vars())
    throw PresentationError("coordinate arity mismatch");
  for (const auto& r : p.relations()) {
    try {
      if (!r.eval(coords).is_zero())
        throw PresentationError("coordinates do not satisfy relation " + r.str());
    } catch (const UnsupportedError&) {
      throw PresentationError("coordinates cannot evaluate relation " + r.str());
    } catch (const DomainError&) {
      throw PresentationError("coordinates cannot evaluate relation " + r.str());
    }
  }
  SeminormPoint x;
  x.pres_ = &p;
  x.kind_ = Kind::KPoint;
  x.coords_ = std::move(coords);
  return x;
}

SeminormPoint SeminormPoint::monomial(const Presentation& p, int chart, const Vec& v) {
  if (v.size() != p.num_vars()) throw PresentationError("weight arity mismatch");
  const auto& c = p.chart(chart);
  Vec free(static_cast<Eigen::Index>(c.free.size()));
  for (size_t k = 0; k < c.free.size(); ++k)
    free(static_cast<Eigen::Index>(k)) = v(c.free[k]);
  for (const auto& [i, expr] : c.bound) {
    ExtRat psi = expr.psi(free);
    if (!(psi == ExtRat(v(i))))
      throw PresentationError("declared weight disagrees with the chart reduction");
  }
  for (const auto& r : p.relations())
    if (!contains(r, v))
      throw PresentationError("weights lie outside trop of relation " + r.str());
  SeminormPoint x;
  x.pres_ = &p;
  x.kind_ = Kind::Monomial;
  x.chart_ = chart;
  x.weights_ = v;
  return x;
}

ExtRat seminorm_value(const SeminormPoint& x, const LaurentPoly& f) {
  const Presentation& p = x.presentation();
  if (f.rank() != p.num_vars()) throw PresentationError("expression rank mismatch");
  if (x.is_k_point()) {
    try {
      return f.eval_valuation(x.coords());
    } catch (const UnsupportedError& e) {
      throw PresentationError(std::string("expression not evaluable at the point: ") + e.what());
    } catch (const DomainError& e) {
      throw PresentationError(std::string("expression not evaluable at the point: ") + e.what());
    }
  }
  LaurentPoly g = p.reduce(f, x.chart());
  if (g.is_zero()) return ExtRat::infinity();
  const auto& c = p.chart(x.chart());
  Vec free(static_cast<Eigen::Index>(c.free.size()));
  for (size_t k = 0; k < c.free.size(); ++k)
    free(static_cast<Eigen::Index>(k)) = x.weights()(c.free[k]);
  return g.psi(free);
}

EmbeddingDiagram::EmbeddingDiagram(const Presentation& p, std::vector<EmbeddingNode> nodes,
                                   std::vector<DiagramEdge> edges)
    : pres_(&p) {
  for (auto& n : nodes) add_node(std::move(n));
  for (auto& e : edges) add_edge(std::move(e));
}

int EmbeddingDiagram::add_node(EmbeddingNode n) {
  if (n.gens.empty()) throw DomainError("embedding node needs at least one generator");
  for (const auto& g : n.gens)
    if (g.rank() != pres_->num_vars() || g.is_zero())
      throw DomainError("node generators must be nonzero expressions in the presentation");
  fans_.push_back(std::make_shared<const Fan>(affine_fan(static_cast<int>(n.gens.size()))));
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

void EmbeddingDiagram::certify(const DiagramEdge& e) const {
  const auto& src = nodes_[static_cast<size_t>(e.src)];
  const auto& dst = nodes_[static_cast<size_t>(e.dst)];
  if (e.exprs.size() != dst.gens.size())
    throw DomainError("edge arity does not match the destination node");
  for (size_t k = 0; k < e.exprs.size(); ++k) {
    const auto& m = e.exprs[k];
    if (m.exponents.size() != static_cast<Eigen::Index>(src.gens.size()))
      throw DomainError("edge exponent arity mismatch");
    LaurentPoly prod = LaurentPoly::constant(pres_->num_vars(), m.coeff);
    for (Eigen::Index j = 0; j < m.exponents.size(); ++j) {
      long exp = static_cast<long>(m.exponents(j).num().convert_to<long long>());
      if (exp < 0) throw DomainError("edge maps must be regular (nonnegative exponents)");
      for (long s = 0; s < exp; ++s) prod = prod * src.gens[static_cast<size_t>(j)];
    }
    if (!pres_->reduce(dst.gens[k] - prod, 0).is_zero())
      throw DomainError("edge certificate failed at generator " + dst.gens[k].str());
  }
}

void EmbeddingDiagram::add_edge(DiagramEdge e) {
  if (e.src < 0 || e.src >= num_nodes() || e.dst < 0 || e.dst >= num_nodes())
    throw DomainError("edge endpoints out of range");
  certify(e);
  edges_.push_back(std::move(e));
}

int EmbeddingDiagram::node_chart(int i) const { return node_fan(i).maximal().front(); }

ExtendedPoint pi(const EmbeddingDiagram& d, int node, const SeminormPoint& x) {
  const auto& gens = d.node(node).gens;
  std::vector<ExtRat> values;
  values.reserve(gens.size());
  for (const auto& g : gens) values.push_back(seminorm_value(x, g));
  return ExtendedPoint::from_values(d.node_fan(node), d.node_chart(node), values);
}

ExtendedPoint apply_edge(const EmbeddingDiagram& d, const DiagramEdge& e, const ExtendedPoint& p) {
  std::vector<ExtRat> values;
  values.reserve(e.exprs.size());
  for (const auto& m : e.exprs) {
    ExtRat v = m.coeff.valuation();
    for (Eigen::Index j = 0; j < m.exponents.size(); ++j)
      v += scale_ext(m.exponents(j).num(), p.values()[static_cast<size_t>(j)]);
    values.push_back(v);
  }
  return ExtendedPoint::from_values(d.node_fan(e.dst), d.node_chart(e.dst), values);
}

bool coherence_check(const EmbeddingDiagram& d, const SeminormPoint& x) {
  for (const auto& e : d.edges()) {
    ExtendedPoint lhs = apply_edge(d, e, pi(d, e.src, x));
    ExtendedPoint rhs = pi(d, e.dst, x);
    if (!(lhs.values() == rhs.values())) return false;
  }
  return true;
}

CoherentTuple tuple_from_point(const EmbeddingDiagram& d, const SeminormPoint& x) {
  CoherentTuple t;
  for (int i = 0; i < d.num_nodes(); ++i) t.points.emplace(i, pi(d, i, x));
  return t;
}

bool validate_coherent(const EmbeddingDiagram& d, const CoherentTuple& t) {
  if (static_cast<int>(t.points.size()) != d.num_nodes()) return false;
  for (const auto& e : d.edges()) {
    ExtendedPoint lhs = apply_edge(d, e, t.points.at(e.src));
    if (!(lhs.values() == t.points.at(e.dst).values())) return false;
  }
  return true;
}

std::vector<LaurentPoly> default_search_set(const Presentation& p, int degree_bound) {
  const int n = p.num_vars();
  std::vector<LaurentPoly> out;
  std::set<std::string> seen;
  Vec e(n);
  auto emit = [&] {
    bool zero = true;
    for (int i = 0; i < n; ++i)
      if (!e(i).is_zero()) zero = false;
    if (zero) return;
    LaurentPoly m = LaurentPoly::term(e, PuiseuxScalar::constant(Rational(1), p.trivial()));
    if (seen.insert(p.reduce(m, 0).str()).second) out.push_back(m);
  };
  auto scan = [&](auto&& self, int coord, int budget) -> void {
    if (coord == n) {
      emit();
      return;
    }
    for (int v = 0; v <= budget; ++v) {
      e(coord) = Rational(v);
      self(self, coord + 1, budget - v);
    }
    e(coord) = Rational(0);
  };
  scan(scan, 0, degree_bound);
  return out;
}

std::optional<EmbeddingNode> separate(const Presentation& p, const SeminormPoint& x,
                                      const SeminormPoint& y,
                                      const std::vector<LaurentPoly>& search) {
  for (const auto& f : search) {
    if (!(seminorm_value(x, f) == seminorm_value(y, f))) {
      EmbeddingNode node;
      node.name = "separating:" + f.str();
      node.gens.push_back(f);
      for (int i = 0; i < p.num_vars(); ++i)
        node.gens.push_back(LaurentPoly::variable(p.num_vars(), i));
      return node;
    }
  }
  return std::nullopt;
}

ExtRat reconstruct(const EmbeddingDiagram& d, const CoherentTuple& t, const LaurentPoly& f) {
  std::optional<ExtRat> value;
  int eligible = 0;
  for (int i = 0; i < d.num_nodes(); ++i) {
    if (!d.presentation().reduce(d.node(i).gens[0] - f, 0).is_zero()) continue;
    ++eligible;
    ExtRat v = t.points.at(i).values()[0];
    if (!value)
      value = v;
    else if (!(*value == v))
      throw Error("reconstruction disagrees across eligible nodes");
  }
  if (!eligible)
    throw NotFoundError("diagram too small: no node has the requested first generator");
  return *value;
}

int add_graph_node(EmbeddingDiagram& d, int base, const LaurentPoly& extra,
                   const std::string& name) {
  EmbeddingNode n;
  n.name = name;
  n.gens = d.node(base).gens;
  n.gens.push_back(extra);
  int idx = d.add_node(std::move(n));
  // projection back onto the base embedding
  DiagramEdge e;
  e.src = idx;
  e.dst = base;
  const size_t m = d.node(base).gens.size();
  for (size_t k = 0; k < m; ++k) {
    MonomialExpr mono;
    mono.coeff = PuiseuxScalar::constant(Rational(1), d.presentation().trivial());
    mono.exponents = Vec(static_cast<Eigen::Index>(m + 1));
    for (size_t j = 0; j <= m; ++j)
      mono.exponents(static_cast<Eigen::Index>(j)) = Rational(j == k ? 1 : 0);
    e.exprs.push_back(std::move(mono));
  }
  d.add_edge(std::move(e));
  return idx;
}

int add_product_node(EmbeddingDiagram& d, int left, int right, const std::string& name) {
  const auto& lg = d.node(left).gens;
  const auto& rg = d.node(right).gens;
  EmbeddingNode n;
  n.name = name;
  n.gens = lg;
  n.gens.insert(n.gens.end(), rg.begin(), rg.end());
  int idx = d.add_node(std::move(n));
  const size_t total = lg.size() + rg.size();
  auto projection = [&](int dst, size_t offset, size_t count) {
    DiagramEdge e;
    e.src = idx;
    e.dst = dst;
    for (size_t k = 0; k < count; ++k) {
      MonomialExpr mono;
      mono.coeff = PuiseuxScalar::constant(Rational(1), d.presentation().trivial());
      mono.exponents = Vec(static_cast<Eigen::Index>(total));
      for (size_t j = 0; j < total; ++j)
        mono.exponents(static_cast<Eigen::Index>(j)) = Rational(j == offset + k ? 1 : 0);
      e.exprs.push_back(std::move(mono));
    }
    d.add_edge(std::move(e));
  };
  projection(left, 0, lg.size());
  projection(right, lg.size(), rg.size());

  // transposition automorphism when the first generators agree
  if (d.presentation().reduce(lg[0] - rg[0], 0).is_zero()) {
    DiagramEdge swap;
    swap.src = idx;
    swap.dst = idx;
    for (size_t k = 0; k < total; ++k) {
      size_t from = k == 0 ? lg.size() : (k == lg.size() ? 0 : k);
      MonomialExpr mono;
      mono.coeff = PuiseuxScalar::constant(Rational(1), d.presentation().trivial());
      mono.exponents = Vec(static_cast<Eigen::Index>(total));
      for (size_t j = 0; j < total; ++j)
        mono.exponents(static_cast<Eigen::Index>(j)) = Rational(j == from ? 1 : 0);
      swap.exprs.push_back(std::move(mono));
    }
    d.add_edge(std::move(swap));
  }
  return idx;
}

Presentation plane_presentation(const LaurentPoly& f) {
  if (f.rank() != 2) throw DomainError("plane presentation needs a rank-2 polynomial");
  if (f.num_terms() < 2) throw DomainError("plane presentation needs a genuine hypersurface");
  std::vector<Presentation::Chart> charts;
  for (int solve = 0; solve < 2; ++solve) {
    // solvable when the variable appears in exactly one term, with exponent 1
    const int keep = 1 - solve;
    int hits = 0;
    Vec solo;
    PuiseuxScalar coeff;
    for (const auto& [u, c] : f.terms())
      if (!u(solve).is_zero()) {
        ++hits;
        solo = u;
        coeff = c;
      }
    if (hits != 1 || solo(solve) != Rational(1)) continue;
    LaurentPoly rest(1);
    for (const auto& [u, c] : f.terms()) {
      if (!u(solve).is_zero()) continue;
      rest = rest + LaurentPoly::term(make_vec({u(keep)}), c);
    }
    if (rest.is_zero()) continue;
    // x_solve = -rest / (coeff * x_keep^{solo(keep)})
    LaurentPoly expr =
        (-rest) * LaurentPoly::term(make_vec({-solo(keep)}), coeff.invert_monomial());
    Presentation::Chart chart;
    chart.free = {keep};
    chart.bound.emplace(solve, std::move(expr));
    charts.push_back(std::move(chart));
  }
  if (charts.empty())
    throw UnsupportedError("no generator of the plane curve is linearly solvable");
  return Presentation({"x", "y"}, {f}, std::move(charts), f.trivial_coeffs());
}

Presentation torus_presentation(int n, bool trivial) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  Presentation::Chart chart;
  for (int i = 0; i < n; ++i) chart.free.push_back(i);
  return Presentation(std::move(names), {}, {std::move(chart)}, trivial);
}

namespace {

Vec sample_cell_point(const Polyhedron& cell, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(0, 4), den(1, 3);
  auto verts = cell.vertices();
  auto rays = cell.recession_rays();
  Vec p(cell.rank());
  for (int i = 0; i < cell.rank(); ++i) p(i) = Rational(0);
  Rational total(0);
  std::vector<Rational> lambda;
  for (size_t i = 0; i < verts.size(); ++i) {
    Rational a(num(rng) + 1, den(rng));
    lambda.push_back(a);
    total += a;
  }
  for (size_t i = 0; i < verts.size(); ++i) p += verts[i] * (lambda[i] / total);
  for (const auto& r : rays) p += r * Rational(num(rng), den(rng));
  const Mat& lin = cell.homog().lineality();
  for (Eigen::Index j = 0; j < lin.cols(); ++j) {
    Vec dir = lin.col(j).head(cell.rank());
    p += dir * Rational(num(rng) - 2, den(rng));
  }
  return p;
}

ExtRat tuple_value(const Vec& h, const std::vector<ExtRat>& vals) {
  ExtRat v(Rational(0));
  for (Eigen::Index i = 0; i < h.size(); ++i) v += scale_ext(h(i).num(), vals[static_cast<size_t>(i)]);
  return v;
}

ExtendedPoint ambient_point(const Fan& ambient, const std::vector<ExtRat>& coordinate_valuations) {
  int chart = ambient.maximal().front();
  const auto& basis = ambient.chart_monoid(chart).hilbert;
  std::vector<ExtRat> values;
  values.reserve(basis.size());
  for (const auto& h : basis) values.push_back(tuple_value(h, coordinate_valuations));
  return ExtendedPoint::from_values(ambient, chart, values);
}

}  // namespace

ImageReport image_check(const LaurentPoly& f, const Fan& ambient, int samples, unsigned seed,
                        const Rational& precision) {
  if (f.rank() != 2) throw DomainError("image check is scoped to plane hypersurfaces");
  ImageReport report;
  if (f.num_terms() < 2) {
    // single-term hypersurface: empty tropicalization, no samples, vacuous
    report.forward_total = report.forward_hits = 1;
    report.backward_total = report.backward_hits = 1;
    return report;
  }
  Presentation p = plane_presentation(f);
  std::mt19937_64 rng(seed);

  StratifiedTrop st = extended_trop(f, ambient);
  TropHypersurface torus = p.trivial() ? trivial_trop(f) : trop_hypersurface(f.as_puiseux());

  auto forward = [&](const SeminormPoint& x, const std::string& tag) {
    ++report.forward_total;
    std::vector<ExtRat> vals = {seminorm_value(x, LaurentPoly::variable(2, 0)),
                                seminorm_value(x, LaurentPoly::variable(2, 1))};
    if (st.support_contains(ambient_point(ambient, vals)))
      ++report.forward_hits;
    else
      report.failures.push_back("forward sample missed the support: " + tag);
  };

  if (torus.complex.empty()) {
    // vacuous pass: a single-term hypersurface has empty tropicalization
    report.forward_total = report.forward_hits = 1;
    report.backward_total = report.backward_hits = 1;
    return report;
  }

  const auto& cells = torus.complex.cells;
  std::uniform_int_distribution<size_t> pick(0, cells.size() - 1);

  if (p.trivial()) {
    // forward: monomial seminorms on each chart
    std::uniform_int_distribution<int> w(-5, 5);
    for (int i = 0; i < samples; ++i) {
      int chart = static_cast<int>(static_cast<size_t>(i) % p.num_charts());
      const auto& c = p.chart(chart);
      Vec full(2);
      full(c.free[0]) = Rational(w(rng));
      ExtRat bound = c.bound.begin()->second.psi(make_vec({full(c.free[0])}));
      full(c.bound.begin()->first) = bound.finite();
      forward(SeminormPoint::monomial(p, chart, full), "monomial chart " + std::to_string(chart));
    }
    // backward: every ray of the fan is hit by a monomial seminorm
    for (const auto& cell : cells) {
      for (const auto& dir : cell.recession_rays()) {
        ++report.backward_total;
        bool hit = false;
        for (int chart = 0; chart < p.num_charts() && !hit; ++chart) {
          const auto& c = p.chart(chart);
          for (int scale = -6; scale <= 6 && !hit; ++scale) {
            if (scale == 0) continue;
            Vec full(2);
            full(c.free[0]) = Rational(scale);
            ExtRat bound = c.bound.begin()->second.psi(make_vec({full(c.free[0])}));
            full(c.bound.begin()->first) = bound.finite();
            // proportional to the ray direction with a positive factor?
            Rational cross = full(0) * dir(1) - full(1) * dir(0);
            Rational dot = full(0) * dir(0) + full(1) * dir(1);
            if (cross.is_zero() && dot.sign() > 0) hit = true;
          }
        }
        if (hit)
          ++report.backward_hits;
        else
          report.failures.push_back("ray not hit by a monomial seminorm");
      }
    }
    return report;
  }

  // forward: exact K-points parametrized through the charts, plus monomial
  // seminorms
  std::uniform_int_distribution<int> w(-8, 8), cnum(1, 5), roff(-2, 2);
  for (int i = 0; i < samples; ++i) {
    int chart = static_cast<int>(static_cast<size_t>(i) % p.num_charts());
    const auto& c = p.chart(chart);
    int free = c.free[0], bound_var = c.bound.begin()->first;
    const LaurentPoly& expr = c.bound.begin()->second;

    PuiseuxScalar free_val = PuiseuxScalar::monomial(Rational(cnum(rng)), Rational(w(rng), 2));
    if (int r = roff(rng); r != 0) {
      // perturbed samples reach other cells of the curve; skip when the
      // chart's solving expression needs an invertible coordinate
      PuiseuxScalar shifted = free_val + PuiseuxScalar::constant(Rational(r));
      try {
        std::vector<PuiseuxScalar> coords(2);
        coords[static_cast<size_t>(free)] = shifted;
        coords[static_cast<size_t>(bound_var)] = expr.eval({shifted});
        forward(SeminormPoint::k_point(p, coords), "chart point " + std::to_string(chart));
      } catch (const Error&) {
      }
    }
    std::vector<PuiseuxScalar> coords(2);
    coords[static_cast<size_t>(free)] = free_val;
    coords[static_cast<size_t>(bound_var)] = expr.eval({free_val});
    if (!coords[static_cast<size_t>(bound_var)].is_zero())
      forward(SeminormPoint::k_point(p, coords), "chart point " + std::to_string(chart));

    Vec full(2);
    full(free) = Rational(w(rng), 2);
    ExtRat bound = expr.psi(make_vec({full(free)}));
    full(bound_var) = bound.finite();
    forward(SeminormPoint::monomial(p, chart, full), "monomial chart " + std::to_string(chart));
  }
  // boundary strata with exact univariate solutions
  for (int i = 0; i < ambient.num_cones(); ++i) {
    if (st.kinds[static_cast<size_t>(i)] != StratumKind::Complex) continue;
    if (ambient.cone(i).dim() != 1) continue;
    const auto& complex = st.complexes[static_cast<size_t>(i)];
    const auto& restriction = st.restrictions[static_cast<size_t>(i)];
    for (const auto& cell : complex.cells) {
      Vec w = sample_cell_point(cell, rng);
      try {
        PuiseuxScalar root = lift_root_univariate(restriction, w(0), precision + Rational(3));
        // embed: zero on the coordinate the ray kills
        std::vector<PuiseuxScalar> coords(2, PuiseuxScalar::zero());
        const Vec ray = ambient.cone(i).rays().col(0);
        int alive = ray(0).is_zero() ? 0 : 1;
        coords[static_cast<size_t>(alive)] = root;
        if (!f.eval(coords).is_zero()) continue;  // root was only approximate
        forward(SeminormPoint::k_point(p, coords), "boundary stratum " + std::to_string(i));
      } catch (const Error&) {
        // rays whose restriction admits no rational root are reported by the
        // backward pass
      }
    }
  }

  // backward: sampled support points are hit by exact lifts
  for (int i = 0; i < samples; ++i) {
    Vec v = sample_cell_point(cells[pick(rng)], rng);
    ++report.backward_total;
    try {
      auto lifted = lift_point_search(f, v, precision);
      bool ok = lifted.coords[0].valuation() == ExtRat(v(0)) &&
                lifted.coords[1].valuation() == ExtRat(v(1));
      if (ok)
        ++report.backward_hits;
      else
        report.failures.push_back("lift has wrong leading valuations");
    } catch (const Error& e) {
      report.failures.push_back(std::string("lift failed at ") + v(0).str() + "," + v(1).str() +
                                ": " + e.what());
    }
  }
  return report;
}

}  // namespace trop
