#include "trop/polyhedron.hpp"

#include <algorithm>

#include "trop/errors.hpp"

namespace trop {

namespace {

Vec lift_at_height(const Vec& x, const Rational& h) {
  Vec out(x.size() + 1);
  out.head(x.size()) = x;
  out(x.size()) = h;
  return out;
}

}  // namespace

Polyhedron Polyhedron::from_vrep(int rank, const std::vector<Vec>& vertices,
                                 const std::vector<Vec>& rays) {
  std::vector<Vec> gens;
  for (const auto& v : vertices) {
    if (v.size() != rank) throw DomainError("vertex rank mismatch");
    gens.push_back(primitive(clear_denominators(lift_at_height(v, Rational(1)))));
  }
  for (const auto& r : rays) {
    if (r.size() != rank) throw DomainError("ray rank mismatch");
    gens.push_back(primitive(clear_denominators(lift_at_height(r, Rational(0)))));
  }
  return Polyhedron(rank, Cone::from_gens(rank + 1, gens));
}

Polyhedron Polyhedron::from_hrep(int rank, const std::vector<Halfspace>& ineqs,
                                 const std::vector<Halfspace>& eqs) {
  std::vector<Vec> normals;
  auto push = [&](const Vec& n, const Rational& rhs, bool flip) {
    if (n.size() != rank) throw DomainError("normal rank mismatch");
    Vec h = lift_at_height(n, -rhs);
    if (flip) h = -h;
    normals.push_back(clear_denominators(h));
  };
  for (const auto& c : ineqs) push(c.normal, c.rhs, false);
  for (const auto& c : eqs) {
    push(c.normal, c.rhs, false);
    push(c.normal, c.rhs, true);
  }
  Vec height(rank + 1);
  for (int i = 0; i <= rank; ++i) height(i) = Rational(i == rank ? 1 : 0);
  normals.push_back(height);
  return Polyhedron(rank, Cone::from_ineqs(rank + 1, normals));
}

bool Polyhedron::empty() const {
  for (Eigen::Index j = 0; j < homog_.rays().cols(); ++j)
    if (!homog_.rays()(rank_, j).is_zero()) return false;
  return true;
}

int Polyhedron::dim() const { return empty() ? -1 : homog_.dim() - 1; }

bool Polyhedron::contains(const Vec& x) const {
  return homog_.contains(lift_at_height(x, Rational(1)));
}

bool Polyhedron::subset_of(const Polyhedron& q) const {
  if (empty()) return true;
  for (const auto& g : homog_.gens())
    if (!q.homog_.contains(g)) return false;
  return true;
}

Polyhedron Polyhedron::intersect(const Polyhedron& q) const {
  if (rank_ != q.rank_) throw DomainError("intersecting polyhedra of different rank");
  return Polyhedron(rank_, homog_.intersect(q.homog_));
}

bool Polyhedron::is_face_of(const Polyhedron& q) const {
  if (empty()) return true;
  if (!subset_of(q)) return false;
  Vec p = lift_at_height(relative_interior_point(), Rational(1));
  std::vector<Vec> cuts;
  for (Eigen::Index j = 0; j < q.homog_.dual_rays().cols(); ++j) {
    Vec d = q.homog_.dual_rays().col(j);
    if (Rational(d.dot(p)).is_zero()) {
      cuts.push_back(d);
      cuts.push_back(Vec(-d));
    }
  }
  auto base = q.homog_.dual().gens();
  cuts.insert(cuts.end(), base.begin(), base.end());
  return Cone::from_ineqs(rank_ + 1, cuts) == homog_;
}

std::vector<Vec> Polyhedron::vertices() const {
  std::vector<Vec> out;
  for (Eigen::Index j = 0; j < homog_.rays().cols(); ++j) {
    Rational h = homog_.rays()(rank_, j);
    if (h.is_zero()) continue;
    Vec v(rank_);
    for (int i = 0; i < rank_; ++i) v(i) = homog_.rays()(i, j) / h;
    out.push_back(v);
  }
  return out;
}

std::vector<Vec> Polyhedron::recession_rays() const {
  std::vector<Vec> out;
  for (Eigen::Index j = 0; j < homog_.rays().cols(); ++j) {
    if (!homog_.rays()(rank_, j).is_zero()) continue;
    out.push_back(Vec(homog_.rays().col(j).head(rank_)));
  }
  return out;
}

Cone Polyhedron::recession_cone() const {
  std::vector<Vec> gens = recession_rays();
  for (Eigen::Index j = 0; j < homog_.lineality().cols(); ++j) {
    Vec l = homog_.lineality().col(j).head(rank_);
    gens.push_back(l);
    gens.push_back(Vec(-l));
  }
  return Cone::from_gens(rank_, gens);
}

Polyhedron Polyhedron::transformed(const Mat& a) const {
  if (a.cols() != rank_) throw DomainError("linear map rank mismatch");
  std::vector<Vec> verts, rays;
  for (const auto& v : vertices()) verts.push_back(Vec(a * v));
  for (const auto& r : recession_rays()) rays.push_back(Vec(a * r));
  for (Eigen::Index j = 0; j < homog_.lineality().cols(); ++j) {
    Vec l = a * Vec(homog_.lineality().col(j).head(rank_));
    rays.push_back(l);
    rays.push_back(Vec(-l));
  }
  return from_vrep(static_cast<int>(a.rows()), verts, rays);
}

Vec Polyhedron::relative_interior_point() const {
  if (empty()) throw DomainError("relative interior of an empty polyhedron");
  auto vs = vertices();
  Vec p(rank_);
  for (int i = 0; i < rank_; ++i) p(i) = Rational(0);
  for (const auto& v : vs) p += v;
  p *= Rational(1) / Rational(static_cast<long long>(vs.size()));
  for (const auto& r : recession_rays()) p += r;
  return p;
}

bool PolyComplex::support_contains(const Vec& x) const {
  for (const auto& c : cells)
    if (c.contains(x)) return true;
  return false;
}

bool PolyComplex::support_equal(const PolyComplex& o) const {
  auto one_way = [](const PolyComplex& a, const PolyComplex& b) {
    for (const auto& cell : a.cells) {
      if (cell.empty()) continue;
      bool inside = false;
      for (const auto& other : b.cells)
        if (cell.subset_of(other)) {
          inside = true;
          break;
        }
      if (!inside) return false;
    }
    return true;
  };
  return one_way(*this, o) && one_way(o, *this);
}

int PolyComplex::dim() const {
  int d = -1;
  for (const auto& c : cells) d = std::max(d, c.dim());
  return d;
}

std::vector<int> PolyComplex::maximal_cells() const {
  std::vector<int> out;
  for (size_t i = 0; i < cells.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < cells.size() && maximal; ++j)
      if (i != j && cells[i].subset_of(cells[j]) && !(cells[i] == cells[j])) maximal = false;
    if (maximal) out.push_back(static_cast<int>(i));
  }
  return out;
}

bool PolyComplex::pure(int d) const {
  for (int i : maximal_cells())
    if (cells[static_cast<size_t>(i)].dim() != d) return false;
  return true;
}

void PolyComplex::add_cell(Polyhedron p) {
  if (p.empty()) return;
  for (const auto& c : cells)
    if (c == p) return;
  cells.push_back(std::move(p));
}

PolyComplex intersect_complexes(const PolyComplex& a, const PolyComplex& b) {
  if (a.rank != b.rank) throw DomainError("intersecting complexes of different rank");
  PolyComplex out;
  out.rank = a.rank;
  for (const auto& ca : a.cells)
    for (const auto& cb : b.cells) out.add_cell(ca.intersect(cb));
  return out;
}

PolyComplex recession(const PolyComplex& c) {
  PolyComplex out;
  out.rank = c.rank;
  Vec origin(c.rank);
  for (int i = 0; i < c.rank; ++i) origin(i) = Rational(0);
  for (const auto& cell : c.cells) {
    Cone rec = cell.recession_cone();
    std::vector<Vec> rays;
    for (Eigen::Index j = 0; j < rec.rays().cols(); ++j) rays.push_back(rec.rays().col(j));
    for (Eigen::Index j = 0; j < rec.lineality().cols(); ++j) {
      rays.push_back(rec.lineality().col(j));
      rays.push_back(Vec(-rec.lineality().col(j)));
    }
    out.add_cell(Polyhedron::from_vrep(c.rank, {origin}, rays));
  }
  return out;
}

}  // namespace trop
