#include "trop/fan.hpp"

#include <algorithm>

#include "trop/errors.hpp"

namespace trop {

Fan::Fan(int rank, std::vector<Vec> rays, std::vector<std::vector<int>> maximal_cones)
    : rank_(rank) {
  rays_ = Mat(rank, static_cast<Eigen::Index>(rays.size()));
  for (size_t j = 0; j < rays.size(); ++j) {
    const Vec& r = rays[j];
    if (r.size() != rank || !is_integral(r) || is_zero(r))
      throw DomainError("fan ray must be a nonzero integral vector of ambient rank");
    if (primitive(r) != r) throw DomainError("fan ray must be primitive");
    for (size_t i = 0; i < j; ++i)
      if (Vec(rays_.col(static_cast<Eigen::Index>(i))) == r)
        throw DomainError("duplicate fan ray");
    rays_.col(static_cast<Eigen::Index>(j)) = r;
  }

  // build maximal cones and close under faces
  std::vector<Cone> pending;
  for (const auto& idxs : maximal_cones) {
    std::vector<Vec> gens;
    for (int i : idxs) {
      if (i < 0 || i >= static_cast<int>(rays.size()))
        throw DomainError("cone ray index out of range");
      gens.push_back(rays_.col(i));
    }
    Cone c = Cone::from_gens(rank, gens);
    if (!c.is_pointed()) throw DomainError("fan cone is not strongly convex");
    if (c.rays().cols() != static_cast<Eigen::Index>(idxs.size()))
      throw DomainError("cone ray list is not irredundant");
    pending.push_back(std::move(c));
  }
  if (pending.empty()) pending.push_back(Cone::zero(rank));

  auto push_unique = [&](Cone c) {
    for (const auto& existing : cones_)
      if (existing == c) return;
    cones_.push_back(std::move(c));
  };
  for (const auto& c : pending)
    for (auto& f : c.faces()) push_unique(std::move(f));

  std::sort(cones_.begin(), cones_.end(), [](const Cone& a, const Cone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    Mat ga = a.rays(), gb = b.rays();
    if (ga.cols() != gb.cols()) return ga.cols() < gb.cols();
    for (Eigen::Index j = 0; j < ga.cols(); ++j) {
      if (lex_less(ga.col(j), gb.col(j))) return true;
      if (lex_less(gb.col(j), ga.col(j))) return false;
    }
    return false;
  });

  for (size_t i = 0; i < cones_.size(); ++i) {
    if (cones_[i].is_zero()) zero_ = static_cast<int>(i);
    std::vector<int> ridx;
    for (Eigen::Index j = 0; j < cones_[i].rays().cols(); ++j) {
      int found = -1;
      for (int k = 0; k < num_rays(); ++k)
        if (Vec(rays_.col(k)) == Vec(cones_[i].rays().col(j))) {
          found = k;
          break;
        }
      if (found < 0) throw DomainError("cone ray missing from the fan ray list");
      ridx.push_back(found);
    }
    ray_indices_.push_back(std::move(ridx));
  }

  faces_of_.resize(cones_.size());
  for (size_t i = 0; i < cones_.size(); ++i)
    for (size_t j = 0; j < cones_.size(); ++j)
      if (cones_[j].dim() <= cones_[i].dim() && cones_[j].is_face_of(cones_[i]))
        faces_of_[i].push_back(static_cast<int>(j));

  // fan axiom: pairwise intersections are common faces (automatic for the
  // face lattice of a single cone)
  if (maximal_cones.size() > 1) {
    for (size_t i = 0; i < cones_.size(); ++i)
      for (size_t j = i + 1; j < cones_.size(); ++j) {
        Cone meet = cones_[i].intersect(cones_[j]);
        int k = find(meet);
        if (k < 0 || !is_face(k, static_cast<int>(i)) || !is_face(k, static_cast<int>(j)))
          throw DomainError("cones do not meet along a common face");
      }
  }

  for (size_t i = 0; i < cones_.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < cones_.size() && maximal; ++j)
      if (i != j && cones_[i].is_face_of(cones_[j])) maximal = false;
    if (maximal) maximal_.push_back(static_cast<int>(i));
  }

  monoids_.resize(cones_.size());
  for (size_t i = 0; i < cones_.size(); ++i) {
    try {
      monoids_[i] = std::make_shared<const DualMonoid>(dual_monoid(cones_[i]));
    } catch (const UnsupportedError&) {
      // non-smooth chart above rank 3: accessing it reports the scope bound
    }
  }
}

int Fan::find(const Cone& c) const {
  for (size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i] == c) return static_cast<int>(i);
  return -1;
}

bool Fan::is_face(int tau, int sigma) const {
  const auto& f = faces_of_[static_cast<size_t>(sigma)];
  return std::find(f.begin(), f.end(), tau) != f.end();
}

int Fan::a_maximal_containing(int i) const {
  for (int m : maximal_)
    if (is_face(i, m)) return m;
  throw DomainError("cone is not a face of any maximal cone");
}

int Fan::smallest_containing(const Vec& x) const {
  int best = -1;
  for (int i = 0; i < num_cones(); ++i) {
    if (!cones_[static_cast<size_t>(i)].contains(x)) continue;
    if (best < 0 || cones_[static_cast<size_t>(i)].dim() < cones_[static_cast<size_t>(best)].dim())
      best = i;
  }
  return best;
}

const DualMonoid& Fan::chart_monoid(int i) const {
  if (!monoids_[static_cast<size_t>(i)])
    throw UnsupportedError("chart monoid unavailable: non-smooth cone above rank 3");
  return *monoids_[static_cast<size_t>(i)];
}

bool Fan::operator==(const Fan& o) const {
  if (rank_ != o.rank_ || cones_.size() != o.cones_.size()) return false;
  for (size_t i = 0; i < cones_.size(); ++i)
    if (!(cones_[i] == o.cones_[i])) return false;
  return true;
}

Fan affine_fan(int m) {
  std::vector<Vec> rays;
  for (int i = 0; i < m; ++i) {
    Vec e(m);
    for (int j = 0; j < m; ++j) e(j) = Rational(j == i ? 1 : 0);
    rays.push_back(e);
  }
  std::vector<int> all(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) all[static_cast<size_t>(i)] = i;
  return Fan(m, rays, {all});
}

Fan projective_fan(int m) {
  std::vector<Vec> rays;
  for (int i = 0; i < m; ++i) {
    Vec e(m);
    for (int j = 0; j < m; ++j) e(j) = Rational(j == i ? 1 : 0);
    rays.push_back(e);
  }
  Vec last(m);
  for (int j = 0; j < m; ++j) last(j) = Rational(-1);
  rays.push_back(last);
  std::vector<std::vector<int>> maximal;
  for (int skip = 0; skip <= m; ++skip) {
    std::vector<int> idxs;
    for (int i = 0; i <= m; ++i)
      if (i != skip) idxs.push_back(i);
    maximal.push_back(idxs);
  }
  return Fan(m, rays, maximal);
}

Fan torus_fan(int m) { return Fan(m, {}, {}); }

StarFan star_fan(const Fan& fan, int cone_index) {
  const Cone& sigma = fan.cone(cone_index);
  Mat p = sigma.quotient();
  const int qrank = static_cast<int>(p.rows());

  std::vector<Vec> star_rays;
  auto ray_index_of = [&](const Vec& r) {
    for (size_t i = 0; i < star_rays.size(); ++i)
      if (star_rays[i] == r) return static_cast<int>(i);
    star_rays.push_back(r);
    return static_cast<int>(star_rays.size()) - 1;
  };

  std::vector<std::vector<int>> maximal_sets;
  for (int m : fan.maximal()) {
    if (!fan.is_face(cone_index, m)) continue;
    std::vector<Vec> gens;
    for (Eigen::Index j = 0; j < fan.cone(m).rays().cols(); ++j)
      gens.push_back(Vec(p * fan.cone(m).rays().col(j)));
    Cone image = Cone::from_gens(qrank, gens);
    std::vector<int> idxs;
    for (Eigen::Index j = 0; j < image.rays().cols(); ++j)
      idxs.push_back(ray_index_of(image.rays().col(j)));
    maximal_sets.push_back(std::move(idxs));
  }

  StarFan out{Fan(qrank, star_rays, maximal_sets), p, {}};
  out.from_original.assign(static_cast<size_t>(fan.num_cones()), -1);
  for (int i = 0; i < fan.num_cones(); ++i) {
    if (!fan.is_face(cone_index, i)) continue;
    std::vector<Vec> gens;
    for (Eigen::Index j = 0; j < fan.cone(i).rays().cols(); ++j)
      gens.push_back(Vec(p * fan.cone(i).rays().col(j)));
    Cone image = Cone::from_gens(qrank, gens);
    int k = out.fan.find(image);
    if (k < 0) throw DomainError("star fan: image cone missing");
    out.from_original[static_cast<size_t>(i)] = k;
  }
  return out;
}

}  // namespace trop
