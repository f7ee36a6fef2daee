#include "trop/cone.hpp"

#include <algorithm>
#include <set>

#include "trop/errors.hpp"

namespace trop {

namespace {

std::vector<Vec> gens_from_parts(const Mat& lineality, const Mat& rays) {
  std::vector<Vec> out;
  for (Eigen::Index j = 0; j < lineality.cols(); ++j) {
    out.push_back(lineality.col(j));
    out.push_back(Vec(-lineality.col(j)));
  }
  for (Eigen::Index j = 0; j < rays.cols(); ++j) out.push_back(rays.col(j));
  return out;
}

}  // namespace

std::pair<Mat, Mat> dual_generators(int rank, const std::vector<Vec>& gens) {
  std::vector<Vec> nonzero;
  for (const auto& g : gens) {
    if (g.size() != rank) throw DomainError("generator rank mismatch");
    if (!is_integral(g)) throw DomainError("generators must be integral");
    if (!is_zero(g)) nonzero.push_back(g);
  }
  const Eigen::Index m = static_cast<Eigen::Index>(nonzero.size());
  Mat a(m, rank);
  for (Eigen::Index i = 0; i < m; ++i) a.row(i) = nonzero[static_cast<size_t>(i)].transpose();

  Mat lin = kernel_z(a);
  const Eigen::Index ell = lin.cols();
  if (ell == rank) return {lin, Mat(rank, 0)};

  Mat p = quotient_map(rank, lin);
  Mat r = right_inverse_z(p);
  // constraint matrix in quotient coordinates: A = Ā·P
  Mat abar(m, rank - ell);
  Mat pt = p.transpose();
  for (Eigen::Index i = 0; i < m; ++i) {
    auto sol = solve_q(pt, Vec(a.row(i).transpose()));
    if (!sol || !is_integral(*sol))
      throw DomainError("dual_generators: constraints do not descend to the quotient");
    abar.row(i) = sol->transpose();
  }

  const Eigen::Index qd = rank - ell;
  std::vector<Vec> quotient_rays;
  auto consider = [&](const Vec& w) {
    bool nonneg = true, nonpos = true, all_zero = true;
    Vec vals = abar * w;
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
      int s = vals(i).sign();
      if (s != 0) all_zero = false;
      if (s < 0) nonneg = false;
      if (s > 0) nonpos = false;
    }
    if (all_zero) return;  // cannot happen: the constraint matrix has full column rank
    if (nonneg) quotient_rays.push_back(w);
    if (nonpos) quotient_rays.push_back(Vec(-w));
  };

  // every extreme ray is cut out by qd-1 independent constraints
  const Eigen::Index k = qd - 1;
  auto process_subset = [&](const std::vector<Eigen::Index>& rows) {
    Mat sub(static_cast<Eigen::Index>(rows.size()), qd);
    for (size_t i = 0; i < rows.size(); ++i) sub.row(static_cast<Eigen::Index>(i)) = abar.row(rows[i]);
    Mat kq = kernel_q(sub);
    if (kq.cols() != 1) return;
    consider(primitive(clear_denominators(Vec(kq.col(0)))));
  };
  if (k == 0) {
    if (qd == 1) process_subset({});
  } else {
    // iterate k-combinations of constraint rows
    std::vector<Eigen::Index> c(static_cast<size_t>(k));
    for (Eigen::Index i = 0; i < k; ++i) c[static_cast<size_t>(i)] = i;
    if (m >= k) {
      while (true) {
        process_subset(c);
        Eigen::Index i = k - 1;
        while (i >= 0 && c[static_cast<size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++c[static_cast<size_t>(i)];
        for (Eigen::Index j = i + 1; j < k; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
      }
    }
  }

  std::sort(quotient_rays.begin(), quotient_rays.end(), LexLess{});
  quotient_rays.erase(std::unique(quotient_rays.begin(), quotient_rays.end(),
                                  [](const Vec& x, const Vec& y) { return x == y; }),
                      quotient_rays.end());

  Mat rays(rank, static_cast<Eigen::Index>(quotient_rays.size()));
  for (Eigen::Index j = 0; j < rays.cols(); ++j)
    rays.col(j) = primitive(Vec(r * quotient_rays[static_cast<size_t>(j)]));
  return {lin, rays};
}

Cone Cone::from_both(int rank, std::pair<Mat, Mat> primal, std::pair<Mat, Mat> dual) {
  Cone c;
  c.rank_ = rank;
  c.lineality_ = std::move(primal.first);
  c.rays_ = std::move(primal.second);
  c.dual_lineality_ = std::move(dual.first);
  c.dual_rays_ = std::move(dual.second);
  c.dim_ = rank - static_cast<int>(c.dual_lineality_.cols());
  Mat span(rank, c.lineality_.cols() + c.rays_.cols());
  span.leftCols(c.lineality_.cols()) = c.lineality_;
  span.rightCols(c.rays_.cols()) = c.rays_;
  c.quotient_ = quotient_map(rank, span);
  return c;
}

Cone Cone::from_gens(int rank, const std::vector<Vec>& gens) {
  auto dual = dual_generators(rank, gens);
  auto primal = dual_generators(rank, gens_from_parts(dual.first, dual.second));
  return from_both(rank, std::move(primal), std::move(dual));
}

Cone Cone::from_ineqs(int rank, const std::vector<Vec>& normals) {
  auto primal = dual_generators(rank, normals);
  auto dual = dual_generators(rank, gens_from_parts(primal.first, primal.second));
  return from_both(rank, std::move(primal), std::move(dual));
}

std::vector<Vec> Cone::gens() const { return gens_from_parts(lineality_, rays_); }

Cone Cone::dual() const {
  Cone c;
  c.rank_ = rank_;
  c.lineality_ = dual_lineality_;
  c.rays_ = dual_rays_;
  c.dual_lineality_ = lineality_;
  c.dual_rays_ = rays_;
  c.dim_ = rank_ - static_cast<int>(lineality_.cols());
  Mat span(rank_, c.lineality_.cols() + c.rays_.cols());
  span.leftCols(c.lineality_.cols()) = c.lineality_;
  span.rightCols(c.rays_.cols()) = c.rays_;
  c.quotient_ = quotient_map(rank_, span);
  return c;
}

bool Cone::contains(const Vec& x) const {
  for (Eigen::Index j = 0; j < dual_lineality_.cols(); ++j)
    if (!Rational(dual_lineality_.col(j).dot(x)).is_zero()) return false;
  for (Eigen::Index j = 0; j < dual_rays_.cols(); ++j)
    if (Rational(dual_rays_.col(j).dot(x)).sign() < 0) return false;
  return true;
}

bool Cone::orthogonal_to(const Vec& u) const {
  for (Eigen::Index j = 0; j < lineality_.cols(); ++j)
    if (!Rational(lineality_.col(j).dot(u)).is_zero()) return false;
  for (Eigen::Index j = 0; j < rays_.cols(); ++j)
    if (!Rational(rays_.col(j).dot(u)).is_zero()) return false;
  return true;
}

std::vector<Cone> Cone::faces() const {
  const Eigen::Index nrays = rays_.cols();
  if (nrays > 16) throw UnsupportedError("face enumeration limited to 16 rays");
  std::vector<Cone> out;
  for (unsigned long mask = 0; mask < (1ul << nrays); ++mask) {
    // supporting functional: sum of dual rays vanishing on the selected rays
    Vec u(rank_);
    for (int i = 0; i < rank_; ++i) u(i) = Rational(0);
    for (Eigen::Index j = 0; j < dual_rays_.cols(); ++j) {
      bool vanishes = true;
      for (Eigen::Index rj = 0; rj < nrays && vanishes; ++rj)
        if (mask & (1ul << rj))
          vanishes = Rational(dual_rays_.col(j).dot(rays_.col(rj))).is_zero();
      if (vanishes) u += dual_rays_.col(j);
    }
    bool supports = true;
    for (Eigen::Index rj = 0; rj < nrays && supports; ++rj)
      if (!(mask & (1ul << rj))) supports = Rational(u.dot(rays_.col(rj))).sign() > 0;
    if (!supports) continue;
    std::vector<Vec> g = gens_from_parts(lineality_, Mat());
    for (Eigen::Index rj = 0; rj < nrays; ++rj)
      if (mask & (1ul << rj)) g.push_back(rays_.col(rj));
    Cone face = Cone::from_gens(rank_, g);
    if (std::find(out.begin(), out.end(), face) == out.end()) out.push_back(std::move(face));
  }
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    auto ga = a.gens(), gb = b.gens();
    if (ga.size() != gb.size()) return ga.size() < gb.size();
    for (size_t i = 0; i < ga.size(); ++i) {
      if (lex_less(ga[i], gb[i])) return true;
      if (lex_less(gb[i], ga[i])) return false;
    }
    return false;
  });
  return out;
}

bool Cone::is_face_of(const Cone& sigma) const {
  if (rank_ != sigma.rank_) return false;
  for (const auto& g : gens())
    if (!sigma.contains(g)) return false;
  // supporting functional from sigma's dual rays vanishing on this cone
  Vec u(rank_);
  for (int i = 0; i < rank_; ++i) u(i) = Rational(0);
  for (Eigen::Index j = 0; j < sigma.dual_rays_.cols(); ++j)
    if (orthogonal_to(Vec(sigma.dual_rays_.col(j)))) u += sigma.dual_rays_.col(j);
  std::vector<Vec> g = gens_from_parts(sigma.lineality_, Mat());
  for (Eigen::Index rj = 0; rj < sigma.rays_.cols(); ++rj)
    if (Rational(u.dot(sigma.rays_.col(rj))).is_zero()) g.push_back(sigma.rays_.col(rj));
  return Cone::from_gens(rank_, g) == *this;
}

Cone Cone::intersect(const Cone& other) const {
  if (rank_ != other.rank_) throw DomainError("intersecting cones of different rank");
  std::vector<Vec> normals = gens_from_parts(dual_lineality_, dual_rays_);
  auto more = gens_from_parts(other.dual_lineality_, other.dual_rays_);
  normals.insert(normals.end(), more.begin(), more.end());
  return Cone::from_ineqs(rank_, normals);
}

Mat quotient_projection(const Cone& tau, const Cone& sigma) {
  if (!tau.is_face_of(sigma)) throw DomainError("quotient projection needs a face pair");
  const Mat& pt = tau.quotient();
  const Mat& ps = sigma.quotient();
  // M with M·P_τ = P_σ; solvable because Span(τ) ⊆ Span(σ)
  Mat m = ps * pt.transpose() * inverse_q(Mat(pt * pt.transpose()));
  if (!same(Mat(m * pt), ps)) throw DomainError("quotient projection does not descend");
  return m;
}

}  // namespace trop
