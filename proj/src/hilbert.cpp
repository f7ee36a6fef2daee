#include "trop/hilbert.hpp"

#include <algorithm>
#include <map>

#include "trop/errors.hpp"

namespace trop {

namespace {

// Lattice points of the quotient box that contains every irreducible element,
// filtered by cone membership.
std::vector<Vec> pointed_candidates(const Cone& cbar) {
  const int d = cbar.rank();
  if (d == 0) return {};
  Vec lo(d), hi(d);
  for (int i = 0; i < d; ++i) lo(i) = hi(i) = Rational(0);
  for (Eigen::Index j = 0; j < cbar.rays().cols(); ++j)
    for (int i = 0; i < d; ++i) {
      Rational e = cbar.rays()(i, j);
      if (e.sign() < 0) lo(i) += e;
      if (e.sign() > 0) hi(i) += e;
    }
  std::vector<Vec> out;
  Vec x(d);
  std::vector<BigInt> cur(static_cast<size_t>(d));
  auto scan = [&](auto&& self, int coord) -> void {
    if (coord == d) {
      for (int i = 0; i < d; ++i) x(i) = Rational(cur[static_cast<size_t>(i)]);
      if (!is_zero(x) && cbar.contains(x)) out.push_back(x);
      return;
    }
    for (BigInt v = lo(coord).num(); v <= hi(coord).num(); ++v) {
      cur[static_cast<size_t>(coord)] = v;
      self(self, coord + 1);
    }
  };
  scan(scan, 0);
  return out;
}

}  // namespace

std::vector<Vec> hilbert_basis(const Cone& c) {
  std::vector<Vec> out;
  for (Eigen::Index j = 0; j < c.lineality().cols(); ++j) {
    out.push_back(c.lineality().col(j));
    out.push_back(Vec(-c.lineality().col(j)));
  }

  // pointed part in the quotient by the lineality
  Mat plin = quotient_map(c.rank(), c.lineality());
  const int qd = static_cast<int>(plin.rows());
  if (qd == 0) return out;
  std::vector<Vec> qgens;
  for (Eigen::Index j = 0; j < c.rays().cols(); ++j)
    qgens.push_back(primitive(Vec(plin * c.rays().col(j))));
  Cone cbar = Cone::from_gens(qd, qgens);

  // free monoid: the rays form a lattice basis, no enumeration needed
  if (static_cast<int>(cbar.rays().cols()) == qd) {
    Mat raymat = cbar.rays();
    if (abs(det_q(raymat)) == Rational(1)) {
      Mat lift = c.lineality().cols() == 0 ? Mat() : right_inverse_z(plin);
      std::vector<Vec> smooth;
      for (Eigen::Index j = 0; j < raymat.cols(); ++j)
        smooth.push_back(c.lineality().cols() == 0 ? Vec(raymat.col(j))
                                                   : Vec(lift * raymat.col(j)));
      std::sort(smooth.begin(), smooth.end(),
                [](const Vec& a, const Vec& b) { return lex_less(b, a); });
      for (auto& u : smooth) {
        if (!c.contains(u)) throw DomainError("hilbert_basis: lift escaped the cone");
        out.push_back(std::move(u));
      }
      return out;
    }
  }

  if (c.rank() > 3) throw UnsupportedError("Hilbert bases supported up to rank 3");
  std::vector<Vec> cand = pointed_candidates(cbar);
  std::vector<Vec> irred;
  for (const auto& x : cand) {
    bool reducible = false;
    for (const auto& s : cand) {
      Vec diff = x - s;
      if (is_zero(diff)) continue;
      if (cbar.contains(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) irred.push_back(x);
  }
  // descending lex puts e1*, e2*, ... in the familiar coordinate order on
  // free monoids
  std::sort(irred.begin(), irred.end(), [](const Vec& a, const Vec& b) { return lex_less(b, a); });

  Mat lift = c.lineality().cols() == 0 ? Mat() : right_inverse_z(plin);
  for (const auto& x : irred) {
    Vec u = c.lineality().cols() == 0 ? x : Vec(lift * x);
    if (!c.contains(u)) throw DomainError("hilbert_basis: lift escaped the cone");
    out.push_back(u);
  }
  return out;
}

DualMonoid dual_monoid(const Cone& sigma) {
  Cone dual = sigma.dual();
  auto basis = hilbert_basis(dual);
  return DualMonoid{std::move(dual), std::move(basis)};
}

Mat monoid_relations(const DualMonoid& m) {
  Mat basis(m.cone.rank(), static_cast<Eigen::Index>(m.hilbert.size()));
  for (Eigen::Index j = 0; j < basis.cols(); ++j) basis.col(j) = m.hilbert[static_cast<size_t>(j)];
  return kernel_z(basis);
}

std::vector<BigInt> monoid_decompose(const Vec& u, const DualMonoid& m) {
  const Cone& c = m.cone;
  if (!c.contains(u)) throw DomainError("monoid_decompose: element outside the monoid");
  const size_t n = m.hilbert.size();
  std::vector<BigInt> counts(n, BigInt(0));

  Mat plin = quotient_map(c.rank(), c.lineality());
  const int qd = static_cast<int>(plin.rows());

  // indices of non-unit generators and their quotient images
  std::vector<size_t> pointed_idx;
  std::vector<Vec> pointed_img;
  const size_t nunits = static_cast<size_t>(c.lineality().cols()) * 2;
  for (size_t i = nunits; i < n; ++i) {
    pointed_idx.push_back(i);
    pointed_img.push_back(Vec(plin * m.hilbert[i]));
  }

  Vec target = qd == 0 ? Vec(0) : Vec(plin * u);
  std::vector<Vec> qgens;
  for (Eigen::Index j = 0; j < c.rays().cols(); ++j)
    qgens.push_back(primitive(Vec(plin * c.rays().col(j))));
  Cone cbar = qd == 0 ? Cone::zero(0) : Cone::from_gens(qd, qgens);

  std::map<Vec, bool, LexLess> failed;
  std::vector<BigInt> partial(pointed_idx.size(), BigInt(0));
  std::vector<BigInt> solution;
  bool found = false;
  auto dfs = [&](auto&& self, const Vec& rest) -> void {
    if (found) return;
    if (is_zero(rest)) {
      solution = partial;
      found = true;
      return;
    }
    auto it = failed.find(rest);
    if (it != failed.end()) return;
    for (size_t j = 0; j < pointed_img.size(); ++j) {
      Vec next = rest - pointed_img[j];
      if (!cbar.contains(next)) continue;
      partial[j] += 1;
      self(self, next);
      partial[j] -= 1;
      if (found) return;
    }
    failed.emplace(rest, true);
  };
  if (qd == 0) {
    found = true;
    solution = partial;
  } else {
    dfs(dfs, target);
  }
  if (!found) throw DomainError("monoid_decompose: no decomposition found");
  for (size_t j = 0; j < pointed_idx.size(); ++j) counts[pointed_idx[j]] = solution[j];

  // residual lies in the unit lattice
  Vec residual = u;
  for (size_t j = 0; j < pointed_idx.size(); ++j)
    residual -= m.hilbert[pointed_idx[j]] * Rational(solution[j]);
  if (c.lineality().cols() > 0) {
    auto coeffs = solve_z(c.lineality(), residual);
    if (!coeffs) throw DomainError("monoid_decompose: residual outside the unit lattice");
    for (Eigen::Index j = 0; j < coeffs->size(); ++j) {
      BigInt v = (*coeffs)(j).num();
      counts[static_cast<size_t>(2 * j)] = v > 0 ? v : BigInt(0);
      counts[static_cast<size_t>(2 * j + 1)] = v < 0 ? BigInt(-v) : BigInt(0);
    }
  } else if (!is_zero(residual)) {
    throw DomainError("monoid_decompose: nonzero residual without units");
  }
  return counts;
}

}  // namespace trop
