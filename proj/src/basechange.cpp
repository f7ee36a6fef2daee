#include "trop/basechange.hpp"

#include "trop/errors.hpp"

namespace trop {

LatticeSurjection make_surjection(const Mat& a) {
  if (!is_integral(a)) throw DomainError("lattice surjection must be integral");
  if (!is_surjective_z(a)) throw DomainError("matrix is not a split surjection of lattices");
  return LatticeSurjection{a, right_inverse_z(a)};
}

LaurentPoly pullback(const LatticeSurjection& phi, const LaurentPoly& f_on_target) {
  if (f_on_target.rank() != phi.matrix.rows())
    throw DomainError("pullback rank mismatch");
  LaurentPoly out(static_cast<int>(phi.matrix.cols()));
  for (const auto& [u, c] : f_on_target.terms())
    out = out + LaurentPoly::term(Vec(phi.matrix.transpose() * u), c);
  return out;
}

bool base_change_check(const LaurentPoly& f) {
  for (const auto& [u, c] : f.terms())
    if (!c.is_constant())
      throw DomainError("base change check needs constant coefficients");
  TropHypersurface trivially = trivial_trop(f);
  TropHypersurface extended = trop_hypersurface(f.as_puiseux());
  return trivially.complex.support_equal(extended.complex);
}

bool pushforward_initial_check(const LatticeSurjection& phi, const LaurentPoly& f_on_target,
                               const Vec& v) {
  if (v.size() != phi.matrix.cols()) throw DomainError("weight vector rank mismatch");
  if (f_on_target.is_zero()) throw DomainError("initial form of the zero polynomial");
  ResiduePoly upstairs = pullback(phi, f_on_target).initial_form(v);
  ResiduePoly downstairs = f_on_target.initial_form(Vec(phi.matrix * v));
  ResiduePoly reindexed;
  reindexed.rank = upstairs.rank;
  for (const auto& [u, c] : downstairs.terms)
    reindexed.terms.emplace(Vec(phi.matrix.transpose() * u), c);
  return upstairs == reindexed;
}

namespace {

// deterministic entry sequence 0, 1, -1, 2, -2, ...
long long entry_value(int index) {
  if (index == 0) return 0;
  int half = (index + 1) / 2;
  return index % 2 == 1 ? half : -half;
}

}  // namespace

LatticeSurjection generic_projection(const PolyComplex& c) {
  const int n = c.rank;
  const int d = c.dim();
  if (d < 0) throw DomainError("generic projection of an empty complex");
  if (!c.pure(d)) throw DomainError("generic projection needs a pure-dimensional complex");
  const int target = d + 1;
  if (target > n) throw DomainError("target rank exceeds the ambient rank");

  std::vector<int> max_cells = c.maximal_cells();
  auto certified = [&](const Mat& a) {
    if (!is_surjective_z(a)) return false;
    std::vector<Polyhedron> images;
    for (int i : max_cells) {
      Polyhedron img = c.cells[static_cast<size_t>(i)].transformed(a);
      if (img.dim() != d) return false;
      images.push_back(std::move(img));
    }
    for (size_t i = 0; i < images.size(); ++i)
      for (size_t j = i + 1; j < images.size(); ++j)
        if (images[i].intersect(images[j]).dim() > d - 1) return false;
    return true;
  };

  const int cells_count = target * n;
  std::vector<int> idx(static_cast<size_t>(cells_count), 0);
  for (int bound = 1; bound <= 50; ++bound) {
    const int top = 2 * bound;  // index of -bound in the entry sequence
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      // only candidates where the current bound is actually attained
      int maxi = 0;
      for (int v : idx) maxi = std::max(maxi, v);
      if (maxi >= top - 1) {
        Mat a(target, n);
        for (int r = 0; r < target; ++r)
          for (int k = 0; k < n; ++k)
            a(r, k) = Rational(entry_value(idx[static_cast<size_t>(r * n + k)]));
        if (certified(a)) return LatticeSurjection{a, right_inverse_z(a)};
      }
      int pos = cells_count - 1;
      while (pos >= 0 && idx[static_cast<size_t>(pos)] == top) {
        idx[static_cast<size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++idx[static_cast<size_t>(pos)];
    }
  }
  throw NotFoundError("generic projection search exhausted its entry bound");
}

}  // namespace trop
