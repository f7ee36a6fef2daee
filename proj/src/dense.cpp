#include "trop/dense.hpp"

#include "trop/errors.hpp"

namespace trop {

BigInt content(const Vec& v) {
  BigInt g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_integer()) throw DomainError("content of a non-integral vector");
    g = gcd(g, v(i).num());
  }
  return g < 0 ? BigInt(-g) : g;
}

Vec primitive(const Vec& v) {
  BigInt g = content(v);
  if (g == 0 || g == 1) return v;
  Vec w = v;
  for (Eigen::Index i = 0; i < w.size(); ++i) w(i) = Rational(w(i).num() / g);
  return w;
}

Vec clear_denominators(const Vec& v) {
  BigInt l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    BigInt d = v(i).den();
    l = l / gcd(l, d) * d;
  }
  Vec w = v;
  for (Eigen::Index i = 0; i < w.size(); ++i) w(i) *= Rational(l);
  return w;
}

std::vector<Vec> columns(const Mat& m) {
  std::vector<Vec> out;
  out.reserve(static_cast<size_t>(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(m.col(j));
  return out;
}

Mat from_columns(int rows, const std::vector<Vec>& cols) {
  Mat m(rows, static_cast<Eigen::Index>(cols.size()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (cols[static_cast<size_t>(j)].size() != rows)
      throw DomainError("column size mismatch");
    m.col(j) = cols[static_cast<size_t>(j)];
  }
  return m;
}

}  // namespace trop
