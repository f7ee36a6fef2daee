#include "trop/linalg.hpp"

#include <vector>

#include "trop/errors.hpp"

namespace trop {

namespace {

void check_integral(const Mat& a, const char* what) {
  if (!is_integral(a)) throw DomainError(std::string("expected an integral matrix in ") + what);
}

}  // namespace

Hermite hnf_cols(const Mat& a) {
  check_integral(a, "hnf_cols");
  const Eigen::Index m = a.rows(), n = a.cols();
  Hermite out;
  out.h = a;
  out.u = Mat(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out.u(i, j) = Rational(i == j ? 1 : 0);
  Mat& h = out.h;
  Mat& u = out.u;
  Eigen::Index r = 0;
  for (Eigen::Index row = 0; row < m && r < n; ++row) {
    // gcd-eliminate the row entries in columns >= r
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index j = r; j < n; ++j) {
        if (h(row, j).is_zero()) continue;
        if (best < 0 || abs(h(row, j)) < abs(h(row, best))) best = j;
      }
      if (best < 0) break;
      if (best != r) {
        h.col(r).swap(h.col(best));
        u.col(r).swap(u.col(best));
      }
      bool clean = true;
      BigInt p = h(row, r).num();
      for (Eigen::Index j = r + 1; j < n; ++j) {
        if (h(row, j).is_zero()) continue;
        Rational q(floor_div(h(row, j).num(), p));
        h.col(j) -= h.col(r) * q;
        u.col(j) -= u.col(r) * q;
        if (!h(row, j).is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (h(row, r).is_zero()) continue;
    if (h(row, r).sign() < 0) {
      h.col(r) = -h.col(r);
      u.col(r) = -u.col(r);
    }
    // reduce the entries of this pivot row in earlier columns into [0, pivot)
    BigInt p = h(row, r).num();
    for (Eigen::Index j = 0; j < r; ++j) {
      if (h(row, j).is_zero()) continue;
      Rational q(floor_div(h(row, j).num(), p));
      if (q.is_zero()) continue;
      h.col(j) -= h.col(r) * q;
      u.col(j) -= u.col(r) * q;
    }
    ++r;
  }
  out.rank = static_cast<int>(r);
  return out;
}

Mat kernel_z(const Mat& a) {
  const Eigen::Index n = a.cols();
  Hermite hf = hnf_cols(a);
  Mat raw = hf.u.rightCols(n - hf.rank);
  // canonical basis of the kernel lattice
  return hnf_cols(raw).h.leftCols(raw.cols());
}

Mat image_basis_z(const Mat& a) {
  Hermite hf = hnf_cols(a);
  return hf.h.leftCols(hf.rank);
}

bool is_surjective_z(const Mat& a) {
  Mat g = image_basis_z(a);
  if (g.cols() != a.rows()) return false;
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j)
      if (g(i, j) != Rational(i == j ? 1 : 0)) return false;
  return true;
}

Mat right_inverse_z(const Mat& a) {
  const Eigen::Index m = a.rows();
  Hermite hf = hnf_cols(a);
  if (hf.rank != m) throw DomainError("right_inverse_z: matrix is not surjective");
  Mat h = hf.h.leftCols(m);
  Mat hinv = inverse_q(h);
  Mat r = hf.u.leftCols(m) * hinv;
  if (!is_integral(r)) throw DomainError("right_inverse_z: matrix is not surjective over Z");
  return r;
}

std::optional<Vec> solve_z(const Mat& a, const Vec& b) {
  check_integral(a, "solve_z");
  if (!is_integral(b)) return std::nullopt;
  Hermite hf = hnf_cols(a);
  Vec residual = b;
  Vec y(a.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) y(j) = Rational(0);
  for (Eigen::Index j = 0; j < hf.rank; ++j) {
    Eigen::Index pivot_row = 0;
    while (pivot_row < a.rows() && hf.h(pivot_row, j).is_zero()) ++pivot_row;
    BigInt p = hf.h(pivot_row, j).num();
    BigInt v = residual(pivot_row).num();
    if (v % p != 0) return std::nullopt;
    Rational q(v / p);
    y(j) = q;
    residual -= hf.h.col(j) * q;
  }
  if (!is_zero(residual)) return std::nullopt;
  return Vec(hf.u * y);
}

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<Eigen::Index> rref(Mat& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = -1;
    for (Eigen::Index i = row; i < m.rows(); ++i)
      if (!m(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row) m.row(p).swap(m.row(row));
    m.row(row) *= Rational(1) / m(row, col);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      m.row(i) -= m.row(row) * m(i, col);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank_q(const Mat& a) {
  Mat m = a;
  return static_cast<int>(rref(m).size());
}

std::optional<Vec> solve_q(const Mat& a, const Vec& b) {
  Mat m(a.rows(), a.cols() + 1);
  m.leftCols(a.cols()) = a;
  m.col(a.cols()) = b;
  auto pivots = rref(m);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) x(j) = Rational(0);
  for (size_t i = 0; i < pivots.size(); ++i) x(pivots[i]) = m(static_cast<Eigen::Index>(i), a.cols());
  return x;
}

Mat kernel_q(const Mat& a) {
  Mat m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(a.cols()), false);
  for (auto p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  Mat k(a.cols(), a.cols() - static_cast<Eigen::Index>(pivots.size()));
  Eigen::Index out = 0;
  for (Eigen::Index f = 0; f < a.cols(); ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    for (Eigen::Index i = 0; i < a.cols(); ++i) k(i, out) = Rational(0);
    k(f, out) = Rational(1);
    for (size_t i = 0; i < pivots.size(); ++i)
      k(pivots[i], out) = -m(static_cast<Eigen::Index>(i), f);
    ++out;
  }
  return k;
}

Rational det_q(const Mat& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
  Mat m = a;
  Rational det(1);
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    Eigen::Index p = -1;
    for (Eigen::Index i = col; i < m.rows(); ++i)
      if (!m(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Rational(0);
    if (p != col) {
      m.row(p).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    Rational inv = Rational(1) / m(col, col);
    for (Eigen::Index i = col + 1; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      m.row(i) -= m.row(col) * (m(i, col) * inv);
    }
  }
  return det;
}

Mat inverse_q(const Mat& a) {
  if (a.rows() != a.cols()) throw DomainError("inverse of a non-square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return Mat(0, 0);
  Mat m(n, 2 * n);
  m.leftCols(n) = a;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, n + j) = Rational(i == j ? 1 : 0);
  auto pivots = rref(m);
  if (static_cast<Eigen::Index>(pivots.size()) != n || pivots.back() != n - 1)
    throw DomainError("inverse of a singular matrix");
  return m.rightCols(n);
}

Mat quotient_map(int rank, const Mat& span_columns) {
  check_integral(span_columns, "quotient_map");
  Mat at = span_columns.transpose();  // rows pair against Z^rank
  Mat w = kernel_z(at.rows() == 0 ? Mat(0, rank) : at);
  if (w.cols() == 0) return Mat(0, rank);
  Mat k = w.transpose();
  Mat g = image_basis_z(k);
  Mat p = inverse_q(g) * k;
  if (!is_integral(p)) throw DomainError("quotient_map: internal integrality failure");
  return p;
}

}  // namespace trop
