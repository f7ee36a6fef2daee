#pragma once

#include <Eigen/Core>

#include <initializer_list>
#include <vector>

#include "trop/scalars.hpp"

namespace Eigen {

template <>
struct NumTraits<trop::Rational> : GenericNumTraits<trop::Rational> {
  using Real = trop::Rational;
  using NonInteger = trop::Rational;
  using Nested = trop::Rational;
  using Literal = long long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
  static trop::Rational epsilon() { return trop::Rational(0); }
  static trop::Rational dummy_precision() { return trop::Rational(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace trop {

/// Dense exact-rational matrix and vector. Lattice data is stored in the same
/// types with integrality maintained as an invariant by the routines below.
using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Vecd = Eigen::VectorXd;

inline Vec make_vec(std::initializer_list<Rational> entries) {
  Vec v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& e : entries) v(i++) = e;
  return v;
}

inline Vec make_vec_int(std::initializer_list<long long> entries) {
  Vec v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (auto e : entries) v(i++) = Rational(e);
  return v;
}

inline Mat make_mat(Eigen::Index rows, Eigen::Index cols, std::initializer_list<long long> row_major) {
  Mat m(rows, cols);
  auto it = row_major.begin();
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = Rational(*it++);
  return m;
}

inline bool is_integral(const Vec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_integer()) return false;
  return true;
}

inline bool is_integral(const Mat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_integer()) return false;
  return true;
}

inline bool is_zero(const Vec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

inline bool is_zero(const Mat& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

/// Equality that tolerates shape mismatch (Eigen's operator== asserts on it).
inline bool same(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

inline bool same(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!(a(i) == b(i))) return false;
  return true;
}

/// Strict lexicographic order; usable as a map comparator for exponent keys.
struct LexLess {
  bool operator()(const Vec& a, const Vec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i) < b(i)) return true;
      if (b(i) < a(i)) return false;
    }
    return false;
  }
};

inline bool lex_less(const Vec& a, const Vec& b) { return LexLess{}(a, b); }

/// Gcd of the entries of an integral vector (nonnegative; 0 for the zero vector).
BigInt content(const Vec& v);

/// Divides an integral vector by its content. Zero vector passes through.
Vec primitive(const Vec& v);

/// Clears denominators: smallest positive multiple with integer entries.
Vec clear_denominators(const Vec& v);

std::vector<Vec> columns(const Mat& m);
Mat from_columns(int rows, const std::vector<Vec>& cols);

}  // namespace trop
