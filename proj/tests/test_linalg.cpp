#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trop/linalg.hpp"

using namespace trop;

TEST_CASE("hermite form invariants") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> dim(1, 4), entry(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    int m = dim(rng), n = dim(rng);
    Mat a(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = Rational(entry(rng));
    Hermite hf = hnf_cols(a);
    CHECK(same(Mat(a * hf.u), hf.h));
    CHECK(abs(det_q(hf.u)) == Rational(1));
    // echelon shape: strictly increasing positive pivots, zero tail columns
    int prev_row = -1;
    for (int j = 0; j < hf.rank; ++j) {
      int pivot = -1;
      for (int i = 0; i < m; ++i)
        if (!hf.h(i, j).is_zero()) {
          pivot = i;
          break;
        }
      REQUIRE(pivot > prev_row);
      CHECK(hf.h(pivot, j).sign() > 0);
      prev_row = pivot;
    }
    for (int j = hf.rank; j < n; ++j)
      for (int i = 0; i < m; ++i) CHECK(hf.h(i, j).is_zero());
  }
}

TEST_CASE("integer kernel is saturated and canonical") {
  Mat a = make_mat(1, 3, {2, 4, 6});
  Mat k = kernel_z(a);
  CHECK(k.cols() == 2);
  CHECK(is_zero(Mat(a * k)));
  // (1,1,-1) is in the rational kernel iff 2+4-6=0; must decompose integrally
  Vec v = make_vec_int({1, 1, -1});
  auto sol = solve_z(k, v);
  CHECK(sol.has_value());

  Mat b = make_mat(2, 2, {1, 0, 0, 1});
  CHECK(kernel_z(b).cols() == 0);
  // same kernel from different presentations gives the same basis
  Mat c1 = make_mat(1, 3, {1, 2, 3});
  Mat c2 = make_mat(2, 3, {1, 2, 3, 2, 4, 6});
  CHECK(same(kernel_z(c1), kernel_z(c2)));
}

TEST_CASE("right inverse and surjectivity") {
  Mat a = make_mat(2, 3, {1, 0, -1, 0, 1, -1});
  REQUIRE(is_surjective_z(a));
  Mat r = right_inverse_z(a);
  CHECK(same(Mat(a * r), make_mat(2, 2, {1, 0, 0, 1})));

  Mat bad = make_mat(1, 2, {2, 4});
  CHECK(!is_surjective_z(bad));
  CHECK_THROWS_AS(right_inverse_z(bad), DomainError);
}

TEST_CASE("rational solve, kernel, rank") {
  Mat a = make_mat(2, 3, {1, 2, 3, 2, 4, 6});
  CHECK(rank_q(a) == 1);
  Mat k = kernel_q(a);
  CHECK(k.cols() == 2);
  CHECK(is_zero(Mat(a * k)));

  Vec b = make_vec_int({6, 12});
  auto x = solve_q(a, b);
  REQUIRE(x.has_value());
  CHECK(Vec(a * *x) == b);

  Vec inconsistent = make_vec_int({1, 0});
  CHECK(!solve_q(a, inconsistent).has_value());

  Mat sq = make_mat(2, 2, {1, 2, 3, 4});
  CHECK(det_q(sq) == Rational(-2));
  Mat inv = inverse_q(sq);
  CHECK(same(Mat(sq * inv), make_mat(2, 2, {1, 0, 0, 1})));
}

TEST_CASE("quotient map") {
  // quotient of Z^2 by span(e1): kills e1
  Mat span = make_mat(2, 1, {1, 0});
  Mat p = quotient_map(2, span);
  REQUIRE(p.rows() == 1);
  CHECK(same(p, make_mat(1, 2, {0, 1})));

  // zero span: identity
  Mat p0 = quotient_map(2, Mat(2, 0));
  CHECK(same(p0, make_mat(2, 2, {1, 0, 0, 1})));

  // full span: zero-row map
  Mat pf = quotient_map(2, make_mat(2, 2, {1, 0, 0, 1}));
  CHECK(pf.rows() == 0);
  CHECK(pf.cols() == 2);

  // non-saturated input: quotient by saturation, still surjective
  Mat span2 = make_mat(2, 1, {2, 4});
  Mat p2 = quotient_map(2, span2);
  REQUIRE(p2.rows() == 1);
  CHECK(is_surjective_z(p2));
  CHECK(is_zero(Vec(p2 * make_vec_int({1, 2}))));
}

TEST_CASE("primitive and content") {
  CHECK(primitive(make_vec_int({2, -4, 6})) == make_vec_int({1, -2, 3}));
  CHECK(content(make_vec_int({0, 0})) == BigInt(0));
  Vec v = make_vec({Rational(1, 2), Rational(1, 3)});
  CHECK(clear_denominators(v) == make_vec_int({3, 2}));
}
