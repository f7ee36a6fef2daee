#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trop/basechange.hpp"

using namespace trop;

namespace {

LaurentPoly T(const std::string& s, int rank = 2) { return LaurentPoly::parse(s, rank, true); }

PolyComplex tropical_line_r3() {
  PolyComplex c;
  c.rank = 3;
  Vec origin = make_vec_int({0, 0, 0});
  for (auto dir : {std::initializer_list<long long>{1, 0, 0},
                   {0, 1, 0},
                   {0, 0, 1},
                   {-1, -1, -1}})
    c.add_cell(Polyhedron::from_vrep(3, {origin}, {make_vec_int(dir)}));
  return c;
}

}  // namespace

TEST_CASE("base change invariance") {
  CHECK(base_change_check(T("x + y + 1")));
  CHECK(base_change_check(T("x + y")));
  CHECK(base_change_check(T("x^2*y + x*y^2 + 1")));
  CHECK_THROWS_AS(base_change_check(LaurentPoly::parse("x + t", 2)), DomainError);

  std::mt19937_64 rng(55);
  std::uniform_int_distribution<int> expo(-3, 3), coeff(1, 7);
  int done = 0;
  while (done < 10) {
    LaurentPoly f(2);
    for (int i = 0; i < 4; ++i)
      f = f + LaurentPoly::term(make_vec_int({expo(rng), expo(rng)}),
                                PuiseuxScalar::constant(Rational(coeff(rng)), true));
    if (f.num_terms() < 2) continue;
    ++done;
    CHECK(base_change_check(f));
  }
}

TEST_CASE("trivial fan is the recession fan of perturbed coefficients") {
  std::mt19937_64 rng(66);
  std::uniform_int_distribution<int> expo(-2, 3), coeff(1, 5), val(1, 3);
  int done = 0;
  while (done < 8) {
    LaurentPoly f(2);
    for (int i = 0; i < 4; ++i)
      f = f + LaurentPoly::term(make_vec_int({expo(rng), expo(rng)}),
                                PuiseuxScalar::constant(Rational(coeff(rng)), true));
    if (f.num_terms() < 2) continue;
    ++done;
    // perturb each constant by a positive-valuation tail
    LaurentPoly perturbed(2);
    for (const auto& [u, c] : f.terms())
      perturbed = perturbed +
                  LaurentPoly::term(u, c.as_puiseux() + PuiseuxScalar::monomial(
                                                            Rational(coeff(rng)), Rational(val(rng))));
    auto fan = trivial_trop(f);
    auto rec = recession(trop_hypersurface(perturbed).complex);
    CHECK(fan.complex.support_equal(rec));
  }
}

TEST_CASE("pushforward of initial forms") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> num(-6, 6);

  auto id2 = make_surjection(make_mat(2, 2, {1, 0, 0, 1}));
  auto f = LaurentPoly::parse("x + y + 1", 2);
  CHECK(pushforward_initial_check(id2, f, make_vec_int({0, 0})));

  auto proj = make_surjection(make_mat(2, 3, {1, 0, 1, 0, 1, 2}));
  for (int trial = 0; trial < 100; ++trial) {
    Vec v = make_vec({Rational(num(rng), 2), Rational(num(rng), 2), Rational(num(rng), 2)});
    CHECK(pushforward_initial_check(proj, f, v));
    CHECK(pushforward_initial_check(proj, LaurentPoly::parse("x*y - t", 2), v));
  }

  // a map whose transpose moves exponents onto a killed coordinate
  auto kill = make_surjection(make_mat(1, 2, {1, 0}));
  for (int trial = 0; trial < 50; ++trial) {
    Vec v = make_vec({Rational(num(rng), 2), Rational(num(rng), 2)});
    CHECK(pushforward_initial_check(kill, LaurentPoly::parse("x + 2 + t*x^-1", 1), v));
  }

  CHECK_THROWS_AS(make_surjection(make_mat(1, 2, {2, 4})), DomainError);
}

TEST_CASE("generic projection of a plane tropical line") {
  auto line = trop_hypersurface(LaurentPoly::parse("x + y + 1", 2)).complex;
  auto phi = generic_projection(line);
  // d+1 = n: any certified answer is square and unimodular
  CHECK(phi.matrix.rows() == 2);
  CHECK(phi.matrix.cols() == 2);
  CHECK(abs(det_q(phi.matrix)) == Rational(1));
  CHECK(same(Mat(phi.matrix * phi.right_inv), make_mat(2, 2, {1, 0, 0, 1})));
}

TEST_CASE("generic projection of the line in three-space") {
  PolyComplex c = tropical_line_r3();
  auto phi = generic_projection(c);
  CHECK(phi.matrix.rows() == 2);
  CHECK(phi.matrix.cols() == 3);
  CHECK(same(Mat(phi.matrix * phi.right_inv), make_mat(2, 2, {1, 0, 0, 1})));
  // recheck the certificate independently
  auto maxes = c.maximal_cells();
  for (size_t i = 0; i < maxes.size(); ++i) {
    Polyhedron img = c.cells[static_cast<size_t>(maxes[i])].transformed(phi.matrix);
    CHECK(img.dim() == 1);
    for (size_t j = 0; j < i; ++j) {
      Polyhedron other = c.cells[static_cast<size_t>(maxes[j])].transformed(phi.matrix);
      CHECK(img.intersect(other).dim() <= 0);
    }
  }
}

TEST_CASE("generic projection keeps parallel segments apart") {
  PolyComplex c;
  c.rank = 3;
  c.add_cell(Polyhedron::from_vrep(3, {make_vec_int({0, 0, 0}), make_vec_int({1, 0, 0})}, {}));
  c.add_cell(Polyhedron::from_vrep(3, {make_vec_int({0, 1, 1}), make_vec_int({1, 1, 1})}, {}));
  auto phi = generic_projection(c);
  Polyhedron a = c.cells[0].transformed(phi.matrix);
  Polyhedron b = c.cells[1].transformed(phi.matrix);
  CHECK(a.dim() == 1);
  CHECK(b.dim() == 1);
  CHECK(a.intersect(b).dim() <= 0);
}

TEST_CASE("images of the projection stay inside a pushforward tropicalization") {
  // deterministic: the same complex always selects the same projection
  PolyComplex c = tropical_line_r3();
  auto phi1 = generic_projection(c);
  auto phi2 = generic_projection(c);
  CHECK(same(phi1.matrix, phi2.matrix));
}

TEST_CASE("generic projection rejects bad input") {
  PolyComplex empty;
  empty.rank = 3;
  CHECK_THROWS_AS(generic_projection(empty), DomainError);

  // mixed dimensions are not pure
  PolyComplex mixed;
  mixed.rank = 3;
  mixed.add_cell(Polyhedron::from_vrep(3, {make_vec_int({0, 0, 0}), make_vec_int({1, 0, 0})}, {}));
  mixed.add_cell(Polyhedron::point(make_vec_int({5, 5, 5})));
  CHECK_THROWS_AS(generic_projection(mixed), DomainError);
}
