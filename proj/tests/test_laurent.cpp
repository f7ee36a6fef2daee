#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trop/laurent.hpp"

using namespace trop;

namespace {
LaurentPoly P(const std::string& s, int rank = 2) { return LaurentPoly::parse(s, rank); }
}

TEST_CASE("psi evaluation") {
  CHECK(P("x + y + 1").psi(make_vec_int({0, 0})) == ExtRat(Rational(0)));
  CHECK(P("x + y + t").psi(make_vec_int({1, 1})) == ExtRat(Rational(1)));
  CHECK(P("t*x^2").psi(make_vec_int({2, 5})) == ExtRat(Rational(5)));
  CHECK_THROWS_AS(LaurentPoly::zero(2).psi(make_vec_int({0, 0})), DomainError);
}

TEST_CASE("initial forms") {
  ResiduePoly all = P("x + y + 1").initial_form(make_vec_int({0, 0}));
  CHECK(all.terms.size() == 3);

  ResiduePoly two = P("x + y + t").initial_form(make_vec_int({0, 0}));
  CHECK(two.terms.size() == 2);
  CHECK(!two.is_monomial());

  ResiduePoly one = P("x + y + t").initial_form(make_vec_int({2, 0}));
  REQUIRE(one.is_monomial());
  CHECK(one.terms.begin()->first == make_vec_int({0, 1}));
}

TEST_CASE("tilted ring membership") {
  // weight convention: ν(a_i) + ⟨u_i, v⟩ ≥ 0, shared with Ψ_f
  CHECK(P("x + y + 1").in_tilted_ring(make_vec_int({0, 0})));
  auto xinv = P("x^-1");
  CHECK(xinv.in_tilted_ring(make_vec_int({0, 0})));
  CHECK(xinv.in_tilted_ring(make_vec_int({-1, 0})));
  CHECK(!xinv.in_tilted_ring(make_vec_int({1, 0})));
  CHECK(P("t^-1*x").in_tilted_ring(make_vec_int({1, 0})));
  CHECK(!P("t^-1*x").in_tilted_ring(make_vec_int({0, 0})));
}

TEST_CASE("psi is multiplicative") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> expo(-3, 3), val2(-4, 4), coeff(1, 9), nterms(1, 4),
      wnum(-12, 12);
  auto rand_poly = [&] {
    LaurentPoly f(2);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i)
      f = f + LaurentPoly::term(make_vec_int({expo(rng), expo(rng)}),
                                PuiseuxScalar::monomial(Rational(coeff(rng)), Rational(val2(rng), 2)));
    return f;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    LaurentPoly f = rand_poly(), g = rand_poly();
    if (f.is_zero() || g.is_zero()) continue;
    Vec w = make_vec({Rational(wnum(rng), 4), Rational(wnum(rng), 4)});
    CHECK((f * g).psi(w) == f.psi(w) + g.psi(w));
    CHECK((f * g).initial_form(w) == f.initial_form(w) * g.initial_form(w));
  }
}

TEST_CASE("trivial coefficients reduce the tilted condition to pairings") {
  auto f = LaurentPoly::parse("x^-1 + x*y", 2, true);
  CHECK(f.trivial_coeffs());
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    Vec v = make_vec({Rational(num(rng), 3), Rational(num(rng), 3)});
    bool all_nonneg = true;
    for (const auto& [u, c] : f.terms())
      if (Rational(u.dot(v)).sign() < 0) all_nonneg = false;
    CHECK(f.in_tilted_ring(v) == all_nonneg);
  }
}

TEST_CASE("evaluation with denominator clearing") {
  auto f = P("x^-1 + y");
  std::vector<PuiseuxScalar> pt = {PuiseuxScalar::uniformizer(),
                                   PuiseuxScalar::constant(Rational(1)) + PuiseuxScalar::uniformizer()};
  // 1/t + 1 + t has valuation -1
  CHECK(f.eval_valuation(pt) == ExtRat(Rational(-1)));

  // exact cancellation: x*y - t at (t, 1)
  auto g = P("x*y - t");
  std::vector<PuiseuxScalar> zt = {PuiseuxScalar::uniformizer(), PuiseuxScalar::constant(Rational(1))};
  CHECK(g.eval_valuation(zt).is_infinite());
  CHECK(g.eval(zt).is_zero());
}

TEST_CASE("parse and print round-trip") {
  const char* inputs[] = {"x + y + 1", "x*y - t", "(1 + t)*x^2 + (3/2)*y^-1", "t^-1*x",
                          "x1^2*x2^-3 + (2 - t^1/2)"};
  for (const char* s : inputs) {
    auto f = P(s);
    CHECK(LaurentPoly::parse(f.str(), 2) == f);
  }
  CHECK(P("x - x").is_zero());
  CHECK_THROWS_AS(P("q + 1"), ParseError);
  CHECK_THROWS_AS(P("x3", 2), ParseError);
}

TEST_CASE("substitution") {
  // f(x, y) with y := -1 - x, into rank-1 ring
  auto f = P("x + y + 1");
  LaurentPoly x1 = LaurentPoly::variable(1, 0);
  LaurentPoly img = -x1 - LaurentPoly::constant(1, PuiseuxScalar::constant(Rational(1)));
  CHECK(substitute(f, {x1, img}).is_zero());

  // monomial image allows negative powers: y := t/x
  auto g = P("x*y - t");
  LaurentPoly tmono = LaurentPoly::constant(1, PuiseuxScalar::uniformizer());
  LaurentPoly yimg = LaurentPoly::term(make_vec_int({-1}), PuiseuxScalar::uniformizer());
  CHECK(substitute(g, {x1, yimg}).is_zero());

  CHECK_THROWS_AS(substitute(P("x^-1 + y"), {img, x1}), UnsupportedError);
}
