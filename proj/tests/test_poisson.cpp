#include <doctest.h>

#include <random>

#include "dq/errors.hpp"
#include "support.hpp"

using namespace dq;
using test::P2;
using test::P3;

TEST_CASE("brackets") {
  CHECK(bracket(test::plane(), P2("x^2"), P2("y")) == P2("2*x"));
  CHECK(bracket(test::su2(), P3("x1"), P3("x2")) == P3("x3"));
  CHECK(bracket(test::su2(), P3("x3"), P3("x1")) == P3("x2"));
  const Poly f = P3("x1^2*x3 + x2");
  CHECK(bracket(test::su2(), f, f).is_zero());
}

TEST_CASE("structure accessors") {
  const auto S = test::su2();
  CHECK(S.degree() == 1);
  CHECK(S.is_linear());
  CHECK_FALSE(S.is_constant());
  CHECK(S.alpha(2, 0) == P3("x2"));
  const auto c = S.structure_constants();
  CHECK(c[0][1][2] == 1);
  CHECK(c[1][0][2] == -1);
  CHECK(PoissonStructure::zero(3).is_zero());
  CHECK(test::plane().is_constant());
  CHECK_THROWS_AS(PoissonStructure::from_matrix({{P2("0"), P2("x")}, {P2("x"), P2("0")}}),
                  PreconditionError);
}

TEST_CASE("Jacobi identity") {
  CHECK(check_jacobi(test::su2()).pass);
  CHECK(check_jacobi(PoissonStructure::from_upper(2, {{{0, 1}, P2("x^3*y + y^7")}})).pass);
  const auto bad =
      PoissonStructure::from_upper(3, {{{0, 1}, P3("x1")}, {{1, 2}, P3("x2")}, {{0, 2}, P3("-x3")}});
  const auto r = check_jacobi(bad);
  REQUIRE_FALSE(r.pass);
  CHECK(*r.triple == std::array<std::size_t, 3>{0, 1, 2});
  CHECK(r.jacobiator == P3("x1 + x2 + x3"));
}

TEST_CASE("Leibniz rule on random triples") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::uint32_t> e(0, 2);
  auto rnd = [&] {
    Poly f(3);
    for (int t = 0; t < 3; ++t) f.add_term(Monomial({e(rng), e(rng), e(rng)}), Rational(int(e(rng)) - 1));
    return f;
  };
  const auto S = test::su2();
  for (int i = 0; i < 20; ++i) {
    const Poly f = rnd(), g = rnd(), k = rnd();
    CHECK(bracket(S, f, g * k) == bracket(S, f, g) * k + g * bracket(S, f, k));
    CHECK(jacobiator(S, f, g, k).is_zero());
  }
}

TEST_CASE("Casimirs") {
  CHECK(is_casimir(test::su2(), P3("x1^2 + x2^2 + x3^2")));
  CHECK_FALSE(is_casimir(test::su2(), P3("x3")));
  CHECK(is_casimir(test::su2(), P3("5")));
}

TEST_CASE("Poisson ideals") {
  const Poly C = P3("x1^2 + x2^2 + x3^2 - 1");
  CHECK(is_poisson_ideal(test::su2(), {C}, buchberger({C})));
  const auto r = check_poisson_ideal(test::su2(), {P3("x3")}, buchberger({P3("x3")}));
  REQUIRE_FALSE(r.pass);
  CHECK(*r.generator == 0);
  CHECK(*r.variable == 0);
  CHECK(r.remainder == P3("x2"));
  CHECK(is_poisson_ideal(PoissonStructure::zero(3), {P3("x1*x2 - 1")}, buchberger({P3("x1*x2 - 1")})));
  CHECK_THROWS_AS(check_poisson_ideal(test::su2(), {P3("x1")}, buchberger({P3("x2")})), PreconditionError);
}
