#include <doctest.h>

#include "dq/errors.hpp"
#include "dq/gutt.hpp"
#include "dq/verify.hpp"
#include "support.hpp"

using namespace dq;
using test::H2;
using test::H3;
using test::P2;
using test::P3;

// Expected values below come from tests/oracles/star_oracle.py (sympy series
// for Moyal, brute-force symmetrization with adjacent-swap ordering for su(2)).

TEST_CASE("Moyal products") {
  const auto S = StarProductSpec::moyal(test::plane(), 3);
  CHECK(star(S, P2("x"), P2("y")) == H2("x*y + 1/2*h", 3));
  CHECK(star(S, P2("y"), P2("x")) == H2("x*y - 1/2*h", 3));
  CHECK(star(S, P2("x^2"), P2("y^2")) == H2("x^2*y^2 + 2*h*x*y + 1/2*h^2", 3));
  CHECK(star(S, P2("x"), P2("x")) == H2("x^2", 3));
  CHECK(star(S, P2("x"), P2("y")) - star(S, P2("y"), P2("x")) == H2("h", 3));
  const auto S4 = StarProductSpec::moyal(test::plane(), 4);
  CHECK(star(S4, star(S4, H2("y", 4), H2("x", 4)), H2("x", 4)) == H2("x^2*y - h*x", 4));
  CHECK(moyal_star(test::plane(), P2("x"), P2("y"), 2) == H2("x*y + 1/2*h", 2));
  const auto Z = StarProductSpec::moyal(PoissonStructure::zero(2), 3);
  CHECK(star(Z, P2("x^2 + y"), P2("x*y")) == HSeries::from_poly(P2("x^3*y + x*y^2"), 3));
}

TEST_CASE("Gutt products for su(2)") {
  const auto S = StarProductSpec::gutt(test::su2(), 4);
  CHECK(star(S, P3("x1"), P3("x2")) == H3("x1*x2 + 1/2*h*x3", 4));
  CHECK(star(S, P3("x2"), P3("x1")) == H3("x1*x2 - 1/2*h*x3", 4));
  CHECK(star(S, P3("x1*x2"), P3("x3")) == H3("x1*x2*x3 + 1/2*h*x1^2 - 1/2*h*x2^2", 4));
  CHECK(star(S, P3("x1^2"), P3("x2")) == H3("x1^2*x2 + h*x1*x3 - 1/6*h^2*x2", 4));
  CHECK(star(S, P3("x2"), P3("x1^2")) == H3("x1^2*x2 - h*x1*x3 - 1/6*h^2*x2", 4));
  CHECK(star(S, P3("x1*x2"), P3("x1*x3")) ==
        H3("x1^2*x2*x3 + 1/2*h*x1^3 - 1/2*h*x1*x2^2 - 1/2*h*x1*x3^2 + 5/12*h^2*x2*x3 + 1/24*h^3*x1", 4));
  CHECK(star(S, P3("x1"), P3("x2")) - star(S, P3("x2"), P3("x1")) == H3("h*x3", 4));
  for (const char* v : {"x1", "x2", "x3"}) CHECK(star(S, P3(v), P3(v)) == HSeries::from_poly(P3(v) * P3(v), 4));
  const auto sq = star(S, P3("x1"), P3("x1")) + star(S, P3("x2"), P3("x2")) + star(S, P3("x3"), P3("x3"));
  CHECK(sq == H3("x1^2 + x2^2 + x3^2", 4));
}

TEST_CASE("unit and bilinearity") {
  const auto S = StarProductSpec::gutt(test::su2(), 3);
  const auto f = H3("x1*x2 + h*x3^2", 3), g = H3("x2 - 2*h*x1", 3), k = H3("x3^2 + 1", 3);
  const auto one = HSeries::constant(3, 3, 1);
  CHECK(star(S, one, f) == f);
  CHECK(star(S, f, one) == f);
  CHECK(star(S, f, g + k) == star(S, f, g) + star(S, f, k));
  CHECK(star(S, f * Rational(3), g) == star(S, f, g) * Rational(3));
  CHECK(star(S, H3("h", 3), g) == g.shifted(1));
  CHECK_THROWS_AS(star(S, H3("x1", 2), g), TruncationError);
}

TEST_CASE("enveloping algebra rewriting agrees with the cached product") {
  GuttAlgebra U(test::su2().structure_constants());
  for (const std::vector<std::uint32_t>& w :
       {std::vector<std::uint32_t>{2, 1, 0}, {1, 0, 1, 0}, {2, 2, 0, 1}, {0, 2, 1, 2, 0}}) {
    Poly acc = Poly::term(Monomial(4), 1);
    for (auto l : w) acc = U.multiply_generator(acc, l);
    CHECK(U.rewrite_word(w, GuttAlgebra::Direction::leftmost) == acc);
    CHECK(U.rewrite_word(w, GuttAlgebra::Direction::rightmost) == acc);
  }
  const Poly s = U.symmetrize(Monomial({1, 1, 0}));
  CHECK(U.unsymmetrize(s) == Poly::term(Monomial({1, 1, 0, 0}), 1));
}

TEST_CASE("engine preconditions") {
  CHECK_THROWS_AS(StarProductSpec::moyal(test::su2(), 3), PreconditionError);
  CHECK_THROWS_AS(StarProductSpec::gutt(test::plane(), 3), PreconditionError);
  const auto bad =
      PoissonStructure::from_upper(3, {{{0, 1}, P3("x1")}, {{1, 2}, P3("x2")}, {{0, 2}, P3("-x3")}});
  CHECK_THROWS_AS(StarProductSpec::gutt(bad, 3), PreconditionError);
  // B_1 alone is not associative at h^2 for a quadratic structure
  const auto quad = PoissonStructure::from_upper(2, {{{0, 1}, P2("x*y")}});
  CHECK_THROWS_AS(StarProductSpec::custom(quad, 3, {}), PreconditionError);
  CHECK_NOTHROW(StarProductSpec::custom(quad, 2, {}));
  CHECK(parse_engine("gutt") == Engine::gutt);
  CHECK_THROWS_AS(parse_engine("kontsevich"), Error);
}

TEST_CASE("custom operators") {
  // Moyal B_2 = 1/8 (d_x^2 f d_y^2 g - 2 d_x d_y f d_x d_y g + d_y^2 f d_x^2 g)
  BidiffOperator B2{2,
                    {{P2("1/8"), Monomial({2, 0}), Monomial({0, 2})},
                     {P2("-1/4"), Monomial({1, 1}), Monomial({1, 1})},
                     {P2("1/8"), Monomial({0, 2}), Monomial({2, 0})}}};
  const auto C = StarProductSpec::custom(test::plane(), 3, {B2});
  const auto M = StarProductSpec::moyal(test::plane(), 3);
  for (const char* f : {"x^2", "x*y", "y^3"})
    for (const char* g : {"y^2", "x^2*y", "x"}) CHECK(star(C, P2(f), P2(g)) == star(M, P2(f), P2(g)));
  CHECK(B2.max_derivative_order() == 2);
  CHECK(first_order_bidiff(test::plane(), P2("x"), P2("y")) == P2("1/2"));
}

TEST_CASE("verifiers") {
  const auto M = StarProductSpec::moyal(test::plane(), 4);
  CHECK(verify_associativity(M, 4).pass);
  CHECK(verify_commutator_bracket(M, 4).pass);
  CHECK(verify_degree_bound(M, 4).pass);
  CHECK(check_semiformal_filtration(M, 4).pass);

  const auto G = StarProductSpec::gutt(test::su2(), 4);
  const auto a = verify_associativity(G, 4);
  CHECK(a.pass);
  CHECK(a.checked == monomial_tuples(3, 3, 4).size());
  CHECK(verify_commutator_bracket(G, 3).pass);
  CHECK(verify_degree_bound(G, 3).pass);
  CHECK(check_semiformal_filtration(G, 3).pass);

  const auto quad = PoissonStructure::from_upper(2, {{{0, 1}, P2("x*y")}});
  const auto q = verify_associativity(StarProductSpec::custom_unverified(quad, 3, {}), 3);
  REQUIRE_FALSE(q.pass);
  CHECK(q.counterexamples.front().order == 2);
  CHECK(q.counterexamples.size() <= kMaxCounterexamples);

  const auto cubic = StarProductSpec::custom(PoissonStructure::from_upper(2, {{{0, 1}, P2("x^3")}}), 2, {});
  CHECK(verify_degree_bound(cubic, 3).pass);
  const auto s = check_semiformal_filtration(cubic, 3);
  REQUIRE_FALSE(s.pass);
  const auto& v = s.violations.front();
  CHECK(v.f == Monomial({1, 0}));
  CHECK(v.g == Monomial({0, 1}));
  CHECK(v.order == 1);
  CHECK(v.degree == 3);
  CHECK(v.limit == 2);
}

TEST_CASE("sweep order") {
  const auto t = monomial_tuples(2, 2, 1);
  REQUIRE(t.size() == 5);
  CHECK(t[0] == std::vector<Monomial>{Monomial(2), Monomial(2)});
  CHECK(t[1] == std::vector<Monomial>{Monomial(2), Monomial({1, 0})});
}
