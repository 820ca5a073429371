#include <doctest.h>

#include <random>

#include "dq/errors.hpp"
#include "dq/groebner.hpp"
#include "support.hpp"

using namespace dq;
using test::P2;
using test::P3;

namespace {
const std::vector<std::string> XYZ{"x", "y", "z"};
Poly Q(const std::string& s) { return parse_poly(s, XYZ); }

bool in_ideal(const Poly& f, const GroebnerBasis& G) { return reduce(f, G).is_zero(); }
}  // namespace

TEST_CASE("Buchberger") {
  const auto G = buchberger({Q("x^2 + y^2 + z^2 - 1")});
  REQUIRE(G.generators.size() == 1);
  CHECK(G.generators[0] == Q("x^2 + y^2 + z^2 - 1"));
  CHECK(G.leading[0] == Monomial({2, 0, 0}));

  const auto G2 = buchberger({P2("x"), P2("y")});
  CHECK(G2.generators.size() == 2);

  const auto G3 = buchberger({P2("x*y - 1"), P2("y^2 - 1")}, MonomialOrder(OrderKind::lex));
  CHECK(std::find(G3.generators.begin(), G3.generators.end(), P2("x - y")) != G3.generators.end());
  CHECK(std::find(G3.generators.begin(), G3.generators.end(), P2("y^2 - 1")) != G3.generators.end());

  CHECK(buchberger({P2("x"), P2("x - 1")}).is_unit());
  CHECK(buchberger({P2("0")}).zero_ideal);
}

TEST_CASE("cofactors express the basis in the inputs") {
  const std::vector<Poly> gens{Q("x*y - z"), Q("y*z - x"), Q("x*z - y")};
  const auto G = buchberger(gens);
  for (std::size_t k = 0; k < G.generators.size(); ++k) {
    Poly s(3);
    for (std::size_t i = 0; i < gens.size(); ++i) s += G.cofactors[k][i] * gens[i];
    CHECK(s == G.generators[k]);
  }
  const Poly f = Q("x^3*y + z^4 - x*y*z");
  const auto od = divide_by_original(f, G);
  Poly s = od.remainder;
  for (std::size_t i = 0; i < gens.size(); ++i) s += od.cofactors[i] * gens[i];
  CHECK(s == f);
  CHECK(od.remainder == reduce(f, G));
}

TEST_CASE("reduction") {
  const auto G = buchberger({Q("x^2 + y^2 + z^2 - 1")});
  CHECK(reduce(Q("x^2 + y^2 + z^2 - 1"), G).is_zero());
  CHECK(reduce(Q("x^2"), G) == Q("1 - y^2 - z^2"));
  CHECK(reduce(Q("x*y"), G) == Q("x*y"));
  const auto d = divide(Q("x^3"), G);
  CHECK(d.quotients[0] * G.generators[0] + d.remainder == Q("x^3"));
}

TEST_CASE("reduction is multiplicative on random pairs") {
  const auto G = buchberger({Q("x*y - z^2"), Q("x^2 - y")});
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::uint32_t> e(0, 2);
  auto rnd = [&] {
    Poly f(3);
    for (int t = 0; t < 3; ++t) f.add_term(Monomial({e(rng), e(rng), e(rng)}), Rational(int(e(rng)) + 1));
    return f;
  };
  for (int i = 0; i < 15; ++i) {
    const Poly f = rnd(), g = rnd();
    CHECK(reduce(f * g, G) == reduce(reduce(f, G) * reduce(g, G), G));
  }
}

TEST_CASE("standard monomials") {
  const auto G = buchberger({Q("x^2 + y^2 + z^2 - 1")});
  const auto B = standard_monomials(G, 2);
  CHECK(B.basis.size() == 9);
  CHECK(std::find(B.basis.begin(), B.basis.end(), Monomial({2, 0, 0})) == B.basis.end());
  const auto B5 = standard_monomials(G, 5);
  for (std::size_t k = 0; k <= 5; ++k) CHECK(B5.basis_per_degree[k] == 2 * k + 1);
  const auto pt = standard_monomials(buchberger({P2("x"), P2("y")}), 3);
  CHECK(pt.basis.size() == 1);
  CHECK(pt.basis[0].is_one());
  CHECK(B5.in_basis(Monomial({1, 3, 1})));
  CHECK_FALSE(B5.in_basis(Monomial({2, 0, 0})));
}

TEST_CASE("maximal rank") {
  const auto r = jacobian_rank_check({P3("x1^2 + x2^2 + x3^2 - 1")});
  CHECK(r.pass);
  CHECK(r.minors.size() == 3);
  CHECK(jacobian_rank_check({P3("x1"), P3("x2")}).pass);
  const auto bad = jacobian_rank_check({P3("x1^2")});
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.witness.generators.size() == 1);
  CHECK(bad.witness.generators[0] == P3("x1"));
  CHECK_THROWS_AS(jacobian_rank_check({P2("x"), P2("y"), P2("x*y")}), PreconditionError);
  CHECK(determinant({{P2("x"), P2("1")}, {P2("y"), P2("2")}}) == P2("2*x - y"));
}

TEST_CASE("antisymmetric syzygies") {
  {
    const auto r = antisymmetric_syzygy({P2("y"), P2("-x")}, {P2("x"), P2("y")}, 2);
    REQUIRE(r.b);
    CHECK((*r.b)[0][1] == P2("1"));
    CHECK((*r.b)[1][0] == P2("-1"));
  }
  {
    const auto r = antisymmetric_syzygy({P2("0"), P2("0")}, {P2("x"), P2("y")}, 2);
    REQUIRE(r.b);
    CHECK((*r.b)[0][1].is_zero());
  }
  {
    const auto r = antisymmetric_syzygy({P2("x*y"), P2("-x^2")}, {P2("x"), P2("y")}, 2);
    REQUIRE(r.b);
    CHECK((*r.b)[0][1] == P2("x"));
    CHECK((*r.b)[1][0] == P2("-x"));
  }
  CHECK_THROWS_AS(antisymmetric_syzygy({P2("1"), P2("0")}, {P2("x"), P2("y")}, 2), PreconditionError);
}
