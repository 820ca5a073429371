#include <doctest.h>

#include "dq/errors.hpp"
#include "dq/presentation.hpp"
#include "support.hpp"

using namespace dq;
using test::H2;
using test::H3;
using test::mi;

namespace {
HScalar hs(std::size_t N, std::vector<Rational> c) {
  HScalar s(N);
  for (std::size_t k = 0; k < c.size(); ++k) s[k] = c[k];
  return s;
}
}  // namespace

TEST_CASE("expanding ordered star monomials") {
  const auto M = StarProductSpec::moyal(test::plane(), 2);
  CHECK(expand_star_monomial(M, mi({1, 2})) == H2("x*y + 1/2*h", 2));
  const auto G = StarProductSpec::gutt(test::su2(), 3);
  CHECK(expand_star_monomial(G, mi({1, 2})) == H3("x1*x2 + 1/2*h*x3", 3));
  CHECK(expand_star_monomial(G, MultiIndex()) == HSeries::constant(3, 3, 1));
  CHECK(expand_star_monomial(G, mi({2})) == H3("x2", 3));
  CHECK(working_bound(G, 4) == 4);
}

TEST_CASE("expansion matrix and inverse") {
  const auto M = StarProductSpec::moyal(test::plane(), 2);
  const auto A = build_expansion_matrix(M, 2);
  const auto& row = A.row(mi({1, 2}));
  CHECK(row.at(mi({1, 2})) == HScalar(2, 1));
  CHECK(row.at(MultiIndex()) == hs(2, {0, Rational(1, 2)}));
  const auto Ainv = invert_expansion(A, 2);
  CHECK(Ainv.row(mi({1, 2})).at(MultiIndex()) == hs(2, {0, Rational(-1, 2)}));
  CHECK(check_inverse(A, Ainv, 2).pass());

  const auto Z = build_expansion_matrix(StarProductSpec::moyal(PoissonStructure::zero(2), 3), 3);
  for (const auto& [I, r] : Z.rows) {
    CHECK(r.size() == 1);
    CHECK(r.at(I) == HScalar(3, 1));
  }
  CHECK_THROWS_AS(A.row(mi({1, 1, 2})), TruncationError);
}

TEST_CASE("star-basis coordinates") {
  const auto M = StarProductSpec::moyal(test::plane(), 3);
  const auto c = star_basis_coords(M, H2("x*y", 3), 2);
  CHECK(c.at(mi({1, 2})) == HScalar(3, 1));
  CHECK(c.at(MultiIndex()) == hs(3, {0, Rational(-1, 2)}));
  const auto G = StarProductSpec::gutt(test::su2(), 3);
  const auto g = star_basis_coords(G, H3("x1*x2", 3), 2);
  CHECK(g.at(mi({3})) == hs(3, {0, Rational(-1, 2)}));
  CHECK(canonical(star_basis_coords(G, H3("x2", 3), 2)) == HCoords{{mi({2}), HScalar(3, 1)}});
  CHECK_THROWS_AS(star_basis_coords(G, H3("x1^3", 3), 2), TruncationError);

  const StarBasis B(G, 4);
  for (const auto& J : multi_indices_up_to(3, 4)) {
    const HCoords e{{J, HScalar(3, 1)}};
    CHECK(canonical(B.coords(B.expand(e))) == e);
  }
}

TEST_CASE("rewriting unordered words") {
  const auto G = StarProductSpec::gutt(test::su2(), 3);
  const auto r = canonical(rewrite_unordered(G, Word({1, 0})));
  CHECK(r.size() == 2);
  CHECK(r.at(mi({1, 2})) == HScalar(3, 1));
  CHECK(r.at(mi({3})) == hs(3, {0, -1}));
  const auto m = canonical(rewrite_unordered(StarProductSpec::moyal(test::plane(), 3), Word({1, 0})));
  CHECK(m.at(MultiIndex()) == hs(3, {0, -1}));
  CHECK(canonical(rewrite_unordered(G, Word({0, 1}))) == HCoords{{mi({1, 2}), HScalar(3, 1)}});
}

TEST_CASE("presentations") {
  const auto G = StarProductSpec::gutt(test::su2(), 4);
  const auto R = emit_presentation(G, 2);
  REQUIRE(R.relations.size() == 3);
  std::vector<std::string> text;
  for (const auto& r : R.relations) text.push_back(format_relation(r, test::xyz));
  CHECK(text[0] == "X2*X1 = X1*X2 - h*X3");
  CHECK(text[1] == "X3*X1 = X1*X3 + h*X2");
  CHECK(text[2] == "X3*X2 = X2*X3 - h*X1");
  for (const auto& r : R.relations) CHECK(is_classical_commutator(r));

  const auto M = emit_presentation(StarProductSpec::moyal(test::plane(), 3), 2);
  REQUIRE(M.relations.size() == 1);
  CHECK(format_relation(M.relations[0], test::xy) == "Y*X = X*Y - h");

  const auto Z = emit_presentation(StarProductSpec::moyal(PoissonStructure::zero(3), 3), 3);
  for (const auto& r : Z.relations) {
    CHECK(r.rhs.size() == 1);
    CHECK(r.rhs.begin()->first == r.word.sorted());
  }
  CHECK_THROWS_AS(emit_presentation(G, 1), PreconditionError);
  CHECK(generator_names({"x", "y"}) == std::vector<std::string>{"X", "Y"});
}

TEST_CASE("normal forms of words") {
  const auto M = StarProductSpec::moyal(test::plane(), 3);
  const auto R = emit_presentation(M, 3);
  const auto nf = normal_form_word(R, {{Word({1, 0, 0}), HScalar(3, 1)}});
  CHECK(format_coords(nf, test::xy) == "X*X*Y - 2*h*X");

  const auto G = StarProductSpec::gutt(test::su2(), 3);
  const auto RG = emit_presentation(G, 3);
  const WordSum rel{{Word({0, 1}), HScalar(3, 1)},
                    {Word({1, 0}), HScalar(3, -1)},
                    {Word({2}), hs(3, {0, -1})}};
  CHECK(coords_zero(normal_form_word(RG, rel)));
  const WordSum ordered{{Word({0, 0, 2}), HScalar(3, 1)}};
  CHECK(canonical(normal_form_word(RG, ordered)) == HCoords{{mi({1, 1, 3}), HScalar(3, 1)}});
  const WordSum w{{Word({2, 1, 0}), HScalar(3, 1)}};
  CHECK(normal_form_word(RG, w, RewriteOrder::leftmost) == normal_form_word(RG, w, RewriteOrder::rightmost));
}
