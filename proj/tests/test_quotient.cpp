#include <doctest.h>

#include "dq/errors.hpp"
#include "dq/quotient.hpp"
#include "support.hpp"

using namespace dq;
using test::H3;
using test::mi;
using test::P3;

namespace {
const Poly kSphere = P3("x1^2 + x2^2 + x3^2 - 1");

HScalar hs(std::size_t N, std::vector<Rational> c) {
  HScalar s(N);
  for (std::size_t k = 0; k < c.size(); ++k) s[k] = c[k];
  return s;
}

struct Sphere {
  StarProductSpec S = StarProductSpec::gutt(test::su2(), 3);
  Lifting L = lift_generators(S, {kSphere}, LiftingStrategy::identity);
};
}  // namespace

TEST_CASE("liftings") {
  const Sphere fs;
  CHECK(fs.L.liftings[0] == HSeries::from_poly(kSphere, 3));
  const auto w = lift_generators(fs.S, {kSphere}, LiftingStrategy::weyl);
  CHECK(w.liftings[0] == HSeries::from_poly(kSphere, 3));
  const auto m3 = StarProductSpec::moyal(test::plane3(), 3);
  CHECK(lift_generators(m3, {P3("x3 - 2")}, LiftingStrategy::identity).liftings[0] == H3("x3 - 2", 3));
  for (auto s : {LiftingStrategy::identity, LiftingStrategy::weyl})
    CHECK(lift_generators(fs.S, {P3("7")}, s).liftings[0] == H3("7", 3));
  CHECK_THROWS_AS(lift_generators(fs.S, {P3("x3")}, LiftingStrategy::identity), PreconditionError);
  // the Weyl image of x1 x2 is the symmetric product
  const auto sym = weyl_symmetrize(fs.S, P3("x1*x2"));
  CHECK(sym == (star(fs.S, P3("x1"), P3("x2")) + star(fs.S, P3("x2"), P3("x1"))) * Rational(1, 2));
  CHECK_THROWS_AS(custom_lifting({kSphere}, {H3("x1", 3)}), PreconditionError);
  CHECK(parse_strategy("weyl") == LiftingStrategy::weyl);
}

TEST_CASE("centrality") {
  const Sphere fs;
  CHECK(check_centrality(fs.S, fs.L.liftings[0], 3).pass);
  const auto r = check_centrality(fs.S, H3("x3", 3), 2);
  REQUIRE_FALSE(r.pass);
  CHECK(*r.witness == Monomial({1, 0, 0}));
  CHECK(r.commutator == H3("h*x2", 3));
  const auto Z = StarProductSpec::moyal(PoissonStructure::zero(3), 3);
  CHECK(check_centrality(Z, H3("x1*x3 + x2", 3), 2).pass);
}

TEST_CASE("two-sided ideals") {
  const Sphere fs;
  const auto ok = check_two_sided(fs.S, fs.L, 2);
  CHECK(ok.status == Verdict::pass);
  const auto S2 = StarProductSpec::gutt(test::su2(), 2);
  const auto L3 = lift_generators(S2, {P3("x3")}, LiftingStrategy::weyl);
  const auto bad = check_two_sided(S2, L3, 2);
  CHECK(bad.status == Verdict::fail);
  CHECK(*bad.multiplier == Monomial({1, 0, 0}));
  CHECK(bad.missing_from == Side::left);
  CHECK(bad.element == star(S2, P3("x3"), P3("x1")));
}

TEST_CASE("membership certificates") {
  const Sphere fs;
  DeformedIdeal I(fs.S, fs.L);
  const HSeries& P = fs.L.liftings[0];
  const auto F = star(fs.S, H3("x1", 3), P);
  const auto r = ideal_membership_mod(I, F, 3);
  REQUIRE(r.found);
  CHECK(star(fs.S, r.certificate[0], P) == F);
  const auto hr = ideal_membership_mod(I, F.shifted(1), 3);
  REQUIRE(hr.found);
  CHECK(star(fs.S, hr.certificate[0], P) == F.shifted(1));
  CHECK_FALSE(ideal_membership_mod(I, H3("x1", 3), 3).found);
  const auto e = I.escalation(4);
  CHECK(e == std::vector<std::size_t>{4, 6, 8});
}

TEST_CASE("fuzzy sphere reduction system") {
  const Sphere fs;
  const auto Q = quotient_basis(buchberger({kSphere}), 4);
  const auto R = build_reduction_system(fs.S, fs.L, Q);
  const HCoords want{{MultiIndex(), HScalar(3, 1)}, {mi({2, 2}), HScalar(3, -1)}, {mi({3, 3}), HScalar(3, -1)}};
  CHECK(R.solved.at(mi({1, 1})) == want);
  CHECK(coords_zero(R.hA.at(mi({1, 1}))));
  CHECK(R.C.at(mi({1, 1}))[0] == H3("1", 3));
  CHECK(quotient_normal_form(R, star(fs.S, P3("x1"), P3("x1"))) == want);
  CHECK(coords_zero(quotient_normal_form(R, fs.L.liftings[0])));
  // section property on the standard part
  for (const auto& m : Q.set.basis) {
    const auto J = MultiIndex::from_monomial(m);
    CHECK(canonical(quotient_normal_form(R, R.star_basis->star_monomial(J))) == HCoords{{J, HScalar(3, 1)}});
  }
}

TEST_CASE("fuzzy sphere multiplication table") {
  const Sphere fs;
  const auto R = build_reduction_system(fs.S, fs.L, quotient_basis(buchberger({kSphere}), 4));
  const auto T = multiplication_table(R, 2);
  auto comm = T.at({mi({1}), mi({2})});
  add_scaled(comm, T.at({mi({2}), mi({1})}), HScalar(3, -1));
  CHECK(canonical(comm) == HCoords{{mi({3}), hs(3, {0, 1})}});
  HCoords sq;
  for (std::uint32_t i = 1; i <= 3; ++i) add_scaled(sq, T.at({mi({i}), mi({i})}), HScalar(3, 1));
  CHECK(canonical(sq) == HCoords{{MultiIndex(), HScalar(3, 1)}});
  for (const auto& m : R.basis.set.basis) {
    if (m.degree() > 2) continue;
    const auto J = MultiIndex::from_monomial(m);
    const HCoords e{{J, HScalar(3, 1)}};
    CHECK(canonical(T.at({MultiIndex(), J})) == e);
    CHECK(canonical(T.at({J, MultiIndex()})) == e);
  }
  // h = 0 reproduces classical reduction
  const auto& GB = R.basis.gb;
  for (const auto& [ab, c] : T) {
    Poly classical(3);
    for (const auto& [J, x] : c) classical.add_term(J.to_monomial(3), x[0]);
    CHECK(classical == reduce(Poly::term(ab.first.to_monomial(3) * ab.second.to_monomial(3), 1), GB));
  }
  CHECK_THROWS_AS(multiplication_table(R, 3), PreconditionError);
}

TEST_CASE("projection is multiplicative") {
  const Sphere fs;
  const auto R = build_reduction_system(fs.S, fs.L, quotient_basis(buchberger({kSphere}), 4));
  const auto T = multiplication_table(R, 2);
  for (const char* f : {"x1^2", "x1*x3 + x2", "x2*x3"}) {
    for (const char* g : {"x3^2 - x1", "x2"}) {
      const auto cf = quotient_normal_form(R, H3(f, 3)), cg = quotient_normal_form(R, H3(g, 3));
      HCoords composed;
      for (const auto& [a, x] : cf)
        for (const auto& [b, y] : cg) add_scaled(composed, T.at({a, b}), x * y);
      CHECK(canonical(composed) == canonical(quotient_normal_form(R, star(fs.S, H3(f, 3), H3(g, 3)))));
    }
  }
}

TEST_CASE("flatness") {
  const Sphere fs;
  const auto R = build_reduction_system(fs.S, fs.L, quotient_basis(buchberger({kSphere}), 4));
  const auto F = verify_flatness(R, 4);
  CHECK(F.overall() == Verdict::pass);
  CHECK(F.measured_per_degree == std::vector<std::size_t>{1, 3, 5, 7, 9});

  const auto M = StarProductSpec::moyal(test::plane3(), 3);
  const auto L = lift_generators(M, {P3("x3 - 2")}, LiftingStrategy::identity);
  const auto RM = build_reduction_system(M, L, quotient_basis(buchberger({P3("x3 - 2")}), 3));
  CHECK(RM.solved.at(mi({3})) == HCoords{{MultiIndex(), HScalar(3, 2)}});
  CHECK(quotient_normal_form(RM, star(M, P3("x3"), P3("x1"))) == HCoords{{mi({1}), HScalar(3, 2)}});
  const auto FM = verify_flatness(RM, 3);
  CHECK(FM.overall() == Verdict::pass);
  CHECK(FM.measured_per_degree == std::vector<std::size_t>{1, 2, 3, 4});
}

TEST_CASE("zero structure reduces classically") {
  const auto Z = StarProductSpec::moyal(PoissonStructure::zero(3), 2);
  const Poly p = P3("x1*x2 - x3");
  const auto L = lift_generators(Z, {p}, LiftingStrategy::identity);
  const auto R = build_reduction_system(Z, L, quotient_basis(buchberger({p}), 3));
  for (const auto& [mu, row] : R.hA) CHECK(coords_zero(row));
  for (const auto& [mu, row] : R.solved) {
    Poly classical(3);
    for (const auto& [J, x] : row) {
      CHECK(x == HScalar(2, x[0]));
      classical.add_term(J.to_monomial(3), x[0]);
    }
    CHECK(classical == reduce(Poly::term(mu.to_monomial(3), 1), R.basis.gb));
  }
}
