#include <doctest.h>

#include "dq/errors.hpp"
#include "dq/json_io.hpp"
#include "dq/presentation.hpp"
#include "dq/quotient.hpp"
#include "dq/verify.hpp"
#include "support.hpp"

using namespace dq;

// The OpenMP path must reproduce the serial reference path exactly.

TEST_CASE("verifier sweeps") {
  const auto quad = PoissonStructure::from_upper(2, {{{0, 1}, test::P2("x*y")}});
  const auto S = StarProductSpec::custom_unverified(quad, 3, {});
  const auto a = verify_associativity(S, 3, Exec::serial());
  const auto b = verify_associativity(S, 3, Exec::parallel(4));
  CHECK(dump(to_json(a)) == dump(to_json(b)));
  const auto cubic = StarProductSpec::custom(PoissonStructure::from_upper(2, {{{0, 1}, test::P2("x^3")}}), 2, {});
  CHECK(dump(to_json(check_semiformal_filtration(cubic, 3, Exec::serial()))) ==
        dump(to_json(check_semiformal_filtration(cubic, 3, Exec::parallel(4)))));
}

TEST_CASE("expansion matrices and presentations") {
  const auto S = StarProductSpec::gutt(test::su2(), 4);
  const StarBasis A(S, 4, Exec::serial()), B(S, 4, Exec::parallel(4));
  CHECK(A.expansion().rows == B.expansion().rows);
  CHECK(A.inverse().rows == B.inverse().rows);
  CHECK(dump(to_json(emit_presentation(A, Exec::serial()))) == dump(to_json(emit_presentation(B, Exec::parallel(4)))));
}

TEST_CASE("reduction systems") {
  const Poly C = test::P3("x1^2 + x2^2 + x3^2 - 1");
  const auto S = StarProductSpec::gutt(test::su2(), 3);
  const auto L = lift_generators(S, {C}, LiftingStrategy::identity);
  const auto Q = quotient_basis(buchberger({C}), 4);
  const auto r1 = build_reduction_system(S, L, Q, Exec::serial());
  const auto r2 = build_reduction_system(S, L, Q, Exec::parallel(4));
  CHECK(r1.solved == r2.solved);
  CHECK(dump(to_json(multiplication_table(r1, 2, Exec::serial()))) ==
        dump(to_json(multiplication_table(r2, 2, Exec::parallel(4)))));
  CHECK(dump(to_json(verify_flatness(r1, 4, Exec::serial()))) ==
        dump(to_json(verify_flatness(r2, 4, Exec::parallel(4)))));
}

TEST_CASE("exceptions cross the parallel loop") {
  CHECK_THROWS_AS(for_each_index(8, Exec::parallel(4),
                                 [](std::size_t i) {
                                   if (i == 5) throw Error("boom");
                                 }),
                  Error);
}

TEST_CASE("json encoding round trip") {
  const auto F = test::H3("x1*x2 - 1/2*h*x3 + 3*h^2", 3);
  const auto j = to_json(F);
  CHECK(hseries_from_json(j, 3) == F);
  CHECK(to_json(Rational(4)) == "4");
  CHECK(to_json(Rational(-1, 2)) == "-1/2");
  CHECK(to_json(Monomial({2, 0, 1})) == json::array({2, 0, 1}));
  CHECK(report_header("check")["schema"] == "deformq.check/1");
}
