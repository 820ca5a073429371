#include <doctest.h>

#include "dq/errors.hpp"
#include "dq/gauge.hpp"
#include "dq/verify.hpp"
#include "support.hpp"

using namespace dq;
using test::H2;
using test::P2;

namespace {
GaugeTransform dxdy(std::size_t N) {
  return GaugeTransform(2, N, {DiffOperator{{{P2("1"), Monomial({1, 1})}}}});
}
}  // namespace

TEST_CASE("gauge transform acts and inverts") {
  const auto T = dxdy(3);
  CHECK(T.apply(H2("x*y", 3)) == H2("x*y + h", 3));
  CHECK(T.apply(H2("x^2*y^2", 3)) == H2("x^2*y^2 + 4*h*x*y", 3));
  const auto F = H2("x^3*y^2 + h*x*y", 3);
  CHECK(T.apply_inverse(T.apply(F)) == F);
  CHECK(T.apply(T.apply_inverse(F)) == F);
  CHECK(T.order() == 2);
}

TEST_CASE("gauge-equivalent Moyal product") {
  const auto M = StarProductSpec::moyal(test::plane(), 3);
  const auto T = dxdy(3);
  CHECK(gauge_product(M, T, P2("x"), P2("y")) == H2("x*y + 3/2*h", 3));
  CHECK(gauge_product(M, T, P2("y"), P2("x")) == H2("x*y + 1/2*h", 3));

  const auto G = gauge_transform(M, T);
  CHECK(G.engine() == Engine::tabulated);
  CHECK(star(G, P2("x"), P2("y")) == H2("x*y + 3/2*h", 3));
  CHECK(star(G, P2("x"), P2("y")) - star(G, P2("y"), P2("x")) == H2("h", 3));
  CHECK(star(G, P2("x"), P2("y")) != star(M, P2("x"), P2("y")));
  for (const char* f : {"x^2", "x*y^2", "y^3"})
    for (const char* g : {"x*y", "y^2", "x^3"})
      CHECK(star(G, P2(f), P2(g)) == gauge_product(M, T, P2(f), P2(g)));
  CHECK(verify_commutator_bracket(G, 3).pass);
  CHECK(verify_associativity(G, 3).pass);
}

TEST_CASE("identity gauge") {
  const auto M = StarProductSpec::moyal(test::plane(), 3);
  const auto G = gauge_transform(M, GaugeTransform::identity(2, 3));
  for (const char* f : {"x^2", "x*y"})
    for (const char* g : {"y^2", "x"}) CHECK(star(G, P2(f), P2(g)) == star(M, P2(f), P2(g)));
  CHECK_THROWS_AS(gauge_transform(M, dxdy(2)), TruncationError);
}
