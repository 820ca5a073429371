#include "dq/star.hpp"

#include <algorithm>

#include "dq/errors.hpp"

namespace dq {

Poly DiffOperator::apply(const Poly& f) const {
  Poly out(f.dimension());
  for (const auto& t : terms) {
    Poly d = partial_derivative(f, t.deriv);
    if (!d.is_zero()) out += t.coeff * d;
  }
  return out;
}

unsigned DiffOperator::order() const {
  unsigned r = 0;
  for (const auto& t : terms) r = std::max(r, t.deriv.degree());
  return r;
}

Poly BidiffOperator::apply(const Poly& f, const Poly& g) const {
  Poly out(f.dimension());
  for (const auto& t : terms) {
    Poly df = partial_derivative(f, t.left);
    if (df.is_zero()) continue;
    Poly dg = partial_derivative(g, t.right);
    if (dg.is_zero()) continue;
    out += t.coeff * df * dg;
  }
  return out;
}

unsigned BidiffOperator::max_derivative_order() const {
  unsigned r = 0;
  for (const auto& t : terms) r = std::max({r, t.left.degree(), t.right.degree()});
  return r;
}

Poly first_order_bidiff(const PoissonStructure& P, const Poly& f, const Poly& g) {
  return bracket(P, f, g) * Rational(1, 2);
}

}  // namespace dq
