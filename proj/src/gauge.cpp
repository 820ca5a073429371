#include "dq/gauge.hpp"

#include <algorithm>

#include "dq/errors.hpp"

namespace dq {

GaugeTransform::GaugeTransform(std::size_t n, std::size_t N, std::vector<DiffOperator> terms)
    : n_(n), N_(N), T_(std::move(terms)) {
  if (N == 0) throw TruncationError("truncation order N must be at least 1");
  for (const auto& op : T_)
    for (const auto& t : op.terms)
      if (t.coeff.dimension() != n || t.deriv.dimension() != n)
        throw DimensionError("gauge term has wrong dimension");
  if (T_.size() >= N) T_.resize(N - 1);
}

unsigned GaugeTransform::order() const {
  unsigned r = 0;
  for (const auto& op : T_) r = std::max(r, op.order());
  return r;
}

HSeries GaugeTransform::apply(const HSeries& F) const {
  if (F.trunc() != N_ || F.dimension() != n_) throw TruncationError("gauge: operand mismatch");
  HSeries out = F;
  for (std::size_t a = 0; a < N_; ++a) {
    if (F[a].is_zero()) continue;
    for (std::size_t k = 1; k <= T_.size() && a + k < N_; ++k) out[a + k] += T_[k - 1].apply(F[a]);
  }
  return out;
}

HSeries GaugeTransform::apply_inverse(const HSeries& F) const {
  // G = F - (T - Id) G, exact after N rounds since T - Id raises the h-order
  HSeries G = F;
  for (std::size_t r = 1; r < N_; ++r) G = F - (apply(G) - G);
  return G;
}

HSeries gauge_product(const StarProductSpec& S, const GaugeTransform& T, const Poly& f,
                      const Poly& g) {
  const std::size_t N = S.trunc();
  if (T.trunc() != N || T.dimension() != S.dimension())
    throw TruncationError("gauge transform and star product disagree on N or dimension");
  const HSeries F = T.apply_inverse(HSeries::from_poly(f, N));
  const HSeries G = T.apply_inverse(HSeries::from_poly(g, N));
  return T.apply(star(S, F, G));
}

namespace {

Rational monomial_factorial(const Monomial& m) {
  Rational r = 1;
  for (auto e : m.exponents()) r *= factorial(e);
  return r;
}

struct Table {
  std::vector<std::pair<Monomial, Monomial>> keys;  // (L, R)
  std::vector<std::vector<Poly>> coeffs;            // coeffs[k][idx], k = 1..N-1 at k-1
};

// Bidifferential coefficients c_{L,R} for |L|, |R| <= D, solved triangularly
// from the values B'_k(x^L, x^R).
Table tabulate(const StarProductSpec& S, const GaugeTransform& T, std::size_t D) {
  const std::size_t n = S.dimension(), N = S.trunc();
  Table tab;
  const auto monos = monomials_up_to(n, D);
  for (std::size_t s = 0; s <= 2 * D; ++s)
    for (const auto& L : monos)
      for (const auto& R : monos)
        if (L.degree() + R.degree() == s) tab.keys.push_back({L, R});
  tab.coeffs.assign(N > 1 ? N - 1 : 0, std::vector<Poly>(tab.keys.size(), Poly(n)));
  for (std::size_t idx = 0; idx < tab.keys.size(); ++idx) {
    const auto& [L, R] = tab.keys[idx];
    const HSeries val = gauge_product(S, T, Poly::term(L, 1), Poly::term(R, 1));
    const Rational norm = monomial_factorial(L) * monomial_factorial(R);
    for (std::size_t k = 1; k < N; ++k) {
      Poly rest = val[k];
      for (std::size_t j = 0; j < idx; ++j) {
        const auto& [L2, R2] = tab.keys[j];
        const Poly& c = tab.coeffs[k - 1][j];
        if (c.is_zero() || !L2.divides(L) || !R2.divides(R)) continue;
        rest -= c * partial_derivative(Poly::term(L, 1), L2) * partial_derivative(Poly::term(R, 1), R2);
      }
      tab.coeffs[k - 1][idx] = rest * (1 / norm);
    }
  }
  return tab;
}

std::vector<BidiffOperator> to_operators(const Table& tab, std::size_t N) {
  std::vector<BidiffOperator> ops;
  for (std::size_t k = 1; k < N; ++k) {
    BidiffOperator op;
    op.order = static_cast<unsigned>(k);
    for (std::size_t idx = 0; idx < tab.keys.size(); ++idx)
      if (!tab.coeffs[k - 1][idx].is_zero())
        op.terms.push_back({tab.coeffs[k - 1][idx], tab.keys[idx].first, tab.keys[idx].second});
    ops.push_back(std::move(op));
  }
  return ops;
}

}  // namespace

StarProductSpec gauge_transform(const StarProductSpec& S, const GaugeTransform& T) {
  const std::size_t n = S.dimension(), N = S.trunc();
  if (T.trunc() != N || T.dimension() != n)
    throw TruncationError("gauge transform and star product disagree on N or dimension");
  // per-side derivative order of the base product at h^k is at most k
  // (Moyal, Gutt, B_1); custom operators may be higher
  unsigned tau = std::max(1u, T.order());
  for (const auto& op : S.operators())
    tau = std::max(tau, (op.max_derivative_order() + op.order - 1) / op.order);
  std::size_t D = std::max<std::size_t>(1, (N - 1) * tau);
  for (int round = 0; round < 6; ++round, ++D) {
    const auto ops = to_operators(tabulate(S, T, D), N);
    StarProductSpec out = StarProductSpec::tabulated(S.structure(), N, ops);
    // the table must reproduce pairs one derivative order beyond it
    bool ok = true;
    for (const auto& L : monomials_up_to(n, D + 1)) {
      for (const auto& R : monomials_up_to(n, D + 1)) {
        if (L.degree() <= D && R.degree() <= D) continue;
        const Poly f = Poly::term(L, 1), g = Poly::term(R, 1);
        if (out.product(f, g) != gauge_product(S, T, f, g)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) return out;
  }
  throw Error("gauge_transform: bidifferential order did not stabilize");
}

}  // namespace dq
