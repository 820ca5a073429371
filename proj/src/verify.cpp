#include "dq/verify.hpp"

#include <optional>

#include "dq/errors.hpp"

namespace dq {

std::vector<std::vector<Monomial>> monomial_tuples(std::size_t n, std::size_t arity,
                                                   std::size_t d) {
  const auto monos = monomials_up_to(n, d);
  std::vector<std::vector<std::vector<Monomial>>> by_total(d + 1);
  std::vector<std::size_t> idx(arity, 0);
  // odometer over index tuples; monomials are graded so we can prune by degree
  std::vector<Monomial> cur(arity);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t used) -> void {
    if (pos == arity) {
      by_total[used].push_back(cur);
      return;
    }
    for (const auto& m : monos) {
      if (used + m.degree() > d) break;
      cur[pos] = m;
      self(self, pos + 1, used + m.degree());
    }
  };
  rec(rec, 0, 0);
  std::vector<std::vector<Monomial>> out;
  for (auto& layer : by_total)
    for (auto& t : layer) out.push_back(std::move(t));
  return out;
}

namespace {

Poly as_poly(const Monomial& m) { return Poly::term(m, 1); }

template <class Item, class Check>
std::vector<std::optional<Item>> sweep(const std::vector<std::vector<Monomial>>& tuples,
                                       const Exec& ex, Check&& check) {
  std::vector<std::optional<Item>> res(tuples.size());
  for_each_index(tuples.size(), ex, [&](std::size_t i) { res[i] = check(tuples[i]); });
  return res;
}

template <class Item>
void collect(const std::vector<std::optional<Item>>& res, std::size_t& total,
             std::vector<Item>& kept, bool& pass) {
  for (const auto& r : res) {
    if (!r) continue;
    pass = false;
    ++total;
    if (kept.size() < kMaxCounterexamples) kept.push_back(*r);
  }
}

}  // namespace

AssociativityReport verify_associativity(const StarProductSpec& S, std::size_t d, const Exec& ex) {
  AssociativityReport rep;
  rep.degree_bound = d;
  const auto tuples = monomial_tuples(S.dimension(), 3, d);
  rep.checked = tuples.size();
  auto res = sweep<TripleFailure>(tuples, ex, [&](const std::vector<Monomial>& t)
                                                  -> std::optional<TripleFailure> {
    const Poly f = as_poly(t[0]), g = as_poly(t[1]), k = as_poly(t[2]);
    const HSeries K = HSeries::from_poly(k, S.trunc());
    const HSeries F = HSeries::from_poly(f, S.trunc());
    HSeries left = star(S, S.product(f, g), K);
    HSeries right = star(S, F, S.product(g, k));
    HSeries defect = left - right;
    if (defect.is_zero()) return std::nullopt;
    return TripleFailure{t[0], t[1], t[2], static_cast<std::size_t>(defect.valuation()),
                         std::move(defect)};
  });
  collect(res, rep.failures_total, rep.counterexamples, rep.pass);
  return rep;
}

PairReport verify_commutator_bracket(const StarProductSpec& S, std::size_t d, const Exec& ex) {
  PairReport rep;
  rep.degree_bound = d;
  const auto tuples = monomial_tuples(S.dimension(), 2, d);
  rep.checked = tuples.size();
  const std::size_t n = S.dimension();
  auto res = sweep<PairFailure>(tuples, ex, [&](const std::vector<Monomial>& t)
                                                -> std::optional<PairFailure> {
    const Poly f = as_poly(t[0]), g = as_poly(t[1]);
    HSeries c = S.product(f, g) - S.product(g, f);
    if (!c[0].is_zero()) return PairFailure{t[0], t[1], 0, c[0], Poly(n), c[0].degree(), 0};
    if (S.trunc() < 2) return std::nullopt;
    Poly br = bracket(S.structure(), f, g);
    if (c[1] != br) return PairFailure{t[0], t[1], 1, c[1], br, c[1].degree(), 0};
    return std::nullopt;
  });
  collect(res, rep.failures_total, rep.violations, rep.pass);
  return rep;
}

PairReport verify_degree_bound(const StarProductSpec& S, std::size_t d, const Exec& ex) {
  PairReport rep;
  rep.degree_bound = d;
  const auto tuples = monomial_tuples(S.dimension(), 2, d);
  rep.checked = tuples.size();
  const int p = S.structure().degree();
  auto res = sweep<PairFailure>(tuples, ex, [&](const std::vector<Monomial>& t)
                                                -> std::optional<PairFailure> {
    HSeries prod = S.product(as_poly(t[0]), as_poly(t[1]));
    const int base = static_cast<int>(t[0].degree() + t[1].degree());
    for (std::size_t m = 1; m < S.trunc(); ++m) {
      const int limit = base + (p - 2) * static_cast<int>(m);
      const int deg = prod[m].degree();
      if (!prod[m].is_zero() && deg > limit) return PairFailure{t[0], t[1], m, prod[m], Poly(S.dimension()), deg, limit};
    }
    return std::nullopt;
  });
  collect(res, rep.failures_total, rep.violations, rep.pass);
  return rep;
}

PairReport check_semiformal_filtration(const StarProductSpec& S, std::size_t d, const Exec& ex) {
  PairReport rep;
  rep.degree_bound = d;
  const auto tuples = monomial_tuples(S.dimension(), 2, d);
  rep.checked = tuples.size();
  auto res = sweep<PairFailure>(tuples, ex, [&](const std::vector<Monomial>& t)
                                                -> std::optional<PairFailure> {
    HSeries prod = S.product(as_poly(t[0]), as_poly(t[1]));
    const int limit = static_cast<int>(t[0].degree() + t[1].degree());
    for (std::size_t k = 0; k < S.trunc(); ++k) {
      const int deg = prod[k].degree();
      if (!prod[k].is_zero() && deg > limit) return PairFailure{t[0], t[1], k, prod[k], Poly(S.dimension()), deg, limit};
    }
    return std::nullopt;
  });
  collect(res, rep.failures_total, rep.violations, rep.pass);
  return rep;
}

}  // namespace dq
