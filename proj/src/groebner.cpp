#include "dq/groebner.hpp"

#include <algorithm>
#include <list>
#include <unordered_map>

#include "dq/errors.hpp"
#include "dq/linear_algebra.hpp"

namespace dq {

namespace {

// Polynomial with its cofactors over the original generators.
struct Tracked {
  Poly p;
  std::vector<Poly> cof;
  Monomial lm;
  Rational lc;

  void refresh(const MonomialOrder& order) {
    if (p.is_zero()) return;
    auto [m, c] = p.leading_term(order);
    lm = std::move(m);
    lc = std::move(c);
  }
};

void add_scaled_cof(std::vector<Poly>& acc, const std::vector<Poly>& src, const Rational& c,
                    const Monomial& m) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i].add_scaled(src[i], c, m);
}

// Full reduction of f by the elements of G (indices into `all`).
Tracked reduce_tracked(Tracked f, const std::vector<Tracked>& all,
                       const std::vector<std::size_t>& G, const MonomialOrder& order) {
  const std::size_t n = f.p.dimension();
  Tracked out{Poly(n), f.cof, Monomial(), Rational()};
  Poly h = std::move(f.p);
  while (!h.is_zero()) {
    auto [lm, lc] = h.leading_term(order);
    const Tracked* div = nullptr;
    for (auto k : G) {
      if (all[k].lm.divides(lm)) {
        div = &all[k];
        break;
      }
    }
    if (div) {
      const Rational q = lc / div->lc;
      const Monomial t = lm / div->lm;
      h.add_scaled(div->p, -q, t);
      add_scaled_cof(out.cof, div->cof, -q, t);
    } else {
      out.p.add_term(lm, lc);
      h.add_term(lm, -lc);
    }
  }
  out.refresh(order);
  return out;
}

Tracked s_poly_tracked(const Tracked& f, const Tracked& g, const MonomialOrder& order) {
  const Monomial L = f.lm.lcm(g.lm);
  Tracked s{Poly(f.p.dimension()), std::vector<Poly>(f.cof.size(), Poly(f.p.dimension())),
            Monomial(), Rational()};
  s.p.add_scaled(f.p, 1 / f.lc, L / f.lm);
  s.p.add_scaled(g.p, -1 / g.lc, L / g.lm);
  add_scaled_cof(s.cof, f.cof, 1 / f.lc, L / f.lm);
  add_scaled_cof(s.cof, g.cof, -1 / g.lc, L / g.lm);
  s.refresh(order);
  return s;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

// Gebauer-Moeller update of the active set G and pair list B with new element h.
void gm_update(std::vector<std::size_t>& G, std::vector<Pair>& B, std::size_t h,
               const std::vector<Tracked>& all) {
  const Monomial& lh = all[h].lm;
  std::list<Pair> C;
  for (auto g : G) C.push_back({g, h, all[g].lm.lcm(lh)});
  std::vector<Pair> D;
  while (!C.empty()) {
    Pair p = C.front();
    C.pop_front();
    bool keep = all[p.i].lm.coprime(lh);
    if (!keep) {
      auto divides_p = [&](const Pair& q) { return q.lcm.divides(p.lcm); };
      keep = std::none_of(C.begin(), C.end(), divides_p) &&
             std::none_of(D.begin(), D.end(), divides_p);
    }
    if (keep) D.push_back(std::move(p));
  }
  std::vector<Pair> nb;
  for (auto& p : B) {
    const bool drop = lh.divides(p.lcm) && all[p.i].lm.lcm(lh) != p.lcm &&
                      all[p.j].lm.lcm(lh) != p.lcm;
    if (!drop) nb.push_back(std::move(p));
  }
  for (auto& p : D)
    if (!all[p.i].lm.coprime(lh)) nb.push_back(std::move(p));
  B = std::move(nb);
  std::vector<std::size_t> ng;
  for (auto g : G)
    if (!lh.divides(all[g].lm)) ng.push_back(g);
  ng.push_back(h);
  G = std::move(ng);
}

}  // namespace

std::size_t GroebnerBasis::dimension() const {
  return original.empty() ? 0 : original.front().dimension();
}

bool GroebnerBasis::is_unit() const {
  return generators.size() == 1 && generators.front().is_constant() &&
         !generators.front().is_zero();
}

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order) {
  auto [mf, cf] = f.leading_term(order);
  auto [mg, cg] = g.leading_term(order);
  const Monomial L = mf.lcm(mg);
  Poly s(f.dimension());
  s.add_scaled(f, 1 / cf, L / mf);
  s.add_scaled(g, -1 / cg, L / mg);
  return s;
}

GroebnerBasis buchberger(const std::vector<Poly>& gens, const MonomialOrder& order) {
  if (gens.empty()) throw Error("buchberger: empty generator list");
  const std::size_t n = gens.front().dimension();
  for (const auto& g : gens)
    if (g.dimension() != n) throw DimensionError("buchberger: generators of mixed dimension");

  GroebnerBasis out;
  out.order = order;
  out.original = gens;
  const std::size_t m = gens.size();

  std::vector<Tracked> all;
  std::vector<std::size_t> G;
  std::vector<Pair> B;
  for (std::size_t i = 0; i < m; ++i) {
    if (gens[i].is_zero()) continue;
    Tracked t{gens[i], std::vector<Poly>(m, Poly(n)), Monomial(), Rational()};
    t.cof[i] = Poly(n, 1);
    t = reduce_tracked(std::move(t), all, G, order);
    if (t.p.is_zero()) continue;
    all.push_back(std::move(t));
    gm_update(G, B, all.size() - 1, all);
  }
  if (all.empty()) {
    out.zero_ideal = true;
    return out;
  }

  while (!B.empty()) {
    auto best = std::min_element(B.begin(), B.end(), [&](const Pair& a, const Pair& b) {
      if (auto c = order.compare(a.lcm, b.lcm); c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair p = *best;
    B.erase(best);
    Tracked s = s_poly_tracked(all[p.i], all[p.j], order);
    s = reduce_tracked(std::move(s), all, G, order);
    if (s.p.is_zero()) continue;
    all.push_back(std::move(s));
    gm_update(G, B, all.size() - 1, all);
  }

  // Interreduce the (already minimal) active set and normalize.
  std::sort(G.begin(), G.end(),
            [&](std::size_t a, std::size_t b) { return order.less(all[a].lm, all[b].lm); });
  for (std::size_t idx = 0; idx < G.size(); ++idx) {
    Tracked& g = all[G[idx]];
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < G.size(); ++j)
      if (j != idx) others.push_back(G[j]);
    Tracked tail{g.p, g.cof, g.lm, g.lc};
    tail.p.add_term(g.lm, -g.lc);
    for (auto& c : tail.cof) c = Poly(n);
    // reduce the tail alone, then re-attach the leading term
    Tracked red = reduce_tracked(Tracked{tail.p, std::vector<Poly>(m, Poly(n)), {}, {}}, all,
                                 others, order);
    Poly np = red.p;
    np.add_term(g.lm, g.lc);
    std::vector<Poly> ncof = g.cof;
    for (std::size_t i = 0; i < m; ++i) ncof[i] += red.cof[i];
    g.p = std::move(np);
    g.cof = std::move(ncof);
    g.refresh(order);
  }
  for (auto k : G) {
    Tracked& g = all[k];
    const Rational inv = 1 / g.lc;
    g.p *= inv;
    for (auto& c : g.cof) c *= inv;
    out.generators.push_back(g.p);
    out.leading.push_back(g.lm);
    out.cofactors.push_back(g.cof);
  }
  return out;
}

Division divide(const Poly& f, const GroebnerBasis& GB) {
  const std::size_t n = f.dimension();
  if (!GB.zero_ideal && GB.dimension() != n) throw DimensionError("reduce: dimension mismatch");
  Division d{Poly(n), std::vector<Poly>(GB.generators.size(), Poly(n))};
  Poly h = f;
  while (!h.is_zero()) {
    auto [lm, lc] = h.leading_term(GB.order);
    bool found = false;
    for (std::size_t k = 0; k < GB.generators.size(); ++k) {
      if (!GB.leading[k].divides(lm)) continue;
      const Monomial t = lm / GB.leading[k];
      h.add_scaled(GB.generators[k], -lc, t);  // generators are monic
      d.quotients[k].add_term(t, lc);
      found = true;
      break;
    }
    if (!found) {
      d.remainder.add_term(lm, lc);
      h.add_term(lm, -lc);
    }
  }
  return d;
}

Poly reduce(const Poly& f, const GroebnerBasis& GB) { return divide(f, GB).remainder; }

OriginalDivision divide_by_original(const Poly& f, const GroebnerBasis& GB) {
  const std::size_t n = f.dimension();
  auto d = divide(f, GB);
  OriginalDivision out{std::move(d.remainder), std::vector<Poly>(GB.original.size(), Poly(n))};
  for (std::size_t k = 0; k < d.quotients.size(); ++k) {
    if (d.quotients[k].is_zero()) continue;
    for (std::size_t i = 0; i < GB.original.size(); ++i)
      out.cofactors[i] += d.quotients[k] * GB.cofactors[k][i];
  }
  return out;
}

bool StandardMonomialSet::in_basis(const Monomial& m) const {
  return std::binary_search(basis.begin(), basis.end(), m,
                            [](const Monomial& a, const Monomial& b) {
                              return MultiIndex::from_monomial(a) < MultiIndex::from_monomial(b);
                            });
}

StandardMonomialSet standard_monomials(const GroebnerBasis& GB, std::size_t degree_bound) {
  StandardMonomialSet s;
  s.dimension = GB.dimension();
  s.degree_bound = degree_bound;
  s.basis_per_degree.assign(degree_bound + 1, 0);
  s.complement_per_degree.assign(degree_bound + 1, 0);
  for (auto& m : monomials_up_to(s.dimension, degree_bound)) {
    const bool divisible = std::any_of(GB.leading.begin(), GB.leading.end(),
                                       [&](const Monomial& lm) { return lm.divides(m); });
    if (divisible) {
      ++s.complement_per_degree[m.degree()];
      s.complement.push_back(std::move(m));
    } else {
      ++s.basis_per_degree[m.degree()];
      s.basis.push_back(std::move(m));
    }
  }
  return s;
}

Poly determinant(const std::vector<std::vector<Poly>>& M) {
  const std::size_t k = M.size();
  if (k == 0) throw Error("determinant of an empty matrix");
  const std::size_t n = M[0][0].dimension();
  if (k == 1) return M[0][0];
  Poly det(n);
  for (std::size_t c = 0; c < k; ++c) {
    if (M[0][c].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Poly> row;
      for (std::size_t cc = 0; cc < k; ++cc)
        if (cc != c) row.push_back(M[r][cc]);
      minor.push_back(std::move(row));
    }
    Poly term = M[0][c] * determinant(minor);
    if (c % 2 == 0) det += term; else det -= term;
  }
  return det;
}

RankCheck jacobian_rank_check(const std::vector<Poly>& gens, const MonomialOrder& order) {
  if (gens.empty()) throw Error("jacobian_rank_check: empty generator list");
  const std::size_t m = gens.size();
  const std::size_t n = gens.front().dimension();
  if (m > n)
    throw PreconditionError("jacobian_rank_check: " + std::to_string(m) +
                            " generators in dimension " + std::to_string(n) +
                            " cannot have rank " + std::to_string(m));
  std::vector<std::vector<Poly>> J(m, std::vector<Poly>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) J[i][j] = partial_derivative(gens[i], j);

  RankCheck rc;
  std::vector<std::size_t> cols(m);
  for (std::size_t i = 0; i < m; ++i) cols[i] = i;
  while (true) {
    std::vector<std::vector<Poly>> sub(m, std::vector<Poly>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) sub[i][j] = J[i][cols[j]];
    Poly d = determinant(sub);
    if (!d.is_zero()) rc.minors.push_back(std::move(d));
    // next m-combination of n columns
    std::size_t pos = m;
    while (pos > 0 && cols[pos - 1] == n - m + pos - 1) --pos;
    if (pos == 0) break;
    ++cols[pos - 1];
    for (std::size_t j = pos; j < m; ++j) cols[j] = cols[j - 1] + 1;
  }
  std::vector<Poly> ideal = gens;
  ideal.insert(ideal.end(), rc.minors.begin(), rc.minors.end());
  rc.witness = buchberger(ideal, order);
  rc.pass = rc.witness.is_unit();
  return rc;
}

SyzygyResult antisymmetric_syzygy(const std::vector<Poly>& a, const std::vector<Poly>& p,
                                  std::size_t degree_bound, const MonomialOrder& order) {
  const std::size_t m = p.size();
  if (m == 0 || a.size() != m) throw Error("antisymmetric_syzygy: a and p must have equal nonzero length");
  const std::size_t n = p.front().dimension();
  for (const auto& f : a)
    if (f.dimension() != n) throw DimensionError("antisymmetric_syzygy: dimension mismatch");
  for (const auto& f : p)
    if (f.dimension() != n) throw DimensionError("antisymmetric_syzygy: dimension mismatch");

  Poly rel(n);
  for (std::size_t i = 0; i < m; ++i) rel += a[i] * p[i];
  if (!rel.is_zero())
    throw PreconditionError("antisymmetric_syzygy: sum a_i p_i is not zero");

  std::vector<std::vector<Poly>> zero(m, std::vector<Poly>(m, Poly(n)));
  if (std::all_of(a.begin(), a.end(), [](const Poly& f) { return f.is_zero(); }))
    return {zero, 0};
  if (!jacobian_rank_check(p, order).pass)
    throw PreconditionError("antisymmetric_syzygy: Jacobian of p is not of maximal rank on V(p)");

  int max_a = -1, max_p = 0;
  for (const auto& f : a) max_a = std::max(max_a, f.degree());
  for (const auto& f : p) max_p = std::max(max_p, f.degree());
  const std::size_t d0 = static_cast<std::size_t>(std::max(0, max_a - max_p));

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);

  for (std::size_t e = d0; e <= degree_bound; ++e) {
    const auto monos = monomials_up_to(n, e);
    std::unordered_map<Monomial, std::size_t> row_of;
    auto row_index = [&](std::size_t eq, const Monomial& mono) {
      auto [it, inserted] = row_of.try_emplace(mono, row_of.size());
      return it->second * m + eq;
    };
    EchelonBasis basis(/*track=*/true);
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
      const auto [i, j] = pairs[pi];
      for (std::size_t mi = 0; mi < monos.size(); ++mi) {
        SparseVec col;
        for (const auto& [mono, c] : p[j].terms()) axpy(col, c, {{row_index(i, mono * monos[mi]), 1}});
        for (const auto& [mono, c] : p[i].terms()) axpy(col, -c, {{row_index(j, mono * monos[mi]), 1}});
        basis.insert(col, pi * monos.size() + mi);
      }
    }
    SparseVec target;
    for (std::size_t i = 0; i < m; ++i)
      for (const auto& [mono, c] : a[i].terms()) axpy(target, c, {{row_index(i, mono), 1}});
    auto sol = basis.solve(target);
    if (!sol) continue;

    auto b = zero;
    for (const auto& [id, c] : *sol) {
      const auto [i, j] = pairs[id / monos.size()];
      const auto& mono = monos[id % monos.size()];
      b[i][j].add_term(mono, c);
      b[j][i].add_term(mono, -c);
    }
    for (std::size_t i = 0; i < m; ++i) {
      Poly s(n);
      for (std::size_t j = 0; j < m; ++j) s += b[i][j] * p[j];
      if (s != a[i]) throw Error("antisymmetric_syzygy: certificate failed substitution");
    }
    return {b, e};
  }
  return {std::nullopt, degree_bound};
}

}  // namespace dq
