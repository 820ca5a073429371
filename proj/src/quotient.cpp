#include "dq/quotient.hpp"

#include <algorithm>
#include <sstream>

#include "dq/errors.hpp"
#include "dq/parser.hpp"

namespace dq {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::string strategy_name(LiftingStrategy s) {
  switch (s) {
    case LiftingStrategy::identity: return "identity";
    case LiftingStrategy::weyl: return "weyl";
    case LiftingStrategy::custom: return "custom";
  }
  return "?";
}

LiftingStrategy parse_strategy(const std::string& name) {
  if (name == "identity") return LiftingStrategy::identity;
  if (name == "weyl") return LiftingStrategy::weyl;
  if (name == "custom") return LiftingStrategy::custom;
  throw Error("unknown lifting strategy '" + name + "' (expected identity, weyl or custom)");
}

int Lifting::max_degree() const {
  int d = 0;
  for (const auto& p : generators) d = std::max(d, p.degree());
  return d;
}

CentralityResult check_centrality(const StarProductSpec& S, const HSeries& P, std::size_t d) {
  const std::size_t n = S.dimension(), N = S.trunc();
  CentralityResult r;
  r.commutator = HSeries(n, N);
  auto test = [&](const Monomial& m) {
    const HSeries M = HSeries::from_poly(Poly::term(m, 1), N);
    HSeries c = star(S, P, M) - star(S, M, P);
    if (c.is_zero()) return true;
    r.pass = false;
    r.witness = m;
    r.commutator = std::move(c);
    return false;
  };
  for (std::size_t j = 0; j < n; ++j)
    if (!test(Monomial::variable(n, j))) return r;
  for (const auto& m : monomials_up_to(n, d))
    if (m.degree() >= 2 && !test(m)) return r;
  return r;
}

HSeries weyl_symmetrize(const StarProductSpec& S, const Poly& f) {
  const std::size_t n = S.dimension(), N = S.trunc();
  HSeries out(n, N);
  for (const auto& [a, c] : f.terms()) {
    auto letters = MultiIndex::from_monomial(a).indices();
    HSeries sum(n, N);
    std::size_t count = 0;
    do {
      sum += expand_star_monomial(S, Word(letters));
      ++count;
    } while (std::next_permutation(letters.begin(), letters.end()));
    out += sum * (c / Rational(count));
  }
  return out;
}

Lifting lift_generators(const StarProductSpec& S, const std::vector<Poly>& p,
                        LiftingStrategy strategy, std::size_t check_degree) {
  Lifting L;
  L.generators = p;
  L.strategy = strategy;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].dimension() != S.dimension()) throw DimensionError("generator has wrong dimension");
    switch (strategy) {
      case LiftingStrategy::identity: {
        HSeries P = HSeries::from_poly(p[i], S.trunc());
        auto c = check_centrality(S, P, check_degree);
        if (!c.pass) {
          std::ostringstream msg;
          msg << "identity lifting needs central generators: generator " << i + 1
              << " does not commute with the monomial of degree " << c.witness->degree()
              << " (commutator has h-valuation " << c.commutator.valuation() << ")";
          throw PreconditionError(msg.str());
        }
        L.liftings.push_back(std::move(P));
        break;
      }
      case LiftingStrategy::weyl:
        L.liftings.push_back(weyl_symmetrize(S, p[i]));
        break;
      case LiftingStrategy::custom:
        throw PreconditionError("custom liftings must be supplied explicitly");
    }
  }
  return L;
}

Lifting custom_lifting(const std::vector<Poly>& p, const std::vector<HSeries>& liftings) {
  if (p.size() != liftings.size()) throw Error("one lifting per generator is required");
  for (std::size_t i = 0; i < p.size(); ++i)
    if (liftings[i][0] != p[i])
      throw PreconditionError("lifting " + std::to_string(i + 1) +
                              " does not reduce to its generator at h = 0");
  return Lifting{p, liftings, LiftingStrategy::custom};
}

std::size_t CoordIndex::index(std::size_t k, const Monomial& m) {
  auto [it, inserted] = id_.try_emplace(m, mons_.size());
  if (inserted) mons_.push_back(m);
  return (k << kShift) | it->second;
}

std::pair<std::size_t, Monomial> CoordIndex::decode(std::size_t idx) const {
  const std::size_t mask = (std::size_t(1) << kShift) - 1;
  return {idx >> kShift, mons_.at(idx & mask)};
}

SparseVec CoordIndex::flatten(const HSeries& F, std::size_t max_order) {
  SparseVec v;
  for (std::size_t k = 0; k < std::min(max_order, F.trunc()); ++k)
    for (const auto& [m, c] : F[k].terms()) v.emplace(index(k, m), c);
  return v;
}

HSeries CoordIndex::unflatten(const SparseVec& v, std::size_t n, std::size_t N) const {
  HSeries F(n, N);
  for (const auto& [idx, c] : v) {
    auto [k, m] = decode(idx);
    F[k].add_term(m, c);
  }
  return F;
}

DeformedIdeal::DeformedIdeal(StarProductSpec S, Lifting L) : S_(std::move(S)), L_(std::move(L)) {
  for (const auto& P : L_.liftings)
    if (P.trunc() != S_.trunc() || P.dimension() != S_.dimension())
      throw TruncationError("lifting does not match the star product's N or dimension");
}

const HSeries& DeformedIdeal::multiple(Side side, std::size_t i, const Monomial& m) {
  auto& cache = side == Side::left ? left_ : right_;
  auto key = std::make_pair(i, m);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const HSeries M = HSeries::from_poly(Poly::term(m, 1), S_.trunc());
  HSeries v = side == Side::left ? star(S_, M, L_.liftings[i]) : star(S_, L_.liftings[i], M);
  return cache.emplace(std::move(key), std::move(v)).first->second;
}

std::vector<std::pair<std::size_t, Monomial>> DeformedIdeal::multipliers(std::size_t bound) const {
  std::vector<std::pair<std::size_t, Monomial>> out;
  for (std::size_t i = 0; i < L_.size(); ++i) {
    const int dp = L_.generators[i].degree();
    if (dp < 0 || static_cast<std::size_t>(dp) > bound) continue;
    for (auto& m : monomials_up_to(S_.dimension(), bound - dp)) out.emplace_back(i, std::move(m));
  }
  return out;
}

void DeformedIdeal::precompute(Side side, std::size_t bound, const Exec& ex) {
  auto& cache = side == Side::left ? left_ : right_;
  std::vector<std::pair<std::size_t, Monomial>> todo;
  for (auto& key : multipliers(bound))
    if (!cache.count(key)) todo.push_back(std::move(key));
  std::vector<HSeries> out(todo.size());
  const std::size_t N = S_.trunc();
  for_each_index(todo.size(), ex, [&](std::size_t k) {
    const auto& [i, m] = todo[k];
    const HSeries M = HSeries::from_poly(Poly::term(m, 1), N);
    out[k] = side == Side::left ? star(S_, M, L_.liftings[i]) : star(S_, L_.liftings[i], M);
  });
  for (std::size_t k = 0; k < todo.size(); ++k) cache.emplace(std::move(todo[k]), std::move(out[k]));
}

DeformedIdeal::Span& DeformedIdeal::span_data(Side side, std::size_t bound, std::size_t M) {
  const std::size_t N = S_.trunc();
  if (M == 0 || M > N) M = N;
  auto key = std::make_tuple(side == Side::left ? 0 : 1, bound, M);
  if (auto it = spans_.find(key); it != spans_.end()) return *it->second;
  auto sp = std::make_unique<Span>();
  for (const auto& [i, m] : multipliers(bound)) {
    const HSeries& F = multiple(side, i, m);
    for (std::size_t s = 0; s < M; ++s) {
      sp->basis.insert(idx_.flatten(F.shifted(s), M), sp->columns.size());
      sp->columns.push_back({s, {i, m}});
    }
  }
  return *spans_.emplace(key, std::move(sp)).first->second;
}

const EchelonBasis& DeformedIdeal::span(Side side, std::size_t bound, std::size_t M) {
  return span_data(side, bound, M).basis;
}

MembershipResult DeformedIdeal::solve(const HSeries& F, Side side, std::size_t bound,
                                      std::size_t M) {
  const std::size_t n = S_.dimension(), N = S_.trunc();
  if (M == 0 || M > N) M = N;
  precompute(side, bound);
  Span& sp = span_data(side, bound, M);
  MembershipResult r;
  r.bound_used = bound;
  auto sol = sp.basis.solve(idx_.flatten(F, M));
  if (!sol) return r;
  r.found = true;
  r.certificate.assign(L_.size(), HSeries(n, N));
  for (const auto& [id, c] : *sol) {
    const auto& [s, im] = sp.columns[id];
    r.certificate[im.first][s].add_term(im.second, c);
  }
  return r;
}

std::vector<std::size_t> DeformedIdeal::escalation(std::size_t start) const {
  const std::size_t N = S_.trunc();
  const std::size_t step = static_cast<std::size_t>(std::max(1, S_.structure().degree() - 2)) *
                           std::max<std::size_t>(1, N - 1);
  return {start, start + step, start + 2 * step};
}

MembershipResult ideal_membership_mod(DeformedIdeal& I, const HSeries& F, std::size_t d) {
  const std::size_t start =
      std::max<std::size_t>(d, static_cast<std::size_t>(std::max(0, F.degree())) +
                                   static_cast<std::size_t>(I.lifting().max_degree()));
  MembershipResult last;
  for (auto bound : I.escalation(start)) {
    last = I.solve(F, Side::left, bound);
    if (!last.found) continue;
    HSeries check(F.dimension(), F.trunc());
    for (std::size_t i = 0; i < I.lifting().size(); ++i)
      check += star(I.spec(), last.certificate[i], I.lifting().liftings[i]);
    if (check != F) throw Error("ideal membership certificate failed substitution");
    return last;
  }
  return last;
}

MembershipResult ideal_membership_mod(const StarProductSpec& S, const HSeries& F,
                                      const Lifting& L, std::size_t d) {
  DeformedIdeal I(S, L);
  return ideal_membership_mod(I, F, d);
}

TwoSidedResult check_two_sided(DeformedIdeal& I, std::size_t d, const Exec& ex) {
  const auto& S = I.spec();
  const auto& L = I.lifting();
  const std::size_t n = S.dimension();
  TwoSidedResult r;

  struct Item {
    std::size_t i;
    Monomial m;
    Side missing;
    const HSeries* element;
  };
  std::vector<Item> pending;
  const std::size_t start = d + static_cast<std::size_t>(L.max_degree());
  I.precompute(Side::left, start, ex);
  I.precompute(Side::right, start, ex);
  for (std::size_t i = 0; i < L.size(); ++i) {
    for (const auto& m : monomials_up_to(n, d)) {
      ++r.checked;
      const HSeries& mp = I.multiple(Side::left, i, m);   // m * P_i
      const HSeries& pm = I.multiple(Side::right, i, m);  // P_i * m
      if (mp == pm) continue;
      pending.push_back({i, m, Side::left, &pm});
      pending.push_back({i, m, Side::right, &mp});
    }
  }
  r.bound_used = start;
  if (pending.empty()) return r;

  for (auto bound : I.escalation(start)) {
    r.bound_used = bound;
    I.precompute(Side::left, bound, ex);
    I.precompute(Side::right, bound, ex);
    std::vector<Item> rest;
    for (const auto& it : pending)
      if (!I.solve(*it.element, it.missing, bound).found) rest.push_back(it);
    pending = std::move(rest);
    if (pending.empty()) return r;
  }

  const Item& bad = pending.front();
  r.generator = bad.i;
  r.multiplier = bad.m;
  r.missing_from = bad.missing;
  r.element = *bad.element;
  // With one generator P, G*P = D forces the lowest h-coefficient of D into (p).
  if (L.size() == 1) {
    const HSeries& P = L.liftings[0];
    const HSeries M = HSeries::from_poly(Poly::term(bad.m, 1), S.trunc());
    const HSeries D = bad.missing == Side::left ? star(S, P, M) - star(S, M, P)
                                                : star(S, M, P) - star(S, P, M);
    const int v = D.valuation();
    const auto gb = buchberger(L.generators);
    if (v >= 0 && !reduce(D[static_cast<std::size_t>(v)], gb).is_zero()) {
      r.status = Verdict::fail;
      r.reason = "lowest h-order term of the defect lies outside the classical ideal";
      return r;
    }
  }
  r.status = Verdict::inconclusive;
  r.reason = "no certificate within the escalated degree bound";
  return r;
}

TwoSidedResult check_two_sided(const StarProductSpec& S, const Lifting& L, std::size_t d,
                               const Exec& ex) {
  DeformedIdeal I(S, L);
  return check_two_sided(I, d, ex);
}

bool QuotientBasis::in_basis(const MultiIndex& J) const {
  const Monomial m = J.to_monomial(set.dimension);
  return std::none_of(gb.leading.begin(), gb.leading.end(),
                      [&](const Monomial& lm) { return lm.divides(m); });
}

QuotientBasis quotient_basis(const GroebnerBasis& GB, std::size_t d) {
  return QuotientBasis{GB, standard_monomials(GB, d)};
}

ReductionSystem build_reduction_system(const StarProductSpec& S, const Lifting& L,
                                       const QuotientBasis& Q, const Exec& ex) {
  const std::size_t n = S.dimension(), N = S.trunc();
  if (Q.gb.original != L.generators)
    throw PreconditionError("quotient basis was computed for different generators");
  ReductionSystem R;
  R.spec = S;
  R.lifting = L;
  R.basis = Q;
  R.degree_bound = Q.set.degree_bound;
  R.star_basis = std::make_shared<StarBasis>(S, R.degree_bound, ex);
  const StarBasis& SB = *R.star_basis;
  const std::size_t cb = SB.inverse().rows_bound;

  std::vector<MultiIndex> mus;
  for (const auto& J : multi_indices_up_to(n, cb))
    if (!Q.in_basis(J)) mus.push_back(J);

  struct Row {
    HCoords B, hA;
    std::vector<HSeries> C;
  };
  std::vector<Row> rows(mus.size());
  for_each_index(mus.size(), ex, [&](std::size_t r) {
    const MultiIndex& mu = mus[r];
    const Monomial xm = mu.to_monomial(n);
    const auto od = divide_by_original(Poly::term(xm, 1), Q.gb);
    Row row;
    HSeries lift(n, N);
    for (const auto& [m, c] : od.remainder.terms()) {
      const MultiIndex a = MultiIndex::from_monomial(m);
      row.B[a] = HScalar(N, c);
      lift += SB.star_monomial(a) * c;
    }
    for (std::size_t i = 0; i < L.size(); ++i) {
      HSeries Ci(n, N);
      for (const auto& [m, c] : od.cofactors[i].terms())
        Ci += SB.star_monomial(MultiIndex::from_monomial(m)) * c;
      lift += star(S, Ci, L.liftings[i]);
      row.C.push_back(std::move(Ci));
    }
    HSeries defect = SB.star_monomial(mu) - lift;
    if (!defect[0].is_zero()) throw Error("classical reduction does not lift at h = 0");
    if (N > 1) {
      const HCoords hc = shifted(SB.coords(defect.unshifted(1)), 1);
      for (const auto& [J, c] : hc) {
        if (Q.in_basis(J)) {
          add_scaled(row.B, {{J, c}}, HScalar(N, 1));
        } else {
          if (J.size() > cb)
            throw TruncationError("reduction system needs a complement monomial of degree " +
                                  std::to_string(J.size()) + " beyond the bound " +
                                  std::to_string(cb));
          row.hA[J] = c;
        }
      }
    }
    row.B = canonical(std::move(row.B));
    rows[r] = std::move(row);
  });
  for (std::size_t r = 0; r < mus.size(); ++r) {
    R.B[mus[r]] = std::move(rows[r].B);
    R.hA[mus[r]] = std::move(rows[r].hA);
    R.C[mus[r]] = std::move(rows[r].C);
  }

  // v = B + hA v, iterated to a fixed point mod h^N
  R.solved = R.B;
  for (std::size_t it = 1; it < N; ++it) {
    std::map<MultiIndex, HCoords> next;
    for (const auto& [mu, b] : R.B) {
      HCoords v = b;
      for (const auto& [nu, c] : R.hA.at(mu)) add_scaled(v, R.solved.at(nu), c);
      next[mu] = canonical(std::move(v));
    }
    R.solved = std::move(next);
  }
  return R;
}

HCoords quotient_normal_form(const ReductionSystem& R, const HSeries& f) {
  const HCoords c = R.star_basis->coords(f);
  HCoords out;
  const HScalar one(R.trunc(), 1);
  for (const auto& [J, x] : c) {
    if (R.basis.in_basis(J)) {
      add_scaled(out, {{J, x}}, one);
    } else {
      auto it = R.solved.find(J);
      if (it == R.solved.end())
        throw TruncationError("quotient_normal_form: no reduction row for a complement monomial of degree " +
                              std::to_string(J.size()));
      add_scaled(out, it->second, x);
    }
  }
  return out;
}

MultiplicationTable multiplication_table(const ReductionSystem& R, std::size_t t, const Exec& ex) {
  if (2 * t > R.degree_bound)
    throw PreconditionError("multiplication table of degree " + std::to_string(t) +
                            " needs a degree bound of at least " + std::to_string(2 * t));
  std::vector<MultiIndex> basis;
  for (const auto& m : R.basis.set.basis)
    if (m.degree() <= t) basis.push_back(MultiIndex::from_monomial(m));
  std::sort(basis.begin(), basis.end());
  std::vector<std::pair<MultiIndex, MultiIndex>> pairs;
  for (const auto& a : basis)
    for (const auto& b : basis) pairs.emplace_back(a, b);
  std::vector<HCoords> out(pairs.size());
  for_each_index(pairs.size(), ex, [&](std::size_t k) {
    const auto& [a, b] = pairs[k];
    const HSeries prod =
        star(R.spec, R.star_basis->star_monomial(a), R.star_basis->star_monomial(b));
    out[k] = quotient_normal_form(R, prod);
  });
  MultiplicationTable T;
  for (std::size_t k = 0; k < pairs.size(); ++k) T.emplace(pairs[k], std::move(out[k]));
  return T;
}

Verdict FlatnessReport::overall() const {
  for (auto v : {independence, torsion, counts})
    if (v == Verdict::fail) return Verdict::fail;
  for (auto v : {independence, torsion, counts})
    if (v == Verdict::inconclusive) return Verdict::inconclusive;
  return Verdict::pass;
}

FlatnessReport verify_flatness(const ReductionSystem& R, std::size_t d, const Exec& ex) {
  const auto& S = R.spec;
  const std::size_t n = S.dimension(), N = S.trunc();
  FlatnessReport rep;
  rep.degree_bound = d;
  rep.trunc = N;
  DeformedIdeal I(S, R.lifting);
  const auto bounds = I.escalation(d);
  const auto set = standard_monomials(R.basis.gb, d);
  rep.expected_per_degree = set.basis_per_degree;

  // (i) ordered star monomials over B stay independent modulo the ideal span
  {
    const std::size_t b = bounds[1];
    I.precompute(Side::left, b, ex);
    EchelonBasis E = I.span(Side::left, b);
    for (const auto& m : set.basis) {
      const HSeries e = R.star_basis->star_monomial(MultiIndex::from_monomial(m));
      for (std::size_t s = 0; s < N; ++s) {
        if (!E.insert(I.coords().flatten(e.shifted(s), N), 0)) {
          rep.independence = Verdict::fail;
          rep.notes.push_back("a combination of standard star monomials up to degree " +
                              std::to_string(m.degree()) + " lies in the ideal");
          break;
        }
      }
      if (rep.independence == Verdict::fail) break;
    }
  }

  // (ii) torsion probe: span rows divisible by h^s must come from span elements
  {
    I.precompute(Side::left, bounds.back(), ex);
    std::vector<HSeries> probes;
    std::vector<std::size_t> orders;
    for (const auto& [pivot, row] : I.span(Side::left, d).rows()) {
      const std::size_t s = I.coords().decode(pivot).first;
      if (s == 0) continue;
      probes.push_back(I.coords().unflatten(row.vec, n, N).unshifted(s));
      orders.push_back(s);
    }
    rep.torsion_rows_probed = probes.size();
    for (std::size_t k = 0; k < probes.size(); ++k) {
      bool found = false;
      for (auto b : bounds)
        if ((found = I.solve(probes[k], Side::left, b, N - orders[k]).found)) break;
      if (!found) {
        rep.torsion = Verdict::inconclusive;
        rep.notes.push_back("torsion probe: an element F with h^" + std::to_string(orders[k]) +
                            " F in the ideal span was not certified in the span");
        break;
      }
    }
  }

  // (iii) per-degree dimensions of the truncated quotient
  rep.measured_per_degree.assign(d + 1, 0);
  if (S.structure().degree() >= 3) {
    rep.counts = Verdict::inconclusive;
    rep.notes.push_back("degree counts need a filtered product (p <= 2)");
  } else {
    EchelonBasis E;
    std::size_t prev_dim = 0, expected_cum = 0;
    const auto mults = I.multipliers(d);
    for (std::size_t k = 0; k <= d; ++k) {
      for (const auto& [i, m] : mults) {
        if (m.degree() + static_cast<std::size_t>(R.lifting.generators[i].degree()) != k) continue;
        const HSeries& F = I.multiple(Side::left, i, m);
        if (F.degree() > static_cast<int>(k)) {
          rep.counts = Verdict::inconclusive;
          rep.notes.push_back("ideal multiple exceeds its filtration degree");
        }
        for (std::size_t s = 0; s < N; ++s) E.insert(I.coords().flatten(F.shifted(s), N), 0);
      }
      const std::size_t total = N * monomials_up_to(n, k).size();
      const std::size_t dim = total - E.rank();
      expected_cum += N * set.basis_per_degree[k];
      rep.measured_per_degree[k] = (dim - prev_dim) / N;
      prev_dim = dim;
      if (dim < expected_cum) {
        rep.counts = Verdict::fail;
      } else if (dim > expected_cum && rep.counts == Verdict::pass) {
        rep.counts = Verdict::inconclusive;
        rep.notes.push_back("quotient dimension at degree " + std::to_string(k) +
                            " exceeds the standard monomial count");
      }
    }
  }
  return rep;
}

}  // namespace dq
