#include "dq/star.hpp"

#include <map>
#include <sstream>

#include "dq/errors.hpp"
#include "dq/gutt.hpp"
#include "dq/verify.hpp"

namespace dq {

std::string engine_name(Engine e) {
  switch (e) {
    case Engine::moyal: return "moyal";
    case Engine::gutt: return "gutt";
    case Engine::custom: return "custom";
    case Engine::tabulated: return "tabulated";
  }
  return "?";
}

Engine parse_engine(const std::string& name) {
  if (name == "moyal") return Engine::moyal;
  if (name == "gutt") return Engine::gutt;
  if (name == "custom") return Engine::custom;
  if (name == "tabulated") return Engine::tabulated;
  throw Error("unknown engine '" + name + "' (expected moyal, gutt, custom or tabulated)");
}

namespace {

void check_trunc(std::size_t N) {
  if (N == 0) throw TruncationError("truncation order N must be at least 1");
}

// Coefficients of (h/2)^k / k! * Pi^k(f (x) g), k < N, for constant alpha.
HSeries moyal_product(const PoissonStructure& P, const Poly& f, const Poly& g, std::size_t N) {
  const std::size_t n = P.dimension();
  HSeries out(n, N);
  std::map<std::pair<Monomial, Monomial>, Rational> T;
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) T[{a, b}] += ca * cb;
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> alpha;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!P.alpha(i, j).is_zero()) alpha.emplace_back(i, j, P.alpha(i, j).constant());
  Rational scale = 1;
  for (std::size_t k = 0; k < N && !T.empty(); ++k) {
    for (const auto& [ab, c] : T) {
      if (c == 0) continue;
      out[k].add_term(ab.first * ab.second, c * scale);
    }
    if (k + 1 == N) break;
    std::map<std::pair<Monomial, Monomial>, Rational> next;
    for (const auto& [ab, c] : T) {
      if (c == 0) continue;
      const auto& [a, b] = ab;
      for (const auto& [i, j, v] : alpha) {
        if (a[i] == 0 || b[j] == 0) continue;
        Monomial a2 = a / Monomial::variable(n, i);
        Monomial b2 = b / Monomial::variable(n, j);
        next[{a2, b2}] += c * v * a[i] * b[j];
      }
    }
    T = std::move(next);
    scale = scale / 2 / Rational(k + 1);
  }
  return out;
}

}  // namespace

StarProductSpec StarProductSpec::moyal(PoissonStructure P, std::size_t N) {
  check_trunc(N);
  if (!P.is_constant())
    throw PreconditionError("Moyal engine requires a constant Poisson structure (p = 0), got p = " +
                            std::to_string(P.degree()));
  StarProductSpec S;
  S.engine_ = Engine::moyal;
  S.P_ = std::move(P);
  S.N_ = N;
  return S;
}

StarProductSpec StarProductSpec::gutt(PoissonStructure P, std::size_t N) {
  check_trunc(N);
  if (!P.is_linear())
    throw PreconditionError("Gutt engine requires a linear Poisson structure (p = 1)");
  if (!check_jacobi(P).pass)
    throw PreconditionError("Gutt engine requires the Jacobi identity (structure constants of a Lie algebra)");
  StarProductSpec S;
  S.engine_ = Engine::gutt;
  S.gutt_ = std::make_shared<GuttAlgebra>(P.structure_constants());
  S.P_ = std::move(P);
  S.N_ = N;
  return S;
}

StarProductSpec StarProductSpec::make_custom(PoissonStructure P, std::size_t N,
                                             const std::vector<BidiffOperator>& ops,
                                             bool tabulated) {
  check_trunc(N);
  StarProductSpec S;
  S.engine_ = tabulated ? Engine::tabulated : Engine::custom;
  const std::size_t n = P.dimension();
  S.ops_.resize(N > 1 ? N - 1 : 0);
  for (std::size_t k = 0; k < S.ops_.size(); ++k) S.ops_[k].order = static_cast<unsigned>(k + 1);
  if (!tabulated && N > 1) {
    // built-in B_1 = 1/2 alpha^{ij} d_i (x) d_j
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!P.alpha(i, j).is_zero())
          S.ops_[0].terms.push_back({P.alpha(i, j) * Rational(1, 2), Monomial::variable(n, i),
                                     Monomial::variable(n, j)});
  }
  for (const auto& op : ops) {
    if (op.order == 0) throw PreconditionError("bidifferential operator order must be positive");
    if (!tabulated && op.order < 2)
      throw PreconditionError("B_1 is fixed by the Poisson structure; supply orders >= 2 only");
    for (const auto& t : op.terms)
      if (t.coeff.dimension() != n || t.left.dimension() != n || t.right.dimension() != n)
        throw DimensionError("bidifferential term has wrong dimension");
    if (op.order >= N) continue;  // vanishes mod h^N
    auto& dst = S.ops_[op.order - 1].terms;
    for (const auto& t : op.terms)
      if (!t.coeff.is_zero()) dst.push_back(t);
  }
  S.P_ = std::move(P);
  S.N_ = N;
  return S;
}

StarProductSpec StarProductSpec::custom(PoissonStructure P, std::size_t N,
                                        const std::vector<BidiffOperator>& higher,
                                        std::size_t verify_degree) {
  StarProductSpec S = make_custom(std::move(P), N, higher, false);
  auto rep = verify_associativity(S, verify_degree);
  if (!rep.pass) {
    const auto& ce = rep.counterexamples.front();
    std::ostringstream msg;
    msg << "custom star product is not associative mod h^" << N << ": defect at order h^"
        << ce.order << " on monomial triple of degrees (" << ce.f.degree() << ","
        << ce.g.degree() << "," << ce.k.degree() << ")";
    throw PreconditionError(msg.str());
  }
  return S;
}

StarProductSpec StarProductSpec::custom_unverified(PoissonStructure P, std::size_t N,
                                                   const std::vector<BidiffOperator>& higher) {
  return make_custom(std::move(P), N, higher, false);
}

StarProductSpec StarProductSpec::tabulated(PoissonStructure P, std::size_t N,
                                           const std::vector<BidiffOperator>& all) {
  return make_custom(std::move(P), N, all, true);
}

StarProductSpec StarProductSpec::with_trunc(std::size_t N) const {
  check_trunc(N);
  StarProductSpec S = *this;
  S.N_ = N;
  if (engine_ == Engine::custom || engine_ == Engine::tabulated) {
    if (N < N_) {
      S.ops_.resize(N - 1);
    } else if (N > N_) {
      S.ops_.resize(N - 1);
      for (std::size_t k = N_ > 0 ? N_ - 1 : 0; k < N - 1; ++k) S.ops_[k].order = static_cast<unsigned>(k + 1);
      if (N_ == 1 && engine_ == Engine::custom) {
        // B_1 was not materialized at N = 1
        return make_custom(P_, N, {}, false);
      }
    }
  }
  return S;
}

HSeries StarProductSpec::product(const Poly& f, const Poly& g) const {
  const std::size_t n = dimension();
  if (f.dimension() != n || g.dimension() != n) throw DimensionError("star: dimension mismatch");
  switch (engine_) {
    case Engine::moyal: return moyal_product(P_, f, g, N_);
    case Engine::gutt: return gutt_->star(f, g, N_);
    case Engine::custom:
    case Engine::tabulated: {
      HSeries out(n, N_);
      out[0] = f * g;
      for (std::size_t k = 1; k < N_; ++k) out[k] = ops_[k - 1].apply(f, g);
      return out;
    }
  }
  throw Error("unknown engine");
}

int StarProductSpec::degree_growth() const {
  switch (engine_) {
    case Engine::moyal: return -2;
    case Engine::gutt: return -1;
    default: break;
  }
  // deg B_k(f,g) <= deg f + deg g + max over terms (deg coeff - |L| - |R|), per order k
  int growth = P_.degree() - 2;
  for (const auto& op : ops_) {
    for (const auto& t : op.terms) {
      const int extra = t.coeff.degree() - static_cast<int>(t.left.degree() + t.right.degree());
      const int per = (extra + static_cast<int>(op.order) - 1) / static_cast<int>(op.order);
      growth = std::max(growth, extra >= 0 ? per : extra / static_cast<int>(op.order));
    }
  }
  return growth;
}

HSeries star(const StarProductSpec& S, const HSeries& F, const HSeries& G) {
  const std::size_t N = S.trunc();
  if (F.trunc() != N || G.trunc() != N)
    throw TruncationError("star: operands must have truncation order " + std::to_string(N));
  HSeries out(S.dimension(), N);
  for (std::size_t a = 0; a < N; ++a) {
    if (F[a].is_zero()) continue;
    for (std::size_t b = 0; a + b < N; ++b) {
      if (G[b].is_zero()) continue;
      out += S.product(F[a], G[b]).shifted(a + b);
    }
  }
  return out;
}

HSeries star(const StarProductSpec& S, const Poly& f, const Poly& g) { return S.product(f, g); }

HSeries moyal_star(const PoissonStructure& alpha, const Poly& f, const Poly& g, std::size_t N) {
  if (!alpha.is_constant()) throw PreconditionError("moyal_star: nonconstant Poisson structure");
  check_trunc(N);
  return moyal_product(alpha, f, g, N);
}

HSeries gutt_star(const PoissonStructure& P, const Poly& f, const Poly& g, std::size_t N) {
  return StarProductSpec::gutt(P, N).product(f, g);
}

}  // namespace dq
