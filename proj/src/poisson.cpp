#include "dq/poisson.hpp"

#include "dq/errors.hpp"

namespace dq {

namespace {

void check_index(std::size_t n, std::size_t i) {
  if (i >= n) throw DimensionError("variable index " + std::to_string(i + 1) + " out of range 1.." +
                                   std::to_string(n));
}

}  // namespace

PoissonStructure PoissonStructure::from_upper(
    std::size_t n, const std::map<std::pair<std::size_t, std::size_t>, Poly>& upper) {
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n, Poly(n)));
  for (const auto& [ij, f] : upper) {
    const auto [i, j] = ij;
    check_index(n, i);
    check_index(n, j);
    if (i >= j) throw PreconditionError("Poisson entries must be given for i < j");
    if (f.dimension() != n) throw DimensionError("Poisson entry has wrong dimension");
    a[i][j] = f;
    a[j][i] = -f;
  }
  return from_matrix(std::move(a));
}

PoissonStructure PoissonStructure::from_matrix(std::vector<std::vector<Poly>> alpha) {
  PoissonStructure P;
  P.n_ = alpha.size();
  for (std::size_t i = 0; i < P.n_; ++i) {
    if (alpha[i].size() != P.n_) throw DimensionError("Poisson matrix is not square");
    for (std::size_t j = 0; j < P.n_; ++j) {
      if (alpha[i][j].dimension() != P.n_) throw DimensionError("Poisson entry has wrong dimension");
      if (alpha[i][j] != -alpha[j][i])
        throw PreconditionError("Poisson matrix is not antisymmetric at (" + std::to_string(i + 1) +
                                "," + std::to_string(j + 1) + ")");
      P.p_ = std::max(P.p_, alpha[i][j].degree());
    }
  }
  P.alpha_ = std::move(alpha);
  return P;
}

PoissonStructure PoissonStructure::zero(std::size_t n) {
  return from_matrix(std::vector<std::vector<Poly>>(n, std::vector<Poly>(n, Poly(n))));
}

bool PoissonStructure::is_zero() const {
  for (const auto& row : alpha_)
    for (const auto& f : row)
      if (!f.is_zero()) return false;
  return true;
}

bool PoissonStructure::is_constant() const {
  for (const auto& row : alpha_)
    for (const auto& f : row)
      if (f.degree() > 0) return false;
  return true;
}

bool PoissonStructure::is_linear() const {
  for (const auto& row : alpha_)
    for (const auto& f : row)
      for (const auto& [m, c] : f.terms())
        if (m.degree() != 1) return false;
  return true;
}

std::vector<std::vector<std::vector<Rational>>> PoissonStructure::structure_constants() const {
  if (!is_linear()) throw PreconditionError("Poisson structure is not linear");
  std::vector<std::vector<std::vector<Rational>>> c(
      n_, std::vector<std::vector<Rational>>(n_, std::vector<Rational>(n_)));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        c[i][j][k] = alpha_[i][j].coefficient(Monomial::variable(n_, k));
  return c;
}

Poly bracket(const PoissonStructure& P, const Poly& f, const Poly& g) {
  const std::size_t n = P.dimension();
  if (f.dimension() != n || g.dimension() != n)
    throw DimensionError("bracket: operand dimension does not match the Poisson structure");
  std::vector<Poly> df(n), dg(n);
  for (std::size_t i = 0; i < n; ++i) {
    df[i] = partial_derivative(f, i);
    dg[i] = partial_derivative(g, i);
  }
  Poly out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (df[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (dg[j].is_zero() || P.alpha(i, j).is_zero()) continue;
      out += P.alpha(i, j) * df[i] * dg[j];
    }
  }
  return out;
}

Poly jacobiator(const PoissonStructure& P, const Poly& f, const Poly& g, const Poly& k) {
  return bracket(P, f, bracket(P, g, k)) + bracket(P, g, bracket(P, k, f)) +
         bracket(P, k, bracket(P, f, g));
}

JacobiResult check_jacobi(const PoissonStructure& P) {
  const std::size_t n = P.dimension();
  JacobiResult r;
  r.jacobiator = Poly(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Poly J = jacobiator(P, Poly::variable(n, i), Poly::variable(n, j), Poly::variable(n, k));
        if (J.is_zero()) continue;
        if (r.pass) {
          r.pass = false;
          r.triple = {i, j, k};
          r.jacobiator = J;
        }
        r.failures.push_back({{i, j, k}, std::move(J)});
      }
  return r;
}

bool is_casimir(const PoissonStructure& P, const Poly& f) {
  for (std::size_t j = 0; j < P.dimension(); ++j)
    if (!bracket(P, f, Poly::variable(P.dimension(), j)).is_zero()) return false;
  return true;
}

PoissonIdealResult check_poisson_ideal(const PoissonStructure& P, const std::vector<Poly>& gens,
                                       const GroebnerBasis& GB) {
  const std::size_t n = P.dimension();
  for (const auto& g : gens)
    if (!reduce(g, GB).is_zero())
      throw PreconditionError("Groebner basis does not contain the ideal generators");
  PoissonIdealResult r;
  r.remainder = Poly(n);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Poly rem = reduce(bracket(P, gens[i], Poly::variable(n, j)), GB);
      if (rem.is_zero()) continue;
      r.pass = false;
      r.generator = i;
      r.variable = j;
      r.remainder = std::move(rem);
      return r;
    }
  return r;
}

bool is_poisson_ideal(const PoissonStructure& P, const std::vector<Poly>& gens,
                      const GroebnerBasis& GB) {
  return check_poisson_ideal(P, gens, GB).pass;
}

}  // namespace dq
