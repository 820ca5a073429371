#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dq/poly.hpp"

namespace dq {

/// Reduced Groebner basis together with the cofactors expressing every basis
/// element in terms of the original generators.
struct GroebnerBasis {
  std::vector<Poly> generators;  // monic, sorted by ascending leading monomial
  std::vector<Monomial> leading;
  MonomialOrder order;
  std::vector<Poly> original;
  /// generators[k] = sum_i cofactors[k][i] * original[i]
  std::vector<std::vector<Poly>> cofactors;
  /// All inputs were zero; the basis is empty.
  bool zero_ideal = false;

  std::size_t dimension() const;
  bool is_unit() const;
};

GroebnerBasis buchberger(const std::vector<Poly>& gens, const MonomialOrder& order = {});

/// Normal form of f: no term divisible by a leading monomial of GB.
Poly reduce(const Poly& f, const GroebnerBasis& GB);

/// f = sum_k quotients[k] * GB.generators[k] + remainder.
struct Division {
  Poly remainder;
  std::vector<Poly> quotients;
};
Division divide(const Poly& f, const GroebnerBasis& GB);

/// Cofactors c_i with f - reduce(f) = sum_i c_i * GB.original[i].
struct OriginalDivision {
  Poly remainder;
  std::vector<Poly> cofactors;
};
OriginalDivision divide_by_original(const Poly& f, const GroebnerBasis& GB);

/// S-polynomial of two polynomials under `order`.
Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order);

/// Standard monomials (set B) and their complement (set P) up to a degree
/// bound, both in graded-lex multi-index order.
struct StandardMonomialSet {
  std::size_t dimension = 0;
  std::size_t degree_bound = 0;
  std::vector<Monomial> basis;
  std::vector<Monomial> complement;
  /// basis_per_degree[k] = number of standard monomials of degree exactly k.
  std::vector<std::size_t> basis_per_degree;
  std::vector<std::size_t> complement_per_degree;

  bool in_basis(const Monomial& m) const;
};

StandardMonomialSet standard_monomials(const GroebnerBasis& GB, std::size_t degree_bound);

/// Maximal-rank check of the Jacobian on V(gens): passes iff
/// 1 is in (gens) + (m x m minors of d p_i / d x_j).
struct RankCheck {
  bool pass = false;
  std::vector<Poly> minors;
  /// Groebner basis of gens + minors (the witness ideal on failure).
  GroebnerBasis witness;
};
RankCheck jacobian_rank_check(const std::vector<Poly>& gens, const MonomialOrder& order = {});

/// Determinant of a square matrix of polynomials (Laplace expansion).
Poly determinant(const std::vector<std::vector<Poly>>& M);

/// Antisymmetric b with a_alpha = sum_beta b_{alpha beta} p_beta.
struct SyzygyResult {
  /// Empty when no solution was found within the bound.
  std::optional<std::vector<std::vector<Poly>>> b;
  /// Largest degree tried for the entries of b.
  std::size_t degree_used = 0;
};
SyzygyResult antisymmetric_syzygy(const std::vector<Poly>& a, const std::vector<Poly>& p,
                                  std::size_t degree_bound, const MonomialOrder& order = {});

}  // namespace dq
