#pragma once

#include <cstddef>
#include <vector>

#include "dq/parallel.hpp"
#include "dq/star.hpp"

namespace dq {

/// At most this many counterexamples are kept in a report (the total is
/// still counted). Kept ones are the first in sweep order.
inline constexpr std::size_t kMaxCounterexamples = 16;

struct TripleFailure {
  Monomial f, g, k;
  /// Lowest h-order where (f*g)*k and f*(g*k) differ.
  std::size_t order = 0;
  HSeries defect;
};

struct AssociativityReport {
  bool pass = true;
  std::size_t degree_bound = 0;
  std::size_t checked = 0;
  std::size_t failures_total = 0;
  std::vector<TripleFailure> counterexamples;
};

struct PairFailure {
  Monomial f, g;
  /// h-order of the offending coefficient.
  std::size_t order = 0;
  /// What was observed at that order (commutator coefficient, B_m value, ...).
  Poly actual;
  /// Expected value (commutator checks only).
  Poly expected;
  int degree = -1;
  int limit = 0;
};

struct PairReport {
  bool pass = true;
  std::size_t degree_bound = 0;
  std::size_t checked = 0;
  std::size_t failures_total = 0;
  std::vector<PairFailure> violations;
};

/// Monomial tuples swept by the verifiers: every (m_1, ..., m_r) with
/// sum deg m_i <= d, ordered by total degree, then by the graded-lex
/// position of each entry.
std::vector<std::vector<Monomial>> monomial_tuples(std::size_t n, std::size_t arity, std::size_t d);

/// (x_a * x_b) * x_c == x_a * (x_b * x_c) mod h^N on all monomial triples.
AssociativityReport verify_associativity(const StarProductSpec& S, std::size_t d,
                                         const Exec& ex = {});
/// f*g - g*f == h {f,g} mod h^2 on all monomial pairs.
PairReport verify_commutator_bracket(const StarProductSpec& S, std::size_t d, const Exec& ex = {});
/// deg B_m(f,g) <= deg f + deg g + (p - 2) m for 1 <= m < N.
PairReport verify_degree_bound(const StarProductSpec& S, std::size_t d, const Exec& ex = {});
/// deg (h^k coefficient of f*g) <= deg f + deg g for all k < N.
PairReport check_semiformal_filtration(const StarProductSpec& S, std::size_t d,
                                       const Exec& ex = {});

}  // namespace dq
