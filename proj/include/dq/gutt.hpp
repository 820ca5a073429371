#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "dq/hseries.hpp"
#include "dq/monomial.hpp"
#include "dq/poly.hpp"

namespace dq {

/// Enveloping algebra of a Lie algebra with [X_i, X_j] = h c_{ij}^k X_k.
/// Elements are PBW-ordered: a Poly in n + 1 variables whose monomial
/// x^a h^s stands for h^s X_1^{a_1} ... X_n^{a_n}. All arithmetic is exact
/// in h. Internal caches are guarded, so one instance can be shared by threads.
class GuttAlgebra {
 public:
  using Constants = std::vector<std::vector<std::vector<Rational>>>;

  explicit GuttAlgebra(Constants c);

  std::size_t dimension() const { return n_; }

  /// Ordered product of two PBW elements.
  Poly multiply(const Poly& P, const Poly& Q) const;
  /// P * X_j.
  Poly multiply_generator(const Poly& P, std::size_t j) const;
  /// Symmetrization sigma(x^a) of a commutative monomial (n variables).
  Poly symmetrize(const Monomial& a) const;
  /// sigma of a commutative polynomial in n + 1 variables (last one h).
  Poly symmetrize_poly(const Poly& f) const;
  /// sigma^{-1}: PBW element to commutative polynomial in x and h.
  Poly unsymmetrize(const Poly& P) const;

  /// Exact product of commutative monomials, as a polynomial in x and h.
  Poly monomial_star(const Monomial& a, const Monomial& b) const;
  /// f * g truncated at h^N.
  HSeries star(const Poly& f, const Poly& g, std::size_t N) const;

  enum class Direction { leftmost, rightmost };
  /// Normal order of the word X_{w_1} ... X_{w_m} by plain rewriting
  /// X_j X_i -> X_i X_j + h c_{ji}^k X_k, always at the leftmost (or
  /// rightmost) descent. Independent of the cached multiplication.
  Poly rewrite_word(const std::vector<std::uint32_t>& word, Direction dir) const;

 private:
  Monomial pbw_key(const Monomial& a) const;
  const Poly& mul_gen(const Monomial& a, std::size_t j) const;

  std::size_t n_;
  Constants c_;

  mutable std::mutex mu_;
  mutable std::map<std::pair<Monomial, std::size_t>, Poly> gen_cache_;
  mutable std::map<Monomial, Poly> sym_cache_;
  mutable std::map<Monomial, Poly> unsym_cache_;
  mutable std::map<std::pair<Monomial, Monomial>, Poly> star_cache_;
};

}  // namespace dq
