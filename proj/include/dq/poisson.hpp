#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dq/groebner.hpp"
#include "dq/poly.hpp"

namespace dq {

/// Polynomial bivector alpha^{ij} on affine n-space, stored as a full
/// antisymmetric matrix.
class PoissonStructure {
 public:
  PoissonStructure() = default;

  /// Entries for i < j (0-based); the lower triangle is filled by antisymmetry.
  static PoissonStructure from_upper(std::size_t n,
                                     const std::map<std::pair<std::size_t, std::size_t>, Poly>& upper);
  /// Full matrix; throws PreconditionError unless antisymmetric with zero diagonal.
  static PoissonStructure from_matrix(std::vector<std::vector<Poly>> alpha);
  static PoissonStructure zero(std::size_t n);

  std::size_t dimension() const { return n_; }
  const Poly& alpha(std::size_t i, std::size_t j) const { return alpha_[i][j]; }
  const std::vector<std::vector<Poly>>& matrix() const { return alpha_; }
  /// p = max deg alpha^{ij}; the zero structure has p = 0.
  int degree() const { return p_; }
  bool is_zero() const;
  /// Every entry is a constant.
  bool is_constant() const;
  /// Every entry is homogeneous linear (c_{ij}^k x_k).
  bool is_linear() const;
  /// c[i][j][k] with alpha^{ij} = sum_k c_{ij}^k x_k; requires is_linear().
  std::vector<std::vector<std::vector<Rational>>> structure_constants() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Poly>> alpha_;
  int p_ = 0;
};

/// {f, g} = sum_{i,j} alpha^{ij} d_i f d_j g.
Poly bracket(const PoissonStructure& P, const Poly& f, const Poly& g);

struct JacobiResult {
  bool pass = true;
  /// First failing coordinate triple (i < j < k, 0-based) and its Jacobiator.
  std::optional<std::array<std::size_t, 3>> triple;
  Poly jacobiator;
  /// Every failing triple, in lexicographic order.
  std::vector<std::pair<std::array<std::size_t, 3>, Poly>> failures;
};
/// Cyclic sum {x_i,{x_j,x_k}} + {x_j,{x_k,x_i}} + {x_k,{x_i,x_j}} for all i<j<k.
JacobiResult check_jacobi(const PoissonStructure& P);
Poly jacobiator(const PoissonStructure& P, const Poly& f, const Poly& g, const Poly& k);

bool is_casimir(const PoissonStructure& P, const Poly& f);

struct PoissonIdealResult {
  bool pass = true;
  /// First (generator index, variable index, reduced bracket) that is not in the ideal.
  std::optional<std::size_t> generator;
  std::optional<std::size_t> variable;
  Poly remainder;
};
/// {p_i, x_j} reduces to zero modulo GB for every generator and variable.
/// Throws PreconditionError when GB does not contain the generators.
PoissonIdealResult check_poisson_ideal(const PoissonStructure& P, const std::vector<Poly>& gens,
                                       const GroebnerBasis& GB);
bool is_poisson_ideal(const PoissonStructure& P, const std::vector<Poly>& gens,
                      const GroebnerBasis& GB);

}  // namespace dq
