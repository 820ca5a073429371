#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "dq/hseries.hpp"
#include "dq/poisson.hpp"

namespace dq {

/// coeff * d^deriv
struct DiffTerm {
  Poly coeff;
  Monomial deriv;
};

/// Linear differential operator with polynomial coefficients.
struct DiffOperator {
  std::vector<DiffTerm> terms;

  Poly apply(const Poly& f) const;
  /// Highest derivative order among the terms (0 for the empty operator).
  unsigned order() const;
};

/// coeff * (d^left f) * (d^right g)
struct BidiffTerm {
  Poly coeff;
  Monomial left;
  Monomial right;
};

/// Bidifferential operator B_k(f, g) = sum coeff * d^L f * d^R g.
struct BidiffOperator {
  unsigned order = 1;
  std::vector<BidiffTerm> terms;

  Poly apply(const Poly& f, const Poly& g) const;
  /// Largest |L| or |R| over the terms.
  unsigned max_derivative_order() const;
};

/// B_1(f, g) = 1/2 sum alpha^{ij} d_i f d_j g.
Poly first_order_bidiff(const PoissonStructure& P, const Poly& f, const Poly& g);

enum class Engine { moyal, gutt, custom, tabulated };
std::string engine_name(Engine e);
Engine parse_engine(const std::string& name);

class GuttAlgebra;

/// A star product truncated at h^N together with the data its engine needs.
class StarProductSpec {
 public:
  StarProductSpec() = default;

  /// Constant structure (p = 0).
  static StarProductSpec moyal(PoissonStructure P, std::size_t N);
  /// Linear structure satisfying Jacobi; computed in the enveloping algebra.
  static StarProductSpec gutt(PoissonStructure P, std::size_t N);
  /// B_1 from alpha, higher corrections (order >= 2) supplied. Associativity
  /// is verified on monomial triples up to `verify_degree`; PreconditionError
  /// on failure.
  static StarProductSpec custom(PoissonStructure P, std::size_t N,
                                const std::vector<BidiffOperator>& higher,
                                std::size_t verify_degree = 3);
  /// Same without the associativity gate; for diagnostics only.
  static StarProductSpec custom_unverified(PoissonStructure P, std::size_t N,
                                           const std::vector<BidiffOperator>& higher);
  /// Every B_1..B_{N-1} given explicitly (B_1 included).
  static StarProductSpec tabulated(PoissonStructure P, std::size_t N,
                                   const std::vector<BidiffOperator>& all);

  Engine engine() const { return engine_; }
  const PoissonStructure& structure() const { return P_; }
  std::size_t trunc() const { return N_; }
  std::size_t dimension() const { return P_.dimension(); }
  /// ops[k-1] = B_k for custom and tabulated engines; empty otherwise.
  const std::vector<BidiffOperator>& operators() const { return ops_; }

  /// Same product at another truncation order.
  StarProductSpec with_trunc(std::size_t N) const;

  /// f * g for h-free f and g, all orders below N.
  HSeries product(const Poly& f, const Poly& g) const;
  /// Upper bound on the extra commutative degree produced at order h^k:
  /// deg B_k(f,g) <= deg f + deg g + growth * k. Negative values mean degrees drop.
  int degree_growth() const;

 private:
  static StarProductSpec make_custom(PoissonStructure P, std::size_t N,
                                     const std::vector<BidiffOperator>& ops, bool tabulated);

  Engine engine_ = Engine::moyal;
  PoissonStructure P_;
  std::size_t N_ = 1;
  std::vector<BidiffOperator> ops_;
  std::shared_ptr<GuttAlgebra> gutt_;
};

/// Bilinear over Q[h]/(h^N).
HSeries star(const StarProductSpec& S, const HSeries& F, const HSeries& G);
HSeries star(const StarProductSpec& S, const Poly& f, const Poly& g);

HSeries moyal_star(const PoissonStructure& alpha, const Poly& f, const Poly& g, std::size_t N);
HSeries gutt_star(const PoissonStructure& P, const Poly& f, const Poly& g, std::size_t N);

}  // namespace dq
