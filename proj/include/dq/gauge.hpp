#pragma once

#include <cstddef>
#include <vector>

#include "dq/star.hpp"

namespace dq {

/// T = Id + sum_{k>=1} h^k T_k acting on Q[x][h]/(h^N).
class GaugeTransform {
 public:
  GaugeTransform() = default;
  /// terms[k-1] = T_k. Throws PreconditionError if a zeroth-order-in-h part
  /// is supplied (T must be Id + O(h)).
  GaugeTransform(std::size_t n, std::size_t N, std::vector<DiffOperator> terms);
  static GaugeTransform identity(std::size_t n, std::size_t N) { return {n, N, {}}; }

  std::size_t dimension() const { return n_; }
  std::size_t trunc() const { return N_; }
  const std::vector<DiffOperator>& terms() const { return T_; }
  /// Highest derivative order appearing in any T_k.
  unsigned order() const;

  HSeries apply(const HSeries& F) const;
  /// T^{-1} F by the Neumann series (T - Id is nilpotent mod h^N).
  HSeries apply_inverse(const HSeries& F) const;

 private:
  std::size_t n_ = 0;
  std::size_t N_ = 1;
  std::vector<DiffOperator> T_;
};

/// f *' g = T(T^{-1} f * T^{-1} g), returned as a tabulated engine whose
/// B'_k are recovered as bidifferential operators from their values on
/// monomial pairs.
StarProductSpec gauge_transform(const StarProductSpec& S, const GaugeTransform& T);

/// Direct evaluation of T(T^{-1} f * T^{-1} g) without tabulation.
HSeries gauge_product(const StarProductSpec& S, const GaugeTransform& T, const Poly& f,
                      const Poly& g);

}  // namespace dq
