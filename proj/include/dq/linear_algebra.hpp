#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "dq/poly.hpp"

namespace dq {

using SparseVec = std::map<std::size_t, Rational>;

/// Adds c * v into acc, dropping entries that cancel.
void axpy(SparseVec& acc, const Rational& c, const SparseVec& v);

/// Incremental row-echelon basis of a subspace of Q^(inf) over sparse
/// vectors. Each stored row has a pivot (its smallest index) with
/// coefficient 1, and rows with larger pivots vanish at smaller pivots.
/// Optionally tracks, for every row, the combination of inserted vectors
/// (by caller id) that produces it, so reductions yield solutions.
class EchelonBasis {
 public:
  struct Row {
    SparseVec vec;
    SparseVec combo;
  };

  struct Reduction {
    SparseVec residual;
    /// v - residual = sum combo[id] * input(id); only meaningful when tracking.
    SparseVec combo;
  };

  explicit EchelonBasis(bool track = false) : track_(track) {}

  /// Inserts v (tagged `id`); returns false when v is already in the span.
  bool insert(const SparseVec& v, std::size_t id);
  Reduction reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).residual.empty(); }
  /// Solution of v = sum x_id * input(id), or nullopt when v is outside.
  std::optional<SparseVec> solve(const SparseVec& v) const;

  std::size_t rank() const { return rows_.size(); }
  const std::map<std::size_t, Row>& rows() const { return rows_; }

 private:
  bool track_;
  std::map<std::size_t, Row> rows_;
};

}  // namespace dq
