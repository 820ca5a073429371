#include "dq/linear_algebra.hpp"

#include "dq/errors.hpp"

namespace dq {

void axpy(SparseVec& acc, const Rational& c, const SparseVec& v) {
  if (c == 0) return;
  for (const auto& [k, x] : v) {
    auto [it, inserted] = acc.try_emplace(k, c * x);
    if (!inserted) {
      it->second += c * x;
      if (it->second == 0) acc.erase(it);
    }
  }
}

EchelonBasis::Reduction EchelonBasis::reduce(SparseVec v) const {
  Reduction r;
  auto it = v.begin();
  while (it != v.end()) {
    const std::size_t k = it->first;
    auto row = rows_.find(k);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const Rational c = it->second;
    axpy(v, -c, row->second.vec);
    if (track_) axpy(r.combo, c, row->second.combo);
    it = v.upper_bound(k);
  }
  r.residual = std::move(v);
  return r;
}

bool EchelonBasis::insert(const SparseVec& v, std::size_t id) {
  auto red = reduce(v);
  if (red.residual.empty()) return false;
  Row row;
  row.vec = std::move(red.residual);
  if (track_) {
    row.combo.emplace(id, Rational(1));
    axpy(row.combo, Rational(-1), red.combo);
  }
  const auto pivot = row.vec.begin()->first;
  const Rational inv = 1 / row.vec.begin()->second;
  for (auto& [k, x] : row.vec) x *= inv;
  for (auto& [k, x] : row.combo) x *= inv;
  rows_.emplace(pivot, std::move(row));
  return true;
}

std::optional<SparseVec> EchelonBasis::solve(const SparseVec& v) const {
  if (!track_) throw Error("EchelonBasis::solve requires combination tracking");
  auto red = reduce(v);
  if (!red.residual.empty()) return std::nullopt;
  return red.combo;
}

}  // namespace dq
