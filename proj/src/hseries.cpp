#include "dq/hseries.hpp"

#include <algorithm>

#include "dq/errors.hpp"

namespace dq {

HScalar::HScalar(std::size_t N, const Rational& constant) : c_(N) {
  if (N == 0) throw TruncationError("truncation order must be positive");
  c_[0] = constant;
}

HScalar HScalar::monomial(std::size_t N, std::size_t k, const Rational& q) {
  HScalar s(N);
  if (k < N) s.c_[k] = q;
  return s;
}

bool HScalar::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

int HScalar::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return -1;
}

void HScalar::check(const HScalar& o) const {
  if (c_.size() != o.c_.size())
    throw TruncationError("mixing truncation orders " + std::to_string(c_.size()) + " and " +
                          std::to_string(o.c_.size()));
}

HScalar& HScalar::operator+=(const HScalar& o) {
  check(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

HScalar& HScalar::operator-=(const HScalar& o) {
  check(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

HScalar& HScalar::operator*=(const Rational& q) {
  for (auto& c : c_) c *= q;
  return *this;
}

HScalar operator*(const HScalar& a, const HScalar& b) {
  a.check(b);
  const std::size_t N = a.c_.size();
  HScalar r(N);
  for (std::size_t i = 0; i < N; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < N; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

HScalar HScalar::operator-() const {
  HScalar r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

HScalar HScalar::shifted(std::size_t k) const {
  HScalar r(c_.size());
  for (std::size_t i = 0; i + k < c_.size(); ++i) r.c_[i + k] = c_[i];
  return r;
}

HSeries::HSeries(std::size_t n, std::size_t N) : n_(n), c_(N, Poly(n)) {
  if (N == 0) throw TruncationError("truncation order must be positive");
}

HSeries HSeries::from_poly(const Poly& f, std::size_t N) {
  HSeries s(f.dimension(), N);
  s.c_[0] = f;
  return s;
}

HSeries HSeries::constant(std::size_t n, std::size_t N, const Rational& c) {
  return from_poly(Poly(n, c), N);
}

bool HSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Poly& p) { return p.is_zero(); });
}

int HSeries::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return static_cast<int>(k);
  return -1;
}

int HSeries::degree() const {
  int d = -1;
  for (const auto& p : c_) d = std::max(d, p.degree());
  return d;
}

HSeries HSeries::truncate(std::size_t M) const {
  if (M == 0 || M > c_.size()) throw TruncationError("cannot truncate to a larger order");
  HSeries r(n_, M);
  for (std::size_t k = 0; k < M; ++k) r.c_[k] = c_[k];
  return r;
}

HSeries HSeries::shifted(std::size_t k) const {
  HSeries r(n_, c_.size());
  for (std::size_t i = 0; i + k < c_.size(); ++i) r.c_[i + k] = c_[i];
  return r;
}

HSeries HSeries::unshifted(std::size_t k) const {
  HSeries r(n_, c_.size());
  for (std::size_t i = 0; i < k && i < c_.size(); ++i)
    if (!c_[i].is_zero()) throw Error("series is not divisible by h^" + std::to_string(k));
  for (std::size_t i = k; i < c_.size(); ++i) r.c_[i - k] = c_[i];
  return r;
}

void HSeries::check(const HSeries& o) const {
  if (c_.size() != o.c_.size())
    throw TruncationError("mixing truncation orders " + std::to_string(c_.size()) + " and " +
                          std::to_string(o.c_.size()));
  if (n_ != o.n_) throw DimensionError("series dimension mismatch");
}

HSeries& HSeries::operator+=(const HSeries& o) {
  check(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

HSeries& HSeries::operator-=(const HSeries& o) {
  check(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

HSeries& HSeries::operator*=(const Rational& q) {
  for (auto& p : c_) p *= q;
  return *this;
}

HSeries& HSeries::operator*=(const HScalar& s) {
  if (s.trunc() != c_.size()) throw TruncationError("mixing truncation orders");
  std::vector<Poly> out(c_.size(), Poly(n_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (s[i] == 0) continue;
    for (std::size_t j = 0; i + j < c_.size(); ++j) {
      if (c_[j].is_zero()) continue;
      out[i + j] += c_[j] * s[i];
    }
  }
  c_ = std::move(out);
  return *this;
}

HSeries HSeries::operator-() const {
  HSeries r = *this;
  for (auto& p : r.c_) p = -p;
  return r;
}

HSeries hseries_mul(const HSeries& F, const HSeries& G) {
  if (F.trunc() != G.trunc())
    throw TruncationError("hseries_mul: mismatched truncation orders");
  if (F.dimension() != G.dimension()) throw DimensionError("hseries_mul: dimension mismatch");
  const std::size_t N = F.trunc();
  HSeries R(F.dimension(), N);
  for (std::size_t i = 0; i < N; ++i) {
    if (F[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < N; ++j) {
      if (G[j].is_zero()) continue;
      R[i + j] += F[i] * G[j];
    }
  }
  return R;
}

}  // namespace dq
