#pragma once

#include <cstddef>
#include <vector>

#include "dq/poly.hpp"

namespace dq {

/// Element of Q[h]/(h^N): N rational coefficients of 1, h, ..., h^{N-1}.
class HScalar {
 public:
  HScalar() = default;
  explicit HScalar(std::size_t N) : c_(N) {}
  HScalar(std::size_t N, const Rational& constant);

  /// q * h^k (zero when k >= N).
  static HScalar monomial(std::size_t N, std::size_t k, const Rational& q);

  std::size_t trunc() const { return c_.size(); }
  const Rational& operator[](std::size_t k) const { return c_[k]; }
  Rational& operator[](std::size_t k) { return c_[k]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  /// Lowest k with a nonzero h^k coefficient; -1 for zero.
  int valuation() const;

  HScalar& operator+=(const HScalar& o);
  HScalar& operator-=(const HScalar& o);
  HScalar& operator*=(const Rational& q);
  friend HScalar operator+(HScalar a, const HScalar& b) { return a += b; }
  friend HScalar operator-(HScalar a, const HScalar& b) { return a -= b; }
  friend HScalar operator*(HScalar a, const Rational& q) { return a *= q; }
  friend HScalar operator*(const HScalar& a, const HScalar& b);
  HScalar operator-() const;
  /// Multiply by h^k, truncating.
  HScalar shifted(std::size_t k) const;
  /// Value at h = 0.
  const Rational& classical() const { return c_.front(); }

  friend bool operator==(const HScalar&, const HScalar&) = default;

 private:
  void check(const HScalar& o) const;
  std::vector<Rational> c_;
};

/// Element of Q[x_1..x_n][h]/(h^N): N polynomial coefficients.
class HSeries {
 public:
  HSeries() = default;
  HSeries(std::size_t n, std::size_t N);
  static HSeries from_poly(const Poly& f, std::size_t N);
  static HSeries constant(std::size_t n, std::size_t N, const Rational& c);

  std::size_t dimension() const { return n_; }
  std::size_t trunc() const { return c_.size(); }
  const Poly& operator[](std::size_t k) const { return c_[k]; }
  Poly& operator[](std::size_t k) { return c_[k]; }
  const std::vector<Poly>& coeffs() const { return c_; }

  bool is_zero() const;
  int valuation() const;
  /// Max total x-degree over all h-coefficients; -1 for zero.
  int degree() const;
  /// Same element seen in Q[x][h]/(h^M), M <= N.
  HSeries truncate(std::size_t M) const;
  /// Multiply by h^k.
  HSeries shifted(std::size_t k) const;
  /// Divide by h^k; requires valuation >= k. The result keeps truncation N
  /// with the top k coefficients set to zero (they are undetermined).
  HSeries unshifted(std::size_t k) const;

  HSeries& operator+=(const HSeries& o);
  HSeries& operator-=(const HSeries& o);
  HSeries& operator*=(const Rational& q);
  HSeries& operator*=(const HScalar& s);
  friend HSeries operator+(HSeries a, const HSeries& b) { return a += b; }
  friend HSeries operator-(HSeries a, const HSeries& b) { return a -= b; }
  friend HSeries operator*(HSeries a, const Rational& q) { return a *= q; }
  friend HSeries operator*(HSeries a, const HScalar& s) { return a *= s; }
  HSeries operator-() const;

  friend bool operator==(const HSeries&, const HSeries&) = default;

 private:
  void check(const HSeries& o) const;
  std::size_t n_ = 0;
  std::vector<Poly> c_;
};

/// Cauchy product truncated at h^N; both operands must share N and n.
HSeries hseries_mul(const HSeries& F, const HSeries& G);

}  // namespace dq
