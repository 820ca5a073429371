#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dq/monomial.hpp"

namespace dq {

using Rational = mpq_class;

/// Exact sparse multivariate polynomial over Q in a fixed number of variables.
/// Zero coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Poly() = default;
  explicit Poly(std::size_t n) : n_(n) {}
  Poly(std::size_t n, const Rational& constant);

  static Poly variable(std::size_t n, std::size_t i);
  static Poly term(const Monomial& m, const Rational& c);

  std::size_t dimension() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  /// Constant term.
  Rational constant() const;

  void add_term(const Monomial& m, const Rational& c);

  /// Leading monomial/coefficient under `order`; the polynomial must be nonzero.
  std::pair<Monomial, Rational> leading_term(const MonomialOrder& order) const;
  /// Terms sorted descending under `order`.
  std::vector<std::pair<Monomial, Rational>> sorted_terms(const MonomialOrder& order) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);
  /// Adds c * m * other without materializing the product.
  void add_scaled(const Poly& other, const Rational& c, const Monomial& m);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Keeps only terms of total degree <= d.
  Poly truncate_degree(int d) const;
  /// Homogeneous component of degree k.
  Poly homogeneous_part(int k) const;

 private:
  void check_dim(const Poly& other) const;

  std::size_t n_ = 0;
  TermMap terms_;
};

Poly poly_mul(const Poly& f, const Poly& g);
/// Formal partial derivative with respect to x_i (0-based).
Poly partial_derivative(const Poly& f, std::size_t i);
/// Mixed partial derivative d^L f, L given as an exponent vector.
Poly partial_derivative(const Poly& f, const Monomial& L);
Poly pow(const Poly& f, unsigned k);

/// Falling factorial e (e-1) ... (e-k+1), zero when k > e.
Rational falling_factorial(std::uint32_t e, std::uint32_t k);
Rational factorial(unsigned k);

}  // namespace dq
