#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace dq {

/// Commutative monomial x_1^{e_1} ... x_n^{e_n}, stored as its exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial variable(std::size_t n, std::size_t i);

  std::size_t dimension() const { return exps_.size(); }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; `other` must divide *this.
  Monomial operator/(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  /// Multiply by x_i^k in place.
  Monomial& raise(std::size_t i, std::uint32_t k = 1);

  // Plain lexicographic comparison on the exponent vector; used as the
  // storage key order, never as a term order.
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

/// Non-decreasing sequence of 0-based variable indices (i1 <= ... <= im).
/// Ordered graded-lexicographically: shorter first, then lexicographic.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<std::uint32_t> idx);

  static MultiIndex from_monomial(const Monomial& m);
  Monomial to_monomial(std::size_t n) const;

  std::size_t size() const { return idx_.size(); }
  bool empty() const { return idx_.empty(); }
  std::uint32_t operator[](std::size_t k) const { return idx_[k]; }
  const std::vector<std::uint32_t>& indices() const { return idx_; }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

 private:
  std::vector<std::uint32_t> idx_;
};

/// Arbitrary sequence of 0-based variable indices: a word in the free algebra.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::uint32_t> letters) : letters_(std::move(letters)) {}
  explicit Word(const MultiIndex& I) : letters_(I.indices()) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::uint32_t operator[](std::size_t k) const { return letters_[k]; }
  const std::vector<std::uint32_t>& letters() const { return letters_; }
  bool is_ordered() const;
  MultiIndex sorted() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<std::uint32_t> letters_;
};

/// All multi-indices of length exactly k over n variables, lexicographic.
std::vector<MultiIndex> multi_indices_of_degree(std::size_t n, std::size_t k);
/// All multi-indices of length <= d, graded-lexicographic.
std::vector<MultiIndex> multi_indices_up_to(std::size_t n, std::size_t d);
/// Monomials of total degree <= d in the same graded-lex order.
std::vector<Monomial> monomials_up_to(std::size_t n, std::size_t d);

enum class OrderKind { lex, grlex, grevlex };

/// Term order on monomials. `priority[0]` is the most significant variable;
/// an empty priority means the identity x_1 > x_2 > ... > x_n.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(OrderKind kind) : kind_(kind) {}
  MonomialOrder(OrderKind kind, std::vector<std::size_t> priority);

  static MonomialOrder parse(std::string_view name);

  OrderKind kind() const { return kind_; }
  std::string name() const;
  const std::vector<std::size_t>& priority() const { return priority_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  std::size_t var(std::size_t rank) const { return priority_.empty() ? rank : priority_[rank]; }

  OrderKind kind_ = OrderKind::grevlex;
  std::vector<std::size_t> priority_;
};

}  // namespace dq

template <>
struct std::hash<dq::Monomial> {
  std::size_t operator()(const dq::Monomial& m) const noexcept {
    std::size_t seed = m.dimension();
    for (auto e : m.exponents()) seed ^= e + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }
};
