#include "dq/poly.hpp"

#include <algorithm>

#include "dq/errors.hpp"

namespace dq {

Poly::Poly(std::size_t n, const Rational& constant) : n_(n) {
  if (constant != 0) terms_.emplace(Monomial(n), constant);
}

Poly Poly::variable(std::size_t n, std::size_t i) {
  Poly p(n);
  p.terms_.emplace(Monomial::variable(n, i), Rational(1));
  return p;
}

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p(m.dimension());
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant() const { return coefficient(Monomial(n_)); }

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.dimension() != n_) throw DimensionError("term dimension does not match polynomial");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::pair<Monomial, Rational> Poly::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return *best;
}

std::vector<std::pair<Monomial, Rational>> Poly::sorted_terms(const MonomialOrder& order) const {
  std::vector<std::pair<Monomial, Rational>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(),
            [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  return v;
}

void Poly::check_dim(const Poly& other) const {
  if (n_ != other.n_)
    throw DimensionError("polynomial dimension mismatch (" + std::to_string(n_) + " vs " +
                         std::to_string(other.n_) + ")");
}

Poly& Poly::operator+=(const Poly& other) {
  check_dim(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_dim(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

void Poly::add_scaled(const Poly& other, const Rational& c, const Monomial& m) {
  check_dim(other);
  if (c == 0) return;
  for (const auto& [mo, v] : other.terms_) add_term(mo * m, v * c);
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_dim(b);
  Poly r(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::truncate_degree(int d) const {
  Poly r(n_);
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.degree()) <= d) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

Poly Poly::homogeneous_part(int k) const {
  Poly r(n_);
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.degree()) == k) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

Poly poly_mul(const Poly& f, const Poly& g) { return f * g; }

Poly partial_derivative(const Poly& f, std::size_t i) {
  if (i >= f.dimension()) throw DimensionError("derivative index out of range");
  Poly r(f.dimension());
  for (const auto& [m, c] : f.terms()) {
    if (m[i] == 0) continue;
    auto e = m.exponents();
    Rational k(e[i]);
    --e[i];
    r.add_term(Monomial(std::move(e)), c * k);
  }
  return r;
}

Rational falling_factorial(std::uint32_t e, std::uint32_t k) {
  if (k > e) return 0;
  Rational r(1);
  for (std::uint32_t j = 0; j < k; ++j) r *= static_cast<unsigned long>(e - j);
  return r;
}

Rational factorial(unsigned k) { return falling_factorial(k, k); }

Poly partial_derivative(const Poly& f, const Monomial& L) {
  if (L.dimension() != f.dimension()) throw DimensionError("derivative multi-index dimension");
  if (L.is_one()) return f;
  Poly r(f.dimension());
  for (const auto& [m, c] : f.terms()) {
    if (!L.divides(m)) continue;
    Rational k(1);
    for (std::size_t i = 0; i < m.dimension(); ++i) k *= falling_factorial(m[i], L[i]);
    r.add_term(m / L, c * k);
  }
  return r;
}

Poly pow(const Poly& f, unsigned k) {
  Poly r(f.dimension(), 1);
  for (unsigned j = 0; j < k; ++j) r = r * f;
  return r;
}

}  // namespace dq
