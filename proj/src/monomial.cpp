#include "dq/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "dq/errors.hpp"

namespace dq {

Monomial::Monomial(std::vector<std::uint32_t> exps)
    : exps_(std::move(exps)),
      degree_(std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0})) {}

Monomial Monomial::variable(std::size_t n, std::size_t i) {
  if (i >= n) throw DimensionError("variable index " + std::to_string(i) + " out of range");
  Monomial m(n);
  m.exps_[i] = 1;
  m.degree_ = 1;
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (dimension() != other.dimension()) throw DimensionError("monomial dimension mismatch");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw Error("monomial division is not exact");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  r.degree_ -= other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (dimension() != other.dimension()) throw DimensionError("monomial dimension mismatch");
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  if (dimension() != other.dimension()) throw DimensionError("monomial dimension mismatch");
  std::vector<std::uint32_t> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial& Monomial::raise(std::size_t i, std::uint32_t k) {
  if (i >= exps_.size()) throw DimensionError("variable index out of range");
  exps_[i] += k;
  degree_ += k;
  return *this;
}

MultiIndex::MultiIndex(std::vector<std::uint32_t> idx) : idx_(std::move(idx)) {
  if (!std::is_sorted(idx_.begin(), idx_.end()))
    throw Error("multi-index must be non-decreasing");
}

MultiIndex MultiIndex::from_monomial(const Monomial& m) {
  std::vector<std::uint32_t> idx;
  idx.reserve(m.degree());
  for (std::size_t i = 0; i < m.dimension(); ++i)
    idx.insert(idx.end(), m[i], static_cast<std::uint32_t>(i));
  MultiIndex r;
  r.idx_ = std::move(idx);
  return r;
}

Monomial MultiIndex::to_monomial(std::size_t n) const {
  Monomial m(n);
  for (auto i : idx_) m.raise(i);
  return m;
}

namespace {

std::strong_ordering graded_lex(const std::vector<std::uint32_t>& a,
                                const std::vector<std::uint32_t>& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a <=> b;
}

}  // namespace

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  return graded_lex(a.idx_, b.idx_);
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  return graded_lex(a.letters_, b.letters_);
}

bool Word::is_ordered() const { return std::is_sorted(letters_.begin(), letters_.end()); }

MultiIndex Word::sorted() const {
  auto v = letters_;
  std::sort(v.begin(), v.end());
  return MultiIndex(std::move(v));
}

std::vector<MultiIndex> multi_indices_of_degree(std::size_t n, std::size_t k) {
  std::vector<MultiIndex> out;
  if (n == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  std::vector<std::uint32_t> cur(k, 0);
  while (true) {
    out.emplace_back(cur);
    // next non-decreasing sequence in lexicographic order
    std::size_t pos = k;
    while (pos > 0 && cur[pos - 1] + 1 >= n) --pos;
    if (pos == 0) break;
    std::uint32_t v = cur[pos - 1] + 1;
    for (std::size_t j = pos - 1; j < k; ++j) cur[j] = v;
  }
  return out;
}

std::vector<MultiIndex> multi_indices_up_to(std::size_t n, std::size_t d) {
  std::vector<MultiIndex> out;
  for (std::size_t k = 0; k <= d; ++k) {
    auto layer = multi_indices_of_degree(n, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Monomial> monomials_up_to(std::size_t n, std::size_t d) {
  std::vector<Monomial> out;
  for (const auto& I : multi_indices_up_to(n, d)) out.push_back(I.to_monomial(n));
  return out;
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  auto sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw Error("variable priority must be a permutation");
}

MonomialOrder MonomialOrder::parse(std::string_view name) {
  if (name == "lex") return MonomialOrder(OrderKind::lex);
  if (name == "grlex") return MonomialOrder(OrderKind::grlex);
  if (name == "grevlex") return MonomialOrder(OrderKind::grevlex);
  throw Error("unknown monomial order '" + std::string(name) + "' (lex, grlex, grevlex)");
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::lex: return "lex";
    case OrderKind::grlex: return "grlex";
    case OrderKind::grevlex: return "grevlex";
  }
  return "?";
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.dimension();
  if (n != b.dimension()) throw DimensionError("monomial dimension mismatch");
  if (!priority_.empty() && priority_.size() != n)
    throw DimensionError("monomial order priority has wrong length");
  if (kind_ != OrderKind::lex) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  }
  if (kind_ == OrderKind::grevlex) {
    for (std::size_t r = n; r-- > 0;) {
      const auto v = var(r);
      if (a[v] != b[v]) return b[v] <=> a[v];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t r = 0; r < n; ++r) {
    const auto v = var(r);
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

}  // namespace dq
