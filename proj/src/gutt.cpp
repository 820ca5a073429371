#include "dq/gutt.hpp"

#include <algorithm>

#include "dq/errors.hpp"

namespace dq {

namespace {

// Splits an (n+1)-monomial into its X part (h exponent zeroed) and h power.
std::pair<Monomial, std::uint32_t> split_h(const Monomial& m, std::size_t n) {
  auto e = m.exponents();
  const std::uint32_t s = e[n];
  e[n] = 0;
  return {Monomial(std::move(e)), s};
}

}  // namespace

GuttAlgebra::GuttAlgebra(Constants c) : n_(c.size()), c_(std::move(c)) {
  for (const auto& row : c_) {
    if (row.size() != n_) throw DimensionError("structure constants must be n x n x n");
    for (const auto& v : row)
      if (v.size() != n_) throw DimensionError("structure constants must be n x n x n");
  }
}

Monomial GuttAlgebra::pbw_key(const Monomial& a) const {
  if (a.dimension() == n_ + 1) return a;
  if (a.dimension() != n_) throw DimensionError("monomial dimension mismatch");
  auto e = a.exponents();
  e.push_back(0);
  return Monomial(std::move(e));
}

// X^a * X_j in normal order, for an h-free (n+1)-monomial a.
const Poly& GuttAlgebra::mul_gen(const Monomial& a, std::size_t j) const {
  auto key = std::make_pair(a, j);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = gen_cache_.find(key);
    if (it != gen_cache_.end()) return it->second;
  }
  std::size_t l = 0;
  bool any = false;
  for (std::size_t i = 0; i < n_; ++i)
    if (a[i] > 0) {
      l = i;
      any = true;
    }
  Poly out(n_ + 1);
  if (!any || l <= j) {
    Monomial b = a;
    b.raise(j);
    out.add_term(b, 1);
  } else {
    // X^{a'} X_l X_j = (X^{a'} X_j) X_l + h sum_k c_{lj}^k X^{a'} X_k
    Monomial ap = a / Monomial::variable(n_ + 1, l);
    out = multiply_generator(mul_gen(ap, j), l);
    const Monomial h = Monomial::variable(n_ + 1, n_);
    for (std::size_t k = 0; k < n_; ++k) {
      if (c_[l][j][k] == 0) continue;
      out.add_scaled(mul_gen(ap, k), c_[l][j][k], h);
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  return gen_cache_.try_emplace(std::move(key), std::move(out)).first->second;
}

Poly GuttAlgebra::multiply_generator(const Poly& P, std::size_t j) const {
  Poly out(n_ + 1);
  for (const auto& [m, c] : P.terms()) {
    auto [x, s] = split_h(m, n_);
    Monomial hs(n_ + 1);
    hs.raise(n_, s);
    out.add_scaled(mul_gen(x, j), c, hs);
  }
  return out;
}

Poly GuttAlgebra::multiply(const Poly& P, const Poly& Q) const {
  Poly out(n_ + 1);
  for (const auto& [m, c] : Q.terms()) {
    Poly cur = P;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::uint32_t r = 0; r < m[i]; ++r) cur = multiply_generator(cur, i);
    Monomial hs(n_ + 1);
    hs.raise(n_, m[n_]);
    out.add_scaled(cur, c, hs);
  }
  return out;
}

Poly GuttAlgebra::symmetrize(const Monomial& a0) const {
  const Monomial a = pbw_key(a0);
  if (a[n_] != 0) throw Error("symmetrize: monomial must be h-free");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = sym_cache_.find(a);
    if (it != sym_cache_.end()) return it->second;
  }
  Poly out(n_ + 1);
  const std::uint32_t m = a.degree();
  if (m <= 1) {
    out.add_term(a, 1);
  } else {
    // sigma(x^a) = sum_j (a_j / m) sigma(x^{a - e_j}) X_j
    for (std::size_t j = 0; j < n_; ++j) {
      if (a[j] == 0) continue;
      const Poly prev = symmetrize(a / Monomial::variable(n_ + 1, j));
      Rational w(a[j], m);
      w.canonicalize();
      out.add_scaled(multiply_generator(prev, j), w, Monomial(n_ + 1));
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  return sym_cache_.try_emplace(a, std::move(out)).first->second;
}

Poly GuttAlgebra::symmetrize_poly(const Poly& f) const {
  if (f.dimension() != n_ + 1) throw DimensionError("symmetrize_poly expects n + 1 variables");
  Poly out(n_ + 1);
  for (const auto& [m, c] : f.terms()) {
    auto [x, s] = split_h(m, n_);
    Monomial hs(n_ + 1);
    hs.raise(n_, s);
    out.add_scaled(symmetrize(x), c, hs);
  }
  return out;
}

Poly GuttAlgebra::unsymmetrize(const Poly& P) const {
  Poly out(n_ + 1);
  for (const auto& [m, c] : P.terms()) {
    auto [x, s] = split_h(m, n_);
    Poly u;
    {
      std::unique_lock<std::mutex> lock(mu_);
      auto it = unsym_cache_.find(x);
      if (it != unsym_cache_.end()) {
        u = it->second;
      } else {
        lock.unlock();
        // sigma^{-1}(X^a) = x^a - sigma^{-1}(sigma(x^a) - X^a); the bracket
        // only holds terms of lower X-degree.
        u = Poly(n_ + 1);
        u.add_term(x, 1);
        if (x.degree() > 1) {
          Poly rest = symmetrize(x);
          rest.add_term(x, -1);
          u -= unsymmetrize(rest);
        }
        lock.lock();
        unsym_cache_.try_emplace(x, u);
      }
    }
    Monomial hs(n_ + 1);
    hs.raise(n_, s);
    out.add_scaled(u, c, hs);
  }
  return out;
}

Poly GuttAlgebra::monomial_star(const Monomial& a0, const Monomial& b0) const {
  const Monomial a = pbw_key(a0), b = pbw_key(b0);
  auto key = std::make_pair(a, b);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = star_cache_.find(key);
    if (it != star_cache_.end()) return it->second;
  }
  Poly out = unsymmetrize(multiply(symmetrize(a), symmetrize(b)));
  std::lock_guard<std::mutex> lock(mu_);
  return star_cache_.try_emplace(std::move(key), std::move(out)).first->second;
}

HSeries GuttAlgebra::star(const Poly& f, const Poly& g, std::size_t N) const {
  if (f.dimension() != n_ || g.dimension() != n_) throw DimensionError("gutt star: dimension mismatch");
  Poly acc(n_ + 1);
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms())
      acc.add_scaled(monomial_star(a, b), ca * cb, Monomial(n_ + 1));
  HSeries out(n_, N);
  for (const auto& [m, c] : acc.terms()) {
    auto [x, s] = split_h(m, n_);
    if (s >= N) continue;
    auto e = x.exponents();
    e.pop_back();
    out[s].add_term(Monomial(std::move(e)), c);
  }
  return out;
}

Poly GuttAlgebra::rewrite_word(const std::vector<std::uint32_t>& word, Direction dir) const {
  using Key = std::pair<std::vector<std::uint32_t>, std::uint32_t>;  // (letters, h power)
  std::map<Key, Rational> pending{{{word, 0}, Rational(1)}};
  Poly out(n_ + 1);
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const auto& [w, s] = node.key();
    const Rational c = node.mapped();
    if (c == 0) continue;
    std::ptrdiff_t pos = -1;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] > w[k + 1]) {
        pos = static_cast<std::ptrdiff_t>(k);
        if (dir == Direction::leftmost) break;
      }
    }
    if (pos < 0) {
      std::vector<std::uint32_t> e(n_ + 1, 0);
      for (auto l : w) {
        if (l >= n_) throw DimensionError("word letter out of range");
        ++e[l];
      }
      e[n_] = s;
      out.add_term(Monomial(std::move(e)), c);
      continue;
    }
    const auto j = w[pos], i = w[pos + 1];
    auto swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    pending[{swapped, s}] += c;
    for (std::size_t k = 0; k < n_; ++k) {
      if (c_[j][i][k] == 0) continue;
      std::vector<std::uint32_t> shorter(w.begin(), w.begin() + pos);
      shorter.push_back(static_cast<std::uint32_t>(k));
      shorter.insert(shorter.end(), w.begin() + pos + 2, w.end());
      pending[{shorter, s + 1}] += c * c_[j][i][k];
    }
  }
  return out;
}

}  // namespace dq
