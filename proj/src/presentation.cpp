#include "dq/presentation.hpp"

#include <algorithm>
#include <cctype>

#include "dq/errors.hpp"
#include "dq/parser.hpp"

namespace dq {

void add_scaled(HCoords& acc, const HCoords& v, const HScalar& c) {
  if (c.is_zero()) return;
  for (const auto& [J, x] : v) {
    HScalar t = x * c;
    if (t.is_zero()) continue;
    auto [it, inserted] = acc.try_emplace(J, t);
    if (!inserted) {
      it->second += t;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

HCoords shifted(const HCoords& v, std::size_t k) {
  HCoords out;
  for (const auto& [J, x] : v) {
    HScalar s = x.shifted(k);
    if (!s.is_zero()) out.emplace(J, std::move(s));
  }
  return out;
}

bool coords_zero(const HCoords& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& e) { return e.second.is_zero(); });
}

HCoords canonical(HCoords v) {
  std::erase_if(v, [](const auto& e) { return e.second.is_zero(); });
  return v;
}

const std::map<MultiIndex, HScalar>& ExpansionMatrix::row(const MultiIndex& I) const {
  auto it = rows.find(I);
  if (it == rows.end())
    throw TruncationError("expansion matrix has no row of degree " + std::to_string(I.size()) +
                          " (rows held up to degree " + std::to_string(rows_bound) + ")");
  return it->second;
}

std::size_t ExpansionMatrix::nonzeros() const {
  std::size_t s = 0;
  for (const auto& [I, r] : rows) s += r.size();
  return s;
}

std::size_t ExpansionMatrix::max_row_size() const {
  std::size_t s = 0;
  for (const auto& [I, r] : rows) s = std::max(s, r.size());
  return s;
}

namespace {

std::size_t growth(const StarProductSpec& S) {
  return static_cast<std::size_t>(std::max({0, S.structure().degree() - 2, S.degree_growth()}));
}

std::map<MultiIndex, HScalar> series_to_row(const HSeries& F) {
  std::map<MultiIndex, HScalar> row;
  const std::size_t N = F.trunc();
  for (std::size_t k = 0; k < N; ++k)
    for (const auto& [m, c] : F[k].terms()) {
      auto [it, inserted] = row.try_emplace(MultiIndex::from_monomial(m), N);
      it->second[k] += c;
    }
  std::erase_if(row, [](const auto& e) { return e.second.is_zero(); });
  return row;
}

HSeries row_to_series(const std::map<MultiIndex, HScalar>& row, std::size_t n, std::size_t N) {
  HSeries F(n, N);
  for (const auto& [J, a] : row) {
    const Monomial m = J.to_monomial(n);
    for (std::size_t k = 0; k < N; ++k)
      if (a[k] != 0) F[k].add_term(m, a[k]);
  }
  return F;
}

MultiIndex drop_last(const MultiIndex& I) {
  std::vector<std::uint32_t> v(I.indices().begin(), I.indices().end() - 1);
  return MultiIndex(std::move(v));
}

}  // namespace

std::size_t working_bound(const StarProductSpec& S, std::size_t d) {
  const std::size_t N = S.trunc();
  return d + growth(S) * (N - 1) * (N - 1);
}

HSeries expand_star_monomial(const StarProductSpec& S, const Word& w) {
  const std::size_t n = S.dimension(), N = S.trunc();
  HSeries F = HSeries::constant(n, N, 1);
  for (auto l : w.letters()) {
    if (l >= n) throw DimensionError("word letter out of range");
    F = star(S, F, HSeries::from_poly(Poly::variable(n, l), N));
  }
  return F;
}

HSeries expand_star_monomial(const StarProductSpec& S, const MultiIndex& I) {
  return expand_star_monomial(S, Word(I));
}

ExpansionMatrix build_expansion_matrix(const StarProductSpec& S, std::size_t d, const Exec& ex) {
  const std::size_t n = S.dimension(), N = S.trunc();
  ExpansionMatrix A;
  A.dimension = n;
  A.trunc = N;
  A.rows_bound = working_bound(S, d);
  std::map<MultiIndex, HSeries> prev{{MultiIndex(), HSeries::constant(n, N, 1)}};
  A.rows.emplace(MultiIndex(), series_to_row(prev.begin()->second));
  for (std::size_t k = 1; k <= A.rows_bound; ++k) {
    const auto layer = multi_indices_of_degree(n, k);
    std::vector<HSeries> out(layer.size());
    for_each_index(layer.size(), ex, [&](std::size_t i) {
      const auto& I = layer[i];
      const HSeries& F = prev.at(drop_last(I));
      out[i] = star(S, F, HSeries::from_poly(Poly::variable(n, I[I.size() - 1]), N));
    });
    std::map<MultiIndex, HSeries> cur;
    for (std::size_t i = 0; i < layer.size(); ++i) {
      A.rows.emplace(layer[i], series_to_row(out[i]));
      cur.emplace(layer[i], std::move(out[i]));
    }
    prev = std::move(cur);
  }
  return A;
}

ExpansionMatrix invert_expansion(const ExpansionMatrix& A, std::size_t d, const Exec& ex) {
  const std::size_t N = A.trunc;
  for (const auto& [I, row] : A.rows)
    for (const auto& [J, a] : row)
      if (a[0] != (I == J ? 1 : 0))
        throw PreconditionError("expansion matrix is not of the form Id + hB");

  ExpansionMatrix inv;
  inv.dimension = A.dimension;
  inv.trunc = N;
  inv.rows_bound = d;
  const auto idx = multi_indices_up_to(A.dimension, d);
  std::vector<std::map<MultiIndex, HScalar>> out(idx.size());
  for_each_index(idx.size(), ex, [&](std::size_t r) {
    // row r of sum_m (Id - A)^m, entries of (Id - A) being O(h)
    std::map<MultiIndex, HScalar> w{{idx[r], HScalar(N, 1)}};
    std::map<MultiIndex, HScalar> acc = w;
    for (std::size_t m = 1; m < N && !w.empty(); ++m) {
      std::map<MultiIndex, HScalar> next;
      for (const auto& [K, c] : w) {
        if (static_cast<std::size_t>(c.valuation()) + 1 >= N) continue;  // times O(h) vanishes
        for (const auto& [K2, a] : A.row(K)) {
          HScalar t = c * a;
          if (K2 == K) t = c * a - c;
          if (t.is_zero()) continue;
          auto [it, inserted] = next.try_emplace(K2, N);
          it->second -= t;
        }
      }
      std::erase_if(next, [](const auto& e) { return e.second.is_zero(); });
      for (const auto& [K, c] : next) {
        auto [it, inserted] = acc.try_emplace(K, N);
        it->second += c;
      }
      w = std::move(next);
    }
    std::erase_if(acc, [](const auto& e) { return e.second.is_zero(); });
    out[r] = std::move(acc);
  });
  for (std::size_t r = 0; r < idx.size(); ++r) inv.rows.emplace(idx[r], std::move(out[r]));
  return inv;
}

namespace {

// e_I * X * Y restricted to a row.
std::map<MultiIndex, HScalar> row_times(const std::map<MultiIndex, HScalar>& row,
                                        const ExpansionMatrix& M, std::size_t N) {
  std::map<MultiIndex, HScalar> out;
  for (const auto& [K, c] : row)
    for (const auto& [K2, a] : M.row(K)) {
      auto [it, inserted] = out.try_emplace(K2, N);
      it->second += c * a;
    }
  std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
  return out;
}

bool is_unit_row(const std::map<MultiIndex, HScalar>& row, const MultiIndex& I, std::size_t N) {
  return row.size() == 1 && row.begin()->first == I && row.begin()->second == HScalar(N, 1);
}

}  // namespace

InverseCheck check_inverse(const ExpansionMatrix& A, const ExpansionMatrix& Ainv, std::size_t d) {
  InverseCheck r;
  const std::size_t N = A.trunc;
  for (const auto& I : multi_indices_up_to(A.dimension, d)) {
    ++r.rows_checked;
    if (!is_unit_row(row_times(A.row(I), Ainv, N), I, N)) r.left = false;
    if (!is_unit_row(row_times(Ainv.row(I), A, N), I, N)) r.right = false;
  }
  return r;
}

StarBasis::StarBasis(const StarProductSpec& S, std::size_t d, const Exec& ex) : S_(S), d_(d) {
  A_ = build_expansion_matrix(S, d, ex);
  const std::size_t N = S.trunc();
  const std::size_t g = growth(S) * (N >= 2 ? N - 2 : 0);
  Ainv_ = invert_expansion(A_, A_.rows_bound - g, ex);
}

HCoords StarBasis::coords(const HSeries& f) const {
  const std::size_t N = S_.trunc();
  if (f.trunc() != N) throw TruncationError("star_basis_coords: truncation mismatch");
  if (f.degree() > static_cast<int>(Ainv_.rows_bound))
    throw TruncationError("star_basis_coords: degree " + std::to_string(f.degree()) +
                          " exceeds the bound " + std::to_string(Ainv_.rows_bound));
  HCoords out;
  for (std::size_t k = 0; k < N; ++k)
    for (const auto& [m, c] : f[k].terms())
      add_scaled(out, Ainv_.row(MultiIndex::from_monomial(m)), HScalar::monomial(N, k, c));
  return out;
}

HSeries StarBasis::star_monomial(const MultiIndex& I) const {
  return row_to_series(A_.row(I), S_.dimension(), S_.trunc());
}

HSeries StarBasis::expand(const HCoords& c) const {
  HSeries out(S_.dimension(), S_.trunc());
  for (const auto& [J, x] : c) out += star_monomial(J) * x;
  return out;
}

HCoords star_basis_coords(const StarProductSpec& S, const HSeries& f, std::size_t d) {
  if (f.degree() > static_cast<int>(d))
    throw TruncationError("star_basis_coords: degree exceeds the bound " + std::to_string(d));
  return StarBasis(S, d).coords(f);
}

HCoords star_basis_coords(const StarBasis& B, const HSeries& f) { return B.coords(f); }

HCoords rewrite_unordered(const StarBasis& B, const Word& w) {
  if (w.size() > B.degree_bound())
    throw TruncationError("rewrite_unordered: word longer than the degree bound");
  return B.coords(expand_star_monomial(B.spec(), w));
}

HCoords rewrite_unordered(const StarProductSpec& S, const Word& w) {
  return rewrite_unordered(StarBasis(S, w.size()), w);
}

const Relation* RelationSet::quadratic(std::uint32_t j, std::uint32_t i) const {
  for (const auto& r : relations)
    if (r.word.size() == 2 && r.word[0] == j && r.word[1] == i) return &r;
  return nullptr;
}

RelationSet emit_presentation(const StarBasis& B, const Exec& ex) {
  const auto& S = B.spec();
  const std::size_t d = B.degree_bound();
  if (d < 2) throw PreconditionError("emit_presentation needs degree bound d >= 2");
  RelationSet R;
  R.dimension = S.dimension();
  R.trunc = S.trunc();
  R.degree_bound = d;
  R.working_bound = B.working_bound();
  std::vector<Word> words;
  for (const auto& I : multi_indices_up_to(S.dimension(), d)) {
    for (std::size_t k = 0; k + 1 < I.size(); ++k) {
      if (I[k] == I[k + 1]) continue;
      auto letters = I.indices();
      std::swap(letters[k], letters[k + 1]);
      words.emplace_back(std::move(letters));
    }
  }
  std::vector<Relation> out(words.size());
  for_each_index(words.size(), ex, [&](std::size_t i) {
    const HSeries value = expand_star_monomial(S, words[i]);
    HCoords rhs = B.coords(value);
    if (B.expand(rhs) != value)
      throw Error("relation verification failed for a word of length " +
                  std::to_string(words[i].size()));
    out[i] = Relation{words[i], std::move(rhs)};
  });
  R.relations = std::move(out);
  return R;
}

RelationSet emit_presentation(const StarProductSpec& S, std::size_t d, const Exec& ex) {
  return emit_presentation(StarBasis(S, d, ex), ex);
}

bool is_classical_commutator(const Relation& r) {
  const MultiIndex target = r.word.sorted();
  for (const auto& [J, c] : r.rhs) {
    const Rational want = J == target ? 1 : 0;
    if (c.classical() != want) return false;
  }
  return r.rhs.count(target) == 1;
}

namespace {

class WordRewriter {
 public:
  WordRewriter(const RelationSet& R, RewriteOrder order) : R_(R), order_(order) {
    for (const auto& r : R.relations)
      if (r.word.size() == 2) quad_[{r.word[0], r.word[1]}] = &r.rhs;
  }

  // Normal form of w, exact below h^budget.
  const HCoords& nf(const std::vector<std::uint32_t>& w, std::size_t budget) {
    auto key = std::make_pair(w, budget);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::size_t N = R_.trunc;
    HCoords out;
    std::ptrdiff_t pos = -1;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] > w[k + 1]) {
        pos = static_cast<std::ptrdiff_t>(k);
        if (order_ == RewriteOrder::leftmost) break;
      }
    }
    if (pos < 0) {
      out.emplace(MultiIndex(w), HScalar(N, 1));
    } else {
      auto q = quad_.find({w[pos], w[pos + 1]});
      if (q == quad_.end()) throw PreconditionError("relation set lacks a quadratic relation");
      for (const auto& [J, c] : *q->second) {
        std::vector<std::uint32_t> w2(w.begin(), w.begin() + pos);
        w2.insert(w2.end(), J.indices().begin(), J.indices().end());
        w2.insert(w2.end(), w.begin() + pos + 2, w.end());
        for (std::size_t s = 0; s < budget; ++s) {
          if (c[s] == 0) continue;
          add_scaled(out, nf(w2, budget - s), HScalar::monomial(N, s, c[s]));
        }
      }
      // drop orders at or above the budget
      for (auto& [J, c] : out)
        for (std::size_t s = budget; s < N; ++s) c[s] = 0;
      out = canonical(std::move(out));
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

 private:
  const RelationSet& R_;
  RewriteOrder order_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, const HCoords*> quad_;
  std::map<std::pair<std::vector<std::uint32_t>, std::size_t>, HCoords> memo_;
};

}  // namespace

HCoords normal_form_word(const RelationSet& R, const WordSum& element, RewriteOrder order) {
  WordRewriter rw(R, order);
  HCoords out;
  for (const auto& [w, c] : element) {
    if (c.trunc() != R.trunc) throw TruncationError("normal_form_word: coefficient truncation mismatch");
    for (auto l : w.letters())
      if (l >= R.dimension) throw DimensionError("word letter out of range");
    add_scaled(out, rw.nf(w.letters(), R.trunc), c);
  }
  return out;
}

std::vector<std::string> generator_names(const std::vector<std::string>& variables) {
  std::vector<std::string> out;
  for (auto v : variables) {
    if (!v.empty()) v[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(v[0])));
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

std::vector<std::string> word_factors(const std::vector<std::uint32_t>& letters,
                                      const std::vector<std::string>& gens) {
  std::vector<std::string> f;
  for (auto l : letters) f.push_back(gens.at(l));
  return f;
}

}  // namespace

std::string format_coords(const HCoords& c, const std::vector<std::string>& variables) {
  const auto gens = generator_names(variables);
  std::size_t N = 0;
  for (const auto& [J, x] : c) N = std::max(N, x.trunc());
  std::string out;
  for (std::size_t s = 0; s < N; ++s) {
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      const auto& [J, x] = *it;
      if (x[s] == 0) continue;
      auto f = word_factors(J.indices(), gens);
      if (s > 0) f.insert(f.begin(), s == 1 ? std::string("h") : "h^" + std::to_string(s));
      append_term(out, x[s], f);
    }
  }
  return out.empty() ? "0" : out;
}

std::string format_relation(const Relation& r, const std::vector<std::string>& variables) {
  const auto gens = generator_names(variables);
  std::string lhs;
  for (auto l : r.word.letters()) lhs += (lhs.empty() ? "" : "*") + gens.at(l);
  return lhs + " = " + format_coords(r.rhs, variables);
}

}  // namespace dq
