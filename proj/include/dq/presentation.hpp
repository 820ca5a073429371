#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dq/parallel.hpp"
#include "dq/star.hpp"

namespace dq {

/// Coordinates over ordered star monomials x_{*J}, J a multi-index.
using HCoords = std::map<MultiIndex, HScalar>;

void add_scaled(HCoords& acc, const HCoords& v, const HScalar& c);
/// Multiply every coordinate by h^k.
HCoords shifted(const HCoords& v, std::size_t k);
bool coords_zero(const HCoords& v);
/// Drops zero entries.
HCoords canonical(HCoords v);

/// Row-finite matrix over Q[h]/(h^N) indexed by multi-indices.
struct ExpansionMatrix {
  std::size_t dimension = 0;
  std::size_t trunc = 1;
  /// Rows present for every multi-index of degree <= rows_bound.
  std::size_t rows_bound = 0;
  std::map<MultiIndex, std::map<MultiIndex, HScalar>> rows;

  const std::map<MultiIndex, HScalar>& row(const MultiIndex& I) const;
  std::size_t nonzeros() const;
  /// Largest number of entries in a row.
  std::size_t max_row_size() const;
};

/// d + max(0, p - 2) (N - 1)^2.
std::size_t working_bound(const StarProductSpec& S, std::size_t d);

/// Left-to-right fold x_{w_1} * ... * x_{w_m}.
HSeries expand_star_monomial(const StarProductSpec& S, const Word& w);
HSeries expand_star_monomial(const StarProductSpec& S, const MultiIndex& I);

/// A with rows x_{*I} = sum_J A_I^J x_J for |I| <= working_bound(S, d).
ExpansionMatrix build_expansion_matrix(const StarProductSpec& S, std::size_t d,
                                       const Exec& ex = {});
/// Rows of A^{-1} = sum_m (-h)^m B^m for every multi-index of degree <= d.
/// Throws PreconditionError unless A = Id + hB, TruncationError when a needed
/// row of A lies beyond the rows it holds.
ExpansionMatrix invert_expansion(const ExpansionMatrix& A, std::size_t d, const Exec& ex = {});

struct InverseCheck {
  bool left = true;   // A * A^{-1} = Id
  bool right = true;  // A^{-1} * A = Id
  std::size_t rows_checked = 0;
  bool pass() const { return left && right; }
};
/// Checks both products exactly on rows of degree <= d.
InverseCheck check_inverse(const ExpansionMatrix& A, const ExpansionMatrix& Ainv, std::size_t d);

/// A and A^{-1} for one star product and degree bound.
class StarBasis {
 public:
  StarBasis(const StarProductSpec& S, std::size_t d, const Exec& ex = {});

  const StarProductSpec& spec() const { return S_; }
  std::size_t degree_bound() const { return d_; }
  std::size_t working_bound() const { return A_.rows_bound; }
  const ExpansionMatrix& expansion() const { return A_; }
  const ExpansionMatrix& inverse() const { return Ainv_; }

  /// c_J with f = sum_J c_J x_{*J}; TruncationError if deg f > d.
  HCoords coords(const HSeries& f) const;
  /// sum_J c_J x_{*J} as a commutative series.
  HSeries expand(const HCoords& c) const;
  HSeries star_monomial(const MultiIndex& I) const;

 private:
  StarProductSpec S_;
  std::size_t d_;
  ExpansionMatrix A_;
  ExpansionMatrix Ainv_;
};

HCoords star_basis_coords(const StarProductSpec& S, const HSeries& f, std::size_t d);
HCoords star_basis_coords(const StarBasis& B, const HSeries& f);

/// Word evaluated by star products, then written in the ordered star basis.
HCoords rewrite_unordered(const StarBasis& B, const Word& w);
HCoords rewrite_unordered(const StarProductSpec& S, const Word& w);

struct Relation {
  Word word;
  HCoords rhs;
};

struct RelationSet {
  std::size_t dimension = 0;
  std::size_t trunc = 1;
  std::size_t degree_bound = 0;
  std::size_t working_bound = 0;
  std::vector<Relation> relations;

  /// The relation whose word is (j, i), j > i; nullptr if absent.
  const Relation* quadratic(std::uint32_t j, std::uint32_t i) const;
};

/// One relation per adjacent transposition that unsorts an ordered
/// multi-index of degree 2..d, each verified by substitution.
RelationSet emit_presentation(const StarBasis& B, const Exec& ex = {});
RelationSet emit_presentation(const StarProductSpec& S, std::size_t d, const Exec& ex = {});

/// At h = 0 the relation reads word = sorted(word).
bool is_classical_commutator(const Relation& r);

/// Formal sum of words with coefficients in Q[h]/(h^N).
using WordSum = std::vector<std::pair<Word, HScalar>>;

enum class RewriteOrder { leftmost, rightmost };

/// Image in the ordered star basis, computed by contextual rewriting with
/// the quadratic relations X_j X_i -> sum d^J X_J until every word is
/// ordered. Terms reaching h^N are dropped.
HCoords normal_form_word(const RelationSet& R, const WordSum& element,
                         RewriteOrder order = RewriteOrder::leftmost);

/// Text form: "X2*X1 = X1*X2 - h*X3", one per line.
std::string format_relation(const Relation& r, const std::vector<std::string>& variables);
std::string format_coords(const HCoords& c, const std::vector<std::string>& variables);
/// Upper-cased generator names X_i for variable names x_i.
std::vector<std::string> generator_names(const std::vector<std::string>& variables);

}  // namespace dq
