#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dq/groebner.hpp"
#include "dq/linear_algebra.hpp"
#include "dq/parallel.hpp"
#include "dq/presentation.hpp"
#include "dq/star.hpp"

namespace dq {

enum class Verdict { pass, fail, inconclusive };
std::string verdict_name(Verdict v);

enum class LiftingStrategy { identity, weyl, custom };
std::string strategy_name(LiftingStrategy s);
LiftingStrategy parse_strategy(const std::string& name);

struct Lifting {
  std::vector<Poly> generators;
  std::vector<HSeries> liftings;
  LiftingStrategy strategy = LiftingStrategy::identity;

  std::size_t size() const { return generators.size(); }
  /// Largest total degree among the classical generators.
  int max_degree() const;
};

struct CentralityResult {
  bool pass = true;
  /// Monomial m with P*m != m*P (coordinates are tried first).
  std::optional<Monomial> witness;
  HSeries commutator;  // P*m - m*P
};
/// P*x_j = x_j*P for every coordinate, then for every monomial of degree <= d.
CentralityResult check_centrality(const StarProductSpec& S, const HSeries& P, std::size_t d);

/// W(x_I) = (1/m!) sum over orderings of x_{i_s(1)} * ... * x_{i_s(m)}.
HSeries weyl_symmetrize(const StarProductSpec& S, const Poly& f);

/// identity: P_i = p_i (each must pass check_centrality up to `check_degree`,
/// else PreconditionError naming the witness); weyl: P_i = W(p_i).
Lifting lift_generators(const StarProductSpec& S, const std::vector<Poly>& p,
                        LiftingStrategy strategy, std::size_t check_degree = 2);
/// User liftings; PreconditionError unless the h^0 parts are the generators.
Lifting custom_lifting(const std::vector<Poly>& p, const std::vector<HSeries>& liftings);

/// Indexing of Q[x][h]/(h^N) coordinates (h-order, monomial) for the
/// sparse solver; lower h-orders get lower indices.
class CoordIndex {
 public:
  std::size_t index(std::size_t k, const Monomial& m);
  std::pair<std::size_t, Monomial> decode(std::size_t idx) const;
  SparseVec flatten(const HSeries& F, std::size_t max_order);
  HSeries unflatten(const SparseVec& v, std::size_t n, std::size_t N) const;

 private:
  static constexpr int kShift = 40;
  std::unordered_map<Monomial, std::size_t> id_;
  std::vector<Monomial> mons_;
};

enum class Side { left, right };

struct MembershipResult {
  bool found = false;
  std::size_t bound_used = 0;
  /// F = sum_i A_i * P_i (left) or sum_i P_i * A_i (right).
  std::vector<HSeries> certificate;
};

/// Left/right multiples of the liftings, cached; spans built per bound.
/// Not thread-safe; use one instance per thread.
class DeformedIdeal {
 public:
  DeformedIdeal(StarProductSpec S, Lifting L);

  const StarProductSpec& spec() const { return S_; }
  const Lifting& lifting() const { return L_; }

  /// m * P_i (left) or P_i * m (right).
  const HSeries& multiple(Side side, std::size_t i, const Monomial& m);
  /// Fills the multiple tables for all multipliers of elements of degree <= bound.
  void precompute(Side side, std::size_t bound, const Exec& ex = {});

  /// Membership of F in the span of h^s m * P_i (or P_i * m) with
  /// deg m + deg p_i <= bound, computed mod h^M (M = 0 means N).
  MembershipResult solve(const HSeries& F, Side side, std::size_t bound, std::size_t M = 0);

  /// Degree bounds tried by the escalation policy starting from `start`.
  std::vector<std::size_t> escalation(std::size_t start) const;

  /// Echelon form of the span at a bound (for the flatness probes).
  const EchelonBasis& span(Side side, std::size_t bound, std::size_t M = 0);
  CoordIndex& coords() { return idx_; }

  /// Multipliers (generator, monomial) for elements of degree <= bound.
  std::vector<std::pair<std::size_t, Monomial>> multipliers(std::size_t bound) const;

 private:
  struct Span {
    EchelonBasis basis{true};
    std::vector<std::pair<std::size_t, std::pair<std::size_t, Monomial>>> columns;  // (s, (i, m))
  };
  Span& span_data(Side side, std::size_t bound, std::size_t M);

  StarProductSpec S_;
  Lifting L_;
  CoordIndex idx_;
  std::map<std::pair<std::size_t, Monomial>, HSeries> left_, right_;
  std::map<std::tuple<int, std::size_t, std::size_t>, std::unique_ptr<Span>> spans_;
};

/// F in I_h, with escalation from max(d, deg F + max deg p_i). The
/// certificate is verified by substitution.
MembershipResult ideal_membership_mod(const StarProductSpec& S, const HSeries& F,
                                      const Lifting& L, std::size_t d);
MembershipResult ideal_membership_mod(DeformedIdeal& I, const HSeries& F, std::size_t d);

struct TwoSidedResult {
  Verdict status = Verdict::pass;
  std::size_t bound_used = 0;
  std::size_t checked = 0;
  /// Offending element when not pass: side names the span it is missing from.
  std::optional<std::size_t> generator;
  std::optional<Monomial> multiplier;
  Side missing_from = Side::left;
  HSeries element;
  std::string reason;
};
/// Each P_i*m must lie in the left span and each m*P_i in the right span,
/// for monomials m of degree <= d.
TwoSidedResult check_two_sided(const StarProductSpec& S, const Lifting& L, std::size_t d,
                               const Exec& ex = {});
TwoSidedResult check_two_sided(DeformedIdeal& I, std::size_t d, const Exec& ex = {});

/// Standard monomials B and complement P of a Groebner basis.
struct QuotientBasis {
  GroebnerBasis gb;
  StandardMonomialSet set;

  bool in_basis(const MultiIndex& J) const;
};
QuotientBasis quotient_basis(const GroebnerBasis& GB, std::size_t d);

/// v_{*mu} = sum_a B_{mu a} e_{*a} + sum_i C_{mu i} * P_i + h sum_nu A_{mu nu} v_{*nu},
/// solved as v_* = (Id - hA)^{-1} B e_*.
struct ReductionSystem {
  StarProductSpec spec;
  Lifting lifting;
  QuotientBasis basis;
  std::shared_ptr<StarBasis> star_basis;
  std::size_t degree_bound = 0;
  std::map<MultiIndex, HCoords> B;            // over standard multi-indices
  std::map<MultiIndex, HCoords> hA;           // h * A_{mu nu}, over complement multi-indices
  std::map<MultiIndex, std::vector<HSeries>> C;
  std::map<MultiIndex, HCoords> solved;       // rows of (Id - hA)^{-1} B

  std::size_t trunc() const { return spec.trunc(); }
};

ReductionSystem build_reduction_system(const StarProductSpec& S, const Lifting& L,
                                       const QuotientBasis& Q, const Exec& ex = {});

/// Coordinates of pi_h(f) over e_{*a}, a in B.
HCoords quotient_normal_form(const ReductionSystem& R, const HSeries& f);

/// e_{*a} * e_{*b} for standard a, b of degree <= t; needs 2t <= degree bound.
using MultiplicationTable = std::map<std::pair<MultiIndex, MultiIndex>, HCoords>;
MultiplicationTable multiplication_table(const ReductionSystem& R, std::size_t t,
                                         const Exec& ex = {});

struct FlatnessReport {
  std::size_t degree_bound = 0;
  std::size_t trunc = 1;
  Verdict independence = Verdict::pass;
  Verdict torsion = Verdict::pass;
  Verdict counts = Verdict::pass;
  /// Standard monomials per exact degree.
  std::vector<std::size_t> expected_per_degree;
  /// Measured quotient dimension increments per degree (divided by N).
  std::vector<std::size_t> measured_per_degree;
  std::size_t torsion_rows_probed = 0;
  std::vector<std::string> notes;

  Verdict overall() const;
};
FlatnessReport verify_flatness(const ReductionSystem& R, std::size_t d, const Exec& ex = {});

}  // namespace dq
