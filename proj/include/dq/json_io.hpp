#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dq/groebner.hpp"
#include "dq/poisson.hpp"
#include "dq/presentation.hpp"
#include "dq/quotient.hpp"
#include "dq/verify.hpp"

namespace dq {

using json = nlohmann::ordered_json;

/// {"schema": "deformq.<command>/1"}; every report starts from this.
json report_header(const std::string& command);

/// "p/q", or "p" for integers.
json to_json(const Rational& q);
/// Exponent vector.
json to_json(const Monomial& m);
/// 1-based variable indices.
json to_json(const MultiIndex& I);
json to_json(const Word& w);
/// [{"mono": [...], "coeff": "p/q"}], terms descending in `order`.
json to_json(const Poly& f, const MonomialOrder& order = {});
/// One entry per h-order 0..N-1, each a Poly array.
json to_json(const HSeries& F, const MonomialOrder& order = {});
/// N rationals, coefficient of h^k at index k.
json to_json(const HScalar& s);
/// [{"multiindex": [...], "coeff": [...]}] in multi-index order.
json to_json(const HCoords& c);

Rational rational_from_json(const json& j);
Monomial monomial_from_json(const json& j);
Poly poly_from_json(const json& j, std::size_t n);
HSeries hseries_from_json(const json& j, std::size_t n);

json to_json(const JacobiResult& r);
json to_json(const AssociativityReport& r);
json to_json(const PairReport& r);
json to_json(const GroebnerBasis& GB, const StandardMonomialSet& B);
json to_json(const Relation& r);
json to_json(const RelationSet& R);
json to_json(const InverseCheck& c);
json to_json(const PoissonIdealResult& r);
json to_json(const RankCheck& r);
json to_json(const TwoSidedResult& r);
json to_json(const FlatnessReport& r);
json to_json(const MultiplicationTable& T);

/// Two-space indentation, trailing newline.
std::string dump(const json& j);

}  // namespace dq
