#include "dq/json_io.hpp"

#include "dq/errors.hpp"
#include "dq/parser.hpp"

namespace dq {

json report_header(const std::string& command) {
  json j;
  j["schema"] = "deformq." + command + "/1";
  return j;
}

json to_json(const Rational& q) { return format_rational(q); }

json to_json(const Monomial& m) { return m.exponents(); }

json to_json(const MultiIndex& I) {
  json a = json::array();
  for (auto i : I.indices()) a.push_back(i + 1);
  return a;
}

json to_json(const Word& w) {
  json a = json::array();
  for (auto i : w.letters()) a.push_back(i + 1);
  return a;
}

json to_json(const Poly& f, const MonomialOrder& order) {
  json a = json::array();
  for (const auto& [m, c] : f.sorted_terms(order)) a.push_back({{"mono", to_json(m)}, {"coeff", to_json(c)}});
  return a;
}

json to_json(const HSeries& F, const MonomialOrder& order) {
  json a = json::array();
  for (std::size_t k = 0; k < F.trunc(); ++k) a.push_back(to_json(F[k], order));
  return a;
}

json to_json(const HScalar& s) {
  json a = json::array();
  for (const auto& q : s.coeffs()) a.push_back(to_json(q));
  return a;
}

json to_json(const HCoords& c) {
  json a = json::array();
  for (const auto& [J, x] : c)
    if (!x.is_zero()) a.push_back({{"multiindex", to_json(J)}, {"coeff", to_json(x)}});
  return a;
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw Error("expected a rational string \"p/q\"");
  return parse_rational(j.get<std::string>());
}

Monomial monomial_from_json(const json& j) {
  if (!j.is_array()) throw Error("expected an exponent vector");
  return Monomial(j.get<std::vector<std::uint32_t>>());
}

Poly poly_from_json(const json& j, std::size_t n) {
  Poly f(n);
  for (const auto& t : j) {
    Monomial m = monomial_from_json(t.at("mono"));
    if (m.dimension() != n) throw DimensionError("exponent vector has the wrong length");
    f.add_term(m, rational_from_json(t.at("coeff")));
  }
  return f;
}

HSeries hseries_from_json(const json& j, std::size_t n) {
  HSeries F(n, j.size());
  for (std::size_t k = 0; k < j.size(); ++k) F[k] = poly_from_json(j[k], n);
  return F;
}

json to_json(const JacobiResult& r) {
  json j;
  j["status"] = r.pass ? "pass" : "fail";
  json f = json::array();
  for (const auto& [t, p] : r.failures)
    f.push_back({{"triple", {t[0] + 1, t[1] + 1, t[2] + 1}}, {"jacobiator", to_json(p)}});
  j["failures"] = std::move(f);
  return j;
}

json to_json(const AssociativityReport& r) {
  json j;
  j["status"] = r.pass ? "pass" : "fail";
  j["degree_bound"] = r.degree_bound;
  j["checked"] = r.checked;
  j["failures_total"] = r.failures_total;
  json c = json::array();
  for (const auto& t : r.counterexamples)
    c.push_back({{"f", to_json(t.f)},
                 {"g", to_json(t.g)},
                 {"k", to_json(t.k)},
                 {"order", t.order},
                 {"defect", to_json(t.defect)}});
  j["counterexamples"] = std::move(c);
  return j;
}

json to_json(const PairReport& r) {
  json j;
  j["status"] = r.pass ? "pass" : "fail";
  j["degree_bound"] = r.degree_bound;
  j["checked"] = r.checked;
  j["failures_total"] = r.failures_total;
  json c = json::array();
  for (const auto& v : r.violations) {
    json e{{"f", to_json(v.f)}, {"g", to_json(v.g)}, {"order", v.order}, {"actual", to_json(v.actual)}};
    if (v.expected.dimension() != 0)
      e["expected"] = to_json(v.expected);
    e["degree"] = v.degree;
    e["limit"] = v.limit;
    c.push_back(std::move(e));
  }
  j["violations"] = std::move(c);
  return j;
}

json to_json(const GroebnerBasis& GB, const StandardMonomialSet& B) {
  json j;
  j["order"] = GB.order.name();
  json g = json::array(), lm = json::array();
  for (const auto& p : GB.generators) g.push_back(to_json(p, GB.order));
  for (const auto& m : GB.leading) lm.push_back(to_json(m));
  j["generators"] = std::move(g);
  j["leading_monomials"] = std::move(lm);
  j["degree_bound"] = B.degree_bound;
  j["standard_per_degree"] = B.basis_per_degree;
  j["complement_per_degree"] = B.complement_per_degree;
  return j;
}

json to_json(const Relation& r) { return {{"word", to_json(r.word)}, {"rhs", to_json(r.rhs)}}; }

json to_json(const RelationSet& R) {
  json j;
  j["dimension"] = R.dimension;
  j["trunc"] = R.trunc;
  j["degree_bound"] = R.degree_bound;
  j["working_bound"] = R.working_bound;
  json a = json::array();
  for (const auto& r : R.relations) a.push_back(to_json(r));
  j["relations"] = std::move(a);
  return j;
}

json to_json(const InverseCheck& c) {
  return {{"status", c.pass() ? "pass" : "fail"},
          {"left", c.left},
          {"right", c.right},
          {"rows_checked", c.rows_checked}};
}

json to_json(const PoissonIdealResult& r) {
  json j;
  j["status"] = r.pass ? "pass" : "fail";
  if (r.generator) j["generator"] = *r.generator + 1;
  if (r.variable) j["variable"] = *r.variable + 1;
  if (!r.pass) j["remainder"] = to_json(r.remainder);
  return j;
}

json to_json(const RankCheck& r) {
  json j;
  j["status"] = r.pass ? "pass" : "fail";
  json m = json::array();
  for (const auto& p : r.minors) m.push_back(to_json(p));
  j["minors"] = std::move(m);
  if (!r.pass) {
    json w = json::array();
    for (const auto& p : r.witness.generators) w.push_back(to_json(p, r.witness.order));
    j["witness_ideal"] = std::move(w);
  }
  return j;
}

json to_json(const TwoSidedResult& r) {
  json j;
  j["status"] = verdict_name(r.status);
  j["bound_used"] = r.bound_used;
  j["checked"] = r.checked;
  if (r.generator) {
    j["generator"] = *r.generator + 1;
    j["multiplier"] = to_json(*r.multiplier);
    j["missing_from"] = r.missing_from == Side::left ? "left" : "right";
    j["element"] = to_json(r.element);
    j["reason"] = r.reason;
  }
  return j;
}

json to_json(const FlatnessReport& r) {
  json j;
  j["status"] = verdict_name(r.overall());
  j["degree_bound"] = r.degree_bound;
  j["trunc"] = r.trunc;
  j["independence"] = verdict_name(r.independence);
  j["torsion"] = verdict_name(r.torsion);
  j["counts"] = verdict_name(r.counts);
  j["expected_per_degree"] = r.expected_per_degree;
  j["measured_per_degree"] = r.measured_per_degree;
  j["torsion_rows_probed"] = r.torsion_rows_probed;
  j["notes"] = r.notes;
  return j;
}

json to_json(const MultiplicationTable& T) {
  json a = json::array();
  for (const auto& [ab, c] : T)
    a.push_back({{"left", to_json(ab.first)}, {"right", to_json(ab.second)}, {"product", to_json(c)}});
  return a;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace dq
