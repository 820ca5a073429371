#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "dq/config.hpp"
#include "dq/groebner.hpp"
#include "dq/json_io.hpp"
#include "dq/parser.hpp"
#include "dq/poisson.hpp"
#include "dq/presentation.hpp"
#include "dq/quotient.hpp"
#include "dq/verify.hpp"

namespace dq::cli {

namespace {

struct Context {
  ProblemConfig cfg;
  Exec ex;
  const std::vector<std::string>& vars() const { return cfg.variables; }
};

Context load(const Options& o) {
  Context c{load_config(o.config), Exec{o.jobs}};
  if (o.order) c.cfg.order = MonomialOrder::parse(*o.order);
  if (o.trunc) c.cfg.trunc = *o.trunc;
  if (o.degree) c.cfg.degree = *o.degree;
  return c;
}

json describe(const ProblemConfig& c) {
  json j;
  j["source"] = c.source;
  j["name"] = c.name;
  j["variables"] = c.variables;
  j["engine"] = engine_name(c.engine);
  j["trunc"] = c.trunc;
  j["degree"] = c.degree;
  j["order"] = c.order.name();
  if (!c.gauge.empty()) j["gauge_orders"] = c.gauge.size();
  return j;
}

std::string mono(const Monomial& m, const std::vector<std::string>& vars) {
  return format_poly(Poly::term(m, 1), vars);
}

std::string tuple_text(const std::vector<Monomial>& t, const std::vector<std::string>& vars) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + mono(t[i], vars);
  return s + ")";
}

std::string status(bool pass) { return pass ? "pass" : "fail"; }

// Text goes to stdout unless the JSON report does; both may also go to files.
int finish(const Options& o, const ProblemConfig& cfg, const json& report, const std::string& text,
           int code) {
  const std::string json_path = !o.json_out.empty() ? o.json_out : cfg.json_output;
  if (json_path == "-") {
    std::cout << dump(report);
  } else {
    std::cout << text;
    if (!json_path.empty()) {
      std::ofstream out(json_path, std::ios::binary);
      if (!out) throw Error("cannot write '" + json_path + "'");
      out << dump(report);
    }
  }
  if (!cfg.text_output.empty()) {
    std::ofstream out(cfg.text_output, std::ios::binary);
    if (!out) throw Error("cannot write '" + cfg.text_output + "'");
    out << text;
  }
  return code;
}

std::string jacobi_text(const JacobiResult& r, const std::vector<std::string>& vars) {
  if (r.pass) return "jacobi: pass\n";
  const auto& t = *r.triple;
  std::ostringstream s;
  s << "jacobi: fail at (" << t[0] + 1 << "," << t[1] + 1 << "," << t[2] + 1
    << "): Jacobiator " << format_poly(r.jacobiator, vars) << "\n";
  return s.str();
}

}  // namespace

int cmd_check(const Options& o) {
  Context c = load(o);
  const auto& vars = c.vars();
  const std::size_t d = c.cfg.degree;
  json report = report_header("check");
  report["config"] = describe(c.cfg);
  json checks;
  std::ostringstream text;
  bool ok = true;

  const auto jac = check_jacobi(c.cfg.poisson);
  checks["jacobi"] = to_json(jac);
  text << jacobi_text(jac, vars);
  ok = ok && jac.pass;

  StarProductSpec S;
  try {
    S = build_spec(c.cfg);
    checks["engine"] = {{"status", "pass"}};
  } catch (const PreconditionError& e) {
    checks["engine"] = {{"status", "fail"}, {"reason", e.what()}};
    text << "engine: fail: " << e.what() << "\n";
    report["checks"] = std::move(checks);
    report["status"] = "fail";
    return finish(o, c.cfg, report, text.str(), kFail);
  }

  const auto assoc = verify_associativity(S, d, c.ex);
  checks["associativity"] = to_json(assoc);
  text << "associativity: " << status(assoc.pass) << " (" << assoc.checked
       << " triples, total degree <= " << d << ")";
  if (!assoc.pass) {
    const auto& t = assoc.counterexamples.front();
    text << ", first at " << tuple_text({t.f, t.g, t.k}, vars) << " order h^" << t.order << ", "
         << assoc.failures_total << " failing";
  }
  text << "\n";
  ok = ok && assoc.pass;

  auto pair_line = [&](const char* name, const PairReport& r) {
    text << name << ": " << status(r.pass) << " (" << r.checked << " pairs)";
    if (!r.pass) {
      const auto& v = r.violations.front();
      text << ", first at " << tuple_text({v.f, v.g}, vars) << " order h^" << v.order;
      if (v.limit != 0 || v.degree > 0) text << ": degree " << v.degree << " > " << v.limit;
      text << ", " << r.failures_total << " failing";
    }
    text << "\n";
    ok = ok && r.pass;
  };
  const auto comm = verify_commutator_bracket(S, d, c.ex);
  checks["commutator"] = to_json(comm);
  pair_line("commutator", comm);
  const auto deg = verify_degree_bound(S, d, c.ex);
  checks["degree_bound"] = to_json(deg);
  pair_line("degree_bound", deg);
  const auto semi = check_semiformal_filtration(S, d, c.ex);
  checks["semiformal"] = to_json(semi);
  pair_line("semiformal", semi);

  report["checks"] = std::move(checks);
  report["status"] = status(ok);
  return finish(o, c.cfg, report, text.str(), ok ? kPass : kFail);
}

int cmd_star(const Options& o) {
  Context c = load(o);
  const std::size_t N = c.cfg.trunc;
  const HSeries F = parse_hseries(o.f, c.vars(), N);
  const HSeries G = parse_hseries(o.g, c.vars(), N);
  const StarProductSpec S = build_spec(c.cfg);
  const HSeries P = star(S, F, G);
  json report = report_header("star");
  report["config"] = describe(c.cfg);
  report["f"] = to_json(F, c.cfg.order);
  report["g"] = to_json(G, c.cfg.order);
  report["product"] = to_json(P, c.cfg.order);
  return finish(o, c.cfg, report, format_hseries(P, c.vars(), c.cfg.order) + "\n", kPass);
}

namespace {

// Presentation and quotient need a Poisson structure and an associative product.
std::optional<std::string> gate(const Context& c, const StarProductSpec& S, json& gates) {
  const auto jac = check_jacobi(c.cfg.poisson);
  gates["jacobi"] = to_json(jac);
  if (!jac.pass) {
    const auto& t = *jac.triple;
    return "the bivector is not Poisson: Jacobi fails at (" + std::to_string(t[0] + 1) + "," +
           std::to_string(t[1] + 1) + "," + std::to_string(t[2] + 1) + ") with Jacobiator " +
           format_poly(jac.jacobiator, c.vars()) + "\n";
  }
  const auto assoc = verify_associativity(S, c.cfg.degree, c.ex);
  gates["associativity"] = to_json(assoc);
  if (!assoc.pass) {
    const auto& t = assoc.counterexamples.front();
    return "the product is not associative mod h^" + std::to_string(S.trunc()) + " at " +
           tuple_text({t.f, t.g, t.k}, c.vars()) + "\n";
  }
  return std::nullopt;
}

}  // namespace

int cmd_present(const Options& o) {
  Context c = load(o);
  const StarProductSpec S = build_spec(c.cfg);
  json report = report_header("present");
  report["config"] = describe(c.cfg);
  json gates;
  if (auto why = gate(c, S, gates)) {
    report["gates"] = std::move(gates);
    report["status"] = "fail";
    return finish(o, c.cfg, report, "refused: " + *why, kFail);
  }
  report["gates"] = std::move(gates);
  const StarBasis B(S, c.cfg.degree, c.ex);
  const RelationSet R = emit_presentation(B, c.ex);
  std::string text;
  for (const auto& r : R.relations) text += format_relation(r, c.vars()) + "\n";
  report["presentation"] = to_json(R);
  report["generators"] = generator_names(c.vars());
  report["status"] = "pass";
  return finish(o, c.cfg, report, text, kPass);
}

int cmd_quotient(const Options& o) {
  Context c = load(o);
  const auto& vars = c.vars();
  const std::size_t d = c.cfg.degree;
  json report = report_header("quotient");
  report["config"] = describe(c.cfg);
  if (!c.cfg.has_ideal()) throw ConfigError(c.cfg.source, 1, 1, "quotient needs an [ideal] block");
  json hyp;
  std::ostringstream text;
  text << "quotient: " << (c.cfg.name.empty() ? c.cfg.source : c.cfg.name) << " ("
       << engine_name(c.cfg.engine) << ", N=" << c.cfg.trunc << ", d=" << d << ", order "
       << c.cfg.order.name() << ")\n";
  auto refuse = [&](int code, const std::string& why) {
    report["hypotheses"] = hyp;
    report["status"] = code == kFail ? "fail" : "inconclusive";
    text << (code == kFail ? "refused: " : "inconclusive: ") << why << "\n";
    return finish(o, c.cfg, report, text.str(), code);
  };

  const StarProductSpec S = build_spec(c.cfg);
  json gates;
  if (auto why = gate(c, S, gates)) {
    hyp["gates"] = std::move(gates);
    return refuse(kFail, *why);
  }
  hyp["gates"] = std::move(gates);

  const GroebnerBasis GB = buchberger(c.cfg.ideal, c.cfg.order);
  if (GB.is_unit()) return refuse(kFail, "the ideal is the whole ring (empty variety)");

  const auto pi = check_poisson_ideal(c.cfg.poisson, c.cfg.ideal, GB);
  hyp["poisson_ideal"] = to_json(pi);
  text << "poisson ideal: " << status(pi.pass) << "\n";
  if (!pi.pass)
    return refuse(kFail, "not a Poisson ideal: {" + format_poly(c.cfg.ideal[*pi.generator], vars) +
                             ", " + vars[*pi.variable] + "} reduces to " +
                             format_poly(pi.remainder, vars, c.cfg.order) + " modulo the ideal");

  const auto rank = jacobian_rank_check(c.cfg.ideal, c.cfg.order);
  hyp["maximal_rank"] = to_json(rank);
  text << "maximal rank: " << status(rank.pass) << "\n";
  if (!rank.pass)
    return refuse(kFail, "the generators are not of maximal rank on their zero set");

  Lifting L;
  try {
    L = build_lifting(c.cfg, S);
  } catch (const PreconditionError& e) {
    hyp["lifting"] = {{"strategy", strategy_name(c.cfg.lifting)}, {"status", "fail"}, {"reason", e.what()}};
    return refuse(kFail, e.what());
  }
  hyp["lifting"] = {{"strategy", strategy_name(L.strategy)}, {"status", "pass"},
                    {"liftings", [&] {
                       json a = json::array();
                       for (const auto& P : L.liftings) a.push_back(to_json(P, c.cfg.order));
                       return a;
                     }()}};
  text << "lifting (" << strategy_name(L.strategy) << "): pass\n";

  DeformedIdeal I(S, L);
  const auto two = check_two_sided(I, d, c.ex);
  hyp["two_sided"] = to_json(two);
  text << "two-sided: " << verdict_name(two.status) << " (bound " << two.bound_used << ")\n";
  if (two.status != Verdict::pass) {
    std::string why = "the lifted ideal is not shown two-sided: ";
    const std::string P = "P" + std::to_string(*two.generator + 1);
    const std::string m = mono(*two.multiplier, vars);
    why += two.missing_from == Side::left ? P + "*" + m + " is missing from the left ideal"
                                          : m + "*" + P + " is missing from the right ideal";
    why += " (" + two.reason + ")";
    return refuse(two.status == Verdict::fail ? kFail : kInconclusive, why);
  }
  report["hypotheses"] = hyp;

  const QuotientBasis Q = quotient_basis(GB, d);
  report["groebner"] = to_json(GB, Q.set);
  const ReductionSystem R = build_reduction_system(S, L, Q, c.ex);
  const std::size_t t = o.table_degree.value_or(d / 2);
  const MultiplicationTable T = multiplication_table(R, t, c.ex);
  const FlatnessReport F = verify_flatness(R, d, c.ex);

  report["basis_per_degree"] = Q.set.basis_per_degree;
  report["table_degree"] = t;
  report["multiplication_table"] = to_json(T);
  report["flatness"] = to_json(F);

  text << "basis per degree:";
  for (auto k : Q.set.basis_per_degree) text << " " << k;
  text << "\nmultiplication table: degree <= " << t << ", " << T.size() << " products\n";
  text << "flatness: " << verdict_name(F.overall()) << " (independence " << verdict_name(F.independence)
       << ", torsion " << verdict_name(F.torsion) << ", counts " << verdict_name(F.counts) << ")\n";
  for (const auto& n : F.notes) text << "  note: " << n << "\n";

  // generator commutators in the quotient, when the table reaches them
  const auto X = generator_names(vars);
  const std::size_t n = vars.size();
  if (t >= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const MultiIndex a({static_cast<std::uint32_t>(i)}), b({static_cast<std::uint32_t>(j)});
        auto ab = T.find({a, b}), ba = T.find({b, a});
        if (ab == T.end() || ba == T.end()) continue;
        HCoords comm = ab->second;
        add_scaled(comm, ba->second, HScalar(c.cfg.trunc, -1));
        text << "[" << X[i] << ", " << X[j] << "] = " << format_coords(canonical(comm), vars) << "\n";
      }
    }
  }

  const Verdict v = F.overall();
  report["status"] = verdict_name(v);
  return finish(o, c.cfg, report, text.str(),
                v == Verdict::pass ? kPass : v == Verdict::fail ? kFail : kInconclusive);
}

int cmd_verify(const Options& o) {
  Context c = load(o);
  const std::size_t d = c.cfg.degree;
  const StarProductSpec S = build_spec(c.cfg);
  const StarBasis B(S, d, c.ex);
  const InverseCheck inv = check_inverse(B.expansion(), B.inverse(), d);

  // coords(expand(e_J)) = e_J and expand(coords(x^J)) = x^J
  const std::size_t n = S.dimension(), N = S.trunc();
  std::size_t checked = 0, failures = 0;
  json first_failure;
  for (const auto& J : multi_indices_up_to(n, d)) {
    ++checked;
    const HCoords e{{J, HScalar(N, 1)}};
    const HSeries x = HSeries::from_poly(Poly::term(J.to_monomial(n), 1), N);
    const bool ok = canonical(B.coords(B.expand(e))) == e && B.expand(B.coords(x)) == x;
    if (!ok && failures++ == 0) first_failure = to_json(J);
  }
  const bool pass = inv.pass() && failures == 0;

  json report = report_header("verify");
  report["config"] = describe(c.cfg);
  report["working_bound"] = B.working_bound();
  report["expansion_nonzeros"] = B.expansion().nonzeros();
  report["inverse"] = to_json(inv);
  report["round_trip"] = {{"status", status(failures == 0)}, {"checked", checked}, {"failures", failures}};
  if (failures) report["round_trip"]["first_failure"] = first_failure;
  report["status"] = status(pass);

  std::ostringstream text;
  text << "inverse: " << status(inv.pass()) << " (A*A^-1 " << status(inv.left) << ", A^-1*A "
       << status(inv.right) << ", " << inv.rows_checked << " rows)\n";
  text << "round trip: " << status(failures == 0) << " (" << checked << " multi-indices, degree <= "
       << d << ")\n";
  return finish(o, c.cfg, report, text.str(), pass ? kPass : kFail);
}

}  // namespace dq::cli
