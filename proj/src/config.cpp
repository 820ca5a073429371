#include "dq/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "dq/errors.hpp"
#include "dq/parser.hpp"

namespace dq {

namespace {

// ---------------------------------------------------------------------------
// TOML subset reader

class TomlReader {
 public:
  TomlReader(std::string_view text, std::string source) : s_(text), source_(std::move(source)) {}

  TomlDocument run() {
    json* table = &doc_.root;
    std::string table_path;
    while (true) {
      skip_blank_lines();
      if (eof()) break;
      if (peek() == '[') {
        const auto at = pos_;
        const bool array = peek(1) == '[';
        pos_ += array ? 2 : 1;
        skip_ws();
        auto keys = key_path();
        skip_ws();
        expect(']');
        if (array) expect(']');
        end_of_line();
        table = open_table(keys, array, at, table_path);
        continue;
      }
      assignment(*table, table_path);
      end_of_line();
    }
    return std::move(doc_);
  }

 private:
  bool eof() const { return pos_ >= s_.size(); }
  char peek(std::size_t k = 0) const { return pos_ + k < s_.size() ? s_[pos_ + k] : '\0'; }

  std::pair<std::size_t, std::size_t> where(std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    auto [l, c] = where(at);
    throw ConfigError(source_, l, c, msg);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }
  void skip_comment() {
    if (peek() == '#')
      while (!eof() && peek() != '\n') ++pos_;
  }
  void skip_blank_lines() {
    while (true) {
      skip_ws();
      skip_comment();
      if (peek() == '\r') ++pos_;
      if (peek() == '\n') {
        ++pos_;
        continue;
      }
      return;
    }
  }
  // whitespace, comments and newlines inside arrays
  void skip_array_space() { skip_blank_lines(); }

  void end_of_line() {
    skip_ws();
    skip_comment();
    if (peek() == '\r') ++pos_;
    if (eof()) return;
    if (peek() != '\n') fail(std::string("unexpected '") + peek() + "' after value");
    ++pos_;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string key_part() {
    if (peek() == '"' || peek() == '\'') return string_value();
    const auto start = pos_;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-'))
      ++pos_;
    if (pos_ == start) fail("expected a key");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::vector<std::string> key_path() {
    std::vector<std::string> keys{key_part()};
    while (true) {
      skip_ws();
      if (peek() != '.') return keys;
      ++pos_;
      skip_ws();
      keys.push_back(key_part());
    }
  }

  static std::string join(const std::string& base, const std::string& key) {
    return base.empty() ? key : base + "." + key;
  }

  json* open_table(const std::vector<std::string>& keys, bool array, std::size_t at,
                   std::string& path_out) {
    json* t = &doc_.root;
    std::string path, plain;  // with and without array indices
    for (std::size_t i = 0; i < keys.size(); ++i) {
      path = join(path, keys[i]);
      plain = join(plain, keys[i]);
      const bool last = i + 1 == keys.size();
      json& slot = (*t)[keys[i]];
      if (last && array) {
        if (slot.is_null()) {
          slot = json::array();
          array_tables_.insert(plain);
        } else if (!array_tables_.count(plain)) {
          fail("'" + path + "' is not an array of tables", at);
        }
        slot.push_back(json::object());
        path += "[" + std::to_string(slot.size() - 1) + "]";
        doc_.positions.emplace(path, where(at));
        t = &slot.back();
        break;
      }
      if (slot.is_null()) {
        slot = json::object();
        doc_.positions.emplace(path, where(at));
      }
      if (slot.is_array() && array_tables_.count(plain)) {
        path += "[" + std::to_string(slot.size() - 1) + "]";
        t = &slot.back();
      } else if (slot.is_object()) {
        t = &slot;
      } else {
        fail("key '" + path + "' already holds a value", at);
      }
      if (last && !defined_.insert(path).second) fail("table '" + path + "' defined twice", at);
    }
    path_out = path;
    return t;
  }

  void assignment(json& table, const std::string& table_path) {
    const auto at = pos_;
    auto keys = key_path();
    skip_ws();
    expect('=');
    skip_ws();
    json* t = &table;
    std::string path = table_path;
    for (std::size_t i = 0; i + 1 < keys.size(); ++i) {
      path = join(path, keys[i]);
      json& slot = (*t)[keys[i]];
      if (slot.is_null()) {
        slot = json::object();
        doc_.positions.emplace(path, where(at));
      }
      if (!slot.is_object()) fail("key '" + path + "' already holds a value", at);
      t = &slot;
    }
    path = join(path, keys.back());
    if (t->contains(keys.back())) fail("duplicate key '" + path + "'", at);
    (*t)[keys.back()] = value(path);
  }

  json value(const std::string& path) {
    const auto at = pos_;
    doc_.positions.emplace(path, where(at));
    const char c = peek();
    if (c == '"' || c == '\'') return string_value();
    if (c == '[') return array_value(path);
    if (c == '{') return inline_table(path);
    if (s_.substr(pos_, 4) == "true") {
      pos_ += 4;
      return true;
    }
    if (s_.substr(pos_, 5) == "false") {
      pos_ += 5;
      return false;
    }
    if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) return integer_value();
    fail("expected a value (string, integer, boolean, array or inline table)");
  }

  json integer_value() {
    const auto start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    std::string digits;
    while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_')) {
      if (peek() != '_') digits += peek();
      ++pos_;
    }
    if (digits.empty()) fail("expected digits", start);
    if (peek() == '.' || peek() == 'e' || peek() == 'E')
      fail("floating-point values are not supported; write rationals as strings", start);
    if (digits.size() > 18) fail("integer out of range", start);
    long long v = std::stoll(digits);
    return s_[start] == '-' ? -v : v;
  }

  std::string string_value() {
    const char q = peek();
    const auto start = pos_;
    ++pos_;
    std::string out;
    while (true) {
      if (eof() || peek() == '\n') fail("unterminated string", start);
      char c = s_[pos_++];
      if (c == q) return out;
      if (c == '\\' && q == '"') {
        if (eof()) fail("unterminated string", start);
        char e = s_[pos_++];
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          default: fail(std::string("unsupported escape '\\") + e + "'", pos_ - 2);
        }
        continue;
      }
      out += c;
    }
  }

  json array_value(const std::string& path) {
    ++pos_;
    json a = json::array();
    while (true) {
      skip_array_space();
      if (peek() == ']') {
        ++pos_;
        return a;
      }
      a.push_back(value(path + "[" + std::to_string(a.size()) + "]"));
      skip_array_space();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() != ']') fail("expected ',' or ']' in array");
    }
  }

  json inline_table(const std::string& path) {
    ++pos_;
    json t = json::object();
    skip_ws();
    if (peek() == '}') {
      ++pos_;
      return t;
    }
    while (true) {
      skip_ws();
      assignment(t, path);
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect('}');
      return t;
    }
  }

  std::string_view s_;
  std::string source_;
  std::size_t pos_ = 0;
  TomlDocument doc_;
  std::set<std::string> defined_;
  std::set<std::string> array_tables_;
};

// ---------------------------------------------------------------------------
// Problem interpretation

class Interpreter {
 public:
  Interpreter(const TomlDocument& doc, std::string source) : doc_(doc), source_(std::move(source)) {}

  ProblemConfig run() {
    const json& r = doc_.root;
    allow(r, "", {"name", "variables", "dimension", "engine", "trunc", "degree", "order", "poisson",
                  "star", "ideal", "gauge", "output"});
    ProblemConfig c;
    c.source = source_;
    if (r.contains("name")) c.name = str(r["name"], "name");
    if (!r.contains("variables")) fail("", "missing required key 'variables'");
    const json& vars = array(r["variables"], "variables");
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const auto p = "variables[" + std::to_string(i) + "]";
      std::string v = str(vars[i], p);
      if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_') ||
          !std::all_of(v.begin(), v.end(), [](char ch) {
            return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
          }))
        fail(p, "variable name '" + v + "' is not an identifier");
      if (v == "h") fail(p, "variable name 'h' is reserved for the deformation parameter");
      if (std::find(c.variables.begin(), c.variables.end(), v) != c.variables.end())
        fail(p, "duplicate variable '" + v + "'");
      c.variables.push_back(std::move(v));
    }
    if (c.variables.empty()) fail("variables", "at least one variable is required");
    const std::size_t n = c.variables.size();
    if (r.contains("dimension") && integer(r["dimension"], "dimension", 1) != static_cast<long long>(n))
      fail("dimension", "dimension does not match the number of variables");
    if (r.contains("engine")) {
      try {
        c.engine = parse_engine(str(r["engine"], "engine"));
      } catch (const ConfigError&) {
        throw;
      } catch (const Error& e) {
        fail("engine", e.what());
      }
    }
    if (r.contains("trunc")) c.trunc = static_cast<std::size_t>(integer(r["trunc"], "trunc", 1));
    if (r.contains("degree")) c.degree = static_cast<std::size_t>(integer(r["degree"], "degree", 0));
    if (r.contains("order")) {
      try {
        c.order = MonomialOrder::parse(str(r["order"], "order"));
      } catch (const ConfigError&) {
        throw;
      } catch (const Error& e) {
        fail("order", e.what());
      }
    }

    c.poisson = PoissonStructure::zero(n);
    if (r.contains("poisson")) {
      const json& p = table(r["poisson"], "poisson");
      allow(p, "poisson", {"alpha"});
      if (p.contains("alpha")) c.poisson = alpha(table(p["alpha"], "poisson.alpha"), c.variables);
    }

    if (r.contains("star")) {
      const json& s = table(r["star"], "star");
      allow(s, "star", {"bidiff"});
      if (s.contains("bidiff")) c.bidiff = bidiff(s["bidiff"], c.variables);
    }
    if (!c.bidiff.empty() && c.engine != Engine::custom && c.engine != Engine::tabulated)
      fail("star.bidiff", "bidifferential blocks need engine = \"custom\" or \"tabulated\"");

    if (r.contains("ideal")) {
      const json& I = table(r["ideal"], "ideal");
      allow(I, "ideal", {"generators", "lifting", "liftings"});
      if (!I.contains("generators")) fail("ideal", "missing 'ideal.generators'");
      const json& g = array(I["generators"], "ideal.generators");
      for (std::size_t i = 0; i < g.size(); ++i)
        c.ideal.push_back(poly(g[i], "ideal.generators[" + std::to_string(i) + "]", c.variables));
      if (c.ideal.empty()) fail("ideal.generators", "at least one generator is required");
      if (I.contains("lifting")) {
        try {
          c.lifting = parse_strategy(str(I["lifting"], "ideal.lifting"));
        } catch (const ConfigError&) {
          throw;
        } catch (const Error& e) {
          fail("ideal.lifting", e.what());
        }
      }
      if (I.contains("liftings")) {
        const json& l = array(I["liftings"], "ideal.liftings");
        for (std::size_t i = 0; i < l.size(); ++i) {
          const auto p = "ideal.liftings[" + std::to_string(i) + "]";
          c.liftings.push_back(str(l[i], p));
          try {
            parse_hseries(c.liftings.back(), c.variables, 1);
          } catch (const ParseError& e) {
            fail_at(p, e);
          }
        }
        if (!I.contains("lifting")) c.lifting = LiftingStrategy::custom;
      }
      if (c.lifting == LiftingStrategy::custom && c.liftings.size() != c.ideal.size())
        fail("ideal", "custom lifting needs one entry of 'ideal.liftings' per generator");
      if (c.lifting != LiftingStrategy::custom && !c.liftings.empty())
        fail("ideal.liftings", "'ideal.liftings' is only used with lifting = \"custom\"");
    }

    if (r.contains("gauge")) {
      const json& g = table(r["gauge"], "gauge");
      allow(g, "gauge", {"terms"});
      if (g.contains("terms")) c.gauge = gauge(g["terms"], c.variables);
    }

    if (r.contains("output")) {
      const json& o = table(r["output"], "output");
      allow(o, "output", {"json", "text"});
      if (o.contains("json")) c.json_output = str(o["json"], "output.json");
      if (o.contains("text")) c.text_output = str(o["text"], "output.text");
    }
    return c;
  }

 private:
  std::pair<std::size_t, std::size_t> at(const std::string& path) const {
    auto it = doc_.positions.find(path);
    return it == doc_.positions.end() ? std::make_pair(std::size_t(1), std::size_t(1)) : it->second;
  }

  [[noreturn]] void fail(const std::string& path, const std::string& msg) const {
    auto [l, c] = at(path);
    throw ConfigError(source_, l, c, msg);
  }

  // Parse errors inside a string value point into the string itself.
  [[noreturn]] void fail_at(const std::string& path, const ParseError& e) const {
    auto [l, c] = at(path);
    throw ConfigError(source_, l, c + 1 + e.position(), std::string("in '") + path + "': " + e.what());
  }

  void allow(const json& t, const std::string& path, std::initializer_list<const char*> keys) const {
    for (const auto& [k, v] : t.items()) {
      if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; }))
        fail(path.empty() ? k : path + "." + k, "unknown key '" + k + "'");
    }
  }

  const json& table(const json& j, const std::string& path) const {
    if (!j.is_object()) fail(path, "'" + path + "' must be a table");
    return j;
  }
  const json& array(const json& j, const std::string& path) const {
    if (!j.is_array()) fail(path, "'" + path + "' must be an array");
    return j;
  }
  std::string str(const json& j, const std::string& path) const {
    if (!j.is_string()) fail(path, "'" + path + "' must be a string");
    return j.get<std::string>();
  }
  long long integer(const json& j, const std::string& path, long long min) const {
    if (!j.is_number_integer()) fail(path, "'" + path + "' must be an integer");
    const auto v = j.get<long long>();
    if (v < min) fail(path, "'" + path + "' must be at least " + std::to_string(min));
    return v;
  }
  Poly poly(const json& j, const std::string& path, const std::vector<std::string>& vars) const {
    const std::string text = str(j, path);
    try {
      return parse_poly(text, vars);
    } catch (const ParseError& e) {
      fail_at(path, e);
    }
  }
  Monomial exponents(const json& j, const std::string& path, std::size_t n) const {
    array(j, path);
    if (j.size() != n) fail(path, "exponent vector must have " + std::to_string(n) + " entries");
    std::vector<std::uint32_t> e;
    for (std::size_t i = 0; i < n; ++i)
      e.push_back(static_cast<std::uint32_t>(integer(j[i], path + "[" + std::to_string(i) + "]", 0)));
    return Monomial(std::move(e));
  }

  PoissonStructure alpha(const json& t, const std::vector<std::string>& vars) const {
    const std::size_t n = vars.size();
    std::map<std::pair<std::size_t, std::size_t>, Poly> upper;
    for (const auto& [key, v] : t.items()) {
      const std::string path = "poisson.alpha." + key;
      std::size_t i = 0, j = 0;
      char comma = 0;
      std::istringstream in(key);
      if (!(in >> i >> comma >> j) || comma != ',' || !in.eof())
        fail(path, "Poisson entry key must look like \"i,j\"");
      if (i < 1 || j < 1 || i > n || j > n) fail(path, "Poisson entry index out of range");
      if (i == j) fail(path, "diagonal Poisson entries vanish; remove \"" + key + "\"");
      Poly a = poly(v, path, vars);
      if (i > j) {
        std::swap(i, j);
        a = -a;
      }
      if (!upper.emplace(std::make_pair(i - 1, j - 1), std::move(a)).second)
        fail(path, "Poisson entry (" + std::to_string(i) + "," + std::to_string(j) +
                       ") given twice (both orders)");
    }
    return PoissonStructure::from_upper(n, upper);
  }

  std::vector<BidiffOperator> bidiff(const json& a, const std::vector<std::string>& vars) const {
    array(a, "star.bidiff");
    std::map<unsigned, BidiffOperator> ops;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string p = "star.bidiff[" + std::to_string(i) + "]";
      const json& t = table(a[i], p);
      allow(t, p, {"order", "coeff", "left", "right"});
      for (const char* k : {"order", "coeff", "left", "right"})
        if (!t.contains(k)) fail(p, std::string("missing '") + k + "'");
      const auto k = static_cast<unsigned>(integer(t["order"], p + ".order", 1));
      auto& op = ops[k];
      op.order = k;
      op.terms.push_back({poly(t["coeff"], p + ".coeff", vars),
                          exponents(t["left"], p + ".left", vars.size()),
                          exponents(t["right"], p + ".right", vars.size())});
    }
    std::vector<BidiffOperator> out;
    for (auto& [k, op] : ops) out.push_back(std::move(op));
    return out;
  }

  std::vector<DiffOperator> gauge(const json& a, const std::vector<std::string>& vars) const {
    array(a, "gauge.terms");
    std::vector<DiffOperator> T;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string p = "gauge.terms[" + std::to_string(i) + "]";
      const json& t = table(a[i], p);
      allow(t, p, {"order", "coeff", "deriv"});
      for (const char* k : {"order", "coeff", "deriv"})
        if (!t.contains(k)) fail(p, std::string("missing '") + k + "'");
      const auto k = static_cast<std::size_t>(integer(t["order"], p + ".order", 1));
      if (T.size() < k) T.resize(k);
      T[k - 1].terms.push_back({poly(t["coeff"], p + ".coeff", vars),
                                exponents(t["deriv"], p + ".deriv", vars.size())});
    }
    return T;
  }

  const TomlDocument& doc_;
  std::string source_;
};

}  // namespace

TomlDocument parse_toml(std::string_view text, const std::string& source) {
  return TomlReader(text, source).run();
}

ProblemConfig parse_config(std::string_view text, const std::string& source) {
  const TomlDocument doc = parse_toml(text, source);
  return Interpreter(doc, source).run();
}

ProblemConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

StarProductSpec build_spec(const ProblemConfig& c) {
  const std::size_t N = c.trunc;
  StarProductSpec S;
  switch (c.engine) {
    case Engine::moyal: S = StarProductSpec::moyal(c.poisson, N); break;
    case Engine::gutt: S = StarProductSpec::gutt(c.poisson, N); break;
    case Engine::custom: {
      std::vector<BidiffOperator> higher;
      for (const auto& op : c.bidiff)
        if (op.order < N) higher.push_back(op);
      S = StarProductSpec::custom(c.poisson, N, higher);
      break;
    }
    case Engine::tabulated: {
      std::vector<BidiffOperator> all;
      for (const auto& op : c.bidiff)
        if (op.order < N) all.push_back(op);
      S = StarProductSpec::tabulated(c.poisson, N, all);
      break;
    }
  }
  if (c.gauge.empty()) return S;
  std::vector<DiffOperator> T(c.gauge.begin(), c.gauge.begin() + std::min(c.gauge.size(), N - 1));
  return gauge_transform(S, GaugeTransform(c.dimension(), N, std::move(T)));
}

Lifting build_lifting(const ProblemConfig& c, const StarProductSpec& S) {
  if (c.lifting != LiftingStrategy::custom) return lift_generators(S, c.ideal, c.lifting);
  std::vector<HSeries> L;
  for (const auto& text : c.liftings) L.push_back(parse_hseries(text, c.variables, S.trunc()));
  return custom_lifting(c.ideal, L);
}

}  // namespace dq
