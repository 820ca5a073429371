#include "dq/parser.hpp"

#include <algorithm>
#include <cctype>

#include "dq/errors.hpp"

namespace dq {

namespace {

constexpr unsigned kMaxExponent = 1000;

enum class Tok { integer, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::integer: return "integer";
    case Tok::ident: return "identifier";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::star: return "'*'";
    case Tok::slash: return "'/'";
    case Tok::caret: return "'^'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::end: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::integer, i, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::ident, i, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    Tok k;
    switch (ch) {
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '*': k = Tok::star; break;
      case '/': k = Tok::slash; break;
      case '^': k = Tok::caret; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      default:
        throw ParseError(std::string("unexpected character '") + ch + "'", i,
                         "integer, identifier, operator or parenthesis");
    }
    out.push_back({k, i, std::string(1, ch)});
    ++i;
  }
  out.push_back({Tok::end, s.size(), ""});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars)
      : toks_(tokenize(text)), vars_(vars) {}

  Poly parse() {
    Poly p = expr();
    if (peek().kind != Tok::end) fail("unexpected " + std::string(describe(peek().kind)),
                                      "operator or end of input");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg, const std::string& expected) const {
    throw ParseError(msg, peek().pos, expected);
  }

  Poly expr() {
    Poly acc = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = next().kind == Tok::minus;
      Poly t = term();
      if (minus) acc -= t; else acc += t;
    }
    return acc;
  }

  Poly term() {
    Poly acc = unary();
    while (true) {
      if (peek().kind == Tok::star) {
        next();
        acc = acc * unary();
      } else if (peek().kind == Tok::slash) {
        next();
        const auto& t = peek();
        if (t.kind != Tok::integer) fail("unexpected " + std::string(describe(t.kind)), "integer");
        mpz_class d(next().text);
        if (d == 0) throw ParseError("division by zero", t.pos, "nonzero integer");
        acc *= Rational(mpz_class(1), d);
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (peek().kind == Tok::minus) {
      next();
      return -unary();
    }
    if (peek().kind == Tok::plus) {
      next();
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (peek().kind != Tok::caret) return base;
    next();
    const auto& t = peek();
    if (t.kind != Tok::integer)
      fail("unexpected " + std::string(describe(t.kind)), "non-negative integer exponent");
    mpz_class e(next().text);
    if (e > kMaxExponent) throw ParseError("exponent too large", t.pos, "exponent <= 1000");
    return pow(base, static_cast<unsigned>(e.get_ui()));
  }

  Poly primary() {
    const auto& t = peek();
    switch (t.kind) {
      case Tok::integer: {
        next();
        return Poly(vars_.size(), Rational(mpz_class(t.text)));
      }
      case Tok::ident: {
        auto it = std::find(vars_.begin(), vars_.end(), t.text);
        if (it == vars_.end())
          throw ParseError("unknown variable '" + t.text + "'", t.pos, "one of the declared variables");
        next();
        return Poly::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
      }
      case Tok::lparen: {
        next();
        Poly p = expr();
        if (peek().kind != Tok::rparen) fail("unexpected " + std::string(describe(peek().kind)), "')'");
        next();
        return p;
      }
      default:
        fail("unexpected " + std::string(describe(t.kind)), "integer, identifier or '('");
    }
  }

  std::vector<Token> toks_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text, variables).parse();
}

HSeries parse_hseries(std::string_view text, const std::vector<std::string>& variables,
                      std::size_t N) {
  if (std::find(variables.begin(), variables.end(), "h") != variables.end())
    throw Error("variable name 'h' is reserved for the deformation parameter");
  auto ext = variables;
  ext.push_back("h");
  const Poly p = parse_poly(text, ext);
  const std::size_t n = variables.size();
  HSeries F(n, N);
  for (const auto& [m, c] : p.terms()) {
    const auto k = m[n];
    if (k >= N) continue;
    std::vector<std::uint32_t> e(m.exponents().begin(), m.exponents().end() - 1);
    F[k].add_term(Monomial(std::move(e)), c);
  }
  return F;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  Rational q;
  if (q.set_str(std::string(text), 10) != 0 || q.get_den() == 0)
    throw Error("malformed rational '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

void append_term(std::string& out, const Rational& c, const std::vector<std::string>& factors) {
  if (c == 0) return;
  const bool neg = c < 0;
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  const Rational a = abs(c);
  std::string body;
  for (const auto& f : factors) {
    if (!body.empty()) body += "*";
    body += f;
  }
  if (body.empty()) {
    out += format_rational(a);
  } else if (a == 1) {
    out += body;
  } else {
    out += format_rational(a) + "*" + body;
  }
}

std::vector<std::string> monomial_factors(const Monomial& m,
                                          const std::vector<std::string>& variables) {
  std::vector<std::string> f;
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    if (m[i] == 0) continue;
    f.push_back(m[i] == 1 ? variables.at(i) : variables.at(i) + "^" + std::to_string(m[i]));
  }
  return f;
}

std::string format_poly(const Poly& f, const std::vector<std::string>& variables,
                        const MonomialOrder& order) {
  if (variables.size() != f.dimension())
    throw DimensionError("variable name list does not match polynomial dimension");
  std::string out;
  for (const auto& [m, c] : f.sorted_terms(order)) append_term(out, c, monomial_factors(m, variables));
  return out.empty() ? "0" : out;
}

namespace {

std::string h_factor(std::size_t k) {
  return k == 1 ? std::string("h") : "h^" + std::to_string(k);
}

}  // namespace

std::string format_hseries(const HSeries& F, const std::vector<std::string>& variables,
                           const MonomialOrder& order) {
  std::string out;
  for (std::size_t k = 0; k < F.trunc(); ++k) {
    for (const auto& [m, c] : F[k].sorted_terms(order)) {
      auto factors = monomial_factors(m, variables);
      if (k > 0) factors.insert(factors.begin(), h_factor(k));
      append_term(out, c, factors);
    }
  }
  return out.empty() ? "0" : out;
}

std::string format_hscalar(const HScalar& s) {
  std::string out;
  for (std::size_t k = 0; k < s.trunc(); ++k) {
    std::vector<std::string> f;
    if (k > 0) f.push_back(h_factor(k));
    append_term(out, s[k], f);
  }
  return out.empty() ? "0" : out;
}

}  // namespace dq
