#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dq/errors.hpp"
#include "dq/gauge.hpp"
#include "dq/json_io.hpp"
#include "dq/quotient.hpp"
#include "dq/star.hpp"

namespace dq {

/// Config error with a 1-based line and column.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& source, std::size_t line, std::size_t column, const std::string& msg)
      : Error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// Parsed TOML subset: tables, arrays of tables, dotted and quoted keys,
/// strings, integers, booleans, arrays and inline tables. Every value keeps
/// the position where it was written, keyed by its path ("a.b[2].c").
struct TomlDocument {
  json root = json::object();
  std::map<std::string, std::pair<std::size_t, std::size_t>> positions;
};
TomlDocument parse_toml(std::string_view text, const std::string& source = "<config>");

struct ProblemConfig {
  std::string source;
  std::string name;
  std::vector<std::string> variables;
  Engine engine = Engine::moyal;
  PoissonStructure poisson;
  /// Custom B_k blocks (order >= 2), or all B_k for the tabulated engine.
  std::vector<BidiffOperator> bidiff;
  /// gauge[k-1] = T_k; empty for none.
  std::vector<DiffOperator> gauge;
  std::size_t trunc = 3;
  std::size_t degree = 3;
  MonomialOrder order;
  std::vector<Poly> ideal;
  LiftingStrategy lifting = LiftingStrategy::identity;
  /// Custom liftings as written; parsed against the final truncation.
  std::vector<std::string> liftings;
  std::string json_output;
  std::string text_output;

  std::size_t dimension() const { return variables.size(); }
  bool has_ideal() const { return !ideal.empty(); }
};

ProblemConfig parse_config(std::string_view text, const std::string& source = "<config>");
ProblemConfig load_config(const std::string& path);

/// Star product described by the config (gauge applied last). Throws
/// PreconditionError when the engine does not fit the structure.
StarProductSpec build_spec(const ProblemConfig& c);
/// Liftings of the ideal generators under the configured strategy.
Lifting build_lifting(const ProblemConfig& c, const StarProductSpec& S);

}  // namespace dq
