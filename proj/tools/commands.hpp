#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace dq::cli {

enum Exit : int { kPass = 0, kFail = 1, kInconclusive = 2, kUsage = 3 };

struct Options {
  std::string config;
  std::optional<std::string> order;
  std::optional<std::size_t> trunc;
  std::optional<std::size_t> degree;
  int jobs = 0;
  /// Report path; "-" prints JSON on stdout instead of the text summary.
  std::string json_out;
  std::string f, g;
  std::optional<std::size_t> table_degree;
};

int cmd_check(const Options& o);
int cmd_star(const Options& o);
int cmd_present(const Options& o);
int cmd_quotient(const Options& o);
int cmd_verify(const Options& o);

}  // namespace dq::cli
