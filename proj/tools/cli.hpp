#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ihara::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDomainRejection = 1,  ///< inadmissible graph, argument outside the zeta domain
  kInputError = 2,       ///< unreadable or malformed input, bad flags
};

enum class OutputFormat { Json, Text };

struct RunConfig {
  std::string graph_path;
  std::size_t order = 32;
  std::optional<long double> a;
  std::optional<long double> a_fraction;  ///< a = fraction / lambda; 0.5 when neither is set
  long double tol = 1e-12L;
  OutputFormat format = OutputFormat::Json;
  std::string dist_path;
  std::optional<long double> q;
  std::size_t max_length = 8;
};

int cmd_validate(const RunConfig& cfg, std::ostream& out);
int cmd_zeta(const RunConfig& cfg, std::ostream& out);
int cmd_entropy(const RunConfig& cfg, std::ostream& out);
int cmd_max(const RunConfig& cfg, std::ostream& out);
int cmd_primes(const RunConfig& cfg, std::ostream& out);
int cmd_group_law(const RunConfig& cfg, std::ostream& out);
int cmd_compare(const RunConfig& cfg, std::ostream& out);

/// Parses argv-style arguments (without the program name), dispatches, and
/// maps library errors to exit codes. Diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ihara::cli
