#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ultrafid::cli {

enum class Command { eval, invert, phi, certify, identities, density, beta_check, converge };
enum class Format { csv, json };

struct RunConfig {
  Command command = Command::eval;
  int n = 1;
  double r_min = 1e-2;
  double r_max = 1e2;
  int nr = 64;
  int ntheta = 64;
  std::optional<double> x_min;
  std::optional<double> x_max;
  std::optional<int> nx;
  double eps = 1e-6;
  std::optional<double> tol;
  std::vector<int> n_list{1, 2, 5, 10, 20, 50};
  std::string out;  // empty: standard output
  std::optional<Format> format;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parsed configuration, or the exit code to return immediately (help, usage error).
using ParseOutcome = std::variant<RunConfig, int>;

[[nodiscard]] ParseOutcome parse(int argc, const char* const* argv, std::ostream& out,
                                 std::ostream& err);

/// Checks the RunConfig invariants; returns an error message or nothing.
[[nodiscard]] std::optional<std::string> validate(const RunConfig& config);

/// Executes a command: writes the artifact (to config.out atomically, or to
/// `out`) and returns 0 on success, 1 on a failed check, 2 on a config error.
[[nodiscard]] int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ultrafid::cli
