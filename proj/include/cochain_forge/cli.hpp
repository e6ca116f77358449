#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cochain_forge {

namespace exit_code {
inline constexpr int verified = 0;
inline constexpr int failed = 1;
inline constexpr int malformed = 2;
} // namespace exit_code

struct CommandConfig {
  std::string subcommand;
  /// "witt", "virasoro" or a custom algebra file; empty means "from the input".
  std::string algebra;
  std::string coeffs = "adjoint";
  std::optional<std::int64_t> radius;
  std::int64_t margin = 4;
  std::int64_t degree = 0;
  /// random-coboundary: explicit degrees, or a random mix within max_degree.
  std::vector<std::int64_t> degrees;
  std::int64_t max_degree = 3;
  std::string input;
  std::string output;
  std::string phi_output;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string expect = "feasible";
  std::vector<int> criteria;
  std::size_t samples = 100;
};

/// Executes a validated configuration. Returns 0 when verified, 1 when a
/// verification failed and 2 for malformed input.
int run(const CommandConfig &config, std::ostream &out, std::ostream &err);

/// Parses the command line and calls run().
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace cochain_forge
