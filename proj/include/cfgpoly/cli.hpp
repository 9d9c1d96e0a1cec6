#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cfgpoly/stability.hpp"

namespace cfgpoly::cli {

enum class Format { json, csv, text };

struct RunConfig {
  std::string command;
  /// poly: grammar kind or An..Tn; enumerate: structure family; verify:
  /// optional filter whose meaning depends on the check.
  std::string family;
  std::optional<unsigned> n;
  std::optional<unsigned> r;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 42;
  std::optional<Format> format;
  std::optional<std::string> output;
  Via via = Via::grammar;
  std::vector<std::string> stats;
  std::vector<std::string> checks;
  bool timings = false;
  std::optional<unsigned> max_n;
  SamplingBox box;
};

/// Bad flags, unknown names, bounds violations: exit code 2.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// CFGPOLY_SEED if set to a valid unsigned integer, else 42.
std::uint64_t default_seed();

std::optional<Format> parse_format(std::string_view name);

/// Largest n accepted for a family or kind name before --max-n overrides.
unsigned default_max_n(std::string_view family);

/// Throws usage_error when n exceeds the configured bound.
void check_bound(const RunConfig& config, std::string_view family, unsigned n);

std::optional<GrammarKind> grammar_kind_for(std::string_view family_or_kind);

struct CheckResult {
  std::string name;
  bool passed = false;
  nlohmann::ordered_json details;
  double seconds = 0;
};

const std::vector<std::string>& check_names();

/// Throws usage_error for unknown names or filters.
CheckResult run_check(const std::string& name, const RunConfig& config);

int cmd_poly(const RunConfig& config, std::ostream& out);
int cmd_enumerate(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);

/// Full command line entry point; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cfgpoly::cli
