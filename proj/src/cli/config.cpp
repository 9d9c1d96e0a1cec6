#include <cstdlib>
#include <string>

#include "cfgpoly/cli.hpp"

namespace cfgpoly::cli {

namespace {

std::string normalize(std::string_view name) {
  std::string s(name);
  for (char& c : s)
    if (c == '-') c = '_';
  return s;
}

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv("CFGPOLY_SEED");
  if (env == nullptr || *env == '\0') return 42;
  try {
    std::size_t used = 0;
    const std::string text(env);
    if (text.front() == '-') return 42;
    const unsigned long long v = std::stoull(text, &used);
    return used == text.size() ? v : 42;
  } catch (const std::exception&) {
    return 42;
  }
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  return std::nullopt;
}

std::optional<GrammarKind> grammar_kind_for(std::string_view family_or_kind) {
  if (auto k = parse_grammar_kind(family_or_kind)) return k;
  if (auto f = parse_structure_family(family_or_kind)) {
    switch (*f) {
      case StructureFamily::partition:
        return GrammarKind::partition_multi;
      case StructureFamily::permutation:
        return GrammarKind::eulerian_multi;
      case StructureFamily::stirling:
        return GrammarKind::stirling2_multi;
      case StructureFamily::legendre:
        return GrammarKind::legendre;
      case StructureFamily::marked_stirling:
        return GrammarKind::marked_multi;
      default:
        return std::nullopt;
    }
  }
  if (auto u = parse_univariate_kind(family_or_kind)) return source_family(*u);
  return std::nullopt;
}

unsigned default_max_n(std::string_view family) {
  const std::string f = normalize(family);
  if (f == "partition" || f == "partition_multi") return 10;
  if (f == "permutation" || f == "eulerian_multi") return 9;
  if (f == "stirling" || f == "stirling2_multi" || f == "marked_stirling" || f == "marked_multi") return 7;
  if (f == "legendre") return 4;
  if (f == "r_stirling") return 6;
  if (f == "partition_uni" || f == "eulerian_uni" || f == "stirling2_uni" || f == "marked_uni") return 40;
  if (auto u = parse_univariate_kind(family)) return default_max_n(to_string(source_family(*u)));
  return 6;
}

void check_bound(const RunConfig& config, std::string_view family, unsigned n) {
  const unsigned bound = config.max_n.value_or(default_max_n(family));
  if (n > bound)
    throw usage_error("n = " + std::to_string(n) + " exceeds the bound " + std::to_string(bound) + " for " +
                      std::string(family) + " (raise it with --max-n)");
}

}  // namespace cfgpoly::cli
