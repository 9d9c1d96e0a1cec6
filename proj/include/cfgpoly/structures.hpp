#pragma once

// Brute-force combinatorial structures: set partitions, permutations,
// Stirling, r-Stirling, Legendre-Stirling and marked Stirling words, their
// descent-type statistics and grammatical-labeling weights. This module is
// the oracle that grammar output is checked against, so it never calls into
// the grammar code.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cfgpoly/polynomial.hpp"

namespace cfgpoly {

enum class StructureFamily { partition, permutation, stirling, r_stirling, legendre, marked_stirling };

std::string_view to_string(StructureFamily family);
/// Accepts "marked_stirling" and "marked-stirling".
std::optional<StructureFamily> parse_structure_family(std::string_view name);

/// A letter of a word. Statistics compare values only: a barred or marked
/// letter neither exceeds nor is exceeded by an undecorated letter of the
/// same value. Bars occur only in Legendre-Stirling words, marks only in
/// marked Stirling words.
struct Letter {
  std::uint32_t value = 0;
  bool barred = false;
  bool marked = false;

  auto operator<=>(const Letter&) const = default;
};

/// Structure of order n. Partitions are stored as restricted growth words:
/// letter i is the number of the block containing i, blocks numbered by
/// increasing minima.
struct LabeledWord {
  StructureFamily family = StructureFamily::permutation;
  std::uint32_t order = 0;
  std::uint32_t r = 0;  // copies per value, r_stirling only
  std::vector<Letter> letters;

  /// Space-separated values, bars as a trailing ' and marks as a trailing *,
  /// e.g. "1 2 2* 3 3 1".
  std::string to_string() const;

  auto operator<=>(const LabeledWord&) const = default;
};

/// Parses the to_string form back into a word of the given family.
LabeledWord parse_word(StructureFamily family, std::string_view text, std::uint32_t r = 0);

/// Index sets, 1-based. Unused sets stay empty. For Legendre-Stirling words
/// asc/des/plat are also filled (by value) so that des = ls_y + ls_v.
struct StatSets {
  std::vector<std::uint32_t> asc, des, plat;
  std::map<std::uint32_t, std::vector<std::uint32_t>> jplat;  // j -> indices
  std::vector<std::uint32_t> ls_x, ls_y, ls_z, ls_u, ls_v;
};

bool is_valid(const LabeledWord& w);

/// Throws std::invalid_argument for invalid words and for partitions, which
/// carry no index statistics (see block_count).
StatSets statistics(const LabeledWord& w);

std::uint32_t block_count(const LabeledWord& partition);

/// Every structure of the family and order exactly once, sorted. Built by
/// insertion of the largest value(s) into the structures of order n-1.
std::vector<LabeledWord> enumerate(StructureFamily family, std::uint32_t n, std::uint32_t r = 0);

/// Same set as enumerate(), produced independently: all arrangements of the
/// underlying multiset (all restricted growth words for partitions, all mark
/// patterns for marked words) filtered by is_valid.
std::vector<LabeledWord> enumerate_by_filter(StructureFamily family, std::uint32_t n, std::uint32_t r = 0);

/// Closed-form family sizes used as cross-checks.
Integer structure_count(StructureFamily family, std::uint32_t n, std::uint32_t r = 0);

/// Weight monomial of one structure:
///   partition        a * prod_blocks b_{max(block)}
///   permutation      prod_asc x * prod_des y
///   stirling/marked  prod_asc x * prod_des y * prod_plat z
///   legendre         prod_X x * prod_Y y * prod_Z z * prod_U u * prod_V v
///   r_stirling       prod_des x * prod_asc y * prod_j prod_{P_j} z_{j,value}
/// Subscripts are letter values. z_{j,k} is the Z-family variable with index
/// rstirling_z_index(n, j, k). The empty word of order 0 is labeled by the
/// grammar seed (x0, or z0 for Stirling and marked words; 1 for r-Stirling).
Polynomial weight(const LabeledWord& w);

inline std::uint32_t rstirling_z_index(std::uint32_t n, std::uint32_t j, std::uint32_t value) {
  return j * (n + 1) + value;
}

Polynomial weight_polynomial(StructureFamily family, std::uint32_t n, std::uint32_t r = 0);

enum class Statistic { asc, des, plat, barred_des, blocks };

std::string_view to_string(Statistic s);
std::optional<Statistic> parse_statistic(std::string_view name);

/// The statistic counted by the family's classical generating polynomial:
/// blocks for partitions, descents otherwise.
Statistic default_statistic(StructureFamily family);

std::uint32_t statistic_value(const LabeledWord& w, Statistic s);

/// Histogram of the joint statistic vector over the enumeration.
std::map<std::vector<std::uint32_t>, std::uint64_t> coefficient_table(StructureFamily family, std::uint32_t n,
                                                                      const std::vector<Statistic>& stats,
                                                                      std::uint32_t r = 0);

/// Histogram of a single statistic.
std::map<std::uint32_t, std::uint64_t> coefficient_table(StructureFamily family, std::uint32_t n, Statistic stat,
                                                         std::uint32_t r = 0);

}  // namespace cfgpoly
