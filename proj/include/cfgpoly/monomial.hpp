#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cfgpoly/variable.hpp"

namespace cfgpoly {

/// Power product of variables. Entries are sorted by Variable and never
/// carry a zero exponent; the empty monomial is 1.
class Monomial {
 public:
  using Entry = std::pair<Variable, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(Variable v, std::uint32_t exponent = 1);

  /// Sorts, merges repeated variables and drops zero exponents.
  static Monomial from_entries(std::vector<Entry> entries);

  std::span<const Entry> entries() const { return entries_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t degree_in(Variable v) const;
  bool is_one() const { return entries_.empty(); }
  bool is_multiaffine() const;
  bool divisible_by(const Monomial& d) const;

  /// This monomial with the exponent of v lowered by one; v must divide it.
  Monomial reduced(Variable v) const;

  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Entry> entries_;
  std::uint32_t degree_ = 0;
};

/// Graded lexicographic order on the fixed Variable order. `a` precedes `b`
/// when it has larger total degree, or equal degree and is lex-larger; the
/// leading term of a polynomial therefore comes first.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

}  // namespace cfgpoly
