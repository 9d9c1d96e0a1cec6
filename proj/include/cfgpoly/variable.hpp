#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cfgpoly {

/// Variable families. Declaration order is the canonical order used for
/// monomial comparison and serialization. P holds the partner variables
/// introduced by the stability gate.
enum class Family : std::uint8_t { X, Y, Z, U, V, A, B, P };

char family_letter(Family f);
std::optional<Family> family_from_letter(char c);

struct Variable {
  Family family = Family::X;
  std::uint32_t index = 0;

  auto operator<=>(const Variable&) const = default;

  static constexpr Variable x(std::uint32_t i) { return {Family::X, i}; }
  static constexpr Variable y(std::uint32_t i) { return {Family::Y, i}; }
  static constexpr Variable z(std::uint32_t i) { return {Family::Z, i}; }
  static constexpr Variable u(std::uint32_t i) { return {Family::U, i}; }
  static constexpr Variable v(std::uint32_t i) { return {Family::V, i}; }
  static constexpr Variable a(std::uint32_t i = 0) { return {Family::A, i}; }
  static constexpr Variable b(std::uint32_t i) { return {Family::B, i}; }
  static constexpr Variable p(std::uint32_t i) { return {Family::P, i}; }
};

/// "x1", "b4", "p7".
std::string to_string(Variable v);

/// Inverse of to_string; throws std::invalid_argument on malformed names.
Variable parse_variable(std::string_view name);

}  // namespace cfgpoly
