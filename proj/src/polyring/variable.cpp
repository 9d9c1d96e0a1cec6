#include "cfgpoly/variable.hpp"

#include <charconv>
#include <stdexcept>

namespace cfgpoly {

namespace {
constexpr std::string_view kLetters = "xyzuvabp";
}

char family_letter(Family f) { return kLetters[static_cast<std::size_t>(f)]; }

std::optional<Family> family_from_letter(char c) {
  auto pos = kLetters.find(c);
  if (pos == std::string_view::npos) return std::nullopt;
  return static_cast<Family>(pos);
}

std::string to_string(Variable v) { return family_letter(v.family) + std::to_string(v.index); }

Variable parse_variable(std::string_view name) {
  if (name.size() < 2) throw std::invalid_argument("malformed variable name: " + std::string(name));
  auto family = family_from_letter(name.front());
  if (!family) throw std::invalid_argument("unknown variable family: " + std::string(name));
  auto digits = name.substr(1);
  if (digits.size() > 1 && digits.front() == '0')
    throw std::invalid_argument("leading zero in variable index: " + std::string(name));
  std::uint32_t index = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc() || end != digits.data() + digits.size())
    throw std::invalid_argument("malformed variable index: " + std::string(name));
  return {*family, index};
}

}  // namespace cfgpoly
