#include <map>

#include "cfgpoly/polynomial.hpp"

namespace cfgpoly {

namespace {

std::map<Monomial, Rational, CanonicalOrder> substitute(const Polynomial& p, const Assignment& assignment) {
  std::map<Monomial, Rational, CanonicalOrder> out;
  for (const auto& [m, c] : p.terms()) {
    Rational coeff(c);
    std::vector<Monomial::Entry> kept;
    for (const auto& [v, e] : m.entries()) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        kept.emplace_back(v, e);
      } else if (const auto* target = std::get_if<Variable>(&it->second)) {
        kept.emplace_back(*target, e);
      } else {
        const Rational& value = std::get<Rational>(it->second);
        for (std::uint32_t k = 0; k < e; ++k) coeff *= value;
      }
    }
    if (coeff == 0) continue;
    auto [slot, inserted] = out.try_emplace(Monomial::from_entries(std::move(kept)), coeff);
    if (!inserted) {
      slot->second += coeff;
      if (slot->second == 0) out.erase(slot);
    }
  }
  return out;
}

}  // namespace

Polynomial specialize(const Polynomial& p, const Assignment& assignment) {
  Polynomial r;
  for (const auto& [m, c] : substitute(p, assignment)) {
    if (c.get_den() != 1)
      throw std::domain_error("specialization produced the non-integer coefficient " + c.get_str());
    r.add_term(m, c.get_num());
  }
  return r;
}

ScaledPolynomial specialize_scaled(const Polynomial& p, const Assignment& assignment) {
  auto terms = substitute(p, assignment);
  Integer lcm_den(1);
  for (const auto& [m, c] : terms) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  ScaledPolynomial out;
  out.denominator = lcm_den;
  for (const auto& [m, c] : terms) out.numerator.add_term(m, Integer(c.get_num() * (lcm_den / c.get_den())));
  return out;
}

void assign_families(Assignment& assignment, std::initializer_list<Family> families, std::uint32_t max_index,
                     const Substitution& image) {
  for (Family f : families)
    for (std::uint32_t i = 0; i <= max_index; ++i) assignment[Variable{f, i}] = image;
}

}  // namespace cfgpoly
