#pragma once

// Shared test helpers: a tiny text reader for expected polynomials and a
// seeded generator of small random polynomials.

#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cfgpoly/polynomial.hpp"

namespace testing {

using cfgpoly::Integer;
using cfgpoly::Monomial;
using cfgpoly::Polynomial;
using cfgpoly::Variable;

// Reads "2*x1^2*y3 - a0 + 1" (the to_string format, spaces optional).
inline Polynomial P(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  Polynomial out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t end = s.find_first_of("+-", pos);
    if (end == std::string::npos) end = s.size();
    const std::string term = s.substr(pos, end - pos);
    pos = end;
    if (term.empty()) throw std::invalid_argument("empty term in " + std::string(text));

    Integer coeff(sign);
    std::vector<Monomial::Entry> entries;
    std::size_t start = 0;
    while (start <= term.size()) {
      std::size_t stop = term.find('*', start);
      if (stop == std::string::npos) stop = term.size();
      const std::string factor = term.substr(start, stop - start);
      start = stop + 1;
      if (factor.empty()) throw std::invalid_argument("empty factor in " + std::string(text));
      if (factor[0] >= '0' && factor[0] <= '9') {
        coeff *= Integer(factor);
        continue;
      }
      const std::size_t caret = factor.find('^');
      const Variable v = cfgpoly::parse_variable(factor.substr(0, caret));
      const auto e = caret == std::string::npos ? 1u : static_cast<std::uint32_t>(std::stoul(factor.substr(caret + 1)));
      entries.emplace_back(v, e);
    }
    out.add_term(Monomial::from_entries(std::move(entries)), coeff);
  }
  return out;
}

inline Polynomial random_polynomial(std::mt19937& rng, const std::vector<Variable>& vars, int max_terms = 4,
                                    int max_exp = 2) {
  std::uniform_int_distribution<int> terms(0, max_terms), coeff(-3, 3), exp(0, max_exp);
  Polynomial p;
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    std::vector<Monomial::Entry> entries;
    for (Variable v : vars) entries.emplace_back(v, static_cast<std::uint32_t>(exp(rng)));
    p.add_term(Monomial::from_entries(std::move(entries)), Integer(coeff(rng)));
  }
  return p;
}

inline const std::vector<Variable>& small_alphabet() {
  static const std::vector<Variable> vars{Variable::x(1), Variable::y(1), Variable::z(2), Variable::a(),
                                          Variable::b(1)};
  return vars;
}

}  // namespace testing
