#include "cfgpoly/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cfgpoly {

Polynomial::Polynomial(long constant) : Polynomial(Integer(constant)) {}

Polynomial::Polynomial(Integer constant) {
  if (constant != 0) terms_.emplace(Monomial(), std::move(constant));
}

Polynomial::Polynomial(Variable v) { terms_.emplace(Monomial(v), Integer(1)); }

Polynomial::Polynomial(Monomial m, Integer coefficient) {
  if (coefficient != 0) terms_.emplace(std::move(m), std::move(coefficient));
}

Polynomial Polynomial::from_terms(std::vector<std::pair<Monomial, Integer>> terms) {
  Polynomial p;
  for (auto& [m, c] : terms) p.add_term(m, c);
  return p;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::uint32_t Polynomial::total_degree() const {
  // Leading term has the largest degree under CanonicalOrder.
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::uint32_t Polynomial::degree_in(Variable v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
  return d;
}

std::vector<Variable> Polynomial::variables() const {
  std::set<Variable> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.entries()) vars.insert(v);
  return {vars.begin(), vars.end()};
}

bool Polynomial::is_multiaffine() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.is_multiaffine(); });
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  for (const auto& [m, c] : q.terms_) add_term(m, Integer(-c));
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, coeff] : terms_) coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  Polynomial r;
  for (const auto& [mp, cp] : p.terms_)
    for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, Integer(cp * cq));
  return r;
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result(1L);
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial partial_derivative(const Polynomial& p, Variable v) {
  Polynomial r;
  for (const auto& [m, c] : p.terms()) {
    std::uint32_t e = m.degree_in(v);
    if (e == 0) continue;
    r.add_term(m.reduced(v), Integer(c * e));
  }
  return r;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Integer magnitude = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (magnitude != 1 || m.is_one()) {
      out << magnitude.get_str();
      wrote = true;
    }
    for (const auto& [v, e] : m.entries()) {
      if (wrote) out << "*";
      out << to_string(v);
      if (e > 1) out << "^" << e;
      wrote = true;
    }
  }
  return out.str();
}

GaussianRational evaluate(const Polynomial& p, const Point& point) {
  GaussianRational total;
  for (const auto& [m, c] : p.terms()) {
    GaussianRational term{Rational(c), Rational(0)};
    for (const auto& [v, e] : m.entries()) {
      auto it = point.find(v);
      if (it == point.end()) throw unassigned_variable(v);
      for (std::uint32_t k = 0; k < e; ++k) term *= it->second;
    }
    total += term;
  }
  return total;
}

}  // namespace cfgpoly
