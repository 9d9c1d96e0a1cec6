#include "cfgpoly/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfgpoly {

Monomial::Monomial(Variable v, std::uint32_t exponent) {
  if (exponent > 0) {
    entries_.emplace_back(v, exponent);
    degree_ = exponent;
  }
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  Monomial m;
  for (auto& [var, exp] : entries) {
    if (exp == 0) continue;
    if (!m.entries_.empty() && m.entries_.back().first == var)
      m.entries_.back().second += exp;
    else
      m.entries_.emplace_back(var, exp);
    m.degree_ += exp;
  }
  return m;
}

std::uint32_t Monomial::degree_in(Variable v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, Variable key) { return e.first < key; });
  return (it != entries_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::is_multiaffine() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.second == 1; });
}

bool Monomial::divisible_by(const Monomial& d) const {
  return std::all_of(d.entries_.begin(), d.entries_.end(),
                     [this](const Entry& e) { return degree_in(e.first) >= e.second; });
}

Monomial Monomial::reduced(Variable v) const {
  Monomial m = *this;
  auto it = std::lower_bound(m.entries_.begin(), m.entries_.end(), v,
                             [](const Entry& e, Variable key) { return e.first < key; });
  if (it == m.entries_.end() || it->first != v)
    throw std::invalid_argument("variable " + to_string(v) + " does not divide the monomial");
  if (--it->second == 0) m.entries_.erase(it);
  --m.degree_;
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  m.entries_.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      m.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      m.entries_.push_back(*b++);
    } else {
      m.entries_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  m.degree_ = degree_ + other.degree_;
  return m;
}

bool CanonicalOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  auto ea = a.entries();
  auto eb = b.entries();
  std::size_t n = std::min(ea.size(), eb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (ea[i].first != eb[i].first) return ea[i].first < eb[i].first;
    if (ea[i].second != eb[i].second) return ea[i].second > eb[i].second;
  }
  // Equal degree and a common prefix means equal monomials.
  return false;
}

}  // namespace cfgpoly
