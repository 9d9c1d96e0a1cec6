#include <algorithm>
#include <stdexcept>

#include "cfgpoly/stability.hpp"

namespace cfgpoly {

DensePoly::DensePoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

void DensePoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

DensePoly DensePoly::from_polynomial(const Polynomial& p) {
  const auto vars = p.variables();
  if (vars.size() > 1) throw std::invalid_argument("expected a univariate polynomial, got " + to_string(p));
  std::vector<Rational> c(p.total_degree() + 1, Rational(0));
  for (const auto& [m, coeff] : p.terms()) c[m.degree()] = coeff;
  return DensePoly(std::move(c));
}

DensePoly DensePoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<long>(k)));
  return DensePoly(std::move(d));
}

DensePoly DensePoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> out(c_);
  const Rational lead = c_.back();
  for (Rational& v : out) v /= lead;
  return DensePoly(std::move(out));
}

int DensePoly::sign_at(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return sgn(acc);
}

int DensePoly::sign_at_infinity(bool positive) const {
  if (is_zero()) return 0;
  const int s = sgn(c_.back());
  return (positive || degree() % 2 == 0) ? s : -s;
}

DensePoly operator-(const DensePoly& p) {
  std::vector<Rational> out(p.c_);
  for (Rational& v : out) v = -v;
  return DensePoly(std::move(out));
}

DensePoly operator-(const DensePoly& a, const DensePoly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] -= b.c_[k];
  return DensePoly(std::move(out));
}

std::pair<DensePoly, DensePoly> divide(const DensePoly& a, const DensePoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {DensePoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const auto& bc = b.coefficients();
  for (int k = a.degree(); k >= db; --k) {
    const Rational q = rem[static_cast<std::size_t>(k)] / b.leading();
    quo[static_cast<std::size_t>(k - db)] = q;
    if (sgn(q) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * bc[static_cast<std::size_t>(j)];
  }
  return {DensePoly(std::move(quo)), DensePoly(std::move(rem))};
}

DensePoly gcd(DensePoly a, DensePoly b) {
  while (!b.is_zero()) {
    DensePoly r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<DensePoly> square_free_decomposition(const DensePoly& p) {
  std::vector<DensePoly> factors;
  if (p.degree() < 1) return factors;
  const DensePoly dp = p.derivative();
  const DensePoly a0 = gcd(p, dp);
  DensePoly b = divide(p, a0).first;
  DensePoly c = divide(dp, a0).first;
  DensePoly d = c - b.derivative();
  while (b.degree() > 0) {
    DensePoly a = gcd(b, d);
    b = divide(b, a).first;
    c = divide(d, a).first;
    d = c - b.derivative();
    factors.push_back(a.monic());
  }
  return factors;
}

}  // namespace cfgpoly
