#include <stdexcept>

#include "cfgpoly/stability.hpp"

namespace cfgpoly {

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int changes_at(const std::vector<DensePoly>& chain, const Rational& x) {
  std::vector<int> signs;
  for (const DensePoly& q : chain) signs.push_back(q.sign_at(x));
  return sign_changes(signs);
}

int changes_at_infinity(const std::vector<DensePoly>& chain, bool positive) {
  std::vector<int> signs;
  for (const DensePoly& q : chain) signs.push_back(q.sign_at_infinity(positive));
  return sign_changes(signs);
}

}  // namespace

std::vector<DensePoly> sturm_chain(const DensePoly& p) {
  std::vector<DensePoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  DensePoly next = p.derivative();
  while (!next.is_zero()) {
    chain.push_back(next);
    next = -divide(chain[chain.size() - 2], chain.back()).second;
  }
  return chain;
}

RootReport sturm_report(const DensePoly& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_report: zero polynomial");
  RootReport report;
  report.degree = static_cast<unsigned>(p.degree());
  const auto factors = square_free_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() < 1) continue;
    const auto chain = sturm_chain(factors[i]);
    const int at_minus_inf = changes_at_infinity(chain, false);
    const auto multiplicity = static_cast<unsigned>(i + 1);
    report.real_root_count += multiplicity * static_cast<unsigned>(at_minus_inf - changes_at_infinity(chain, true));
    // Roots in (-inf, 0]; a root at 0 itself is counted.
    report.nonpositive_root_count += multiplicity * static_cast<unsigned>(at_minus_inf - changes_at(chain, Rational(0)));
  }
  report.distinct = gcd(p, p.derivative()).degree() <= 0;
  report.all_real = report.real_root_count == report.degree;
  report.all_nonpositive = report.nonpositive_root_count == report.degree;
  return report;
}

RootReport sturm_report(const Polynomial& p) { return sturm_report(DensePoly::from_polynomial(p)); }

}  // namespace cfgpoly
