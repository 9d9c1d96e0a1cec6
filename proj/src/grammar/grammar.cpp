#include "cfgpoly/grammar.hpp"

namespace cfgpoly {

const Polynomial* Grammar::rule(Variable v) const {
  auto it = rules_.find(v);
  return it == rules_.end() ? nullptr : &it->second;
}

Polynomial Grammar::derive(const Polynomial& p) const {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [v, e] : m.entries()) {
      const Polynomial* rhs = rule(v);
      if (rhs == nullptr) continue;
      Monomial rest = m.reduced(v);
      Integer scale = c * e;
      for (const auto& [mr, cr] : rhs->terms()) out.add_term(rest * mr, Integer(scale * cr));
    }
  }
  return out;
}

Polynomial LinearDiffOp::apply(const Polynomial& p) const {
  Polynomial out = scalar * p;
  for (const auto& term : derivative_terms) out += term.coefficient * partial_derivative(p, term.target);
  return out;
}

LinearDiffOp LinearDiffOp::from_grammar(const Grammar& g) {
  LinearDiffOp op;
  for (const auto& [v, rhs] : g.rules()) op.derivative_terms.push_back({rhs, v});
  return op;
}

}  // namespace cfgpoly
