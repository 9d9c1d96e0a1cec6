#include <algorithm>
#include <stdexcept>

#include "cfgpoly/stability.hpp"

namespace cfgpoly {

namespace {

void reject_partner_family(const Polynomial& p) {
  for (Variable v : p.variables())
    if (v.family == Family::P) throw std::invalid_argument("operator mentions partner variable " + to_string(v));
}

std::size_t slot_of(const std::vector<Variable>& sorted, Variable v) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

Integer power(const Integer& d, std::uint32_t e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), d.get_mpz_t(), e);
  return out;
}

}  // namespace

ProductForm::ProductForm(const LinearDiffOp& op, std::vector<Variable> vars) : scalar_(op.scalar) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  for (Variable v : vars)
    if (v.family == Family::P) throw std::invalid_argument("product variables must not be partners");
  vars_ = std::move(vars);

  reject_partner_family(scalar_);
  coefficient_.assign(vars_.size(), Polynomial());
  for (const auto& term : op.derivative_terms) {
    if (term.target.family == Family::P) throw std::invalid_argument("operator differentiates a partner variable");
    reject_partner_family(term.coefficient);
    auto it = std::lower_bound(vars_.begin(), vars_.end(), term.target);
    // d/dt of F vanishes when t is not a product variable.
    if (it == vars_.end() || *it != term.target) continue;
    coefficient_[static_cast<std::size_t>(it - vars_.begin())] += term.coefficient;
  }

  std::vector<Variable> all = vars_;
  for (std::size_t k = 0; k < vars_.size(); ++k) all.push_back(Variable::p(static_cast<std::uint32_t>(k)));
  for (Variable v : scalar_.variables()) all.push_back(v);
  for (const Polynomial& c : coefficient_)
    for (Variable v : c.variables()) all.push_back(v);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  all_vars_ = std::move(all);

  const auto n = static_cast<std::uint32_t>(vars_.size());
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    var_slot_.push_back(slot_of(all_vars_, vars_[k]));
    partner_slot_.push_back(slot_of(all_vars_, partner(vars_[k])));
  }
  compiled_scalar_ = CompiledPolynomial(scalar_, all_vars_);
  if (!scalar_.is_zero()) scale_ = compiled_scalar_.degree() + n;
  for (const Polynomial& c : coefficient_) {
    compiled_coefficient_.emplace_back(c, all_vars_);
    if (!c.is_zero()) scale_ = std::max(scale_, compiled_coefficient_.back().degree() + n - 1);
  }
}

Variable ProductForm::partner(Variable v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || *it != v) throw std::invalid_argument("no partner for " + to_string(v));
  return Variable::p(static_cast<std::uint32_t>(it - vars_.begin()));
}

Polynomial ProductForm::product() const {
  Polynomial f(1L);
  for (Variable v : vars_) f = f * (Polynomial(v) + Polynomial(partner(v)));
  return f;
}

bool ProductForm::identically_zero() const {
  return scalar_.is_zero() && std::all_of(coefficient_.begin(), coefficient_.end(),
                                          [](const Polynomial& c) { return c.is_zero(); });
}

Polynomial ProductForm::expand() const {
  const std::size_t n = vars_.size();
  std::vector<Polynomial> factor;
  for (Variable v : vars_) factor.push_back(Polynomial(v) + Polynomial(partner(v)));
  std::vector<Polynomial> prefix(n + 1, Polynomial(1L)), suffix(n + 1, Polynomial(1L));
  for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] * factor[k];
  for (std::size_t k = n; k-- > 0;) suffix[k] = factor[k] * suffix[k + 1];
  Polynomial out = scalar_ * prefix[n];
  for (std::size_t k = 0; k < n; ++k)
    if (!coefficient_[k].is_zero()) out += coefficient_[k] * (prefix[k] * suffix[k + 1]);
  return out;
}

GaussianInteger ProductForm::scaled_value(const std::vector<GaussianInteger>& g, const Integer& d) const {
  const std::size_t n = vars_.size();
  std::vector<GaussianInteger> factor;
  factor.reserve(n);
  for (std::size_t k = 0; k < n; ++k) factor.push_back(g[var_slot_[k]] + g[partner_slot_[k]]);
  const GaussianInteger one(Integer(1), Integer(0));
  std::vector<GaussianInteger> prefix(n + 1, one), suffix(n + 1, one);
  for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] * factor[k];
  for (std::size_t k = n; k-- > 0;) suffix[k] = factor[k] * suffix[k + 1];

  const auto nn = static_cast<std::uint32_t>(n);
  GaussianInteger total;
  if (!compiled_scalar_.is_zero()) {
    GaussianInteger term = compiled_scalar_.scaled_value(g, d) * prefix[n];
    total += term * power(d, scale_ - compiled_scalar_.degree() - nn);
  }
  for (std::size_t k = 0; k < n; ++k) {
    const CompiledPolynomial& c = compiled_coefficient_[k];
    if (c.is_zero()) continue;
    GaussianInteger term = c.scaled_value(g, d) * (prefix[k] * suffix[k + 1]);
    total += term * power(d, scale_ - c.degree() - (nn - 1));
  }
  return total;
}

LemmaGateResult lemma_gate(const LinearDiffOp& t, std::vector<Variable> vars, const FalsifyOptions& options,
                           std::size_t max_expand_vars) {
  ProductForm form(t, std::move(vars));
  LemmaGateResult result;
  result.variables = form.variables();
  result.identically_zero = form.identically_zero();
  if (form.product_variables().size() <= max_expand_vars) result.expanded = form.expand();
  if (result.identically_zero) return result;
  FalsifyResult falsified = sample_falsify(form, options);
  result.witness = std::move(falsified.witness);
  result.points_tested = falsified.points_tested;
  return result;
}

LemmaGateResult lemma_gate(const Grammar& g, std::vector<Variable> vars, const FalsifyOptions& options,
                           std::size_t max_expand_vars) {
  return lemma_gate(LinearDiffOp::from_grammar(g), std::move(vars), options, max_expand_vars);
}

std::vector<Variable> step_input_variables(GrammarKind kind, unsigned step) {
  if (step == 0) throw std::invalid_argument("grammar steps are numbered from 1");
  std::vector<Variable> vars;
  auto add_families = [&](std::initializer_list<Family> families, unsigned below) {
    for (unsigned i = 0; i < below; ++i)
      for (Family f : families) vars.push_back(Variable{f, i});
  };
  switch (kind) {
    case GrammarKind::partition_multi:
      vars.push_back(Variable::a());
      for (unsigned i = 1; i < step; ++i) vars.push_back(Variable::b(i));
      break;
    case GrammarKind::eulerian_multi:
      add_families({Family::X, Family::Y}, step);
      break;
    case GrammarKind::stirling2_multi:
    case GrammarKind::marked_multi:
      add_families({Family::X, Family::Y, Family::Z}, step);
      break;
    case GrammarKind::legendre: {
      const unsigned m = (step + 1) / 2;
      add_families({Family::X, Family::Y, Family::Z, Family::U, Family::V}, m);
      if (step % 2 == 0) {
        vars.push_back(Variable::u(m));
        vars.push_back(Variable::v(m));
      }
      break;
    }
    default:
      throw std::invalid_argument("step_input_variables needs a multivariate family");
  }
  std::sort(vars.begin(), vars.end());
  return vars;
}

Point partition_counterexample_point() {
  const Rational half(1, 2);
  Point point;
  point[Variable::a()] = GaussianRational(-half, half);
  point[Variable::b(1)] = GaussianRational(Rational(-1), half);
  point[Variable::b(2)] = GaussianRational(Rational(0), Rational(1));
  point[Variable::p(0)] = GaussianRational(Rational(0), Rational(1));
  point[Variable::p(1)] = GaussianRational(Rational(-1), half);
  return point;
}

CounterexampleReport partition_counterexample() {
  CounterexampleReport report;
  const Polynomial a(Variable::a()), b1(Variable::b(1)), b2(Variable::b(2));
  const Polynomial w(Variable::p(0)), u(Variable::p(1));
  const Grammar g2 = step_grammar(GrammarKind::partition_multi, 2);
  report.product = (a + w) * (b1 + u);
  report.derived = g2.derive(report.product);
  report.expected = b2 * (a * b1 + a * u + a + w);
  report.point = partition_counterexample_point();
  report.value = evaluate(report.derived, report.point);
  const LinearDiffOp t2 = surrogate_operator(SurrogateKind::partition_multi, 2);
  report.operator_differs_off_sequence = g2.derive(a + b1) != t2.apply(a + b1);
  return report;
}

}  // namespace cfgpoly
