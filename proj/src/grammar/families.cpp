#include <stdexcept>
#include <string>

#include "cfgpoly/grammar.hpp"

namespace cfgpoly {

namespace {

struct KindName {
  GrammarKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
    {GrammarKind::partition_uni, "partition_uni"},     {GrammarKind::eulerian_uni, "eulerian_uni"},
    {GrammarKind::stirling2_uni, "stirling2_uni"},     {GrammarKind::marked_uni, "marked_uni"},
    {GrammarKind::partition_multi, "partition_multi"}, {GrammarKind::eulerian_multi, "eulerian_multi"},
    {GrammarKind::stirling2_multi, "stirling2_multi"}, {GrammarKind::legendre, "legendre"},
    {GrammarKind::marked_multi, "marked_multi"},
};

Polynomial mono(std::initializer_list<Variable> vars, long coefficient = 1) {
  std::vector<Monomial::Entry> entries;
  for (Variable v : vars) entries.emplace_back(v, 1);
  return Polynomial(Monomial::from_entries(std::move(entries)), Integer(coefficient));
}

Grammar univariate_grammar(GrammarKind kind) {
  const Variable x = Variable::x(0), y = Variable::y(0);
  const Variable a = Variable::a(), b = Variable::b(0);
  switch (kind) {
    case GrammarKind::partition_uni:
      return Grammar({{a, mono({a, b})}, {b, Polynomial(b)}});
    case GrammarKind::eulerian_uni:
      return Grammar({{x, mono({x, y})}, {y, mono({x, y})}});
    case GrammarKind::stirling2_uni:
      return Grammar({{x, mono({x, x, y})}, {y, mono({x, x, y})}});
    case GrammarKind::marked_uni:
      return Grammar({{x, mono({x, x, y})}, {y, mono({x, x, y}, 2)}});
    default:
      throw std::logic_error("not a univariate grammar kind");
  }
}

}  // namespace

std::string_view to_string(GrammarKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "?";
}

std::optional<GrammarKind> parse_grammar_kind(std::string_view name) {
  std::string normalized(name);
  for (char& c : normalized)
    if (c == '-') c = '_';
  for (const auto& [k, n] : kKindNames)
    if (n == normalized) return k;
  return std::nullopt;
}

bool is_multivariate(GrammarKind kind) {
  switch (kind) {
    case GrammarKind::partition_uni:
    case GrammarKind::eulerian_uni:
    case GrammarKind::stirling2_uni:
    case GrammarKind::marked_uni:
      return false;
    default:
      return true;
  }
}

Variable seed_variable(GrammarKind kind) {
  switch (kind) {
    case GrammarKind::partition_uni:
    case GrammarKind::partition_multi:
      return Variable::a();
    case GrammarKind::stirling2_multi:
    case GrammarKind::marked_multi:
      return Variable::z(0);
    default:
      return Variable::x(0);
  }
}

unsigned step_count(GrammarKind kind, unsigned n) { return kind == GrammarKind::legendre ? 2 * n : n; }

Grammar step_grammar(GrammarKind kind, unsigned step) {
  if (step == 0) throw std::invalid_argument("grammar steps are numbered from 1");
  if (!is_multivariate(kind)) return univariate_grammar(kind);

  const unsigned n = step;
  std::map<Variable, Polynomial> rules;
  switch (kind) {
    case GrammarKind::partition_multi: {
      rules[Variable::a()] = mono({Variable::a(), Variable::b(n)});
      for (unsigned i = 1; i < n; ++i) rules[Variable::b(i)] = Polynomial(Variable::b(n));
      break;
    }
    case GrammarKind::eulerian_multi: {
      Polynomial rhs = mono({Variable::x(n), Variable::y(n)});
      for (unsigned i = 0; i < n; ++i) {
        rules[Variable::x(i)] = rhs;
        rules[Variable::y(i)] = rhs;
      }
      break;
    }
    case GrammarKind::stirling2_multi:
    case GrammarKind::marked_multi: {
      Polynomial rhs = mono({Variable::x(n), Variable::y(n), Variable::z(n)});
      Polynomial descent_rhs = kind == GrammarKind::marked_multi ? rhs * Integer(2) : rhs;
      for (unsigned i = 0; i < n; ++i) {
        rules[Variable::x(i)] = rhs;
        rules[Variable::y(i)] = descent_rhs;
        rules[Variable::z(i)] = rhs;
      }
      break;
    }
    case GrammarKind::legendre: {
      // Odd steps insert the barred letter m, even steps the pair m m.
      const unsigned m = (step + 1) / 2;
      const bool odd = step % 2 == 1;
      Polynomial rhs = odd ? mono({Variable::u(m), Variable::v(m)})
                           : mono({Variable::x(m), Variable::y(m), Variable::z(m)});
      for (unsigned i = 0; i < m; ++i)
        for (Family f : {Family::X, Family::Y, Family::Z, Family::U, Family::V}) rules[Variable{f, i}] = rhs;
      if (!odd) {
        rules[Variable::u(m)] = mono({Variable::x(m), Variable::z(m), Variable::u(m)});
        rules[Variable::v(m)] = mono({Variable::x(m), Variable::y(m), Variable::z(m)});
      }
      break;
    }
    default:
      throw std::logic_error("unhandled grammar kind");
  }
  return Grammar(std::move(rules));
}

std::vector<Polynomial> family_trajectory(GrammarKind kind, unsigned steps) {
  std::vector<Polynomial> out;
  out.reserve(steps + 1);
  out.emplace_back(seed_variable(kind));
  for (unsigned s = 1; s <= steps; ++s) out.push_back(step_grammar(kind, s).derive(out.back()));
  return out;
}

Polynomial iterate_family(GrammarKind kind, unsigned n) {
  Polynomial f(seed_variable(kind));
  const unsigned steps = step_count(kind, n);
  if (!is_multivariate(kind)) {
    Grammar g = univariate_grammar(kind);
    for (unsigned s = 0; s < steps; ++s) f = g.derive(f);
    return f;
  }
  for (unsigned s = 1; s <= steps; ++s) f = step_grammar(kind, s).derive(f);
  return f;
}

LinearDiffOp surrogate_operator(SurrogateKind kind, unsigned n) {
  if (n == 0) throw std::invalid_argument("surrogate operators are defined for n >= 1");
  LinearDiffOp op;
  switch (kind) {
    case SurrogateKind::partition_multi: {
      Polynomial bn(Variable::b(n));
      op.scalar = bn;
      for (unsigned i = 1; i < n; ++i) op.derivative_terms.push_back({bn, Variable::b(i)});
      break;
    }
    case SurrogateKind::legendre_even: {
      op.scalar = mono({Variable::x(n), Variable::z(n)});
      Polynomial xyz = mono({Variable::x(n), Variable::y(n), Variable::z(n)});
      for (unsigned i = 0; i < n; ++i)
        for (Family f : {Family::X, Family::Y, Family::Z, Family::U, Family::V})
          op.derivative_terms.push_back({xyz, Variable{f, i}});
      op.derivative_terms.push_back({xyz, Variable::v(n)});
      break;
    }
  }
  return op;
}

}  // namespace cfgpoly
