#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "cfgpoly/polynomial.hpp"

namespace cfgpoly {

/// Substitution rules letter -> polynomial. The induced formal derivative
/// sends each ruled letter to its right-hand side, letters without a rule
/// to 0, and extends by linearity and the Leibniz rule:
///   D(f) = sum_v (df/dv) * rule(v).
class Grammar {
 public:
  Grammar() = default;
  explicit Grammar(std::map<Variable, Polynomial> rules) : rules_(std::move(rules)) {}

  const std::map<Variable, Polynomial>& rules() const { return rules_; }
  const Polynomial* rule(Variable v) const;

  Polynomial derive(const Polynomial& p) const;

 private:
  std::map<Variable, Polynomial> rules_;
};

inline Polynomial derive(const Grammar& g, const Polynomial& p) { return g.derive(p); }

/// First-order linear differential operator
///   f -> scalar * f + sum_k coefficient_k * df/d(target_k).
struct LinearDiffOp {
  struct Term {
    Polynomial coefficient;
    Variable target;
  };

  Polynomial scalar;
  std::vector<Term> derivative_terms;

  Polynomial apply(const Polynomial& p) const;

  /// The formal derivative of g as an operator with zero scalar part.
  static LinearDiffOp from_grammar(const Grammar& g);
};

inline Polynomial apply_linear_op(const LinearDiffOp& t, const Polynomial& p) { return t.apply(p); }

// --- grammar families -----------------------------------------------------

enum class GrammarKind {
  partition_uni,
  eulerian_uni,
  stirling2_uni,
  marked_uni,
  partition_multi,
  eulerian_multi,
  stirling2_multi,
  legendre,
  marked_multi,
};

inline constexpr GrammarKind kAllGrammarKinds[] = {
    GrammarKind::partition_uni,   GrammarKind::eulerian_uni,   GrammarKind::stirling2_uni,
    GrammarKind::marked_uni,      GrammarKind::partition_multi, GrammarKind::eulerian_multi,
    GrammarKind::stirling2_multi, GrammarKind::legendre,        GrammarKind::marked_multi,
};

/// "partition_uni", "stirling2_multi", ...
std::string_view to_string(GrammarKind kind);

/// Accepts both "stirling2_multi" and "stirling2-multi".
std::optional<GrammarKind> parse_grammar_kind(std::string_view name);

bool is_multivariate(GrammarKind kind);
Variable seed_variable(GrammarKind kind);

/// Number of derivative steps behind the order-n polynomial: 2n for the
/// Legendre-Stirling family (one step inserts the barred letter, the next
/// the unbarred pair), n otherwise.
unsigned step_count(GrammarKind kind, unsigned n);

/// Grammar G_step of the family (step >= 1). Univariate kinds use one
/// grammar for every step.
Grammar step_grammar(GrammarKind kind, unsigned step);

/// D_n ... D_1 applied to the seed; n == 0 gives the seed itself.
Polynomial iterate_family(GrammarKind kind, unsigned n);

/// f_0 = seed, f_k = D_k(f_{k-1}) for k = 1..steps; returns f_0..f_steps.
std::vector<Polynomial> family_trajectory(GrammarKind kind, unsigned steps);

// --- stability surrogates -------------------------------------------------

enum class SurrogateKind { partition_multi, legendre_even };

/// partition_multi, n:  b_n (1 + sum_{i<n} d/db_i), which agrees with
///   the step-n partition grammar on every polynomial a*h with h free of a.
/// legendre_even, n:    x_n z_n + x_n y_n z_n sum_{w in B} d/dw with
///   B = {x_i,y_i,z_i,u_i,v_i : i < n} + {v_n}, which agrees with G_{2n} on
///   multiaffine polynomials whose every term contains u_n.
LinearDiffOp surrogate_operator(SurrogateKind kind, unsigned n);

}  // namespace cfgpoly
