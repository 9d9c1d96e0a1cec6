#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cfgpoly/monomial.hpp"
#include "cfgpoly/numeric.hpp"
#include "cfgpoly/variable.hpp"

namespace cfgpoly {

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. Terms are kept in CanonicalOrder with no zero coefficient,
/// so equality is structural.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Integer, CanonicalOrder>;

  Polynomial() = default;
  Polynomial(long constant);  // NOLINT(google-explicit-constructor)
  Polynomial(Integer constant);  // NOLINT(google-explicit-constructor)
  Polynomial(Variable v);  // NOLINT(google-explicit-constructor)
  Polynomial(Monomial m, Integer coefficient = 1);

  static Polynomial from_terms(std::vector<std::pair<Monomial, Integer>> terms);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(const Monomial& m) const;
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(Variable v) const;
  std::vector<Variable> variables() const;
  bool is_multiaffine() const;

  /// Adds c*m in place.
  void add_term(const Monomial& m, const Integer& c);

  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Integer& c);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator-(Polynomial p) { return p *= Integer(-1); }
  friend Polynomial operator*(Polynomial p, const Integer& c) { return p *= c; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, unsigned exponent);

Polynomial partial_derivative(const Polynomial& p, Variable v);

/// Human-readable form, leading term first, e.g. "2*x1^2*y3 - a0 + 1".
std::string to_string(const Polynomial& p);

// --- specialization -------------------------------------------------------

/// Image of a variable under specialization: an exact constant or another
/// variable (diagonalization).
using Substitution = std::variant<Rational, Variable>;
using Assignment = std::map<Variable, Substitution>;

/// value = numerator / denominator, with denominator > 0.
struct ScaledPolynomial {
  Polynomial numerator;
  Integer denominator{1};
};

/// Simultaneous substitution; unmapped variables stay symbolic. Throws
/// std::domain_error if a coefficient of the result is not an integer.
Polynomial specialize(const Polynomial& p, const Assignment& assignment);

/// Same substitution but rational coefficients are allowed; they are
/// cleared by the least common denominator, which is returned alongside.
ScaledPolynomial specialize_scaled(const Polynomial& p, const Assignment& assignment);

/// Maps every variable of the given families with index in [0, max_index]
/// to the same image.
void assign_families(Assignment& assignment, std::initializer_list<Family> families,
                     std::uint32_t max_index, const Substitution& image);

// --- evaluation -----------------------------------------------------------

using Point = std::map<Variable, GaussianRational>;

class unassigned_variable : public std::invalid_argument {
 public:
  explicit unassigned_variable(Variable v)
      : std::invalid_argument("variable " + to_string(v) + " has no value"), variable_(v) {}
  Variable variable() const { return variable_; }

 private:
  Variable variable_;
};

/// Exact evaluation; throws unassigned_variable if p uses a variable the
/// point does not assign.
GaussianRational evaluate(const Polynomial& p, const Point& point);

}  // namespace cfgpoly
