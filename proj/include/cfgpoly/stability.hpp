#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cfgpoly/grammar.hpp"
#include "cfgpoly/polynomial.hpp"
#include "cfgpoly/structures.hpp"

namespace cfgpoly {

// --- dense univariate polynomials over Q ------------------------------------

/// Coefficients low degree first, no trailing zeros; the zero polynomial is
/// empty.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<Rational> coefficients);

  /// Throws std::invalid_argument if p has more than one variable.
  static DensePoly from_polynomial(const Polynomial& p);

  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }

  DensePoly derivative() const;
  DensePoly monic() const;
  int sign_at(const Rational& x) const;
  /// Sign as x -> +inf (positive = true) or -inf.
  int sign_at_infinity(bool positive) const;

  friend DensePoly operator-(const DensePoly& p);
  friend DensePoly operator-(const DensePoly& a, const DensePoly& b);
  friend bool operator==(const DensePoly&, const DensePoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder of a / b; b must be nonzero.
std::pair<DensePoly, DensePoly> divide(const DensePoly& a, const DensePoly& b);
/// Monic gcd; gcd(0, 0) = 0.
DensePoly gcd(DensePoly a, DensePoly b);

/// Yun's algorithm: p = c * prod_i factors[i-1]^i with square-free, pairwise
/// coprime, monic factors (some may be 1).
std::vector<DensePoly> square_free_decomposition(const DensePoly& p);

// --- Sturm ----------------------------------------------------------------

struct RootReport {
  unsigned degree = 0;
  bool all_real = false;
  bool distinct = false;
  bool all_nonpositive = false;
  /// With multiplicity.
  unsigned real_root_count = 0;
  /// Roots in (-inf, 0], with multiplicity.
  unsigned nonpositive_root_count = 0;
};

/// Classical Sturm chain p, p', -rem(...), ...; p should be square-free.
std::vector<DensePoly> sturm_chain(const DensePoly& p);

/// Throws std::invalid_argument for the zero polynomial or more than one
/// variable.
RootReport sturm_report(const Polynomial& p);
RootReport sturm_report(const DensePoly& p);

// --- upper-half-plane falsification ---------------------------------------

/// Exact zero of a polynomial with every coordinate in the open upper half
/// plane.
struct Witness {
  Point point;
  /// "injected", "sample" or "affine-solve".
  std::string source;
  std::uint64_t sample_index = 0;
};

/// Sample coordinates are (a + b i) / d with d in [1, max_denominator],
/// |a/d| <= re_bound and 0 < b/d <= im_bound.
struct SamplingBox {
  long re_bound = 10;
  long im_bound = 10;
  long max_denominator = 64;
};

struct FalsifyOptions {
  std::uint64_t samples = 10000;
  std::uint64_t seed = 42;
  SamplingBox box;
  /// Tried before the random stream. Points whose imaginary parts are not
  /// all positive are skipped.
  std::vector<Point> injected;
  /// For each sample, also solve for one coordinate along the line through
  /// the point (exact when the target is affine in it) and verify the
  /// resulting candidate exactly.
  bool solve_affine = true;
};

/// Anything whose zero set we can probe exactly at Gaussian-rational points.
class StabilityTarget {
 public:
  virtual ~StabilityTarget() = default;
  /// Sorted, duplicate-free.
  virtual const std::vector<Variable>& variables() const = 0;
  /// With g[k] the numerators of variables()[k] over the common denominator
  /// d > 0, returns d^K * target(g / d) for a K depending only on the target.
  virtual GaussianInteger scaled_value(const std::vector<GaussianInteger>& g, const Integer& d) const = 0;

  bool vanishes_at(const Point& point) const;
};

/// Polynomial with its variables resolved to positions of an external,
/// sorted variable list, for repeated scaled evaluation.
class CompiledPolynomial {
 public:
  CompiledPolynomial() = default;
  /// Every variable of p must occur in slots.
  CompiledPolynomial(const Polynomial& p, const std::vector<Variable>& slots);

  bool is_zero() const { return terms_.empty(); }
  std::uint32_t degree() const { return degree_; }
  /// d^degree() * p(g / d).
  GaussianInteger scaled_value(const std::vector<GaussianInteger>& g, const Integer& d) const;

 private:
  struct Term {
    Integer coefficient;
    std::vector<std::pair<std::size_t, std::uint32_t>> powers;
    std::uint32_t degree = 0;
  };
  std::vector<Term> terms_;
  std::uint32_t degree_ = 0;
};

class PolynomialTarget final : public StabilityTarget {
 public:
  explicit PolynomialTarget(const Polynomial& p);
  const std::vector<Variable>& variables() const override { return vars_; }
  GaussianInteger scaled_value(const std::vector<GaussianInteger>& g, const Integer& d) const override {
    return compiled_.scaled_value(g, d);
  }

 private:
  std::vector<Variable> vars_;
  CompiledPolynomial compiled_;
};

/// Point number `index` of the stream keyed by `seed`; depends on nothing
/// else.
Point sample_point(const std::vector<Variable>& vars, std::uint64_t seed, std::uint64_t index,
                   const SamplingBox& box = {});

struct FalsifyResult {
  std::optional<Witness> witness;
  std::uint64_t points_tested = 0;
};

FalsifyResult sample_falsify(const StabilityTarget& target, const FalsifyOptions& options);
FalsifyResult sample_falsify(const Polynomial& p, const FalsifyOptions& options);
inline std::optional<Witness> sample_falsify(const Polynomial& p, std::uint64_t samples, std::uint64_t seed) {
  FalsifyOptions options;
  options.samples = samples;
  options.seed = seed;
  return sample_falsify(p, options).witness;
}

// --- lemma gate -----------------------------------------------------------

/// op applied to F = prod_{v in vars} (v + partner(v)), kept in factored
/// form: op(F) = scalar * F + sum_t c_t * prod_{v != t} (v + partner(v)).
/// partner(vars[k]) is the P-family variable with index k (vars sorted).
class ProductForm final : public StabilityTarget {
 public:
  /// Throws std::invalid_argument if op or vars mention a P-family variable.
  ProductForm(const LinearDiffOp& op, std::vector<Variable> vars);

  const std::vector<Variable>& variables() const override { return all_vars_; }
  GaussianInteger scaled_value(const std::vector<GaussianInteger>& g, const Integer& d) const override;

  const std::vector<Variable>& product_variables() const { return vars_; }
  Variable partner(Variable v) const;
  Polynomial product() const;
  bool identically_zero() const;
  Polynomial expand() const;

 private:
  Polynomial scalar_;
  std::vector<Polynomial> coefficient_;  // per entry of vars_
  std::vector<Variable> vars_;
  std::vector<Variable> all_vars_;
  std::vector<std::size_t> var_slot_;  // position of vars_[k] in all_vars_
  std::vector<std::size_t> partner_slot_;
  CompiledPolynomial compiled_scalar_;
  std::vector<CompiledPolynomial> compiled_coefficient_;
  std::uint32_t scale_ = 0;
};

struct LemmaGateResult {
  /// Present when |vars| <= max_expand_vars.
  std::optional<Polynomial> expanded;
  bool identically_zero = false;
  std::optional<Witness> witness;
  std::uint64_t points_tested = 0;
  std::vector<Variable> variables;
};

LemmaGateResult lemma_gate(const LinearDiffOp& t, std::vector<Variable> vars, const FalsifyOptions& options,
                           std::size_t max_expand_vars = 12);
LemmaGateResult lemma_gate(const Grammar& g, std::vector<Variable> vars, const FalsifyOptions& options,
                           std::size_t max_expand_vars = 12);

/// Variables the step-`step` grammar of a multivariate family acts on: the
/// letters of index below the step (legendre: below the pair being built,
/// plus u_m, v_m on even steps).
std::vector<Variable> step_input_variables(GrammarKind kind, unsigned step);

// --- the partition counterexample -----------------------------------------

struct CounterexampleReport {
  Polynomial product;   // (a + p0)(b1 + p1)
  Polynomial derived;   // raw second partition step applied to it
  Polynomial expected;  // b2 (a b1 + a p1 + a + p0)
  Point point;
  GaussianRational value;
  bool operator_differs_off_sequence = false;  // D2(a + b1) != T2(a + b1)
};

CounterexampleReport partition_counterexample();
/// a = (i-1)/2, b1 = i/2 - 1, p1 = i/2 - 1, p0 = i, b2 = i.
Point partition_counterexample_point();

// --- univariate specializations and identities ----------------------------

enum class UnivariateKind { A, B, C, M, S, T };

std::string_view to_string(UnivariateKind k);
/// "An", "Bn", ... or the bare letter.
std::optional<UnivariateKind> parse_univariate_kind(std::string_view name);
GrammarKind source_family(UnivariateKind k);

enum class Via { grammar, enumeration };

/// Family polynomial by either computation path. The enumeration path for a
/// univariate kind diagonalizes the matching multivariate weight polynomial.
Polynomial family_polynomial(GrammarKind kind, unsigned n, Via via = Via::grammar);

/// The substitution turning the multivariate polynomial into the univariate
/// one in x0.
Assignment univariate_assignment(UnivariateKind k, unsigned n);

Polynomial univariate_polynomial(UnivariateKind k, unsigned n, Via via = Via::grammar);

std::map<std::string, Polynomial> specialization_suite(unsigned n);

/// sum_k c[k] x0^k.
Polynomial polynomial_from_coefficients(const std::map<std::uint32_t, Integer>& c);

/// T_n(x) against sum_k 2^(n-k) C(n,k) x^k with C(n,k) counted on Q_n.
bool verify_tn_identity(unsigned n);

Integer stirling2(unsigned n, unsigned k);

/// Coefficients of x^0..x^order in C_k(x) / (1-x)^(2k+1), C_k from the
/// descent histogram of Q_k.
std::vector<Integer> gessel_stanley_series(unsigned k, unsigned order);

/// classical: coefficient n is S(n+k, n). fixed_k: coefficient n is S(n+k, k).
enum class SeriesIndex { classical, fixed_k };

bool verify_gessel_stanley(unsigned k, unsigned order, SeriesIndex index = SeriesIndex::classical);

/// C_n(x,y,z) after x_i -> x, y_i -> y, z_i -> z is fixed by all six
/// permutations of {x, y, z}.
bool verify_trivariate_symmetry(unsigned n);

/// asc, des and plat histograms coincide over Q_n.
bool verify_equidistribution(unsigned n);

/// derive(G_{n+1}, S_n) == surrogate(partition_multi, n+1)(S_n).
bool verify_partition_surrogate(unsigned n);
/// derive(G_{2n}, f_{2n-1}) == surrogate(legendre_even, n)(f_{2n-1}).
bool verify_legendre_surrogate(unsigned n);

/// Every monomial of f_{2n-1} divisible by u_n v_n and of f_{2n} by u_n.
bool verify_legendre_divisibility(unsigned n);

/// E_n with the (des, 1-plat, ..., (r-1)-plat, asc) counts as a joint
/// histogram is invariant under every permutation of those r+1 counts.
bool verify_rstirling_symmetry(unsigned n, unsigned r);

/// E_n diagonalized to x, y, z_1, ..., z_{r-1} (z_j -> Z-family index j).
Polynomial rstirling_diagonal(unsigned n, unsigned r);

}  // namespace cfgpoly
