#include <doctest.h>

#include <random>

#include "cfgpoly/grammar.hpp"
#include "cfgpoly/stability.hpp"
#include "cfgpoly/structures.hpp"
#include "support.hpp"

using namespace cfgpoly;
using testing::P;

namespace {

Grammar random_grammar(std::mt19937& rng) {
  std::map<Variable, Polynomial> rules;
  for (Variable v : testing::small_alphabet())
    if (rng() % 3 != 0) rules[v] = testing::random_polynomial(rng, testing::small_alphabet(), 3, 2);
  return Grammar(std::move(rules));
}

// x0^i * y0^j, or a0 * b0^j for the partition grammar.
Polynomial power_product(Variable s, std::uint32_t i, Variable t, std::uint32_t j) {
  return Polynomial(Monomial::from_entries({{s, i}, {t, j}}));
}

}  // namespace

TEST_SUITE("grammar") {

TEST_CASE("derive examples") {
  CHECK(derive(step_grammar(GrammarKind::partition_uni, 1), P("a0")) == P("a0*b0"));
  CHECK(derive(step_grammar(GrammarKind::stirling2_uni, 1), P("x0")) == P("x0^2*y0"));
  CHECK(derive(step_grammar(GrammarKind::marked_uni, 1), P("x0^2*y0")) == P("2*x0^3*y0^2 + 2*x0^4*y0"));
}

TEST_CASE("letters without a rule are constants") {
  const Grammar g({{Variable::x(1), P("y1")}});
  CHECK(g.rule(Variable::x(1)) != nullptr);
  CHECK(g.rule(Variable::y(1)) == nullptr);
  CHECK(g.derive(P("y1*z3 + 4")).is_zero());
  CHECK(g.derive(P("x1^2*z3")) == P("2*x1*y1*z3"));
}

TEST_CASE("iterate_family examples") {
  CHECK(iterate_family(GrammarKind::partition_uni, 3) == P("a0*b0 + 3*a0*b0^2 + a0*b0^3"));
  CHECK(iterate_family(GrammarKind::eulerian_multi, 2) == P("x2*y2*y1 + x1*x2*y2"));
  CHECK(iterate_family(GrammarKind::legendre, 1) == P("x1*z1*u1*v1 + x1*y1*z1*u1"));
}

TEST_CASE("order zero returns the seed") {
  CHECK(iterate_family(GrammarKind::partition_uni, 0) == P("a0"));
  CHECK(iterate_family(GrammarKind::partition_multi, 0) == P("a0"));
  CHECK(iterate_family(GrammarKind::stirling2_multi, 0) == P("z0"));
  CHECK(iterate_family(GrammarKind::marked_multi, 0) == P("z0"));
  CHECK(iterate_family(GrammarKind::eulerian_multi, 0) == P("x0"));
  CHECK(iterate_family(GrammarKind::legendre, 0) == P("x0"));
}

TEST_CASE("small multivariate outputs written out by hand") {
  CHECK(iterate_family(GrammarKind::eulerian_multi, 1) == P("x1*y1"));
  CHECK(iterate_family(GrammarKind::stirling2_multi, 1) == P("x1*z1*y1"));
  CHECK(iterate_family(GrammarKind::stirling2_multi, 2) ==
        P("x2*z2*y2*z1*y1 + x1*x2*z2*y2*y1 + x1*z1*x2*z2*y2"));
  CHECK(iterate_family(GrammarKind::marked_multi, 2) ==
        P("x2*z2*y2*z1*y1 + x1*x2*z2*y2*y1 + 2*x1*z1*x2*z2*y2"));
  // Blocks labeled by their maxima: 1|2|3, 1|23, 13|2, 12|3, 123.
  CHECK(iterate_family(GrammarKind::partition_multi, 3) ==
        P("a0*b1*b2*b3 + a0*b1*b3 + a0*b3*b2 + a0*b2*b3 + a0*b3"));
}

TEST_CASE("kind names") {
  for (GrammarKind k : kAllGrammarKinds) CHECK(parse_grammar_kind(to_string(k)) == k);
  CHECK(parse_grammar_kind("stirling2-multi") == GrammarKind::stirling2_multi);
  CHECK_FALSE(parse_grammar_kind("stirling3_multi"));
  CHECK(step_count(GrammarKind::legendre, 3) == 6);
  CHECK(step_count(GrammarKind::marked_multi, 3) == 3);
  CHECK_THROWS_AS(step_grammar(GrammarKind::eulerian_multi, 0), std::invalid_argument);
}

TEST_CASE("trajectory matches iteration") {
  for (GrammarKind k : kAllGrammarKinds) {
    const auto traj = family_trajectory(k, 4);
    REQUIRE(traj.size() == 5);
    if (k == GrammarKind::legendre) {
      CHECK(traj[2] == iterate_family(k, 1));
      CHECK(traj[4] == iterate_family(k, 2));
    } else {
      CHECK(traj[4] == iterate_family(k, 4));
    }
  }
}

TEST_CASE("linear operator examples") {
  const LinearDiffOp t2 = surrogate_operator(SurrogateKind::partition_multi, 2);
  CHECK(apply_linear_op(t2, P("a0*b1")) == P("a0*b1*b2 + a0*b2"));

  LinearDiffOp scalar_only{P("3*x1"), {}};
  const Polynomial p = P("y1^2 - z2");
  CHECK(apply_linear_op(scalar_only, p) == P("3*x1") * p);

  const Polynomial prod = P("a0 + p0") * P("b1 + p1");
  CHECK(apply_linear_op(t2, prod) == P("b2") * prod + P("b2*a0 + b2*p0"));
  // The raw step differs on the same input.
  CHECK(derive(step_grammar(GrammarKind::partition_multi, 2), prod) != apply_linear_op(t2, prod));
}

TEST_CASE("surrogate operator examples") {
  const LinearDiffOp p2 = surrogate_operator(SurrogateKind::partition_multi, 2);
  CHECK(p2.scalar == P("b2"));
  REQUIRE(p2.derivative_terms.size() == 1);
  CHECK(p2.derivative_terms[0].target == Variable::b(1));
  CHECK(p2.derivative_terms[0].coefficient == P("b2"));

  const LinearDiffOp l1 = surrogate_operator(SurrogateKind::legendre_even, 1);
  CHECK(l1.scalar == P("x1*z1"));
  const std::vector<Variable> expected{Variable::x(0), Variable::y(0), Variable::z(0),
                                       Variable::u(0), Variable::v(0), Variable::v(1)};
  REQUIRE(l1.derivative_terms.size() == expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) {
    CHECK(l1.derivative_terms[k].target == expected[k]);
    CHECK(l1.derivative_terms[k].coefficient == P("x1*y1*z1"));
  }

  const LinearDiffOp p1 = surrogate_operator(SurrogateKind::partition_multi, 1);
  CHECK(p1.scalar == P("b1"));
  CHECK(p1.derivative_terms.empty());
  CHECK_THROWS_AS(surrogate_operator(SurrogateKind::legendre_even, 0), std::invalid_argument);
}

TEST_CASE("grammar as operator") {
  const Grammar g = step_grammar(GrammarKind::stirling2_multi, 2);
  const LinearDiffOp op = LinearDiffOp::from_grammar(g);
  CHECK(op.scalar.is_zero());
  const Polynomial f = iterate_family(GrammarKind::stirling2_multi, 1);
  CHECK(op.apply(f) == g.derive(f));
}

TEST_CASE("derive is linear and obeys Leibniz on random grammars") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const Grammar g = random_grammar(rng);
    const Polynomial p = testing::random_polynomial(rng, testing::small_alphabet());
    const Polynomial q = testing::random_polynomial(rng, testing::small_alphabet());
    CHECK(g.derive(p + q) == g.derive(p) + g.derive(q));
    CHECK(g.derive(p * Integer(-5)) == g.derive(p) * Integer(-5));
    CHECK(g.derive(p * q) == g.derive(p) * q + p * g.derive(q));
  }
}

TEST_CASE("linear operators are linear") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    LinearDiffOp t;
    t.scalar = testing::random_polynomial(rng, testing::small_alphabet(), 2, 1);
    for (Variable v : testing::small_alphabet())
      if (rng() % 2) t.derivative_terms.push_back({testing::random_polynomial(rng, testing::small_alphabet(), 2, 1), v});
    const Polynomial p = testing::random_polynomial(rng, testing::small_alphabet());
    const Polynomial q = testing::random_polynomial(rng, testing::small_alphabet());
    CHECK(t.apply(p + q) == t.apply(p) + t.apply(q));
  }
}

TEST_CASE("multivariate outputs are multiaffine") {
  for (unsigned n = 0; n <= 5; ++n) {
    CHECK(iterate_family(GrammarKind::partition_multi, n).is_multiaffine());
    CHECK(iterate_family(GrammarKind::eulerian_multi, n).is_multiaffine());
    CHECK(iterate_family(GrammarKind::stirling2_multi, n).is_multiaffine());
    CHECK(iterate_family(GrammarKind::marked_multi, n).is_multiaffine());
  }
  for (unsigned n = 0; n <= 2; ++n) CHECK(iterate_family(GrammarKind::legendre, n).is_multiaffine());
}

TEST_CASE("univariate grammars produce the statistic distributions") {
  // D^n on the univariate grammars, read against counts from enumeration:
  //   partition: a b^k for k blocks; eulerian: x^{n+1-k} y^k for k descents;
  //   stirling and marked: x^{2n+1-k} y^k for k descents.
  for (std::uint32_t n = 1; n <= 6; ++n) {
    Polynomial partition, eulerian, stirling, marked;
    for (auto [k, c] : coefficient_table(StructureFamily::partition, n, Statistic::blocks))
      partition += power_product(Variable::a(), 1, Variable::b(0), k) * Integer(c);
    for (auto [k, c] : coefficient_table(StructureFamily::permutation, n, Statistic::des))
      eulerian += power_product(Variable::x(0), n + 1 - k, Variable::y(0), k) * Integer(c);
    CHECK(iterate_family(GrammarKind::partition_uni, n) == partition);
    CHECK(iterate_family(GrammarKind::eulerian_uni, n) == eulerian);
    if (n > 5) continue;
    for (auto [k, c] : coefficient_table(StructureFamily::stirling, n, Statistic::des))
      stirling += power_product(Variable::x(0), 2 * n + 1 - k, Variable::y(0), k) * Integer(c);
    for (auto [k, c] : coefficient_table(StructureFamily::marked_stirling, n, Statistic::des))
      marked += power_product(Variable::x(0), 2 * n + 1 - k, Variable::y(0), k) * Integer(c);
    CHECK(iterate_family(GrammarKind::stirling2_uni, n) == stirling);
    CHECK(iterate_family(GrammarKind::marked_uni, n) == marked);
  }
}

TEST_CASE("legendre steps keep the newest letters in every monomial") {
  for (unsigned n = 1; n <= 3; ++n) CHECK(verify_legendre_divisibility(n));
}

TEST_CASE("surrogates agree with the grammar on the generated sequence") {
  for (unsigned n = 1; n <= 5; ++n) CHECK(verify_partition_surrogate(n));
  for (unsigned n = 1; n <= 3; ++n) CHECK(verify_legendre_surrogate(n));
}

TEST_CASE("the raw partition step differs from its surrogate off the sequence") {
  const Polynomial f = P("a0 + b1");
  const Polynomial raw = derive(step_grammar(GrammarKind::partition_multi, 2), f);
  const Polynomial sur = apply_linear_op(surrogate_operator(SurrogateKind::partition_multi, 2), f);
  CHECK(raw == P("a0*b2 + b2"));
  CHECK(sur == P("a0*b2 + b1*b2 + b2"));
  CHECK(raw != sur);
}

}  // TEST_SUITE
