#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cfgpoly/stability.hpp"

namespace cfgpoly {

namespace {

struct UniName {
  UnivariateKind kind;
  std::string_view name;
};

constexpr UniName kUniNames[] = {
    {UnivariateKind::A, "An"}, {UnivariateKind::B, "Bn"}, {UnivariateKind::C, "Cn"},
    {UnivariateKind::M, "Mn"}, {UnivariateKind::S, "Sn"}, {UnivariateKind::T, "Tn"},
};

StructureFamily structure_of(GrammarKind kind) {
  switch (kind) {
    case GrammarKind::partition_multi:
      return StructureFamily::partition;
    case GrammarKind::eulerian_multi:
      return StructureFamily::permutation;
    case GrammarKind::stirling2_multi:
      return StructureFamily::stirling;
    case GrammarKind::legendre:
      return StructureFamily::legendre;
    case GrammarKind::marked_multi:
      return StructureFamily::marked_stirling;
    default:
      throw std::invalid_argument("no structure family behind " + std::string(to_string(kind)));
  }
}

bool all_divisible(const Polynomial& p, const Monomial& d) {
  return std::all_of(p.terms().begin(), p.terms().end(), [&](const auto& t) { return t.first.divisible_by(d); });
}

}  // namespace

std::string_view to_string(UnivariateKind k) {
  for (const auto& [kind, name] : kUniNames)
    if (kind == k) return name;
  return "?";
}

std::optional<UnivariateKind> parse_univariate_kind(std::string_view name) {
  for (const auto& [kind, n] : kUniNames)
    if (n == name || n.substr(0, 1) == name) return kind;
  return std::nullopt;
}

GrammarKind source_family(UnivariateKind k) {
  switch (k) {
    case UnivariateKind::A:
      return GrammarKind::eulerian_multi;
    case UnivariateKind::B:
    case UnivariateKind::M:
      return GrammarKind::legendre;
    case UnivariateKind::C:
      return GrammarKind::stirling2_multi;
    case UnivariateKind::S:
      return GrammarKind::partition_multi;
    case UnivariateKind::T:
      return GrammarKind::marked_multi;
  }
  throw std::logic_error("unhandled univariate kind");
}

Polynomial family_polynomial(GrammarKind kind, unsigned n, Via via) {
  if (via == Via::grammar) return iterate_family(kind, n);
  if (is_multivariate(kind)) return weight_polynomial(structure_of(kind), n);

  // Univariate grammars are diagonal images of the multivariate ones.
  Assignment diagonal;
  GrammarKind source = GrammarKind::partition_multi;
  switch (kind) {
    case GrammarKind::partition_uni:
      assign_families(diagonal, {Family::B}, n, Variable::b(0));
      break;
    case GrammarKind::eulerian_uni:
      source = GrammarKind::eulerian_multi;
      assign_families(diagonal, {Family::X}, n, Variable::x(0));
      assign_families(diagonal, {Family::Y}, n, Variable::y(0));
      break;
    default:
      source = kind == GrammarKind::marked_uni ? GrammarKind::marked_multi : GrammarKind::stirling2_multi;
      assign_families(diagonal, {Family::X, Family::Z}, n, Variable::x(0));
      assign_families(diagonal, {Family::Y}, n, Variable::y(0));
      break;
  }
  return specialize(weight_polynomial(structure_of(source), n), diagonal);
}

Assignment univariate_assignment(UnivariateKind k, unsigned n) {
  const Substitution one = Rational(1);
  const Substitution x = Variable::x(0);
  Assignment as;
  switch (k) {
    case UnivariateKind::A:
      assign_families(as, {Family::X}, n, one);
      assign_families(as, {Family::Y}, n, x);
      break;
    case UnivariateKind::C:
    case UnivariateKind::T:
      assign_families(as, {Family::X, Family::Z}, n, one);
      assign_families(as, {Family::Y}, n, x);
      break;
    case UnivariateKind::S:
      assign_families(as, {Family::A}, 0, one);
      assign_families(as, {Family::B}, n, x);
      break;
    case UnivariateKind::B:
      assign_families(as, {Family::X, Family::U, Family::Z}, n, one);
      assign_families(as, {Family::Y, Family::V}, n, x);
      break;
    case UnivariateKind::M:
      assign_families(as, {Family::X, Family::U, Family::Y, Family::Z}, n, one);
      assign_families(as, {Family::V}, n, x);
      break;
  }
  return as;
}

Polynomial univariate_polynomial(UnivariateKind k, unsigned n, Via via) {
  return specialize(family_polynomial(source_family(k), n, via), univariate_assignment(k, n));
}

std::map<std::string, Polynomial> specialization_suite(unsigned n) {
  std::map<std::string, Polynomial> suite;
  // B and M share one Legendre polynomial.
  const Polynomial legendre = family_polynomial(GrammarKind::legendre, n);
  for (const auto& [kind, name] : kUniNames) {
    const Polynomial& source =
        source_family(kind) == GrammarKind::legendre ? legendre : family_polynomial(source_family(kind), n);
    suite.emplace(std::string(name), specialize(source, univariate_assignment(kind, n)));
  }
  return suite;
}

Polynomial polynomial_from_coefficients(const std::map<std::uint32_t, Integer>& c) {
  Polynomial p;
  for (const auto& [k, v] : c) p.add_term(k == 0 ? Monomial() : Monomial(Variable::x(0), k), v);
  return p;
}

bool verify_tn_identity(unsigned n) {
  std::map<std::uint32_t, Integer> expected;
  for (const auto& [k, count] : coefficient_table(StructureFamily::stirling, n, Statistic::des)) {
    Integer term(static_cast<unsigned long>(count));
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), n - k);
    expected[k] = term;
  }
  return univariate_polynomial(UnivariateKind::T, n) == polynomial_from_coefficients(expected);
}

Integer stirling2(unsigned n, unsigned k) {
  if (k > n) return 0;
  // prev[j] = S(m - 1, j)
  std::vector<Integer> prev(k + 1, Integer(0)), cur(k + 1, Integer(0));
  prev[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    cur[0] = 0;
    for (unsigned j = 1; j <= k; ++j) cur[j] = Integer(j) * prev[j] + prev[j - 1];
    std::swap(prev, cur);
  }
  return prev[k];
}

std::vector<Integer> gessel_stanley_series(unsigned k, unsigned order) {
  std::vector<Integer> numerator(order + 1, Integer(0));
  for (const auto& [m, count] : coefficient_table(StructureFamily::stirling, k, Statistic::des))
    if (m <= order) numerator[m] = static_cast<unsigned long>(count);
  std::vector<Integer> out(order + 1, Integer(0));
  for (unsigned j = 0; j <= order; ++j) {
    const Integer denom_coeff = binomial(j + 2 * k, 2 * k);
    for (unsigned m = 0; m + j <= order; ++m) out[m + j] += numerator[m] * denom_coeff;
  }
  return out;
}

bool verify_gessel_stanley(unsigned k, unsigned order, SeriesIndex index) {
  const auto series = gessel_stanley_series(k, order);
  for (unsigned n = 0; n <= order; ++n) {
    const Integer expected = index == SeriesIndex::classical ? stirling2(n + k, n) : stirling2(n + k, k);
    if (series[n] != expected) return false;
  }
  return true;
}

bool verify_trivariate_symmetry(unsigned n) {
  const Variable x = Variable::x(0), y = Variable::y(0), z = Variable::z(0);
  Assignment diagonal;
  assign_families(diagonal, {Family::X}, n, x);
  assign_families(diagonal, {Family::Y}, n, y);
  assign_families(diagonal, {Family::Z}, n, z);
  const Polynomial c = specialize(family_polynomial(GrammarKind::stirling2_multi, n), diagonal);
  std::vector<Variable> images{x, y, z};
  do {
    const Assignment perm{{x, images[0]}, {y, images[1]}, {z, images[2]}};
    if (specialize(c, perm) != c) return false;
  } while (std::next_permutation(images.begin(), images.end()));
  return true;
}

bool verify_equidistribution(unsigned n) {
  const auto asc = coefficient_table(StructureFamily::stirling, n, Statistic::asc);
  return asc == coefficient_table(StructureFamily::stirling, n, Statistic::des) &&
         asc == coefficient_table(StructureFamily::stirling, n, Statistic::plat);
}

bool verify_partition_surrogate(unsigned n) {
  const Polynomial s = iterate_family(GrammarKind::partition_multi, n);
  return step_grammar(GrammarKind::partition_multi, n + 1).derive(s) ==
         surrogate_operator(SurrogateKind::partition_multi, n + 1).apply(s);
}

bool verify_legendre_surrogate(unsigned n) {
  if (n == 0) throw std::invalid_argument("legendre surrogate needs n >= 1");
  const auto traj = family_trajectory(GrammarKind::legendre, 2 * n - 1);
  const Polynomial& f = traj.back();
  return step_grammar(GrammarKind::legendre, 2 * n).derive(f) ==
         surrogate_operator(SurrogateKind::legendre_even, n).apply(f);
}

bool verify_legendre_divisibility(unsigned n) {
  if (n == 0) throw std::invalid_argument("divisibility check needs n >= 1");
  const auto traj = family_trajectory(GrammarKind::legendre, 2 * n);
  const Monomial uv = Monomial::from_entries({{Variable::u(n), 1}, {Variable::v(n), 1}});
  return all_divisible(traj[2 * n - 1], uv) && all_divisible(traj[2 * n], Monomial(Variable::u(n)));
}

bool verify_rstirling_symmetry(unsigned n, unsigned r) {
  std::map<std::vector<std::uint32_t>, std::uint64_t> joint;
  for (const LabeledWord& w : enumerate(StructureFamily::r_stirling, n, r)) {
    const StatSets s = statistics(w);
    std::vector<std::uint32_t> key{static_cast<std::uint32_t>(s.des.size())};
    for (unsigned j = 1; j < r; ++j) {
      auto it = s.jplat.find(j);
      key.push_back(it == s.jplat.end() ? 0 : static_cast<std::uint32_t>(it->second.size()));
    }
    key.push_back(static_cast<std::uint32_t>(s.asc.size()));
    ++joint[key];
  }
  std::vector<std::size_t> order(r + 1);
  std::iota(order.begin(), order.end(), 0);
  do {
    for (const auto& [key, count] : joint) {
      std::vector<std::uint32_t> permuted(key.size());
      for (std::size_t k = 0; k < key.size(); ++k) permuted[k] = key[order[k]];
      auto it = joint.find(permuted);
      if (it == joint.end() || it->second != count) return false;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return true;
}

Polynomial rstirling_diagonal(unsigned n, unsigned r) {
  Assignment diagonal;
  assign_families(diagonal, {Family::X}, n, Variable::x(0));
  assign_families(diagonal, {Family::Y}, n, Variable::y(0));
  for (unsigned j = 1; j < r; ++j)
    for (unsigned v = 1; v <= n; ++v) diagonal[Variable::z(rstirling_z_index(n, j, v))] = Variable::z(j);
  return specialize(weight_polynomial(StructureFamily::r_stirling, n, r), diagonal);
}

}  // namespace cfgpoly
