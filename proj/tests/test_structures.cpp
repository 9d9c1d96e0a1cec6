#include <doctest.h>

#include <algorithm>
#include <set>

#include "cfgpoly/grammar.hpp"
#include "cfgpoly/stability.hpp"
#include "cfgpoly/structures.hpp"
#include "support.hpp"

using namespace cfgpoly;
using testing::P;

namespace {

using Idx = std::vector<std::uint32_t>;

std::vector<std::string> words_of(StructureFamily f, std::uint32_t n, std::uint32_t r = 0) {
  std::vector<std::string> out;
  for (const auto& w : enumerate(f, n, r)) out.push_back(w.to_string());
  return out;
}

LabeledWord word(StructureFamily f, const char* text, std::uint32_t r = 0) { return parse_word(f, text, r); }

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

Integer power(long base, unsigned e) {
  Integer out = 1;
  for (unsigned k = 0; k < e; ++k) out *= base;
  return out;
}

// Number of permutations of [n] with k descents counted with the trailing
// sentinel (so k runs over 1..n): the classical alternating-sum formula.
Integer eulerian(unsigned n, unsigned k) {
  Integer total = 0;
  for (unsigned j = 0; j <= k; ++j) {
    Integer term = binomial(n + 1, j) * power(static_cast<long>(k - j), n);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

// Second-order Eulerian numbers, same descent convention.
Integer second_order(unsigned n, unsigned k) {
  if (n == 0) return k == 0 ? 1 : 0;
  if (k == 0) return 0;
  return Integer(k) * second_order(n - 1, k) + Integer(2 * n - k) * second_order(n - 1, k - 1);
}

const StructureFamily kWordFamilies[] = {StructureFamily::permutation, StructureFamily::stirling,
                                         StructureFamily::legendre, StructureFamily::marked_stirling};

}  // namespace

TEST_SUITE("structures") {

TEST_CASE("enumeration examples") {
  CHECK(words_of(StructureFamily::marked_stirling, 2) ==
        std::vector<std::string>{"1 1 2 2", "1 1* 2 2", "1 2 2 1", "2 2 1 1"});
  CHECK(enumerate(StructureFamily::stirling, 2).size() == 3);
  CHECK(enumerate(StructureFamily::legendre, 2).size() == 40);
  CHECK(words_of(StructureFamily::permutation, 1) == std::vector<std::string>{"1"});
  CHECK(words_of(StructureFamily::legendre, 1) == std::vector<std::string>{"1 1 1'", "1' 1 1"});
  CHECK(words_of(StructureFamily::partition, 3) ==
        std::vector<std::string>{"1 1 1", "1 1 2", "1 2 1", "1 2 2", "1 2 3"});
  CHECK(words_of(StructureFamily::r_stirling, 2, 3) ==
        std::vector<std::string>{"1 1 1 2 2 2", "1 1 2 2 2 1", "1 2 2 2 1 1", "2 2 2 1 1 1"});
}

TEST_CASE("family names") {
  CHECK(parse_structure_family("marked-stirling") == StructureFamily::marked_stirling);
  CHECK(parse_structure_family("r_stirling") == StructureFamily::r_stirling);
  CHECK(parse_structure_family("r-stirling") == StructureFamily::r_stirling);
  CHECK_FALSE(parse_structure_family("stirlings"));
  CHECK(to_string(StructureFamily::legendre) == "legendre");
}

TEST_CASE("word text round trip") {
  for (StructureFamily f : kWordFamilies)
    for (const auto& w : enumerate(f, 3)) CHECK(parse_word(f, w.to_string()) == w);
  for (const auto& w : enumerate(StructureFamily::r_stirling, 3, 2))
    CHECK(parse_word(StructureFamily::r_stirling, w.to_string(), 2) == w);
  CHECK_THROWS_AS(parse_word(StructureFamily::stirling, "1 x 1"), std::invalid_argument);
}

TEST_CASE("validity predicates") {
  CHECK(is_valid(word(StructureFamily::stirling, "1 2 2 1")));
  CHECK_FALSE(is_valid(word(StructureFamily::stirling, "1 2 1 2")));
  CHECK_FALSE(is_valid(word(StructureFamily::stirling, "1 1 2")));
  CHECK(is_valid(word(StructureFamily::legendre, "1' 1 2' 2 3 3 2 3' 1")));
  CHECK_FALSE(is_valid(word(StructureFamily::legendre, "1 1' 1")));
  CHECK(is_valid(word(StructureFamily::legendre, "1 2' 1 1'")) == false);
  CHECK(is_valid(word(StructureFamily::legendre, "1 2 2 2' 1 1'")));
  CHECK(is_valid(word(StructureFamily::marked_stirling, "1 1* 2 2")));
  CHECK_FALSE(is_valid(word(StructureFamily::marked_stirling, "1* 1 2 2")));
  CHECK_FALSE(is_valid(word(StructureFamily::marked_stirling, "1 1 2 2*")));
  CHECK_FALSE(is_valid(word(StructureFamily::marked_stirling, "2 2* 1 1")));
  CHECK_FALSE(is_valid(word(StructureFamily::stirling, "1 1* 2 2")));
  CHECK(is_valid(word(StructureFamily::r_stirling, "1 2 2 2 1 1", 3)));
  CHECK_FALSE(is_valid(word(StructureFamily::r_stirling, "1 2 2 1 2 1", 3)));
  CHECK_FALSE(is_valid(word(StructureFamily::r_stirling, "1 1 2 2", 3)));
  CHECK(is_valid(word(StructureFamily::partition, "1 2 1 3")));
  CHECK_FALSE(is_valid(word(StructureFamily::partition, "1 3 2")));
  CHECK_FALSE(is_valid(word(StructureFamily::partition, "2 1")));
}

TEST_CASE("statistics examples") {
  const StatSets s = statistics(word(StructureFamily::legendre, "1' 1 2' 2 3 3 2 3' 1"));
  CHECK(s.ls_x == Idx{2, 4, 5});
  CHECK(s.ls_y == Idx{6, 9});
  CHECK(s.ls_z == Idx{6});
  CHECK(s.ls_u == Idx{1, 3, 8});
  CHECK(s.ls_v == Idx{8});

  const StatSets st = statistics(word(StructureFamily::stirling, "1 1"));
  CHECK(st.asc == Idx{1});
  CHECK(st.plat == Idx{2});
  CHECK(st.des == Idx{2});

  const StatSets p = statistics(word(StructureFamily::permutation, "1"));
  CHECK(p.asc == Idx{1});
  CHECK(p.des == Idx{1});

  CHECK_THROWS_AS(statistics(word(StructureFamily::stirling, "1 2 1 2")), std::invalid_argument);
  CHECK_THROWS_AS(statistics(word(StructureFamily::partition, "1 2")), std::invalid_argument);
}

TEST_CASE("j-plateaux") {
  const StatSets s = statistics(word(StructureFamily::r_stirling, "1 1 2 2 2 1", 3));
  REQUIRE(s.jplat.count(1) == 1);
  REQUIRE(s.jplat.count(2) == 1);
  CHECK(s.jplat.at(1) == Idx{1, 3});
  CHECK(s.jplat.at(2) == Idx{4});
  CHECK(weight(word(StructureFamily::r_stirling, "1 1 2 2 2 1", 3)) ==
        Polynomial(Monomial::from_entries({{Variable::x(1), 1},
                                           {Variable::x(2), 1},
                                           {Variable::y(1), 1},
                                           {Variable::y(2), 1},
                                           {Variable::z(rstirling_z_index(2, 1, 1)), 1},
                                           {Variable::z(rstirling_z_index(2, 1, 2)), 1},
                                           {Variable::z(rstirling_z_index(2, 2, 2)), 1}})));
}

TEST_CASE("weight polynomial examples") {
  CHECK(weight_polynomial(StructureFamily::stirling, 2) == P("x2*z2*y2*z1*y1 + x1*x2*z2*y2*y1 + x1*z1*x2*z2*y2"));
  const Polynomial t2 = weight_polynomial(StructureFamily::marked_stirling, 2);
  CHECK(t2.coefficient(Monomial::from_entries({{Variable::x(1), 1},
                                               {Variable::z(1), 1},
                                               {Variable::x(2), 1},
                                               {Variable::z(2), 1},
                                               {Variable::y(2), 1}})) == 2);
  CHECK(t2 == P("x2*z2*y2*z1*y1 + x1*x2*z2*y2*y1 + 2*x1*z1*x2*z2*y2"));
  CHECK(weight_polynomial(StructureFamily::legendre, 1) == P("x1*z1*u1*v1 + x1*y1*z1*u1"));
  CHECK(weight(word(StructureFamily::partition, "1 2 2")) == P("a0*b1*b3"));
  CHECK(weight(word(StructureFamily::permutation, "")) == P("x0"));
  CHECK(weight(word(StructureFamily::stirling, "")) == P("z0"));
}

TEST_CASE("coefficient table examples") {
  using Row = std::map<std::uint32_t, std::uint64_t>;
  CHECK(coefficient_table(StructureFamily::stirling, 2, Statistic::des) == Row{{1, 1}, {2, 2}});
  CHECK(coefficient_table(StructureFamily::marked_stirling, 2, Statistic::des) == Row{{1, 2}, {2, 2}});
  CHECK(coefficient_table(StructureFamily::permutation, 3, Statistic::des) == Row{{1, 1}, {2, 4}, {3, 1}});
  CHECK(coefficient_table(StructureFamily::stirling, 3, Statistic::des) == Row{{1, 1}, {2, 8}, {3, 6}});
  CHECK(coefficient_table(StructureFamily::partition, 4, Statistic::blocks) ==
        Row{{1, 1}, {2, 7}, {3, 6}, {4, 1}});
  CHECK_THROWS_AS(coefficient_table(StructureFamily::partition, 2, Statistic::des), std::invalid_argument);
  CHECK_THROWS_AS(coefficient_table(StructureFamily::stirling, 2, Statistic::barred_des), std::invalid_argument);

  const auto joint = coefficient_table(StructureFamily::stirling, 2, {Statistic::asc, Statistic::des});
  std::uint64_t total = 0;
  for (const auto& [key, count] : joint) {
    CHECK(key.size() == 2);
    total += count;
  }
  CHECK(total == 3);
}

TEST_CASE("label counts per word") {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (const auto& w : enumerate(StructureFamily::permutation, n)) {
      const StatSets s = statistics(w);
      CHECK(s.asc.size() + s.des.size() == n + 1);
      CHECK(weight(w).total_degree() == n + 1);
    }
    for (StructureFamily f : {StructureFamily::stirling, StructureFamily::marked_stirling})
      for (const auto& w : enumerate(f, n)) {
        const StatSets s = statistics(w);
        CHECK(s.asc.size() + s.des.size() + s.plat.size() == 2 * n + 1);
      }
    if (n <= 3)
      for (const auto& w : enumerate(StructureFamily::legendre, n)) {
        const StatSets s = statistics(w);
        CHECK(s.ls_x.size() + s.ls_y.size() + s.ls_z.size() + s.ls_u.size() + s.ls_v.size() == 3 * n + 1);
        CHECK(weight(w).total_degree() == 3 * n + 1);
      }
    for (const auto& w : enumerate(StructureFamily::partition, n))
      CHECK(weight(w).total_degree() == 1 + block_count(w));
  }
}

TEST_CASE("cardinalities") {
  const unsigned bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
  const unsigned schroeder[] = {1, 1, 4, 26, 236, 2752};
  for (std::uint32_t n = 1; n <= 7; ++n) {
    CHECK(enumerate(StructureFamily::partition, n).size() == bell[n]);
    Integer bell_sum = 0;
    for (unsigned k = 0; k <= n; ++k) bell_sum += stirling2(n, k);
    CHECK(bell_sum == bell[n]);
    CHECK(structure_count(StructureFamily::partition, n) == bell[n]);
  }
  for (std::uint32_t n = 1; n <= 6; ++n) CHECK(Integer(enumerate(StructureFamily::permutation, n).size()) == factorial(n));
  const unsigned double_factorial[] = {1, 1, 3, 15, 105, 945};
  for (std::uint32_t n = 1; n <= 5; ++n) {
    CHECK(enumerate(StructureFamily::stirling, n).size() == double_factorial[n]);
    CHECK(enumerate(StructureFamily::marked_stirling, n).size() == schroeder[n]);
    CHECK(structure_count(StructureFamily::marked_stirling, n) == schroeder[n]);
  }
  CHECK(enumerate(StructureFamily::legendre, 1).size() == 2);
  CHECK(enumerate(StructureFamily::legendre, 3).size() == 2240);
  CHECK(structure_count(StructureFamily::legendre, 3) == 2240);
  CHECK(enumerate(StructureFamily::r_stirling, 3, 3).size() == 28);
  CHECK(enumerate(StructureFamily::r_stirling, 4, 2).size() == 105);
  CHECK(enumerate(StructureFamily::r_stirling, 4, 1).size() == 24);
  for (std::uint32_t r = 1; r <= 3; ++r)
    for (std::uint32_t n = 1; n <= 4; ++n)
      CHECK(Integer(enumerate(StructureFamily::r_stirling, n, r).size()) ==
            structure_count(StructureFamily::r_stirling, n, r));
  CHECK(structure_count(StructureFamily::marked_stirling, 10) == Integer("6939897856"));
}

TEST_CASE("descent counts against closed forms") {
  for (std::uint32_t n = 1; n <= 6; ++n)
    for (auto [k, c] : coefficient_table(StructureFamily::permutation, n, Statistic::des))
      CHECK(Integer(c) == eulerian(n, k));
  for (std::uint32_t n = 1; n <= 5; ++n) {
    const auto table = coefficient_table(StructureFamily::stirling, n, Statistic::des);
    for (std::uint32_t k = 0; k <= n + 1; ++k) {
      const auto it = table.find(k);
      CHECK(Integer(it == table.end() ? 0 : it->second) == second_order(n, k));
    }
  }
}

TEST_CASE("both enumeration paths agree") {
  for (std::uint32_t n = 1; n <= 5; ++n) {
    CHECK(enumerate(StructureFamily::partition, n) == enumerate_by_filter(StructureFamily::partition, n));
    CHECK(enumerate(StructureFamily::permutation, n) == enumerate_by_filter(StructureFamily::permutation, n));
  }
  for (std::uint32_t n = 1; n <= 4; ++n) {
    CHECK(enumerate(StructureFamily::stirling, n) == enumerate_by_filter(StructureFamily::stirling, n));
    CHECK(enumerate(StructureFamily::marked_stirling, n) == enumerate_by_filter(StructureFamily::marked_stirling, n));
  }
  for (std::uint32_t n = 1; n <= 2; ++n)
    CHECK(enumerate(StructureFamily::legendre, n) == enumerate_by_filter(StructureFamily::legendre, n));
  CHECK(enumerate(StructureFamily::r_stirling, 3, 2) == enumerate_by_filter(StructureFamily::r_stirling, 3, 2));
  CHECK(enumerate(StructureFamily::r_stirling, 2, 3) == enumerate_by_filter(StructureFamily::r_stirling, 2, 3));
}

TEST_CASE("enumeration is sorted, duplicate free and valid") {
  for (StructureFamily f : kWordFamilies) {
    const auto words = enumerate(f, f == StructureFamily::legendre ? 2 : 4);
    CHECK(std::is_sorted(words.begin(), words.end()));
    CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());
    for (const auto& w : words) CHECK(is_valid(w));
  }
  const auto parts = enumerate(StructureFamily::partition, 5);
  for (const auto& w : parts) CHECK(is_valid(w));
  CHECK(std::set<LabeledWord>(parts.begin(), parts.end()).size() == parts.size());
  CHECK(enumerate(StructureFamily::stirling, 4) == enumerate(StructureFamily::stirling, 4));
}

TEST_CASE("weights reproduce the grammars") {
  for (unsigned n = 0; n <= 5; ++n) {
    CHECK(weight_polynomial(StructureFamily::permutation, n) == iterate_family(GrammarKind::eulerian_multi, n));
    CHECK(weight_polynomial(StructureFamily::partition, n) == iterate_family(GrammarKind::partition_multi, n));
    CHECK(weight_polynomial(StructureFamily::stirling, n) == iterate_family(GrammarKind::stirling2_multi, n));
    CHECK(weight_polynomial(StructureFamily::marked_stirling, n) == iterate_family(GrammarKind::marked_multi, n));
  }
  for (unsigned n = 0; n <= 2; ++n)
    CHECK(weight_polynomial(StructureFamily::legendre, n) == iterate_family(GrammarKind::legendre, n));
}

TEST_CASE("plateau, ascent and descent counts are equidistributed") {
  for (unsigned n = 1; n <= 5; ++n) CHECK(verify_equidistribution(n));
}

TEST_CASE("trivariate stirling polynomial is symmetric") {
  for (unsigned n = 1; n <= 5; ++n) CHECK(verify_trivariate_symmetry(n));
}

TEST_CASE("r-stirling joint statistic is symmetric") {
  for (unsigned r = 1; r <= 3; ++r)
    for (unsigned n = 1; n <= 3; ++n) CHECK(verify_rstirling_symmetry(n, r));
  // r = 2 collapses to the trivariate stirling polynomial.
  for (unsigned n = 1; n <= 4; ++n) {
    Assignment diag;
    assign_families(diag, {Family::X}, n, Variable::x(0));
    assign_families(diag, {Family::Y}, n, Variable::y(0));
    assign_families(diag, {Family::Z}, n, Variable::z(1));
    CHECK(rstirling_diagonal(n, 2) == specialize(weight_polynomial(StructureFamily::stirling, n), diag));
  }
}

}  // TEST_SUITE
