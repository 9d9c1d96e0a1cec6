#include <chrono>
#include <functional>

#include "cfgpoly/cli.hpp"
#include "cfgpoly/poly_json.hpp"

namespace cfgpoly::cli {

namespace {

using nlohmann::ordered_json;

struct Outcome {
  bool passed = true;
  ordered_json details = ordered_json::object();
};

unsigned limit(const RunConfig& config, unsigned fallback) { return config.n.value_or(fallback); }

std::string normalized(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c == '-') c = '_';
  return out;
}

ordered_json witness_json(const Witness& w) {
  ordered_json point = ordered_json::object();
  for (const auto& [v, z] : w.point) point[to_string(v)] = ordered_json::array({fraction_string(z.re), fraction_string(z.im)});
  return ordered_json{{"witness", point}, {"source", w.source}, {"sample_index", w.sample_index}};
}

FalsifyOptions falsify_options(const RunConfig& config) {
  FalsifyOptions options;
  options.samples = config.samples;
  options.seed = config.seed;
  options.box = config.box;
  return options;
}

struct FamilyBound {
  GrammarKind kind;
  unsigned n;
};

// Default ranges for the exact family-wide checks.
constexpr FamilyBound kFamilyDefaults[] = {
    {GrammarKind::eulerian_multi, 6}, {GrammarKind::partition_multi, 8}, {GrammarKind::stirling2_multi, 5},
    {GrammarKind::marked_multi, 5},   {GrammarKind::legendre, 3},
};

std::vector<FamilyBound> selected_families(const RunConfig& config) {
  std::vector<FamilyBound> out;
  if (config.family.empty()) {
    for (const FamilyBound& fb : kFamilyDefaults) out.push_back({fb.kind, limit(config, fb.n)});
    return out;
  }
  auto kind = grammar_kind_for(config.family);
  if (!kind || !is_multivariate(*kind)) throw usage_error("not a multivariate family: " + config.family);
  for (const FamilyBound& fb : kFamilyDefaults)
    if (fb.kind == *kind) out.push_back({fb.kind, limit(config, fb.n)});
  return out;
}

Outcome check_oracle(const RunConfig& config) {
  Outcome o;
  o.details["families"] = ordered_json::array();
  for (const auto& [kind, max_n] : selected_families(config)) {
    check_bound(config, to_string(kind), max_n);
    ordered_json failures = ordered_json::array();
    for (unsigned n = 1; n <= max_n; ++n)
      if (iterate_family(kind, n) != family_polynomial(kind, n, Via::enumeration)) failures.push_back(n);
    o.passed = o.passed && failures.empty();
    o.details["families"].push_back({{"kind", to_string(kind)}, {"n_max", max_n}, {"failures", failures}});
  }
  return o;
}

Outcome check_counts(const RunConfig& config) {
  struct Item {
    StructureFamily family;
    unsigned n;
    std::uint32_t r;
  };
  std::vector<Item> items;
  auto add = [&](StructureFamily f, unsigned fallback) {
    const unsigned top = limit(config, fallback);
    if (f == StructureFamily::r_stirling) {
      if (config.r) {
        items.push_back({f, top, *config.r});
      } else {
        for (std::uint32_t r = 1; r <= 3; ++r) items.push_back({f, top, r});
      }
      return;
    }
    items.push_back({f, top, 0});
  };
  const std::pair<StructureFamily, unsigned> defaults[] = {
      {StructureFamily::permutation, 6}, {StructureFamily::partition, 7}, {StructureFamily::stirling, 5},
      {StructureFamily::marked_stirling, 5}, {StructureFamily::legendre, 3}, {StructureFamily::r_stirling, 4},
  };
  if (config.family.empty()) {
    for (const auto& [f, n] : defaults) add(f, n);
  } else {
    auto f = parse_structure_family(config.family);
    if (!f) throw usage_error("unknown structure family: " + config.family);
    for (const auto& [df, n] : defaults)
      if (df == *f) add(df, n);
  }

  Outcome o;
  o.details["rows"] = ordered_json::array();
  for (const Item& item : items) {
    check_bound(config, to_string(item.family), item.n);
    for (unsigned n = 1; n <= item.n; ++n) {
      const auto inserted = enumerate(item.family, n, item.r);
      const auto filtered = enumerate_by_filter(item.family, n, item.r);
      const Integer closed = structure_count(item.family, n, item.r);
      bool ok = inserted == filtered && Integer(static_cast<unsigned long>(inserted.size())) == closed;
      ordered_json row{{"family", to_string(item.family)}, {"n", n}};
      if (item.family == StructureFamily::r_stirling) row["r"] = item.r;
      row["count"] = inserted.size();
      row["closed_form"] = closed.get_str();
      if (auto kind = grammar_kind_for(to_string(item.family))) {
        // Sum of coefficients of the family polynomial.
        Integer total(0);
        for (const auto& term : iterate_family(*kind, n).terms()) total += term.second;
        row["grammar_total"] = total.get_str();
        ok = ok && total == closed;
      }
      row["ok"] = ok;
      o.passed = o.passed && ok;
      o.details["rows"].push_back(row);
    }
  }
  return o;
}

Outcome check_tn_identity(const RunConfig& config) {
  Outcome o;
  ordered_json failures = ordered_json::array();
  const unsigned top = limit(config, 6);
  check_bound(config, "marked_multi", top);
  for (unsigned n = 1; n <= top; ++n)
    if (!verify_tn_identity(n)) failures.push_back(n);
  o.passed = failures.empty();
  o.details = {{"n_max", top}, {"failures", failures}};
  return o;
}

Outcome check_gessel_stanley(const RunConfig& config) {
  Outcome o;
  const unsigned top = limit(config, 4);
  const unsigned order = 8;
  check_bound(config, "stirling", top);
  o.details["order"] = order;
  o.details["rows"] = ordered_json::array();
  for (unsigned k = 1; k <= top; ++k) {
    const bool classical = verify_gessel_stanley(k, order, SeriesIndex::classical);
    ordered_json series = ordered_json::array();
    for (const Integer& c : gessel_stanley_series(k, order)) series.push_back(c.get_str());
    o.details["rows"].push_back({{"k", k},
                                 {"series", series},
                                 {"matches_S(n+k,n)", classical},
                                 {"matches_S(n+k,k)", verify_gessel_stanley(k, order, SeriesIndex::fixed_k)}});
    o.passed = o.passed && classical;
  }
  return o;
}

Outcome check_symmetry(const RunConfig& config) {
  Outcome o;
  const std::string family = normalized(config.family);
  ordered_json failures = ordered_json::array();
  if (family == "r_stirling") {
    const unsigned top = limit(config, 4);
    check_bound(config, "r_stirling", top);
    std::vector<unsigned> rs;
    if (config.r) rs.push_back(*config.r);
    else rs = {1, 2, 3};
    for (unsigned r : rs)
      for (unsigned n = 1; n <= top; ++n)
        if (!verify_rstirling_symmetry(n, r)) failures.push_back({{"n", n}, {"r", r}});
    o.details = {{"statistics", "des, j-plateaux, asc"}, {"n_max", top}, {"failures", failures}};
  } else if (family.empty() || family == "stirling" || family == "stirling2_multi") {
    const unsigned top = limit(config, 6);
    check_bound(config, "stirling", top);
    for (unsigned n = 1; n <= top; ++n)
      if (!verify_trivariate_symmetry(n)) failures.push_back(n);
    o.details = {{"polynomial", "C_n(x,y,z)"}, {"n_max", top}, {"failures", failures}};
  } else {
    throw usage_error("symmetry supports the stirling and r_stirling families");
  }
  o.passed = failures.empty();
  return o;
}

Outcome check_equidistribution(const RunConfig& config) {
  Outcome o;
  const unsigned top = limit(config, 5);
  check_bound(config, "stirling", top);
  ordered_json failures = ordered_json::array();
  for (unsigned n = 1; n <= top; ++n)
    if (!verify_equidistribution(n)) failures.push_back(n);
  o.passed = failures.empty();
  o.details = {{"n_max", top}, {"failures", failures}};
  return o;
}

Outcome check_operator_equivalence(const RunConfig& config) {
  Outcome o;
  const std::string family = normalized(config.family);
  const bool partition = family.empty() || family == "partition" || family == "partition_multi";
  const bool legendre = family.empty() || family == "legendre";
  if (!partition && !legendre) throw usage_error("operator-equivalence supports partition and legendre");
  if (partition) {
    const unsigned top = limit(config, 5);
    check_bound(config, "partition", top);
    ordered_json failures = ordered_json::array();
    for (unsigned n = 1; n <= top; ++n)
      if (!verify_partition_surrogate(n)) failures.push_back(n);
    const bool differs = partition_counterexample().operator_differs_off_sequence;
    o.details["partition"] = {{"n_max", top}, {"failures", failures}, {"differs_off_sequence", differs}};
    o.passed = o.passed && failures.empty() && differs;
  }
  if (legendre) {
    const unsigned top = limit(config, 3);
    check_bound(config, "legendre", top);
    ordered_json failures = ordered_json::array();
    for (unsigned n = 1; n <= top; ++n)
      if (!verify_legendre_surrogate(n)) failures.push_back(n);
    o.details["legendre"] = {{"n_max", top}, {"failures", failures}};
    o.passed = o.passed && failures.empty();
  }
  return o;
}

Outcome check_sturm(const RunConfig& config) {
  Outcome o;
  std::vector<UnivariateKind> kinds;
  if (config.family.empty()) {
    kinds = {UnivariateKind::A, UnivariateKind::C, UnivariateKind::S, UnivariateKind::T, UnivariateKind::B,
             UnivariateKind::M};
  } else {
    auto k = parse_univariate_kind(config.family);
    if (!k) throw usage_error("sturm expects one of An, Bn, Cn, Mn, Sn, Tn");
    kinds.push_back(*k);
  }
  o.details["reports"] = ordered_json::array();
  for (UnivariateKind kind : kinds) {
    const bool legendre = source_family(kind) == GrammarKind::legendre;
    const unsigned top = limit(config, legendre ? 3 : 6);
    check_bound(config, to_string(kind), top);
    const bool strict = kind == UnivariateKind::B || kind == UnivariateKind::C;
    for (unsigned n = 1; n <= top; ++n) {
      const RootReport r = sturm_report(univariate_polynomial(kind, n));
      const bool ok = r.all_real && (!strict || (r.distinct && r.all_nonpositive));
      o.passed = o.passed && ok;
      o.details["reports"].push_back({{"polynomial", std::string(to_string(kind)) + "_" + std::to_string(n)},
                                      {"degree", r.degree},
                                      {"all_real", r.all_real},
                                      {"distinct", r.distinct},
                                      {"all_nonpositive", r.all_nonpositive}});
    }
  }
  return o;
}

struct Gate {
  std::string name;
  unsigned step;
  LinearDiffOp op;
  std::vector<Variable> vars;
  bool expect_witness;
};

std::vector<Gate> lemma_gates(unsigned top) {
  std::vector<Gate> gates;
  for (GrammarKind kind : {GrammarKind::stirling2_multi, GrammarKind::eulerian_multi, GrammarKind::marked_multi})
    for (unsigned s = 1; s <= top + 1; ++s)
      gates.push_back({std::string(to_string(kind)), s, LinearDiffOp::from_grammar(step_grammar(kind, s)),
                       step_input_variables(kind, s), false});
  for (unsigned m = 1; m <= top; ++m) {
    const unsigned s = 2 * m - 1;
    gates.push_back({"legendre_odd", s, LinearDiffOp::from_grammar(step_grammar(GrammarKind::legendre, s)),
                     step_input_variables(GrammarKind::legendre, s), false});
  }
  for (unsigned s = 1; s <= top + 1; ++s)
    gates.push_back({"partition_surrogate", s, surrogate_operator(SurrogateKind::partition_multi, s),
                     step_input_variables(GrammarKind::partition_multi, s), false});
  for (unsigned m = 1; m <= top; ++m)
    gates.push_back({"legendre_surrogate", 2 * m, surrogate_operator(SurrogateKind::legendre_even, m),
                     step_input_variables(GrammarKind::legendre, 2 * m), false});
  gates.push_back({"partition_raw", 2, LinearDiffOp::from_grammar(step_grammar(GrammarKind::partition_multi, 2)),
                   step_input_variables(GrammarKind::partition_multi, 2), true});
  return gates;
}

Outcome check_lemma_gate(const RunConfig& config) {
  Outcome o;
  const unsigned top = limit(config, 3);
  check_bound(config, "lemma_gate", top);
  const std::string filter = normalized(config.family);
  const FalsifyOptions options = falsify_options(config);
  o.details["samples"] = config.samples;
  o.details["seed"] = config.seed;
  o.details["gates"] = ordered_json::array();
  bool matched = false;
  for (const Gate& gate : lemma_gates(top)) {
    if (!filter.empty() && filter != gate.name) continue;
    matched = true;
    const LemmaGateResult r = lemma_gate(gate.op, gate.vars, options);
    const bool ok = r.witness.has_value() == gate.expect_witness;
    o.passed = o.passed && ok;
    ordered_json row{{"gate", gate.name},
                     {"step", gate.step},
                     {"variables", r.variables.size()},
                     {"identically_zero", r.identically_zero},
                     {"expect_witness", gate.expect_witness},
                     {"witness", r.witness ? witness_json(*r.witness) : ordered_json(nullptr)},
                     {"ok", ok}};
    o.details["gates"].push_back(std::move(row));
  }
  if (!matched) throw usage_error("no lemma gate named " + config.family);
  return o;
}

Outcome check_counterexample(const RunConfig&) {
  Outcome o;
  const CounterexampleReport r = partition_counterexample();
  const bool matches = r.derived == r.expected;
  const bool zero = r.value.is_zero();
  o.passed = matches && zero && r.operator_differs_off_sequence;
  Witness w{r.point, "injected", 0};
  o.details = {{"derived", to_string(r.derived)},
               {"matches_expected", matches},
               {"value", ordered_json::array({fraction_string(r.value.re), fraction_string(r.value.im)})},
               {"differs_off_sequence", r.operator_differs_off_sequence}};
  o.details.update(witness_json(w));
  return o;
}

Outcome check_divisibility(const RunConfig& config) {
  Outcome o;
  const unsigned top = limit(config, 3);
  check_bound(config, "legendre", top);
  ordered_json failures = ordered_json::array();
  for (unsigned n = 1; n <= top; ++n)
    if (!verify_legendre_divisibility(n)) failures.push_back(n);
  o.passed = failures.empty();
  o.details = {{"n_max", top}, {"failures", failures}};
  return o;
}

Outcome check_multiaffine(const RunConfig& config) {
  Outcome o;
  o.details["families"] = ordered_json::array();
  for (const auto& [kind, max_n] : selected_families(config)) {
    check_bound(config, to_string(kind), max_n);
    ordered_json failures = ordered_json::array();
    const auto traj = family_trajectory(kind, step_count(kind, max_n));
    for (std::size_t s = 0; s < traj.size(); ++s)
      if (!traj[s].is_multiaffine()) failures.push_back(s);
    o.passed = o.passed && failures.empty();
    o.details["families"].push_back(
        {{"kind", to_string(kind)}, {"steps", traj.size() - 1}, {"non_multiaffine_steps", failures}});
  }
  return o;
}

Outcome check_rstirling(const RunConfig& config) {
  Outcome o;
  const unsigned top = limit(config, 3);
  check_bound(config, "r_stirling", top);
  std::vector<unsigned> rs;
  if (config.r) rs.push_back(*config.r);
  else rs = {1, 2, 3};
  const FalsifyOptions options = falsify_options(config);
  o.details["rows"] = ordered_json::array();
  for (unsigned r : rs)
    for (unsigned n = 1; n <= top; ++n) {
      const bool symmetric = verify_rstirling_symmetry(n, r);
      const FalsifyResult f = sample_falsify(weight_polynomial(StructureFamily::r_stirling, n, r), options);
      const bool ok = symmetric && !f.witness;
      o.passed = o.passed && ok;
      o.details["rows"].push_back({{"r", r},
                                   {"n", n},
                                   {"symmetric", symmetric},
                                   {"witness", f.witness ? witness_json(*f.witness) : ordered_json(nullptr)}});
    }
  return o;
}

using CheckFn = std::function<Outcome(const RunConfig&)>;

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"oracle", check_oracle},
      {"counts", check_counts},
      {"tn-identity", check_tn_identity},
      {"gessel-stanley", check_gessel_stanley},
      {"symmetry", check_symmetry},
      {"equidistribution", check_equidistribution},
      {"operator-equivalence", check_operator_equivalence},
      {"sturm", check_sturm},
      {"lemma-gate", check_lemma_gate},
      {"counterexample", check_counterexample},
      {"divisibility", check_divisibility},
      {"multiaffine", check_multiaffine},
      {"rstirling", check_rstirling},
  };
  return checks;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

CheckResult run_check(const std::string& name, const RunConfig& config) {
  for (const auto& [check_name, fn] : registry()) {
    if (check_name != name) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = fn(config);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return CheckResult{name, outcome.passed, std::move(outcome.details), elapsed.count()};
  }
  throw usage_error("unknown check: " + name);
}

}  // namespace cfgpoly::cli
