#include <stdexcept>

#include "cfgpoly/structures.hpp"

namespace cfgpoly {

namespace {

struct StatName {
  Statistic stat;
  std::string_view name;
};

constexpr StatName kStatNames[] = {
    {Statistic::asc, "asc"},
    {Statistic::des, "des"},
    {Statistic::plat, "plat"},
    {Statistic::barred_des, "barred_des"},
    {Statistic::blocks, "blocks"},
};

Polynomial product(const std::vector<Variable>& vars) {
  std::vector<Monomial::Entry> entries;
  entries.reserve(vars.size());
  for (Variable v : vars) entries.emplace_back(v, 1);
  return Polynomial(Monomial::from_entries(std::move(entries)));
}

}  // namespace

StatSets statistics(const LabeledWord& w) {
  if (w.family == StructureFamily::partition) throw std::invalid_argument("partitions carry no index statistics");
  if (!is_valid(w)) throw std::invalid_argument("invalid word: " + w.to_string());

  const auto& letters = w.letters;
  const std::uint32_t len = static_cast<std::uint32_t>(letters.size());
  // Values with the sentinels pi_0 = pi_{len+1} = 0.
  auto val = [&](std::uint32_t i) { return i == 0 || i > len ? 0u : letters[i - 1].value; };

  StatSets s;
  std::vector<std::uint32_t> seen(w.order + 1, 0);
  for (std::uint32_t i = 1; i <= len; ++i) {
    const Letter& l = letters[i - 1];
    const std::uint32_t occurrence = l.barred ? 0 : ++seen[l.value];
    const bool weak_rise = val(i - 1) <= val(i);
    const bool fall = val(i) > val(i + 1);

    if (val(i - 1) < val(i)) s.asc.push_back(i);
    if (fall) s.des.push_back(i);
    if (val(i - 1) == val(i)) s.plat.push_back(i);
    if (w.family == StructureFamily::r_stirling && i < len && val(i) == val(i + 1))
      s.jplat[occurrence].push_back(i);

    if (w.family == StructureFamily::legendre) {
      if (l.barred) {
        if (weak_rise) s.ls_u.push_back(i);
        if (fall) s.ls_v.push_back(i);
      } else {
        if (weak_rise) (occurrence == 1 ? s.ls_x : s.ls_z).push_back(i);
        if (fall) s.ls_y.push_back(i);
      }
    }
  }
  return s;
}

Polynomial weight(const LabeledWord& w) {
  const auto& letters = w.letters;
  auto value_at = [&](std::uint32_t i) { return letters[i - 1].value; };
  std::vector<Variable> vars;

  if (w.family == StructureFamily::partition) {
    if (!is_valid(w)) throw std::invalid_argument("invalid partition: " + w.to_string());
    std::vector<std::uint32_t> block_max(block_count(w) + 1, 0);
    for (std::uint32_t i = 0; i < letters.size(); ++i) block_max[letters[i].value] = i + 1;
    vars.push_back(Variable::a());
    for (std::size_t b = 1; b < block_max.size(); ++b) vars.push_back(Variable::b(block_max[b]));
    return product(vars);
  }

  // The empty word carries the seed label of its grammar.
  if (letters.empty() && is_valid(w)) {
    switch (w.family) {
      case StructureFamily::permutation:
      case StructureFamily::legendre:
        return Polynomial(Variable::x(0));
      case StructureFamily::stirling:
      case StructureFamily::marked_stirling:
        return Polynomial(Variable::z(0));
      default:
        return Polynomial(1L);
    }
  }

  const StatSets s = statistics(w);
  auto add = [&](const std::vector<std::uint32_t>& idx, Family f) {
    for (std::uint32_t i : idx) vars.push_back(Variable{f, value_at(i)});
  };
  switch (w.family) {
    case StructureFamily::permutation:
      add(s.asc, Family::X);
      add(s.des, Family::Y);
      break;
    case StructureFamily::stirling:
    case StructureFamily::marked_stirling:
      add(s.asc, Family::X);
      add(s.des, Family::Y);
      add(s.plat, Family::Z);
      break;
    case StructureFamily::legendre:
      add(s.ls_x, Family::X);
      add(s.ls_y, Family::Y);
      add(s.ls_z, Family::Z);
      add(s.ls_u, Family::U);
      add(s.ls_v, Family::V);
      break;
    case StructureFamily::r_stirling:
      add(s.des, Family::X);
      add(s.asc, Family::Y);
      for (const auto& [j, idx] : s.jplat)
        for (std::uint32_t i : idx) vars.push_back(Variable::z(rstirling_z_index(w.order, j, value_at(i))));
      break;
    default:
      break;
  }
  return product(vars);
}

Polynomial weight_polynomial(StructureFamily family, std::uint32_t n, std::uint32_t r) {
  Polynomial total;
  for (const LabeledWord& w : enumerate(family, n, r)) total += weight(w);
  return total;
}

std::string_view to_string(Statistic s) {
  for (const auto& [st, name] : kStatNames)
    if (st == s) return name;
  return "?";
}

std::optional<Statistic> parse_statistic(std::string_view name) {
  for (const auto& [st, n] : kStatNames)
    if (n == name) return st;
  return std::nullopt;
}

Statistic default_statistic(StructureFamily family) {
  return family == StructureFamily::partition ? Statistic::blocks : Statistic::des;
}

std::uint32_t statistic_value(const LabeledWord& w, Statistic s) {
  if (s == Statistic::blocks) return block_count(w);
  if (w.family == StructureFamily::partition)
    throw std::invalid_argument("partitions support only the blocks statistic");
  const StatSets sets = statistics(w);
  switch (s) {
    case Statistic::asc:
      return static_cast<std::uint32_t>(sets.asc.size());
    case Statistic::des:
      return static_cast<std::uint32_t>(sets.des.size());
    case Statistic::plat:
      return static_cast<std::uint32_t>(sets.plat.size());
    case Statistic::barred_des:
      if (w.family != StructureFamily::legendre)
        throw std::invalid_argument("barred_des is defined for legendre words only");
      return static_cast<std::uint32_t>(sets.ls_v.size());
    default:
      return 0;
  }
}

std::map<std::vector<std::uint32_t>, std::uint64_t> coefficient_table(StructureFamily family, std::uint32_t n,
                                                                      const std::vector<Statistic>& stats,
                                                                      std::uint32_t r) {
  std::map<std::vector<std::uint32_t>, std::uint64_t> table;
  for (const LabeledWord& w : enumerate(family, n, r)) {
    std::vector<std::uint32_t> key;
    key.reserve(stats.size());
    for (Statistic s : stats) key.push_back(statistic_value(w, s));
    ++table[key];
  }
  return table;
}

std::map<std::uint32_t, std::uint64_t> coefficient_table(StructureFamily family, std::uint32_t n, Statistic stat,
                                                         std::uint32_t r) {
  std::map<std::uint32_t, std::uint64_t> table;
  for (const LabeledWord& w : enumerate(family, n, r)) ++table[statistic_value(w, stat)];
  return table;
}

}  // namespace cfgpoly
