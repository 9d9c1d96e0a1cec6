#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cfgpoly/structures.hpp"

namespace cfgpoly {

namespace {

struct FamilyName {
  StructureFamily family;
  std::string_view name;
};

constexpr FamilyName kFamilyNames[] = {
    {StructureFamily::partition, "partition"},   {StructureFamily::permutation, "permutation"},
    {StructureFamily::stirling, "stirling"},     {StructureFamily::r_stirling, "r_stirling"},
    {StructureFamily::legendre, "legendre"},     {StructureFamily::marked_stirling, "marked_stirling"},
};

std::uint32_t copies_per_value(const LabeledWord& w) {
  switch (w.family) {
    case StructureFamily::partition:
    case StructureFamily::permutation:
      return 1;
    case StructureFamily::r_stirling:
      return w.r;
    case StructureFamily::legendre:
      return 3;
    default:
      return 2;
  }
}

bool has_multiset(const LabeledWord& w) {
  const std::uint32_t n = w.order;
  const std::uint32_t r = copies_per_value(w);
  if (r == 0 || w.letters.size() != std::size_t{n} * r) return false;
  std::vector<std::uint32_t> plain(n + 1, 0), barred(n + 1, 0);
  for (const Letter& l : w.letters) {
    if (l.value < 1 || l.value > n) return false;
    if (l.barred && w.family != StructureFamily::legendre) return false;
    if (l.marked && w.family != StructureFamily::marked_stirling) return false;
    ++(l.barred ? barred : plain)[l.value];
  }
  const std::uint32_t expected_plain = w.family == StructureFamily::legendre ? 2 : r;
  const std::uint32_t expected_barred = w.family == StructureFamily::legendre ? 1 : 0;
  for (std::uint32_t v = 1; v <= n; ++v)
    if (plain[v] != expected_plain || barred[v] != expected_barred) return false;
  return true;
}

// Between two consecutive unbarred copies of a value every letter must be
// strictly larger. A barred twin counts as equal, not larger.
bool nested_condition(const std::vector<Letter>& letters) {
  std::vector<std::size_t> last(letters.size() + 2, SIZE_MAX);
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const Letter& l = letters[k];
    if (l.barred) continue;
    std::size_t prev = last[l.value];
    if (prev != SIZE_MAX)
      for (std::size_t j = prev + 1; j < k; ++j)
        if (letters[j].value <= l.value) return false;
    last[l.value] = k;
  }
  return true;
}

bool marks_allowed(const std::vector<Letter>& letters) {
  std::vector<std::uint32_t> seen(letters.size() + 2, 0);
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const Letter& l = letters[k];
    ++seen[l.value];
    if (!l.marked) continue;
    if (seen[l.value] != 2) return false;
    if (k + 1 >= letters.size() || letters[k + 1].value <= l.value) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(StructureFamily family) {
  for (const auto& [f, name] : kFamilyNames)
    if (f == family) return name;
  return "?";
}

std::optional<StructureFamily> parse_structure_family(std::string_view name) {
  std::string normalized(name);
  std::replace(normalized.begin(), normalized.end(), '-', '_');
  for (const auto& [f, n] : kFamilyNames)
    if (n == normalized) return f;
  return std::nullopt;
}

std::string LabeledWord::to_string() const {
  std::string out;
  for (const Letter& l : letters) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.value);
    if (l.barred) out += '\'';
    if (l.marked) out += '*';
  }
  return out;
}

LabeledWord parse_word(StructureFamily family, std::string_view text, std::uint32_t r) {
  LabeledWord w;
  w.family = family;
  w.r = family == StructureFamily::r_stirling ? r : 0;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    Letter l;
    while (!token.empty() && (token.back() == '\'' || token.back() == '*')) {
      (token.back() == '\'' ? l.barred : l.marked) = true;
      token.pop_back();
    }
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("malformed letter in word: " + std::string(text));
    l.value = static_cast<std::uint32_t>(std::stoul(token));
    w.letters.push_back(l);
  }
  const std::uint32_t copies = family == StructureFamily::partition ? 0 : copies_per_value(w);
  if (family == StructureFamily::partition)
    w.order = static_cast<std::uint32_t>(w.letters.size());
  else
    w.order = copies == 0 ? 0 : static_cast<std::uint32_t>(w.letters.size() / copies);
  return w;
}

bool is_valid(const LabeledWord& w) {
  if (w.family == StructureFamily::partition) {
    if (w.letters.size() != w.order) return false;
    std::uint32_t max_block = 0;
    for (const Letter& l : w.letters) {
      if (l.barred || l.marked || l.value < 1 || l.value > max_block + 1) return false;
      max_block = std::max(max_block, l.value);
    }
    return true;
  }
  if (w.family == StructureFamily::r_stirling && w.r == 0) return false;
  if (!has_multiset(w)) return false;
  if (!nested_condition(w.letters)) return false;
  if (w.family == StructureFamily::marked_stirling) return marks_allowed(w.letters);
  return true;
}

std::uint32_t block_count(const LabeledWord& partition) {
  if (partition.family != StructureFamily::partition) throw std::invalid_argument("block_count needs a partition");
  std::uint32_t blocks = 0;
  for (const Letter& l : partition.letters) blocks = std::max(blocks, l.value);
  return blocks;
}

namespace {

// Exponential generating function A of series-reduced rooted trees by
// labeled leaves: exp(A) = 2A - x + 1. Returns a(m) for m = 0..len-1.
std::vector<Integer> series_reduced_tree_counts(std::size_t len) {
  std::vector<Rational> a(len, Rational(0));
  if (len > 1) a[1] = 1;
  for (std::size_t iter = 0; iter < len; ++iter) {
    // e = exp(a) via e' = a' e.
    std::vector<Rational> e(len, Rational(0));
    e[0] = 1;
    for (std::size_t k = 1; k < len; ++k) {
      Rational s(0);
      for (std::size_t j = 1; j <= k; ++j) s += Rational(static_cast<long>(j)) * a[j] * e[k - j];
      e[k] = s / Rational(static_cast<long>(k));
    }
    std::vector<Rational> next(len, Rational(0));
    for (std::size_t k = 2; k < len; ++k) next[k] = e[k] - a[k];
    if (len > 1) next[1] = 1;
    a = std::move(next);
  }
  std::vector<Integer> out(len);
  Integer fact(1);
  for (std::size_t m = 0; m < len; ++m) {
    if (m > 0) fact *= static_cast<unsigned long>(m);
    Rational v = a[m] * Rational(fact);
    if (v.get_den() != 1) throw std::logic_error("non-integral tree count");
    out[m] = v.get_num();
  }
  return out;
}

}  // namespace

Integer structure_count(StructureFamily family, std::uint32_t n, std::uint32_t r) {
  Integer count(1);
  switch (family) {
    case StructureFamily::partition: {
      // Bell numbers by the Bell triangle.
      std::vector<Integer> row{Integer(1)};
      for (std::uint32_t i = 1; i < n; ++i) {
        std::vector<Integer> next{row.back()};
        for (const Integer& v : row) next.push_back(next.back() + v);
        row = std::move(next);
      }
      return n == 0 ? Integer(1) : row.back();
    }
    case StructureFamily::permutation:
      for (std::uint32_t k = 2; k <= n; ++k) count *= k;
      return count;
    case StructureFamily::stirling:
      for (std::uint32_t k = 1; k <= n; ++k) count *= 2 * k - 1;
      return count;
    case StructureFamily::r_stirling:
      for (std::uint32_t k = 1; k <= n; ++k) count *= r * (k - 1) + 1;
      return count;
    case StructureFamily::legendre:
      for (std::uint32_t k = 1; k <= n; ++k) count *= (3 * k - 2) * (3 * k - 1);
      return count;
    case StructureFamily::marked_stirling:
      return series_reduced_tree_counts(n + 2)[n + 1];
  }
  return count;
}

}  // namespace cfgpoly
