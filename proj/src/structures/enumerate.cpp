#include <algorithm>
#include <stdexcept>

#include "cfgpoly/structures.hpp"

namespace cfgpoly {

namespace {

using Letters = std::vector<Letter>;

Letters insert_block(const Letters& w, std::size_t gap, const Letters& block) {
  Letters out;
  out.reserve(w.size() + block.size());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(gap));
  out.insert(out.end(), block.begin(), block.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(gap), w.end());
  return out;
}

std::vector<Letters> insert_everywhere(const std::vector<Letters>& words, const Letters& block) {
  std::vector<Letters> out;
  for (const Letters& w : words)
    for (std::size_t gap = 0; gap <= w.size(); ++gap) out.push_back(insert_block(w, gap, block));
  return out;
}

bool is_second_occurrence(const Letters& w, std::size_t pos) {
  std::size_t seen = 0;
  for (std::size_t k = 0; k <= pos; ++k)
    if (w[k].value == w[pos].value) ++seen;
  return seen == 2;
}

// Inserting k k right after a second occurrence that had no larger successor
// makes that letter markable, so the new word comes in two versions.
std::vector<Letters> marked_children(const Letters& w, std::uint32_t k) {
  std::vector<Letters> out;
  const Letters pair{Letter{k, false, false}, Letter{k, false, false}};
  for (std::size_t gap = 0; gap <= w.size(); ++gap) {
    Letters child = insert_block(w, gap, pair);
    out.push_back(child);
    if (gap == 0) continue;
    const Letter& before = w[gap - 1];
    const bool was_markable = gap < w.size() && w[gap].value > before.value;
    if (!was_markable && is_second_occurrence(w, gap - 1)) {
      child[gap - 1].marked = true;
      out.push_back(std::move(child));
    }
  }
  return out;
}

std::uint32_t copies(StructureFamily family, std::uint32_t r) {
  switch (family) {
    case StructureFamily::permutation:
    case StructureFamily::partition:
      return 1;
    case StructureFamily::r_stirling:
      return r;
    default:
      return 2;
  }
}

void check_r(StructureFamily family, std::uint32_t r) {
  if (family == StructureFamily::r_stirling && r == 0) throw std::invalid_argument("r-Stirling words need r >= 1");
}

std::vector<LabeledWord> wrap(StructureFamily family, std::uint32_t n, std::uint32_t r, std::vector<Letters> words) {
  std::vector<LabeledWord> out;
  out.reserve(words.size());
  for (Letters& letters : words)
    out.push_back(LabeledWord{family, n, family == StructureFamily::r_stirling ? r : 0, std::move(letters)});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<LabeledWord> enumerate(StructureFamily family, std::uint32_t n, std::uint32_t r) {
  check_r(family, r);
  std::vector<Letters> words{Letters{}};

  if (family == StructureFamily::partition) {
    for (std::uint32_t k = 1; k <= n; ++k) {
      std::vector<Letters> next;
      for (const Letters& w : words) {
        std::uint32_t blocks = 0;
        for (const Letter& l : w) blocks = std::max(blocks, l.value);
        for (std::uint32_t b = 1; b <= blocks + 1; ++b) {
          Letters child = w;
          child.push_back(Letter{b, false, false});
          next.push_back(std::move(child));
        }
      }
      words = std::move(next);
    }
    return wrap(family, n, r, std::move(words));
  }

  for (std::uint32_t k = 1; k <= n; ++k) {
    const Letter plain{k, false, false};
    switch (family) {
      case StructureFamily::legendre:
        words = insert_everywhere(words, Letters{Letter{k, true, false}});
        words = insert_everywhere(words, Letters{plain, plain});
        break;
      case StructureFamily::marked_stirling: {
        std::vector<Letters> next;
        for (const Letters& w : words) {
          auto children = marked_children(w, k);
          next.insert(next.end(), std::make_move_iterator(children.begin()), std::make_move_iterator(children.end()));
        }
        words = std::move(next);
        break;
      }
      default:
        words = insert_everywhere(words, Letters(copies(family, r), plain));
        break;
    }
  }
  return wrap(family, n, r, std::move(words));
}

std::vector<LabeledWord> enumerate_by_filter(StructureFamily family, std::uint32_t n, std::uint32_t r) {
  check_r(family, r);
  std::vector<LabeledWord> out;
  LabeledWord candidate{family, n, family == StructureFamily::r_stirling ? r : 0, {}};

  if (family == StructureFamily::partition) {
    // Odometer over [1..n]^n.
    candidate.letters.assign(n, Letter{1, false, false});
    while (true) {
      if (is_valid(candidate)) out.push_back(candidate);
      std::size_t pos = n;
      while (pos > 0 && candidate.letters[pos - 1].value == n) candidate.letters[--pos].value = 1;
      if (pos == 0) break;
      ++candidate.letters[pos - 1].value;
    }
    return out;
  }

  if (family == StructureFamily::marked_stirling) {
    for (const LabeledWord& base : enumerate_by_filter(StructureFamily::stirling, n)) {
      std::vector<std::size_t> seconds;
      for (std::size_t k = 0; k < base.letters.size(); ++k)
        if (is_second_occurrence(base.letters, k)) seconds.push_back(k);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << seconds.size()); ++mask) {
        candidate.letters = base.letters;
        for (std::size_t b = 0; b < seconds.size(); ++b)
          if (mask >> b & 1) candidate.letters[seconds[b]].marked = true;
        if (is_valid(candidate)) out.push_back(candidate);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  for (std::uint32_t k = 1; k <= n; ++k) {
    if (family == StructureFamily::legendre) candidate.letters.push_back(Letter{k, true, false});
    for (std::uint32_t c = 0; c < copies(family, r); ++c) candidate.letters.push_back(Letter{k, false, false});
  }
  std::sort(candidate.letters.begin(), candidate.letters.end());
  do {
    if (is_valid(candidate)) out.push_back(candidate);
  } while (std::next_permutation(candidate.letters.begin(), candidate.letters.end()));
  return out;
}

}  // namespace cfgpoly
