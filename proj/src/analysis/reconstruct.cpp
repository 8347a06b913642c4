#include <algorithm>

#include "collapse_lab/analysis.hpp"
#include "collapse_lab/errors.hpp"

namespace collapse_lab::analysis {

void ProjectionFamily::set(Letter i, Letter j, FiniteWord projection) {
  if (i > j) std::swap(i, j);
  if (i == j || !alphabet.contains(j))
    throw DomainError("projection pair must be two distinct letters of the alphabet");
  if (!(projection.alphabet() == alphabet))
    throw DomainError("projection word must be over the family alphabet");
  for (Letter x : projection.letters())
    if (x != i && x != j)
      throw DomainError("projection onto {" + alphabet.glyph(i) + "," + alphabet.glyph(j) +
                        "} contains the letter " + alphabet.glyph(x));
  words.insert_or_assign({i, j}, std::move(projection));
}

ProjectionFamily binary_projections(const FiniteWord& w) {
  ProjectionFamily family{w.alphabet(), {}};
  const std::size_t d = w.alphabet().size();
  for (Letter i = 0; i < d; ++i) {
    for (Letter j = i + 1; j < d; ++j) {
      std::vector<Letter> kept;
      for (Letter x : w.letters())
        if (x == i || x == j) kept.push_back(x);
      family.words.emplace(std::pair{i, j}, FiniteWord(w.alphabet(), std::move(kept)));
    }
  }
  return family;
}

FiniteWord reconstruct(const ProjectionFamily& family) {
  const std::size_t d = family.alphabet.size();
  if (d < 2) throw DomainError("reconstruction needs an alphabet of at least two letters");
  std::vector<std::vector<const FiniteWord*>> word(d, std::vector<const FiniteWord*>(d));
  std::vector<std::vector<std::size_t>> pos(d, std::vector<std::size_t>(d, 0));
  std::size_t remaining = 0;
  for (Letter i = 0; i < d; ++i) {
    for (Letter j = i + 1; j < d; ++j) {
      auto it = family.words.find({i, j});
      if (it == family.words.end())
        throw DomainError("missing projection onto {" + family.alphabet.glyph(i) + "," +
                          family.alphabet.glyph(j) + "}");
      word[i][j] = word[j][i] = &it->second;
      remaining += it->second.size();
    }
  }

  // Letter a can come next only if it is next in every projection involving a.
  auto eligible = [&](Letter a) {
    for (Letter b = 0; b < d; ++b) {
      if (b == a) continue;
      const std::size_t p = pos[std::min(a, b)][std::max(a, b)];
      const FiniteWord& w = *word[a][b];
      if (p >= w.size() || w[p] != a) return false;
    }
    return true;
  };

  std::vector<Letter> out;
  while (remaining > 0) {
    std::optional<Letter> next;
    for (Letter a = 0; a < d && !next; ++a)
      if (eligible(a)) next = a;
    if (!next)
      throw InconsistentProjectionFamily(
          out.empty() ? std::string("no letter can start the word")
                      : "no letter can follow the prefix " +
                            FiniteWord(family.alphabet, out).str(
                                family.alphabet.single_char() ? "" : " "));
    out.push_back(*next);
    for (Letter b = 0; b < d; ++b) {
      if (b == *next) continue;
      ++pos[std::min(*next, b)][std::max(*next, b)];
      --remaining;
    }
  }
  return FiniteWord(family.alphabet, std::move(out));
}

SaturationResult saturation_probe(const gen::Spec& spec, std::size_t n_max,
                                  std::size_t initial_length, std::size_t budget) {
  std::size_t len = std::max({initial_length, n_max, std::size_t{1}});
  auto counts = subword_complexity(gen::prefix(spec, len), n_max);
  while (2 * len <= budget) {
    auto longer = subword_complexity(gen::prefix(spec, 2 * len), n_max);
    if (longer == counts) return {len, true};
    len *= 2;
    counts = std::move(longer);
  }
  return {len, false};
}

}  // namespace collapse_lab::analysis
