#pragma once

// Complexity functions, k-binomial classes, balance and projection checks.
//
// Every quantity is exact for the finite prefix it is computed on and a lower
// bound for the corresponding quantity of the infinite word. Index n-1 of a
// returned vector holds the value for factor length n.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "collapse_lab/binomial.hpp"
#include "collapse_lab/generators.hpp"
#include "collapse_lab/word.hpp"

namespace collapse_lab::analysis {

struct ComplexityRow {
  std::size_t n = 0;
  Count p = 0;
  Count rho = 0;
  std::vector<Count> binomial;  // parallel to ComplexityReport::orders

  friend bool operator==(const ComplexityRow&, const ComplexityRow&) = default;
};

// Two distinct length-n factors with equal order-k signatures.
struct Collision {
  std::size_t n = 0;
  unsigned k = 0;
  FiniteWord u;
  FiniteWord v;

  friend bool operator==(const Collision&, const Collision&) = default;
};

struct ComplexityReport {
  std::size_t n_max = 0;
  std::size_t prefix_length = 0;
  std::vector<unsigned> orders;
  std::vector<ComplexityRow> rows;
  std::vector<Collision> witnesses;  // per (k, n) with b^k(n) < p(n), if requested

  // b^k(n) for a requested order k.
  Count b(std::size_t n, unsigned k) const;
};

std::vector<Count> subword_complexity(const FiniteWord& prefix, std::size_t n_max);
std::vector<Count> abelian_complexity(const FiniteWord& prefix, std::size_t n_max);
std::vector<Count> k_binomial_complexity(const FiniteWord& prefix, unsigned k,
                                         std::size_t n_max);

// For each n <= n_max with b^k(n) < p(n), the lexicographically least pair of
// distinct equivalent length-n factors. Empty iff b^k = p up to n_max.
std::vector<Collision> find_collisions(const FiniteWord& prefix, unsigned k, std::size_t n_max);

// p, rho and b^k for every k in `orders`, in one pass over the factors.
ComplexityReport complexity_report(const FiniteWord& prefix, std::vector<unsigned> orders,
                                   std::size_t n_max, bool with_witnesses = false);

// L_n(prefix) / ~_k. Groups are sorted internally and ordered by their least
// member.
struct ClassPartition {
  std::size_t n = 0;
  unsigned k = 0;
  std::vector<std::vector<FiniteWord>> groups;
  std::vector<BinomialSignature> signatures;  // parallel to groups
};

ClassPartition classes(const FiniteWord& prefix, unsigned k, std::size_t n);

// A pair of equally long factors realizing the worst letter-count gap:
// |u|_letter - |v|_letter = gap.
struct BalanceWitness {
  Letter letter = 0;
  std::size_t n = 0;
  FiniteWord u;
  FiniteWord v;
  Count gap = 0;
};

struct BalanceReport {
  std::size_t n_max = 0;
  std::size_t prefix_length = 0;
  Alphabet alphabet;
  // per_letter[a][n-1] = max - min of |factor|_a over length-n factors
  std::vector<std::vector<Count>> per_letter;
  Count overall_c = 0;
  std::optional<BalanceWitness> witness;  // set when overall_c > 0

  Count imbalance(Letter a, std::size_t n) const { return per_letter.at(a).at(n - 1); }
};

BalanceReport imbalance(const FiniteWord& prefix, std::size_t n_max);

struct PairBalance {
  Letter first = 0;
  Letter second = 0;
  BalanceReport report;  // over the projected word, alphabet {first, second}
};

// Balance of pi_{i,j}(prefix) for every pair i < j, each analyzed up to
// min(n_max, |projection|).
std::vector<PairBalance> binary_projection_imbalance(const FiniteWord& prefix,
                                                     std::size_t n_max);

// Binary projections keyed by letter pairs (i < j) of a declared alphabet.
// Words are over the declared alphabet and may only use their pair's letters.
struct ProjectionFamily {
  Alphabet alphabet;
  std::map<std::pair<Letter, Letter>, FiniteWord> words;

  void set(Letter i, Letter j, FiniteWord projection);
};

ProjectionFamily binary_projections(const FiniteWord& w);

// The unique word whose binary projections are `family`. Throws
// InconsistentProjectionFamily when no word has these projections.
FiniteWord reconstruct(const ProjectionFamily& family);

struct SaturationResult {
  std::size_t length = 0;
  bool stable = false;
};

// Doubles the prefix length from `initial_length` until the factor sets of
// every length <= n_max agree between consecutive lengths (stable) or the
// next length would exceed `budget`. The returned length is the shorter one
// of the agreeing pair.
SaturationResult saturation_probe(const gen::Spec& spec, std::size_t n_max,
                                  std::size_t initial_length,
                                  std::size_t budget = std::size_t{1} << 22);

}  // namespace collapse_lab::analysis
