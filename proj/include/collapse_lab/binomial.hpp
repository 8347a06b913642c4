#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "collapse_lab/word.hpp"

namespace collapse_lab {

using Count = std::uint64_t;

// Checked 64-bit arithmetic; throws OverflowError instead of wrapping.
Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);

// Ordinary binomial coefficient C(n, m), checked.
Count choose(Count n, Count m);

// (w choose u): number of strictly increasing index tuples of w spelling u.
// (w choose epsilon) = 1.
Count binomial(std::span<const Letter> w, std::span<const Letter> u);
Count binomial(const FiniteWord& w, const FiniteWord& u);

// Number of patterns of length 1..k over d letters: d + d^2 + ... + d^k.
std::size_t pattern_count(std::size_t d, unsigned k);

// Position of a nonempty pattern in canonical order (length-major, then
// lexicographic by letter id).
std::size_t pattern_index(std::span<const Letter> pattern, std::size_t d);

// Appends letter `a` to the word whose signature is `counts` (order k over d
// letters, canonical layout): every count of a pattern x.a grows by count(x).
void extend_signature_counts(std::span<Count> counts, std::size_t d, unsigned k, Letter a);

// Counts (w choose x) for every nonempty x of length <= k, in canonical order.
class BinomialSignature {
 public:
  BinomialSignature(std::size_t alphabet_size, unsigned k);

  static BinomialSignature of(std::span<const Letter> w,
                              std::size_t alphabet_size, unsigned k);

  unsigned order() const noexcept { return k_; }
  std::size_t alphabet_size() const noexcept { return d_; }
  std::size_t word_length() const noexcept { return length_; }
  std::span<const Count> counts() const noexcept { return counts_; }

  Count count(std::span<const Letter> pattern) const;

  // Appends one letter to the signed word. Only counts of patterns ending in
  // `a` change; each grows by the count of its prefix pattern.
  void extend(Letter a);
  BinomialSignature extended(Letter a) const;

  // Signature of the same word at a lower order (a prefix of counts()).
  BinomialSignature truncated(unsigned k) const;

  friend bool operator==(const BinomialSignature&,
                         const BinomialSignature&) = default;

 private:
  std::size_t d_;
  unsigned k_;
  std::size_t length_ = 0;
  std::vector<Count> counts_;
};

BinomialSignature binomial_signature(const FiniteWord& w, unsigned k);

// u ~_k v. Words over different alphabets are never equivalent.
bool k_binomial_equivalent(const FiniteWord& u, const FiniteWord& v, unsigned k);
bool k_binomial_equivalent(std::span<const Letter> u, std::span<const Letter> v,
                           std::size_t alphabet_size, unsigned k);

inline bool abelian_equivalent(const FiniteWord& u, const FiniteWord& v) {
  return k_binomial_equivalent(u, v, 1);
}

}  // namespace collapse_lab
