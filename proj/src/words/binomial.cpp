#include "collapse_lab/binomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "collapse_lab/errors.hpp"

namespace collapse_lab {

Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("scattered-subword count overflows 64 bits");
  return r;
}

Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("scattered-subword count overflows 64 bits");
  return r;
}

Count choose(Count n, Count m) {
  if (m > n) return 0;
  if (m > n - m) m = n - m;
  Count r = 1;
  for (Count i = 1; i <= m; ++i) {
    // r * (n - m + i) is divisible by i at every step.
    Count g = std::gcd(r, i);
    r = checked_mul(r / g, (n - m + i) / (i / g));
  }
  return r;
}

Count binomial(std::span<const Letter> w, std::span<const Letter> u) {
  // dp[j] = (w[0..i) choose u[0..j)); scanned right to left so each letter
  // of w is used at most once per tuple.
  std::vector<Count> dp(u.size() + 1, 0);
  dp[0] = 1;
  for (Letter c : w) {
    for (std::size_t j = u.size(); j > 0; --j)
      if (u[j - 1] == c) dp[j] = checked_add(dp[j], dp[j - 1]);
  }
  return dp[u.size()];
}

Count binomial(const FiniteWord& w, const FiniteWord& u) {
  if (!(w.alphabet() == u.alphabet()))
    throw DomainError("binomial coefficient of words over different alphabets");
  return binomial(w.letters(), u.letters());
}

std::size_t pattern_count(std::size_t d, unsigned k) {
  std::size_t total = 0;
  std::size_t layer = 1;
  for (unsigned m = 1; m <= k; ++m) {
    layer *= d;
    total += layer;
  }
  return total;
}

std::size_t pattern_index(std::span<const Letter> pattern, std::size_t d) {
  if (pattern.empty()) throw DomainError("the empty pattern has no signature slot");
  std::size_t rank = 0;
  for (Letter l : pattern) rank = rank * d + l;
  return pattern_count(d, static_cast<unsigned>(pattern.size() - 1)) + rank;
}

BinomialSignature::BinomialSignature(std::size_t alphabet_size, unsigned k)
    : d_(alphabet_size), k_(k) {
  if (k == 0) throw DomainError("signature order k must be >= 1");
  if (alphabet_size == 0) throw DomainError("signature over an empty alphabet");
  counts_.assign(pattern_count(d_, k_), 0);
}

BinomialSignature BinomialSignature::of(std::span<const Letter> w, std::size_t alphabet_size,
                                        unsigned k) {
  BinomialSignature sig(alphabet_size, k);
  for (Letter l : w) sig.extend(l);
  return sig;
}

Count BinomialSignature::count(std::span<const Letter> pattern) const {
  if (pattern.empty()) return 1;
  if (pattern.size() > k_) throw DomainError("pattern longer than the signature order");
  for (Letter l : pattern)
    if (l >= d_) throw DomainError("pattern letter outside alphabet");
  return counts_[pattern_index(pattern, d_)];
}

void extend_signature_counts(std::span<Count> counts, std::size_t d, unsigned k, Letter a) {
  // Longest patterns first, so each update reads the prefix count from
  // before this letter was appended.
  std::size_t hi = pattern_count(d, k);
  std::size_t layer = hi - pattern_count(d, k - 1);  // d^k
  for (unsigned m = k; m >= 2; --m) {
    const std::size_t begin = hi - layer;
    const std::size_t prefixes = layer / d;
    Count* target = counts.data() + begin + a;
    const Count* source = counts.data() + begin - prefixes;
    for (std::size_t r = 0; r < prefixes; ++r) {
      Count& slot = target[r * d];
      slot = checked_add(slot, source[r]);
    }
    hi = begin;
    layer = prefixes;
  }
  counts[a] = checked_add(counts[a], 1);
}

void BinomialSignature::extend(Letter a) {
  if (a >= d_) throw DomainError("letter outside the signature's alphabet");
  extend_signature_counts(counts_, d_, k_, a);
  ++length_;
}

BinomialSignature BinomialSignature::extended(Letter a) const {
  BinomialSignature next = *this;
  next.extend(a);
  return next;
}

BinomialSignature BinomialSignature::truncated(unsigned k) const {
  if (k == 0 || k > k_) throw DomainError("truncation order must be in 1..k");
  BinomialSignature out(d_, k);
  out.length_ = length_;
  std::copy_n(counts_.begin(), out.counts_.size(), out.counts_.begin());
  return out;
}

BinomialSignature binomial_signature(const FiniteWord& w, unsigned k) {
  return BinomialSignature::of(w.letters(), w.alphabet().size(), k);
}

bool k_binomial_equivalent(std::span<const Letter> u, std::span<const Letter> v,
                           std::size_t alphabet_size, unsigned k) {
  if (u.size() != v.size()) return false;
  return BinomialSignature::of(u, alphabet_size, k) == BinomialSignature::of(v, alphabet_size, k);
}

bool k_binomial_equivalent(const FiniteWord& u, const FiniteWord& v, unsigned k) {
  if (!(u.alphabet() == v.alphabet())) return false;
  return k_binomial_equivalent(u.letters(), v.letters(), u.alphabet().size(), k);
}

}  // namespace collapse_lab
