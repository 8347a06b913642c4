#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace collapse_lab {

// Dense 0-based index into an Alphabet.
using Letter = std::uint8_t;

inline constexpr std::size_t kMaxAlphabetSize = 255;

// An ordered list of distinct display glyphs. Copies share the glyph table.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> glyphs);

  // One glyph per character: from_chars("01") == {"0", "1"}.
  static Alphabet from_chars(std::string_view chars);
  // Glyphs "1", "2", ..., "9", then "a", "b", ... (billiard faces).
  static Alphabet numbered(std::size_t size);

  std::size_t size() const noexcept { return glyphs_ ? glyphs_->size() : 0; }
  bool empty() const noexcept { return size() == 0; }
  const std::string& glyph(Letter letter) const;
  const std::vector<std::string>& glyphs() const;

  std::optional<Letter> find(std::string_view glyph) const;
  // Throws DomainError when the glyph is not in the alphabet.
  Letter letter(std::string_view glyph) const;
  bool contains(Letter letter) const noexcept { return letter < size(); }

  // True when every glyph is a single character, so words can be printed
  // and parsed without a separator.
  bool single_char() const noexcept;
  bool disjoint_with(const Alphabet& other) const;

  // Concatenated glyphs, e.g. "012"; with a separator when multi-character.
  std::string str(std::string_view sep = "") const;

  friend bool operator==(const Alphabet& a, const Alphabet& b);

 private:
  std::shared_ptr<const std::vector<std::string>> glyphs_;
};

class FiniteWord {
 public:
  FiniteWord() = default;
  explicit FiniteWord(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  FiniteWord(Alphabet alphabet, std::vector<Letter> letters);

  // Glyph text to word. Without a separator every glyph must be one
  // character; with one, the text is split on it.
  static FiniteWord parse(const Alphabet& alphabet, std::string_view text,
                          std::string_view sep = "");

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  const std::vector<Letter>& data() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  std::string str(std::string_view sep = "") const;

  FiniteWord slice(std::size_t pos, std::size_t len) const;
  FiniteWord concat(const FiniteWord& tail) const;
  bool starts_with(const FiniteWord& prefix) const;

  // Same alphabet and same letters.
  friend bool operator==(const FiniteWord& a, const FiniteWord& b);
  // Lexicographic by letter id; ties broken by length.
  friend std::strong_ordering operator<=>(const FiniteWord& a,
                                          const FiniteWord& b);

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

// |w|_a
std::size_t letter_count(const FiniteWord& w, Letter a);

// |w|_u, overlapping occurrences counted. Empty u is a DomainError.
std::size_t factor_count(const FiniteWord& w, const FiniteWord& u);

// pi_sub(w): erase every letter outside `sub`. The result lives over the
// subalphabet made of the kept glyphs in w's alphabet order.
FiniteWord project(const FiniteWord& w, std::span<const Letter> sub);
FiniteWord project(const FiniteWord& w, const std::vector<std::string>& glyphs);

// Alphabet of the projection onto `sub` (kept glyphs in alphabet order).
Alphabet subalphabet(const Alphabet& alphabet, std::span<const Letter> sub);

// The alphabet (A \ {a}) followed by B, used by color_finite.
Alphabet colored_alphabet(const Alphabet& base, Letter a, const Alphabet& colors);

// Replaces the i-th occurrence of `a` in w0 by colors[i-1].
// Throws ColorExhaustion when colors is too short and DomainError when the
// alphabets overlap.
FiniteWord color_finite(const FiniteWord& w0, Letter a, const FiniteWord& colors);

// L_n(w). For n == 0 returns {epsilon}; for n > |w| the empty set.
std::set<FiniteWord> distinct_factors(const FiniteWord& w, std::size_t n);

}  // namespace collapse_lab
