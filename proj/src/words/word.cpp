#include "collapse_lab/word.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_set>

#include "collapse_lab/errors.hpp"

namespace collapse_lab {

namespace {

const std::vector<std::string>& empty_glyphs() {
  static const std::vector<std::string> none;
  return none;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> glyphs) {
  if (glyphs.empty()) throw DomainError("alphabet must contain at least one letter");
  if (glyphs.size() > kMaxAlphabetSize)
    throw DomainError("alphabet larger than " + std::to_string(kMaxAlphabetSize));
  std::unordered_set<std::string_view> seen;
  for (const auto& g : glyphs) {
    if (g.empty()) throw DomainError("empty glyph in alphabet");
    if (!seen.insert(g).second) throw DomainError("duplicate glyph '" + g + "'");
  }
  glyphs_ = std::make_shared<const std::vector<std::string>>(std::move(glyphs));
}

Alphabet Alphabet::from_chars(std::string_view chars) {
  std::vector<std::string> glyphs;
  glyphs.reserve(chars.size());
  for (char c : chars) glyphs.emplace_back(1, c);
  return Alphabet(std::move(glyphs));
}

Alphabet Alphabet::numbered(std::size_t size) {
  static constexpr std::string_view kDigits = "123456789";
  static constexpr std::string_view kLower = "abcdefghijklmnopqrstuvwxyz";
  std::vector<std::string> glyphs;
  for (std::size_t i = 0; i < size; ++i) {
    if (i < kDigits.size()) {
      glyphs.emplace_back(1, kDigits[i]);
    } else if (i < kDigits.size() + kLower.size()) {
      glyphs.emplace_back(1, kLower[i - kDigits.size()]);
    } else {
      glyphs.push_back("x" + std::to_string(i + 1));
    }
  }
  return Alphabet(std::move(glyphs));
}

const std::string& Alphabet::glyph(Letter letter) const {
  if (!contains(letter))
    throw DomainError("letter id " + std::to_string(letter) + " outside alphabet of size " +
                      std::to_string(size()));
  return (*glyphs_)[letter];
}

const std::vector<std::string>& Alphabet::glyphs() const {
  return glyphs_ ? *glyphs_ : empty_glyphs();
}

std::optional<Letter> Alphabet::find(std::string_view glyph) const {
  const auto& gs = glyphs();
  auto it = std::find(gs.begin(), gs.end(), glyph);
  if (it == gs.end()) return std::nullopt;
  return static_cast<Letter>(it - gs.begin());
}

Letter Alphabet::letter(std::string_view glyph) const {
  if (auto l = find(glyph)) return *l;
  throw DomainError("glyph '" + std::string(glyph) + "' not in alphabet {" + str(",") + "}");
}

bool Alphabet::single_char() const noexcept {
  return std::all_of(glyphs().begin(), glyphs().end(),
                     [](const std::string& g) { return g.size() == 1; });
}

bool Alphabet::disjoint_with(const Alphabet& other) const {
  return std::none_of(glyphs().begin(), glyphs().end(),
                      [&](const std::string& g) { return other.find(g).has_value(); });
}

std::string Alphabet::str(std::string_view sep) const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i > 0) out += sep;
    out += (*glyphs_)[i];
  }
  return out;
}

bool operator==(const Alphabet& a, const Alphabet& b) {
  if (a.glyphs_ == b.glyphs_) return true;
  return a.glyphs() == b.glyphs();
}

FiniteWord::FiniteWord(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (Letter l : letters_) {
    if (!alphabet_.contains(l))
      throw DomainError("letter id " + std::to_string(l) + " outside alphabet of size " +
                        std::to_string(alphabet_.size()));
  }
}

FiniteWord FiniteWord::parse(const Alphabet& alphabet, std::string_view text,
                             std::string_view sep) {
  std::vector<Letter> letters;
  if (sep.empty()) {
    if (!alphabet.single_char())
      throw DomainError("multi-character glyphs need a separator to parse '" +
                        std::string(text) + "'");
    letters.reserve(text.size());
    for (char c : text) letters.push_back(alphabet.letter(std::string_view(&c, 1)));
  } else if (!text.empty()) {
    std::size_t start = 0;
    while (true) {
      auto pos = text.find(sep, start);
      auto piece = text.substr(start, pos == std::string_view::npos ? pos : pos - start);
      letters.push_back(alphabet.letter(piece));
      if (pos == std::string_view::npos) break;
      start = pos + sep.size();
    }
  }
  return FiniteWord(alphabet, std::move(letters));
}

std::string FiniteWord::str(std::string_view sep) const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) out += sep;
    out += alphabet_.glyph(letters_[i]);
  }
  return out;
}

FiniteWord FiniteWord::slice(std::size_t pos, std::size_t len) const {
  pos = std::min(pos, letters_.size());
  len = std::min(len, letters_.size() - pos);
  FiniteWord out(alphabet_);
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                      letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return out;
}

FiniteWord FiniteWord::concat(const FiniteWord& tail) const {
  if (!(alphabet_ == tail.alphabet_)) throw DomainError("concatenating words over different alphabets");
  FiniteWord out = *this;
  out.letters_.insert(out.letters_.end(), tail.letters_.begin(), tail.letters_.end());
  return out;
}

bool FiniteWord::starts_with(const FiniteWord& prefix) const {
  return prefix.size() <= size() &&
         std::equal(prefix.letters_.begin(), prefix.letters_.end(), letters_.begin());
}

bool operator==(const FiniteWord& a, const FiniteWord& b) {
  return a.letters_ == b.letters_ && a.alphabet_ == b.alphabet_;
}

std::strong_ordering operator<=>(const FiniteWord& a, const FiniteWord& b) {
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

std::size_t letter_count(const FiniteWord& w, Letter a) {
  if (!w.alphabet().contains(a)) throw DomainError("letter outside the word's alphabet");
  return static_cast<std::size_t>(std::count(w.data().begin(), w.data().end(), a));
}

std::size_t factor_count(const FiniteWord& w, const FiniteWord& u) {
  if (u.empty()) throw DomainError("factor_count of the empty word is not defined");
  if (u.size() > w.size()) return 0;
  std::size_t hits = 0;
  auto first = w.data().begin();
  for (std::size_t i = 0; i + u.size() <= w.size(); ++i) {
    if (std::equal(u.data().begin(), u.data().end(), first + static_cast<std::ptrdiff_t>(i))) ++hits;
  }
  return hits;
}

Alphabet subalphabet(const Alphabet& alphabet, std::span<const Letter> sub) {
  if (sub.empty()) throw DomainError("projection onto the empty subalphabet");
  std::vector<bool> keep(alphabet.size(), false);
  for (Letter l : sub) {
    if (!alphabet.contains(l)) throw DomainError("subalphabet letter outside alphabet");
    keep[l] = true;
  }
  std::vector<std::string> glyphs;
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    if (keep[i]) glyphs.push_back(alphabet.glyph(static_cast<Letter>(i)));
  return Alphabet(std::move(glyphs));
}

FiniteWord project(const FiniteWord& w, std::span<const Letter> sub) {
  const Alphabet& src = w.alphabet();
  Alphabet dst = subalphabet(src, sub);
  std::vector<int> remap(src.size(), -1);
  for (Letter l : sub) remap[l] = *dst.find(src.glyph(l));
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w.data())
    if (remap[l] >= 0) out.push_back(static_cast<Letter>(remap[l]));
  return FiniteWord(std::move(dst), std::move(out));
}

FiniteWord project(const FiniteWord& w, const std::vector<std::string>& glyphs) {
  std::vector<Letter> sub;
  sub.reserve(glyphs.size());
  for (const auto& g : glyphs) sub.push_back(w.alphabet().letter(g));
  return project(w, sub);
}

Alphabet colored_alphabet(const Alphabet& base, Letter a, const Alphabet& colors) {
  if (!base.contains(a)) throw DomainError("colored letter outside the base alphabet");
  if (!base.disjoint_with(colors)) throw DomainError("coloring needs disjoint alphabets");
  std::vector<std::string> glyphs;
  for (std::size_t i = 0; i < base.size(); ++i)
    if (i != a) glyphs.push_back(base.glyph(static_cast<Letter>(i)));
  for (const auto& g : colors.glyphs()) glyphs.push_back(g);
  return Alphabet(std::move(glyphs));
}

FiniteWord color_finite(const FiniteWord& w0, Letter a, const FiniteWord& colors) {
  Alphabet out_alphabet = colored_alphabet(w0.alphabet(), a, colors.alphabet());
  const std::size_t kept = w0.alphabet().size() - 1;
  std::vector<Letter> out;
  out.reserve(w0.size());
  std::size_t used = 0;
  for (Letter l : w0.data()) {
    if (l == a) {
      if (used >= colors.size())
        throw ColorExhaustion("color exhaustion: occurrence " + std::to_string(used + 1) +
                              " of the colored letter has no color (only " +
                              std::to_string(colors.size()) + " supplied)");
      out.push_back(static_cast<Letter>(kept + colors[used++]));
    } else {
      out.push_back(l < a ? l : static_cast<Letter>(l - 1));
    }
  }
  return FiniteWord(std::move(out_alphabet), std::move(out));
}

std::set<FiniteWord> distinct_factors(const FiniteWord& w, std::size_t n) {
  std::set<FiniteWord> out;
  if (n > w.size()) return out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.slice(i, n));
  return out;
}

}  // namespace collapse_lab
