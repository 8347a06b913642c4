#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "collapse_lab/rational.hpp"
#include "collapse_lab/word.hpp"

namespace collapse_lab::gen {

// A letters-to-words map, extended to a morphism of the free monoid.
struct Substitution {
  Alphabet domain;
  Alphabet codomain;
  std::vector<FiniteWord> images;  // one per domain letter, over codomain

  Substitution() = default;
  Substitution(Alphabet domain, Alphabet codomain, std::vector<FiniteWord> images);
  // Endomorphism from glyph strings, e.g. endomorphism("01", {"01", "0"}).
  static Substitution endomorphism(std::string_view glyphs,
                                   const std::vector<std::string>& images);

  const FiniteWord& image(Letter a) const { return images.at(a); }

  friend bool operator==(const Substitution&, const Substitution&) = default;
};

// sigma(w): concatenation of the images of w's letters.
FiniteWord morphic_apply(const Substitution& sub, const FiniteWord& w);

// Immutable owning pointer with value equality, for recursive specs.
template <class T>
class Box {
 public:
  Box(T value) : ptr_(std::make_shared<const T>(std::move(value))) {}  // NOLINT
  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }
  friend bool operator==(const Box& a, const Box& b) { return a.ptr_ == b.ptr_ || *a.ptr_ == *b.ptr_; }

 private:
  std::shared_ptr<const T> ptr_;
};

struct Spec;

// Fixed point of a prolongable substitution starting with `seed`.
struct Morphic {
  Substitution sub;
  Letter seed = 0;
  friend bool operator==(const Morphic&, const Morphic&) = default;
};

// preperiod . period^omega
struct EventuallyPeriodic {
  FiniteWord preperiod;
  FiniteWord period;
  friend bool operator==(const EventuallyPeriodic&, const EventuallyPeriodic&) = default;
};

// Lower mechanical word: letter n = floor(alpha(n+1)+rho) - floor(alpha n+rho).
struct Mechanical {
  Rational alpha;
  Rational rho;
  Alphabet alphabet = Alphabet::from_chars("01");
  friend bool operator==(const Mechanical&, const Mechanical&) = default;
};

// Limit of s_{-1}=1, s_0=0, s_k = s_{k-1}^{a_k} s_{k-2}.
struct StandardSturmian {
  std::vector<std::uint64_t> directive;
  bool periodic = true;  // repeat the directive forever, else it is finite
  Alphabet alphabet = Alphabet::from_chars("01");
  friend bool operator==(const StandardSturmian&, const StandardSturmian&) = default;
};

// Episturmian word of directive preperiod . period^omega (iterated
// palindromic closure).
struct ArnouxRauzy {
  Alphabet alphabet;
  std::vector<Letter> preperiod;
  std::vector<Letter> period;
  friend bool operator==(const ArnouxRauzy&, const ArnouxRauzy&) = default;
};

// C-adic word over {1,2,3}; directive entries are 1 (c1) or 2 (c2).
struct CassaigneSelmer {
  std::vector<std::uint8_t> preperiod;
  std::vector<std::uint8_t> period;
  friend bool operator==(const CassaigneSelmer&, const CassaigneSelmer&) = default;
};

// Hypercubic billiard: start x in [0,1)^d, momentum theta > 0 componentwise.
struct Billiard {
  std::vector<Rational> x;
  std::vector<Rational> theta;
  friend bool operator==(const Billiard&, const Billiard&) = default;
};

// sigma(inner) with the first `shift` letters dropped, where
// sigma: 1 -> B.C, 2 -> B.D (inner letters taken in alphabet order).
struct QuasiSturmianFM {
  Box<Spec> inner;
  std::vector<std::string> b;
  std::vector<std::string> c;
  std::vector<std::string> d;
  std::size_t shift = 0;
  friend bool operator==(const QuasiSturmianFM&, const QuasiSturmianFM&) = default;
};

// color(base, letter, colors)
struct Colored {
  Box<Spec> base;
  std::string letter;
  Box<Spec> colors;
  friend bool operator==(const Colored&, const Colored&) = default;
};

struct Projected {
  Box<Spec> base;
  std::vector<std::string> sub;
  friend bool operator==(const Projected&, const Projected&) = default;
};

// sub(base) with the first `shift` letters dropped.
struct SubstitutionImage {
  Box<Spec> base;
  Substitution sub;
  std::size_t shift = 0;
  friend bool operator==(const SubstitutionImage&, const SubstitutionImage&) = default;
};

// TM^j(base) with TM: first letter -> first.second, second -> second.first.
struct ThueMorseIterated {
  Box<Spec> base;
  unsigned iterations = 0;
  friend bool operator==(const ThueMorseIterated&, const ThueMorseIterated&) = default;
};

using SpecNode = std::variant<Morphic, EventuallyPeriodic, Mechanical, StandardSturmian,
                              ArnouxRauzy, CassaigneSelmer, Billiard, QuasiSturmianFM,
                              Colored, Projected, SubstitutionImage, ThueMorseIterated>;

template <class T, class... Ts>
concept OneOf = (std::is_same_v<T, Ts> || ...);

template <class T>
concept SpecAlternative =
    OneOf<std::remove_cvref_t<T>, Morphic, EventuallyPeriodic, Mechanical, StandardSturmian,
          ArnouxRauzy, CassaigneSelmer, Billiard, QuasiSturmianFM, Colored, Projected,
          SubstitutionImage, ThueMorseIterated>;

// Description of an infinite word.
struct Spec {
  SpecNode node;

  template <SpecAlternative T>
  Spec(T variant) : node(std::move(variant)) {}  // NOLINT(google-explicit-constructor)

  friend bool operator==(const Spec&, const Spec&) = default;
};

// Alphabet of the described word. Validates the spec.
Alphabet alphabet_of(const Spec& spec);

// Throws DomainError naming the first violated invariant.
void validate(const Spec& spec);

// The first `length` letters of the described infinite word.
FiniteWord prefix(const Spec& spec, std::size_t length);

// ---- individual constructions ----------------------------------------------

FiniteWord morphic_prefix(const Substitution& sub, Letter seed, std::size_t length);
FiniteWord eventually_periodic_prefix(const FiniteWord& preperiod, const FiniteWord& period,
                                      std::size_t length);
FiniteWord mechanical_prefix(const Rational& alpha, const Rational& rho, std::size_t length,
                             const Alphabet& alphabet = Alphabet::from_chars("01"));
FiniteWord standard_sturmian_prefix(const std::vector<std::uint64_t>& directive, bool periodic,
                                    std::size_t length,
                                    const Alphabet& alphabet = Alphabet::from_chars("01"));

// Shortest palindrome having w as a prefix.
FiniteWord palindromic_closure(const FiniteWord& w);

FiniteWord arnoux_rauzy_prefix(const Alphabet& alphabet, const std::vector<Letter>& preperiod,
                               const std::vector<Letter>& period, std::size_t length);
FiniteWord cassaigne_selmer_prefix(const std::vector<std::uint8_t>& preperiod,
                                   const std::vector<std::uint8_t>& period, std::size_t length);
// Whether the product of the period's morphisms has a primitive incidence
// matrix. (1122) is not: it keeps {1, 3} closed and the word never uses 2.
bool cassaigne_selmer_primitive(const std::vector<std::uint8_t>& period);

// Throws DegenerateTrajectory on simultaneous crossings.
FiniteWord billiard_prefix(const std::vector<Rational>& x, const std::vector<Rational>& theta,
                           std::size_t length);

// The minimal-complexity substitution 1 -> B.C, 2 -> B.D over the alphabet
// B ++ C ++ D, with domain `inner_alphabet` (two letters).
Substitution fm_substitution(const Alphabet& inner_alphabet, const std::vector<std::string>& b,
                             const std::vector<std::string>& c,
                             const std::vector<std::string>& d);

FiniteWord thue_morse_iterate(const FiniteWord& base, unsigned iterations);

// ---- named words -------------------------------------------------------------

Spec fibonacci(std::string_view glyphs = "01");    // 0 -> 01, 1 -> 0
Spec thue_morse(std::string_view glyphs = "01");   // 0 -> 01, 1 -> 10
Spec tribonacci();                                 // 1 -> 12, 2 -> 13, 3 -> 1
Spec constant(std::string_view glyph);

}  // namespace collapse_lab::gen
