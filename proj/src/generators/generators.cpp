#include "collapse_lab/generators.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

#include "collapse_lab/errors.hpp"

namespace collapse_lab::gen {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

Alphabet alphabet_from_lists(const std::vector<std::string>& b, const std::vector<std::string>& c,
                             const std::vector<std::string>& d) {
  std::vector<std::string> glyphs = b;
  glyphs.insert(glyphs.end(), c.begin(), c.end());
  glyphs.insert(glyphs.end(), d.begin(), d.end());
  return Alphabet(std::move(glyphs));
}

// Doubles the base prefix until `enough(word)` holds; the base word is
// infinite so the only failure is a pathological spec (erased letters).
template <class Enough>
FiniteWord grow_base(const Spec& base, std::size_t start, Enough enough, const char* what) {
  const std::size_t budget = std::max<std::size_t>(std::size_t{1} << 24, start * 64);
  std::size_t len = std::max<std::size_t>(start, 16);
  while (true) {
    FiniteWord w = prefix(base, len);
    if (enough(w)) return w;
    if (len >= budget)
      throw GeneratorError(std::string(what) + ": base prefix of length " + std::to_string(len) +
                           " does not yield enough letters");
    len = std::min(budget, len * 2);
  }
}

}  // namespace

// ---- substitutions ---------------------------------------------------------

Substitution::Substitution(Alphabet domain_, Alphabet codomain_, std::vector<FiniteWord> images_)
    : domain(std::move(domain_)), codomain(std::move(codomain_)), images(std::move(images_)) {
  if (images.size() != domain.size())
    throw DomainError("substitution needs one image per domain letter");
  for (const auto& img : images)
    if (!(img.alphabet() == codomain)) throw DomainError("substitution image over the wrong alphabet");
}

Substitution Substitution::endomorphism(std::string_view glyphs,
                                        const std::vector<std::string>& images) {
  Alphabet a = Alphabet::from_chars(glyphs);
  std::vector<FiniteWord> words;
  for (const auto& img : images) words.push_back(FiniteWord::parse(a, img));
  return Substitution(a, a, std::move(words));
}

FiniteWord morphic_apply(const Substitution& sub, const FiniteWord& w) {
  if (!(w.alphabet() == sub.domain)) throw DomainError("word is not over the substitution's domain");
  std::vector<Letter> out;
  for (Letter l : w.data()) {
    const auto& img = sub.image(l).data();
    out.insert(out.end(), img.begin(), img.end());
  }
  return FiniteWord(sub.codomain, std::move(out));
}

// ---- constructions -----------------------------------------------------------

FiniteWord morphic_prefix(const Substitution& sub, Letter seed, std::size_t length) {
  if (!(sub.domain == sub.codomain)) throw DomainError("fixed point needs an endomorphism");
  if (!sub.domain.contains(seed)) throw DomainError("seed letter outside alphabet");
  const FiniteWord& first = sub.image(seed);
  if (first.size() < 2 || first[0] != seed)
    throw DomainError("substitution is not prolongable on '" + sub.domain.glyph(seed) + "'");

  std::vector<Letter> cur{seed};
  while (cur.size() < length) {
    std::vector<Letter> next;
    next.reserve(std::min(length, cur.size() * 4));
    for (Letter l : cur) {
      const auto& img = sub.image(l).data();
      next.insert(next.end(), img.begin(), img.end());
      if (next.size() >= length) break;
    }
    cur = std::move(next);
  }
  cur.resize(std::min(cur.size(), length));
  return FiniteWord(sub.domain, std::move(cur));
}

FiniteWord eventually_periodic_prefix(const FiniteWord& preperiod, const FiniteWord& period,
                                      std::size_t length) {
  if (period.empty()) throw DomainError("eventually periodic word needs a nonempty period");
  if (!(preperiod.alphabet() == period.alphabet()))
    throw DomainError("preperiod and period over different alphabets");
  std::vector<Letter> out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    out.push_back(i < preperiod.size() ? preperiod[i]
                                       : period[(i - preperiod.size()) % period.size()]);
  }
  return FiniteWord(period.alphabet(), std::move(out));
}

FiniteWord mechanical_prefix(const Rational& alpha, const Rational& rho, std::size_t length,
                             const Alphabet& alphabet) {
  if (alpha < Rational(0) || Rational(1) < alpha) throw DomainError("mechanical slope must lie in [0,1]");
  if (alphabet.size() != 2) throw DomainError("mechanical words are binary");
  // floor(alpha*n + rho) = floor((a*s*n + r*b) / (b*s)) for alpha=a/b, rho=r/s.
  const BigInt den = alpha.denominator() * rho.denominator();
  const BigInt step = alpha.numerator() * rho.denominator();
  BigInt num = rho.numerator() * alpha.denominator();
  BigInt prev = floor_div(num, den);
  std::vector<Letter> out;
  out.reserve(length);
  for (std::size_t n = 0; n < length; ++n) {
    num += step;
    BigInt cur = floor_div(num, den);
    out.push_back(cur == prev ? 0 : 1);
    prev = std::move(cur);
  }
  return FiniteWord(alphabet, std::move(out));
}

FiniteWord standard_sturmian_prefix(const std::vector<std::uint64_t>& directive, bool periodic,
                                    std::size_t length, const Alphabet& alphabet) {
  if (alphabet.size() != 2) throw DomainError("standard Sturmian words are binary");
  if (directive.empty()) throw DomainError("empty standard-word directive");
  if (std::any_of(directive.begin(), directive.end(), [](auto a) { return a == 0; }))
    throw DomainError("standard-word directive entries must be >= 1");

  std::vector<Letter> older{1};  // s_{-1}
  std::vector<Letter> cur{0};    // s_0
  std::size_t step = 0;
  while (cur.size() < length) {
    if (step >= directive.size() && !periodic)
      throw GeneratorError("directive too short: " + std::to_string(directive.size()) +
                           " entries give only " + std::to_string(cur.size()) + " of " +
                           std::to_string(length) +
                           " letters; extend the directive by at least one entry");
    const std::uint64_t reps = directive[step % directive.size()];
    std::vector<Letter> next;
    for (std::uint64_t r = 0; r < reps && next.size() < length; ++r)
      next.insert(next.end(), cur.begin(), cur.end());
    if (next.size() < length) next.insert(next.end(), older.begin(), older.end());
    older = std::move(cur);
    cur = std::move(next);
    ++step;
  }
  cur.resize(length);
  return FiniteWord(alphabet, std::move(cur));
}

FiniteWord palindromic_closure(const FiniteWord& w) {
  // Longest palindromic suffix = longest suffix of w that is also a prefix
  // of reverse(w): prefix function of reverse(w) # w.
  const std::size_t n = w.size();
  if (n == 0) return w;
  std::vector<int> seq;
  seq.reserve(2 * n + 1);
  for (std::size_t i = n; i-- > 0;) seq.push_back(w[i]);
  seq.push_back(-1);
  for (Letter l : w.data()) seq.push_back(l);
  std::vector<std::size_t> pi(seq.size(), 0);
  for (std::size_t i = 1; i < seq.size(); ++i) {
    std::size_t j = pi[i - 1];
    while (j > 0 && seq[i] != seq[j]) j = pi[j - 1];
    if (seq[i] == seq[j]) ++j;
    pi[i] = j;
  }
  const std::size_t pal = pi.back();
  std::vector<Letter> out = w.data();
  for (std::size_t i = n - pal; i-- > 0;) out.push_back(w[i]);
  return FiniteWord(w.alphabet(), std::move(out));
}

FiniteWord arnoux_rauzy_prefix(const Alphabet& alphabet, const std::vector<Letter>& preperiod,
                               const std::vector<Letter>& period, std::size_t length) {
  if (period.empty()) throw DomainError("Arnoux-Rauzy directive needs a nonempty period");
  for (Letter l : preperiod)
    if (!alphabet.contains(l)) throw DomainError("directive letter outside alphabet");
  for (Letter l : period)
    if (!alphabet.contains(l)) throw DomainError("directive letter outside alphabet");

  // Justin's formula: (u_n a)^+ = u_n a u_n if a is new, otherwise
  // u_n u_k^{-1} u_n with k the last earlier step that used a.
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> len_before_last(alphabet.size(), kUnseen);
  std::vector<Letter> u;
  std::size_t step = 0;
  while (u.size() < length) {
    const Letter a = step < preperiod.size() ? preperiod[step]
                                             : period[(step - preperiod.size()) % period.size()];
    const std::size_t n = u.size();
    const std::size_t cut = len_before_last[a];
    len_before_last[a] = n;
    const std::size_t from = cut == kUnseen ? 0 : cut;
    u.reserve(2 * n + 1 - from);
    if (cut == kUnseen) u.push_back(a);
    for (std::size_t i = from; i < n; ++i) u.push_back(u[i]);
    ++step;
  }
  u.resize(length);
  return FiniteWord(alphabet, std::move(u));
}

FiniteWord cassaigne_selmer_prefix(const std::vector<std::uint8_t>& preperiod,
                                   const std::vector<std::uint8_t>& period, std::size_t length) {
  if (period.empty()) throw DomainError("Cassaigne-Selmer directive needs a nonempty period");
  auto check = [](std::uint8_t m) {
    if (m != 1 && m != 2) throw DomainError("Cassaigne-Selmer directive entries must be 1 or 2");
  };
  std::for_each(preperiod.begin(), preperiod.end(), check);
  std::for_each(period.begin(), period.end(), check);

  const Alphabet alphabet = Alphabet::numbered(3);
  if (length == 0) return FiniteWord(alphabet);

  // c1: 1->1, 2->13, 3->2 ; c2: 1->2, 2->13, 3->3 (letters 0-based here).
  using Images = std::array<std::vector<Letter>, 3>;
  static const std::array<Images, 2> kMorphisms = {
      Images{std::vector<Letter>{0}, {0, 2}, {1}},
      Images{std::vector<Letter>{1}, {0, 2}, {2}},
  };

  // tau = c_{D0} o c_{D1} o ... o c_{Dn}; each image capped at `length`.
  // Once the images of all three letters agree on `length` letters, every
  // continuation of the product does too.
  Images tau{std::vector<Letter>{0}, {1}, {2}};
  const std::size_t max_steps = preperiod.size() + period.size() * (200 + 4 * 64);
  Images period_start;
  for (std::size_t step = 0; step < max_steps; ++step) {
    if (step >= preperiod.size() && (step - preperiod.size()) % period.size() == 0) {
      if (step > preperiod.size() && tau == period_start) break;
      period_start = tau;
    }
    const std::uint8_t m = step < preperiod.size()
                               ? preperiod[step]
                               : period[(step - preperiod.size()) % period.size()];
    const Images& sigma = kMorphisms[m - 1];
    Images next;
    for (std::size_t b = 0; b < 3; ++b) {
      for (Letter l : sigma[b]) {
        next[b].insert(next[b].end(), tau[l].begin(), tau[l].end());
        if (next[b].size() >= length) break;
      }
      if (next[b].size() > length) next[b].resize(length);
    }
    tau = std::move(next);
    if (tau[0].size() == length && tau[0] == tau[1] && tau[1] == tau[2])
      return FiniteWord(alphabet, tau[0]);
  }
  throw GeneratorError("non-convergent Cassaigne-Selmer directive: images of the letters stop "
                       "growing or never agree on " + std::to_string(length) + " letters");
}

bool cassaigne_selmer_primitive(const std::vector<std::uint8_t>& period) {
  if (period.empty()) throw DomainError("Cassaigne-Selmer directive needs a nonempty period");
  using Matrix = std::array<std::array<std::uint64_t, 3>, 3>;
  // M[a][b] = |c(b)|_a
  static const std::array<Matrix, 2> kIncidence = {
      Matrix{{{1, 1, 0}, {0, 0, 1}, {0, 1, 0}}},
      Matrix{{{0, 1, 0}, {1, 0, 0}, {0, 1, 1}}},
  };
  // only the zero pattern matters, so entries are clamped to 0/1
  auto mul = [](const Matrix& x, const Matrix& y) {
    Matrix z{};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) z[a][b] |= x[a][c] & y[c][b];
    return z;
  };
  Matrix m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (std::uint8_t d : period) {
    if (d != 1 && d != 2) throw DomainError("Cassaigne-Selmer directive entries must be 1 or 2");
    m = mul(m, kIncidence[d - 1]);
  }
  // a primitive 3x3 pattern has a positive power by exponent (3-1)^2+1 = 5
  Matrix power = m;
  for (int e = 1; e <= 5; ++e) {
    bool positive = true;
    for (const auto& row : power)
      for (auto v : row) positive = positive && v;
    if (positive) return true;
    power = mul(power, m);
  }
  return false;
}

namespace {

// Crossing times scaled by a common denominator D become integers
// T_i(m) = m * slope_i - offset_i, advancing by slope_i per crossing.
template <class Int>
FiniteWord merge_crossings(const std::vector<BigInt>& slope, const std::vector<BigInt>& offset,
                           const BigInt& scale, std::size_t length) {
  const std::size_t d = slope.size();
  std::vector<Int> step(d), next(d);
  for (std::size_t i = 0; i < d; ++i) {
    step[i] = static_cast<Int>(slope[i]);
    next[i] = static_cast<Int>(slope[i] - offset[i]);
  }
  std::vector<Letter> out;
  out.reserve(length);
  for (std::size_t n = 0; n < length; ++n) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < d; ++i)
      if (next[i] < next[best]) best = i;
    for (std::size_t i = 0; i < d; ++i) {
      if (i != best && next[i] == next[best]) {
        Rational t(BigInt(next[best]), scale);
        throw DegenerateTrajectory(std::min(i, best), std::max(i, best), t.str());
      }
    }
    out.push_back(static_cast<Letter>(best));
    next[best] += step[best];
  }
  return FiniteWord(Alphabet::numbered(d), std::move(out));
}

}  // namespace

FiniteWord billiard_prefix(const std::vector<Rational>& x, const std::vector<Rational>& theta,
                           std::size_t length) {
  const std::size_t d = x.size();
  if (d == 0) throw DomainError("billiard needs dimension >= 1");
  if (d > kMaxAlphabetSize) throw DomainError("billiard dimension too large");
  if (theta.size() != d) throw DomainError("billiard position and momentum dimensions differ");
  for (std::size_t i = 0; i < d; ++i) {
    if (!(Rational(0) < theta[i]))
      throw DomainError("billiard momentum must be positive componentwise (reflect x_i -> 1-x_i)");
    if (x[i] < Rational(0) || !(x[i] < Rational(1)))
      throw DomainError("billiard start must lie in [0,1)^d");
  }
  // t_i(m) = (m - x_i) / theta_i ; x_i = p/q, theta_i = r/s.
  // D = prod q_i r_i, slope_i = s_i D / r_i, offset_i = p_i s_i D / (q_i r_i).
  BigInt scale = 1;
  for (std::size_t i = 0; i < d; ++i) scale *= x[i].denominator() * theta[i].numerator();
  std::vector<BigInt> slope(d), offset(d);
  BigInt bound = 0;
  for (std::size_t i = 0; i < d; ++i) {
    slope[i] = theta[i].denominator() * scale / theta[i].numerator();
    offset[i] = x[i].numerator() * theta[i].denominator() * scale /
                (x[i].denominator() * theta[i].numerator());
    BigInt reach = slope[i] * (length + 2) + offset[i];
    if (reach > bound) bound = reach;
  }
  if (bound < (BigInt(1) << 62)) return merge_crossings<std::int64_t>(slope, offset, scale, length);
  if (bound < (BigInt(1) << 126)) return merge_crossings<__int128>(slope, offset, scale, length);
  return merge_crossings<BigInt>(slope, offset, scale, length);
}

Substitution fm_substitution(const Alphabet& inner_alphabet, const std::vector<std::string>& b,
                             const std::vector<std::string>& c,
                             const std::vector<std::string>& d) {
  if (inner_alphabet.size() != 2) throw DomainError("quasi-Sturmian inner word must be binary");
  if (b.empty()) throw DomainError("quasi-Sturmian construction needs B nonempty");
  if (c.empty() && d.empty()) throw DomainError("quasi-Sturmian construction needs C or D nonempty");
  Alphabet out = alphabet_from_lists(b, c, d);  // rejects overlaps
  std::vector<Letter> one, two;
  Letter next = 0;
  for (std::size_t i = 0; i < b.size(); ++i, ++next) {
    one.push_back(next);
    two.push_back(next);
  }
  for (std::size_t i = 0; i < c.size(); ++i) one.push_back(next++);
  for (std::size_t i = 0; i < d.size(); ++i) two.push_back(next++);
  return Substitution(inner_alphabet, out,
                      {FiniteWord(out, std::move(one)), FiniteWord(out, std::move(two))});
}

FiniteWord thue_morse_iterate(const FiniteWord& base, unsigned iterations) {
  if (base.alphabet().size() != 2) throw DomainError("Thue-Morse iterate needs a binary word");
  std::vector<Letter> cur = base.data();
  for (unsigned j = 0; j < iterations; ++j) {
    std::vector<Letter> next;
    next.reserve(cur.size() * 2);
    for (Letter l : cur) {
      next.push_back(l);
      next.push_back(static_cast<Letter>(1 - l));
    }
    cur = std::move(next);
  }
  return FiniteWord(base.alphabet(), std::move(cur));
}

// ---- specs -------------------------------------------------------------------

Alphabet alphabet_of(const Spec& spec) {
  return std::visit(
      Overloaded{
          [](const Morphic& s) { return s.sub.domain; },
          [](const EventuallyPeriodic& s) { return s.period.alphabet(); },
          [](const Mechanical& s) { return s.alphabet; },
          [](const StandardSturmian& s) { return s.alphabet; },
          [](const ArnouxRauzy& s) { return s.alphabet; },
          [](const CassaigneSelmer&) { return Alphabet::numbered(3); },
          [](const Billiard& s) { return Alphabet::numbered(s.x.size()); },
          [](const QuasiSturmianFM& s) { return alphabet_from_lists(s.b, s.c, s.d); },
          [](const Colored& s) {
            Alphabet base = alphabet_of(*s.base);
            return colored_alphabet(base, base.letter(s.letter), alphabet_of(*s.colors));
          },
          [](const Projected& s) {
            Alphabet base = alphabet_of(*s.base);
            std::vector<Letter> sub;
            for (const auto& g : s.sub) sub.push_back(base.letter(g));
            return subalphabet(base, sub);
          },
          [](const SubstitutionImage& s) { return s.sub.codomain; },
          [](const ThueMorseIterated& s) { return alphabet_of(*s.base); },
      },
      spec.node);
}

void validate(const Spec& spec) {
  std::visit(
      Overloaded{
          [](const Morphic& s) {
            if (!(s.sub.domain == s.sub.codomain))
              throw DomainError("morphic fixed point needs an endomorphism");
            if (!s.sub.domain.contains(s.seed)) throw DomainError("seed letter outside alphabet");
            const FiniteWord& img = s.sub.image(s.seed);
            if (img.size() < 2 || img[0] != s.seed)
              throw DomainError("substitution is not prolongable on the seed letter");
          },
          [](const EventuallyPeriodic& s) {
            if (s.period.empty()) throw DomainError("eventually periodic word needs a period");
            if (!(s.preperiod.alphabet() == s.period.alphabet()))
              throw DomainError("preperiod and period over different alphabets");
          },
          [](const Mechanical& s) {
            if (s.alpha < Rational(0) || Rational(1) < s.alpha)
              throw DomainError("mechanical slope must lie in [0,1]");
            if (s.alphabet.size() != 2) throw DomainError("mechanical words are binary");
          },
          [](const StandardSturmian& s) {
            if (s.alphabet.size() != 2) throw DomainError("standard Sturmian words are binary");
            if (s.directive.empty()) throw DomainError("empty standard-word directive");
            for (auto a : s.directive)
              if (a == 0) throw DomainError("standard-word directive entries must be >= 1");
          },
          [](const ArnouxRauzy& s) {
            if (s.period.empty()) throw DomainError("Arnoux-Rauzy directive needs a period");
            for (Letter l : s.preperiod)
              if (!s.alphabet.contains(l)) throw DomainError("directive letter outside alphabet");
            for (Letter l : s.period)
              if (!s.alphabet.contains(l)) throw DomainError("directive letter outside alphabet");
          },
          [](const CassaigneSelmer& s) {
            if (s.period.empty()) throw DomainError("Cassaigne-Selmer directive needs a period");
            for (auto m : s.preperiod)
              if (m != 1 && m != 2) throw DomainError("Cassaigne-Selmer entries must be 1 or 2");
            for (auto m : s.period)
              if (m != 1 && m != 2) throw DomainError("Cassaigne-Selmer entries must be 1 or 2");
          },
          [](const Billiard& s) {
            if (s.x.empty() || s.x.size() != s.theta.size())
              throw DomainError("billiard position and momentum dimensions differ");
            for (std::size_t i = 0; i < s.x.size(); ++i) {
              if (!(Rational(0) < s.theta[i])) throw DomainError("billiard momentum must be positive");
              if (s.x[i] < Rational(0) || !(s.x[i] < Rational(1)))
                throw DomainError("billiard start must lie in [0,1)^d");
            }
          },
          [](const QuasiSturmianFM& s) {
            validate(*s.inner);
            Substitution sigma = fm_substitution(alphabet_of(*s.inner), s.b, s.c, s.d);
            const std::size_t longest = std::max(sigma.images[0].size(), sigma.images[1].size());
            if (s.shift >= longest)
              throw DomainError("quasi-Sturmian shift must be shorter than the longest image");
          },
          [](const Colored& s) {
            validate(*s.base);
            validate(*s.colors);
            (void)alphabet_of(Spec(s));
          },
          [](const Projected& s) {
            validate(*s.base);
            if (s.sub.empty()) throw DomainError("projection onto the empty subalphabet");
            (void)alphabet_of(Spec(s));
          },
          [](const SubstitutionImage& s) {
            validate(*s.base);
            if (!(alphabet_of(*s.base) == s.sub.domain))
              throw DomainError("substitution domain differs from the base word's alphabet");
          },
          [](const ThueMorseIterated& s) {
            validate(*s.base);
            if (alphabet_of(*s.base).size() != 2)
              throw DomainError("Thue-Morse iterate needs a binary base word");
          },
      },
      spec.node);
}

namespace {

FiniteWord prefix_of(const Spec& spec, std::size_t length);

FiniteWord quasi_sturmian_prefix(const QuasiSturmianFM& s, std::size_t length) {
  Substitution sigma = fm_substitution(alphabet_of(*s.inner), s.b, s.c, s.d);
  const std::size_t shortest = std::min(sigma.images[0].size(), sigma.images[1].size());
  const std::size_t inner_len = (length + s.shift) / shortest + 1;
  FiniteWord image = morphic_apply(sigma, prefix_of(*s.inner, inner_len));
  FiniteWord dropped = image.slice(0, s.shift);
  if (!sigma.images[0].starts_with(dropped) && !sigma.images[1].starts_with(dropped))
    throw DomainError("quasi-Sturmian shift does not drop a prefix of sigma(1) or sigma(2)");
  return image.slice(s.shift, length);
}

FiniteWord prefix_of(const Spec& spec, std::size_t length) {
  return std::visit(
      Overloaded{
          [&](const Morphic& s) { return morphic_prefix(s.sub, s.seed, length); },
          [&](const EventuallyPeriodic& s) {
            return eventually_periodic_prefix(s.preperiod, s.period, length);
          },
          [&](const Mechanical& s) { return mechanical_prefix(s.alpha, s.rho, length, s.alphabet); },
          [&](const StandardSturmian& s) {
            return standard_sturmian_prefix(s.directive, s.periodic, length, s.alphabet);
          },
          [&](const ArnouxRauzy& s) {
            return arnoux_rauzy_prefix(s.alphabet, s.preperiod, s.period, length);
          },
          [&](const CassaigneSelmer& s) {
            return cassaigne_selmer_prefix(s.preperiod, s.period, length);
          },
          [&](const Billiard& s) { return billiard_prefix(s.x, s.theta, length); },
          [&](const QuasiSturmianFM& s) { return quasi_sturmian_prefix(s, length); },
          [&](const Colored& s) {
            FiniteWord base = prefix_of(*s.base, length);
            const Letter a = base.alphabet().letter(s.letter);
            FiniteWord colors = prefix_of(*s.colors, letter_count(base, a));
            return color_finite(base, a, colors);
          },
          [&](const Projected& s) {
            FiniteWord base = grow_base(
                *s.base, length,
                [&](const FiniteWord& w) { return project(w, s.sub).size() >= length; },
                "projection");
            return project(base, s.sub).slice(0, length);
          },
          [&](const SubstitutionImage& s) {
            const std::size_t need = length + s.shift;
            FiniteWord base = grow_base(
                *s.base, need / 2 + 1,
                [&](const FiniteWord& w) {
                  std::size_t total = 0;
                  for (Letter l : w.data()) {
                    total += s.sub.image(l).size();
                    if (total >= need) return true;
                  }
                  return need == 0;
                },
                "substitution image");
            return morphic_apply(s.sub, base).slice(s.shift, length);
          },
          [&](const ThueMorseIterated& s) {
            std::size_t base_len = length;
            for (unsigned j = 0; j < s.iterations && base_len > 1; ++j) base_len = (base_len + 1) / 2;
            return thue_morse_iterate(prefix_of(*s.base, base_len), s.iterations).slice(0, length);
          },
      },
      spec.node);
}

}  // namespace

FiniteWord prefix(const Spec& spec, std::size_t length) {
  validate(spec);
  return prefix_of(spec, length);
}

Spec fibonacci(std::string_view glyphs) {
  if (glyphs.size() != 2) throw DomainError("Fibonacci word needs two glyphs");
  const std::string a(1, glyphs[0]), b(1, glyphs[1]);
  return Morphic{Substitution::endomorphism(glyphs, {a + b, a}), 0};
}

Spec thue_morse(std::string_view glyphs) {
  if (glyphs.size() != 2) throw DomainError("Thue-Morse word needs two glyphs");
  const std::string a(1, glyphs[0]), b(1, glyphs[1]);
  return Morphic{Substitution::endomorphism(glyphs, {a + b, b + a}), 0};
}

Spec tribonacci() { return Morphic{Substitution::endomorphism("123", {"12", "13", "1"}), 0}; }

Spec constant(std::string_view glyph) {
  Alphabet a(std::vector<std::string>{std::string(glyph)});
  return EventuallyPeriodic{FiniteWord(a), FiniteWord(a, {0})};
}

}  // namespace collapse_lab::gen
