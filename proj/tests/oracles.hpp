#pragma once

// Brute-force reference implementations on plain strings. Deliberately naive
// and independent of the library code they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// Number of increasing index tuples of w spelling u, by exhaustive recursion.
inline std::uint64_t binomial(const std::string& w, const std::string& u) {
  std::function<std::uint64_t(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) {
    if (j == u.size()) return std::uint64_t{1};
    std::uint64_t total = 0;
    for (std::size_t p = i; p < w.size(); ++p)
      if (w[p] == u[j]) total += go(p + 1, j + 1);
    return total;
  };
  return go(0, 0);
}

// Every nonempty word of length <= k over `letters`, length-major then lex.
inline std::vector<std::string> patterns(const std::string& letters, unsigned k) {
  std::vector<std::string> out;
  std::vector<std::string> level{""};
  for (unsigned m = 1; m <= k; ++m) {
    std::vector<std::string> next;
    for (const auto& p : level)
      for (char c : letters) next.push_back(p + c);
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

inline std::vector<std::uint64_t> signature(const std::string& w, const std::string& letters,
                                            unsigned k) {
  std::vector<std::uint64_t> out;
  for (const auto& p : patterns(letters, k)) out.push_back(binomial(w, p));
  return out;
}

inline bool equivalent(const std::string& u, const std::string& v, const std::string& letters,
                       unsigned k) {
  for (const auto& p : patterns(letters, k))
    if (binomial(u, p) != binomial(v, p)) return false;
  return true;
}

inline std::set<std::string> factors(const std::string& w, std::size_t n) {
  std::set<std::string> out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
  return out;
}

// Classes of L_n(w) under pairwise k-binomial equivalence (quadratic).
inline std::size_t class_count(const std::string& w, const std::string& letters, unsigned k,
                               std::size_t n) {
  std::vector<std::string> reps;
  for (const auto& f : factors(w, n)) {
    bool seen = false;
    for (const auto& r : reps)
      if (equivalent(f, r, letters, k)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(f);
  }
  return reps.size();
}

inline std::size_t count_of(const std::string& w, char a) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), a));
}

// max over letters and window lengths <= n_max of (max - min) letter count.
inline std::uint64_t imbalance(const std::string& w, const std::string& letters,
                               std::size_t n_max) {
  std::uint64_t worst = 0;
  for (std::size_t n = 1; n <= n_max && n <= w.size(); ++n)
    for (char a : letters) {
      std::size_t lo = n, hi = 0;
      for (std::size_t i = 0; i + n <= w.size(); ++i) {
        const std::size_t c = count_of(w.substr(i, n), a);
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      worst = std::max<std::uint64_t>(worst, hi - lo);
    }
  return worst;
}

inline std::string project(const std::string& w, const std::string& keep) {
  std::string out;
  for (char c : w)
    if (keep.find(c) != std::string::npos) out += c;
  return out;
}

// All words of length n over `letters`.
inline std::vector<std::string> all_words(const std::string& letters, std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& p : out)
      for (char c : letters) next.push_back(p + c);
    out = std::move(next);
  }
  return out;
}

inline std::string random_word(std::mt19937_64& rng, const std::string& letters, std::size_t n) {
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += letters[pick(rng)];
  return out;
}

// Fixed point of a morphism given by per-letter images, by plain iteration.
inline std::string fixed_point(const std::map<char, std::string>& images, char seed,
                               std::size_t length) {
  std::string w(1, seed);
  while (w.size() < length) {
    std::string next;
    for (char c : w) next += images.at(c);
    w = std::move(next);
  }
  return w.substr(0, length);
}

inline std::string apply(const std::map<char, std::string>& images, const std::string& w) {
  std::string out;
  for (char c : w) out += images.at(c);
  return out;
}

}  // namespace oracle
