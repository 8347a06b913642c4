#pragma once

// Exhaustive and randomized property checks shared by the unit tests and the
// acceptance binary. Each returns an empty string on success, otherwise a
// description of the first counterexample.

#include <cstdint>
#include <string>

namespace properties {

// (uv choose x) = sum over x = x1 x2 of (u choose x1)(v choose x2), for all
// binary u, v with |u|, |v| <= max_len and 1 <= |x| <= k.
std::string composition_identity(std::size_t max_len, unsigned k);

// u ~_k v implies p u s ~_k p v s, on equivalent pairs found exhaustively
// among binary words of length <= max_len.
std::string affix_congruence(std::size_t max_len, unsigned k, std::uint64_t seed);

// rho = b^1 <= b^2 <= b^3 <= p on every row of complexity reports over a
// fixed set of words.
std::string complexity_chain();

// reconstruct(projections(u)) = u for every u over `d` letters with |u| <= max_len.
std::string reconstruction_exhaustive(std::size_t d, std::size_t max_len);
// The same on `trials` random words of length <= max_len over 2..max_d letters.
std::string reconstruction_random(std::size_t max_d, std::size_t max_len, std::size_t trials,
                                  std::uint64_t seed);

// Extending a signature letter by letter matches the from-scratch signature
// of every prefix.
std::string signature_extend(std::size_t length, std::size_t trials, std::uint64_t seed);

// binomial against the index-tuple enumeration oracle on random words.
std::string binomial_oracle(std::size_t trials, std::uint64_t seed);

}  // namespace properties
