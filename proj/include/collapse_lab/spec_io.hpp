#pragma once

// Word-spec documents: JSON objects with a "kind" field.
//
//   {"kind": "morphic", "alphabet": "01", "images": ["01", "0"], "seed": "0"}
//   {"kind": "colored", "base": {...}, "letter": "a", "colors": {...}}
//
// Rationals are "p/q" strings (integers also accepted), alphabets are a
// string of one-character glyphs or an array of glyphs, words are glyph
// strings or arrays of glyphs. "fibonacci", "thue_morse" and "tribonacci"
// are accepted as shorthands for the corresponding morphic specs.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "collapse_lab/generators.hpp"
#include "json.hpp"

namespace collapse_lab::io {

// Malformed document: bad JSON, unknown kind, missing or mistyped field.
class SpecParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json spec_to_json(const gen::Spec& spec);
// Throws SpecParseError for structural problems and DomainError when the
// described word is invalid.
gen::Spec spec_from_json(const nlohmann::json& doc);

std::string render_spec(const gen::Spec& spec);
gen::Spec parse_spec(std::string_view text);
gen::Spec load_spec(const std::string& path);

// FNV-1a 64 of the compact rendering, as 16 hex digits.
std::string spec_hash(const gen::Spec& spec);

}  // namespace collapse_lab::io
