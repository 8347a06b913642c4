#pragma once

#include <string>
#include <string_view>

#include "collapse_lab/word.hpp"

namespace support {

inline collapse_lab::FiniteWord word(std::string_view alphabet, std::string_view text) {
  return collapse_lab::FiniteWord::parse(collapse_lab::Alphabet::from_chars(alphabet), text);
}

inline collapse_lab::Letter letter(std::string_view alphabet, char glyph) {
  return static_cast<collapse_lab::Letter>(alphabet.find(glyph));
}

}  // namespace support
