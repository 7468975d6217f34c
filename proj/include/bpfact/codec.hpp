#pragma once

// Mapping between text and symbol words at the I/O boundary.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bpfact/word.hpp"

namespace bpfact {

class CodecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TextCodec {
  enum class Mode { chars, digits };

  Mode mode = Mode::chars;
  /// chars mode: character for each symbol id, in first-occurrence order.
  std::vector<char> mapping;

  std::string decode(WordView w) const {
    std::string s;
    s.reserve(w.size());
    for (Symbol c : w) {
      s.push_back(mode == Mode::digits ? static_cast<char>('0' + c) : mapping.at(c));
    }
    return s;
  }
};

inline constexpr std::size_t max_distinct_chars = 255;

/// Parses text into a word. In chars mode every distinct character gets the
/// next fresh id in first-occurrence order and the codec's mapping is reset
/// to describe this word; digits mode maps '0'..'9' literally.
inline Word parse_word(std::string_view text, TextCodec& codec) {
  if (text.empty()) {
    throw CodecError("empty word");
  }
  Word w;
  w.reserve(text.size());
  if (codec.mode == TextCodec::Mode::digits) {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw CodecError(std::string("invalid digit '") + c + "'");
      }
      w.push_back(static_cast<Symbol>(c - '0'));
    }
    return w;
  }
  codec.mapping.clear();
  for (char c : text) {
    std::size_t id = 0;
    while (id < codec.mapping.size() && codec.mapping[id] != c) {
      ++id;
    }
    if (id == codec.mapping.size()) {
      if (id == max_distinct_chars) {
        throw CodecError("more than 255 distinct characters");
      }
      codec.mapping.push_back(c);
    }
    w.push_back(static_cast<Symbol>(id));
  }
  return w;
}

}  // namespace bpfact
