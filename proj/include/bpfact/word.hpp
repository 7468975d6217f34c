#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bpfact {

/// A letter of the alphabet {0, 1, ..., k-1}.
using Symbol = std::uint8_t;

/// A finite word over a small integer alphabet. The empty word is allowed.
using Word = std::vector<Symbol>;

/// Read-only view of a word or of one of its factors.
using WordView = std::span<const Symbol>;

/// Builds a word from a string of decimal digits, e.g. "01011001".
/// Intended for literals in code and tests; no validation beyond '0'..'9'.
inline Word from_digits(std::string_view digits) {
  Word w;
  w.reserve(digits.size());
  for (char c : digits) {
    w.push_back(static_cast<Symbol>(c - '0'));
  }
  return w;
}

/// Maps every distinct character to a fresh symbol in first-occurrence order.
/// "abracadabra" -> 0 1 2 0 3 0 4 0 1 2 0.
inline Word from_chars(std::string_view text) {
  Word w;
  w.reserve(text.size());
  std::vector<char> seen;
  for (char c : text) {
    std::size_t id = 0;
    while (id < seen.size() && seen[id] != c) {
      ++id;
    }
    if (id == seen.size()) {
      seen.push_back(c);
    }
    w.push_back(static_cast<Symbol>(id));
  }
  return w;
}

inline std::string to_digits(WordView w) {
  std::string s;
  s.reserve(w.size());
  for (Symbol c : w) {
    s.push_back(static_cast<char>('0' + c));
  }
  return s;
}

inline Word to_word(WordView w) { return Word(w.begin(), w.end()); }

inline bool equal(WordView a, WordView b) {
  if (a.size() != b.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace bpfact
