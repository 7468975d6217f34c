#pragma once

// Border computations on words.
//
// A border of w is a non-empty word that is both a proper prefix and a
// suffix of w. Everything here runs off the classic border array
// (failure function), so each query is linear in |w|.

#include <cstddef>
#include <optional>
#include <vector>

#include "bpfact/word.hpp"

namespace bpfact {

/// All border lengths of a word, strictly decreasing.
using BorderChain = std::vector<std::size_t>;

/// Entry i is the length of the longest border of the length-i prefix of w
/// (0 when that prefix is unbordered). Entry 0 is 0. Size is |w| + 1.
inline std::vector<std::size_t> border_array(WordView w) {
  std::vector<std::size_t> b(w.size() + 1, 0);
  std::size_t len = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    while (len > 0 && w[i] != w[len]) {
      len = b[len];
    }
    if (w[i] == w[len]) {
      ++len;
    }
    b[i + 1] = len;
  }
  return b;
}

inline BorderChain borders(WordView w) {
  BorderChain chain;
  if (w.size() < 2) {
    return chain;
  }
  const auto b = border_array(w);
  for (std::size_t len = b[w.size()]; len > 0; len = b[len]) {
    chain.push_back(len);
  }
  return chain;
}

inline std::optional<std::size_t> shortest_border(WordView w) {
  const auto chain = borders(w);
  if (chain.empty()) {
    return std::nullopt;
  }
  return chain.back();
}

/// Longest border b with 2b <= |w|. Absent exactly when w is unbordered,
/// since the shortest border of a word never overlaps itself.
inline std::optional<std::size_t> longest_nonoverlapping_border(WordView w) {
  if (w.size() < 2) {
    return std::nullopt;
  }
  const auto b = border_array(w);
  for (std::size_t len = b[w.size()]; len > 0; len = b[len]) {
    if (2 * len <= w.size()) {
      return len;
    }
  }
  return std::nullopt;
}

/// The empty word is reported as not unbordered; callers handle it apart.
inline bool is_unbordered(WordView w) {
  if (w.empty()) {
    return false;
  }
  return w.size() == 1 || border_array(w)[w.size()] == 0;
}

inline bool has_unique_border(WordView w) {
  if (w.size() < 2) {
    return false;
  }
  const auto b = border_array(w);
  const std::size_t longest = b[w.size()];
  return longest > 0 && b[longest] == 0;
}

inline bool is_palindrome(WordView w) {
  for (std::size_t i = 0, j = w.size(); i + 1 < j; ++i, --j) {
    if (w[i] != w[j - 1]) {
      return false;
    }
  }
  return true;
}

}  // namespace bpfact
