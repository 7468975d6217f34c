#pragma once

// f_k(n): the largest width a smallest BP-factorization of a length-n word
// over k letters can have, and words attaining it.

#include <algorithm>
#include <array>
#include <cstddef>
#include <string_view>

#include "bpfact/counting.hpp"
#include "bpfact/word.hpp"

namespace bpfact {

/// f_2(8l + i) = 6l + i for 0 <= i <= 5, f_2(8l + 6) = f_2(8l + 7) = 6l + 5;
/// f_k(n) = n for k >= 3.
inline std::size_t max_smallest_width(unsigned k, std::size_t n) {
  require_alphabet(k);
  if (k >= 3) {
    return n;
  }
  const std::size_t l = n / 8;
  const std::size_t i = n % 8;
  return 6 * l + std::min<std::size_t>(i, 5);
}

/// A length-n word whose smallest BP-factorization has width f_k(n).
///
/// Binary, n = 8l + i: (0101)^l (1001)^l when i = 0, otherwise
/// (0101)^l c_i (0110)^l with a fixed core c_i of length i. The right half
/// switches to 0110 because with 1001 the core creates a longer
/// non-overlapping border (0101 00 1001 peels 01 and then 010).
/// Larger alphabets, n = 6l + i: (012)^l c_i (210)^l. Letters beyond 2 are
/// never used.
inline Word max_width_witness(unsigned k, std::size_t n) {
  require_alphabet(k);
  static constexpr std::array<std::string_view, 8> binary_core = {
      "", "0", "00", "010", "0110", "01010", "010110", "0110110"};
  static constexpr std::array<std::string_view, 6> ternary_core = {
      "", "0", "00", "010", "0110", "01010"};

  const bool binary = k == 2;
  const std::size_t period = binary ? 8 : 6;
  const std::size_t l = n / period;
  const std::string_view left = binary ? "0101" : "012";
  const std::string_view core = binary ? binary_core[n % period] : ternary_core[n % period];
  const std::string_view right = !binary ? "210" : core.empty() ? "1001" : "0110";

  Word w;
  w.reserve(n);
  auto append = [&w](std::string_view digits) {
    for (char c : digits) {
      w.push_back(static_cast<Symbol>(c - '0'));
    }
  };
  for (std::size_t j = 0; j < l; ++j) {
    append(left);
  }
  append(core);
  for (std::size_t j = 0; j < l; ++j) {
    append(right);
  }
  return w;
}

}  // namespace bpfact
