#pragma once

// Block palindrome factorizations.
//
// A BP-factorization of w is w = w_m ... w_1 w_0 w_1 ... w_m where every
// outer block w_i (i >= 1) is non-empty and the center w_0 may be empty.
// Its width is the number of non-empty blocks: 2m + 1 when w_0 is
// non-empty, 2m otherwise.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bpfact/borders.hpp"
#include "bpfact/word.hpp"

namespace bpfact {

class EmptyWordError : public std::invalid_argument {
 public:
  EmptyWordError() : std::invalid_argument("operation requires a non-empty word") {}
};

struct BPFactorization {
  /// Outer blocks ordered outermost to innermost: w_m, ..., w_1.
  std::vector<Word> outer;
  /// w_0, possibly empty.
  Word center;
  std::size_t width = 0;

  bool operator==(const BPFactorization&) const = default;
};

inline std::size_t width_of(std::size_t outer_blocks, bool has_center) {
  return 2 * outer_blocks + (has_center ? 1 : 0);
}

inline BPFactorization make_factorization(std::vector<Word> outer, Word center) {
  const auto width = width_of(outer.size(), !center.empty());
  return BPFactorization{std::move(outer), std::move(center), width};
}

inline Word reconstruct(const BPFactorization& f) {
  Word w;
  for (const auto& block : f.outer) {
    w.insert(w.end(), block.begin(), block.end());
  }
  w.insert(w.end(), f.center.begin(), f.center.end());
  for (auto it = f.outer.rbegin(); it != f.outer.rend(); ++it) {
    w.insert(w.end(), it->begin(), it->end());
  }
  return w;
}

/// Blocks in reading order, center included only when non-empty.
inline std::vector<Word> blocks(const BPFactorization& f) {
  std::vector<Word> out(f.outer.begin(), f.outer.end());
  if (!f.center.empty()) {
    out.push_back(f.center);
  }
  out.insert(out.end(), f.outer.rbegin(), f.outer.rend());
  return out;
}

inline bool validate(const BPFactorization& f, WordView w) {
  for (const auto& block : f.outer) {
    if (block.empty()) {
      return false;
    }
  }
  if (f.width != width_of(f.outer.size(), !f.center.empty())) {
    return false;
  }
  return equal(reconstruct(f), w);
}

namespace detail {

// Peels blocks off both ends of w while `choose` returns a border length of
// the current central factor; stops at an empty or unbordered center.
template <typename ChooseBorder>
BPFactorization greedy_peel(WordView w, ChooseBorder choose) {
  if (w.empty()) {
    throw EmptyWordError{};
  }
  std::vector<Word> outer;
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (lo < hi) {
    const WordView mid = w.subspan(lo, hi - lo);
    const std::optional<std::size_t> b = choose(mid);
    if (!b) {
      break;
    }
    outer.push_back(to_word(mid.first(*b)));
    lo += *b;
    hi -= *b;
  }
  return make_factorization(std::move(outer), to_word(w.subspan(lo, hi - lo)));
}

}  // namespace detail

/// Maximum-width factorization: repeatedly peel the shortest border of the
/// central factor. Every outer block comes out unbordered.
inline BPFactorization largest_bpf(WordView w) {
  return detail::greedy_peel(w, [](WordView mid) { return shortest_border(mid); });
}

/// Greedy factorization that repeatedly peels the longest non-overlapping
/// border of the central factor. Not a global width minimum.
inline BPFactorization smallest_bpf(WordView w) {
  return detail::greedy_peel(w, [](WordView mid) { return longest_nonoverlapping_border(mid); });
}

namespace detail {

inline void all_bpfs_into(WordView w, std::vector<BPFactorization>& out) {
  out.push_back(make_factorization({}, to_word(w)));
  // Non-overlapping borders in decreasing length, i.e. decreasing first block.
  for (std::size_t b : borders(w)) {
    if (2 * b > w.size()) {
      continue;
    }
    const Word first = to_word(w.first(b));
    const WordView mid = w.subspan(b, w.size() - 2 * b);
    if (mid.empty()) {
      out.push_back(make_factorization({first}, {}));
      continue;
    }
    std::vector<BPFactorization> inner;
    all_bpfs_into(mid, inner);
    for (auto& f : inner) {
      f.outer.insert(f.outer.begin(), first);
      f.width += 2;
      out.push_back(std::move(f));
    }
  }
}

}  // namespace detail

/// Every BP-factorization of w, each exactly once, ordered by decreasing
/// length of the outermost block and then recursively.
inline std::vector<BPFactorization> all_bpfs(WordView w) {
  if (w.empty()) {
    throw EmptyWordError{};
  }
  std::vector<BPFactorization> out;
  detail::all_bpfs_into(w, out);
  return out;
}

/// Number of BP-factorizations, counted without materializing them.
inline std::size_t count_bpfs(WordView w) {
  std::size_t count = 1;
  for (std::size_t b : borders(w)) {
    if (2 * b > w.size()) {
      continue;
    }
    const WordView mid = w.subspan(b, w.size() - 2 * b);
    count += mid.empty() ? 1 : count_bpfs(mid);
  }
  return count;
}

/// Width of the largest BP-factorization, without building blocks.
inline std::size_t largest_width(WordView w) {
  if (w.empty()) {
    throw EmptyWordError{};
  }
  std::size_t width = 0;
  while (!w.empty()) {
    const auto b = shortest_border(w);
    if (!b) {
      return width + 1;
    }
    width += 2;
    w = w.subspan(*b, w.size() - 2 * *b);
  }
  return width;
}

inline std::size_t smallest_width(WordView w) {
  if (w.empty()) {
    throw EmptyWordError{};
  }
  std::size_t width = 0;
  while (!w.empty()) {
    const auto b = longest_nonoverlapping_border(w);
    if (!b) {
      return width + 1;
    }
    width += 2;
    w = w.subspan(*b, w.size() - 2 * *b);
  }
  return width;
}

inline bool coincide(WordView w) { return smallest_bpf(w) == largest_bpf(w); }

namespace detail {

inline bool characterization(WordView w, bool amended) {
  const BPFactorization f = largest_bpf(w);
  const std::size_t m = f.outer.size();

  auto unique_border_is = [](WordView u, std::size_t len) {
    return has_unique_border(u) && borders(u).front() == len;
  };

  // Central factor u_i occupies [offset, |w| - offset), where offset is the
  // total length of blocks w_m .. w_{i+1}.
  std::size_t offset = 0;
  for (std::size_t idx = 0; idx < m; ++idx) {
    const std::size_t i = m - idx;
    const Word& wi = f.outer[idx];
    const WordView u = w.subspan(offset, w.size() - 2 * offset);
    offset += wi.size();
    if (unique_border_is(u, wi.size())) {
      continue;
    }
    if (f.center.empty() || wi != f.center) {
      return false;
    }
    if (i == 1 && amended) {
      // u_1 = w_0 w_0 w_0.
      continue;
    }
    if (i != 2) {
      return false;
    }
    // u_2 = w_0 w_1 w_0 w_1 w_0, and w_0 must be the unique border of w_0 w_1 w_0.
    const Word& w1 = f.outer[m - 1];
    Word inner = f.center;
    inner.insert(inner.end(), w1.begin(), w1.end());
    inner.insert(inner.end(), f.center.begin(), f.center.end());
    if (!unique_border_is(inner, f.center.size())) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// Literal coincidence characterization, evaluated on the largest factorization w_m ... w_0 ... w_m with central factors
/// u_i = w_i ... w_0 ... w_i:
///   - for i != 2, w_i is the unique border of u_i;
///   - for i == 2, either w_2 is the unique border of u_2, or
///     u_2 = w_0 w_1 w_0 w_1 w_0 with w_0 the unique border of w_0 w_1 w_0.
/// Vacuously true for unbordered words.
///
/// This is not equivalent to coincide(): 000 factors as 0.0.0 both ways,
/// yet 0 is not the unique border of 000. See characterization_amended().
inline bool characterization_holds(WordView w) { return detail::characterization(w, false); }

/// The characterization with the missing case added: for i == 1, also
/// accept u_1 = w_0 w_0 w_0 (so w_1 = w_0). Its borders are w_0 and w_0 w_0,
/// the latter overlapping, so both greedy rules peel w_0.
inline bool characterization_amended(WordView w) { return detail::characterization(w, true); }

}  // namespace bpfact
