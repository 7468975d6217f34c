#pragma once

// Brute-force ground truth.
//
// Everything here enumerates all k^n words and recomputes the quantities the
// recurrences predict. Borders are found with a direct quadratic
// prefix/suffix scan so that the oracle shares no code path with the border
// array used by the library.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bpfact/counting.hpp"
#include "bpfact/extremal.hpp"
#include "bpfact/factorization.hpp"
#include "bpfact/word.hpp"

namespace bpfact::oracle {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::uint64_t budget = std::uint64_t{1} << 24;  // max words per sweep
  unsigned jobs = 1;
  std::size_t max_witnesses = 8;
};

/// Number of words of length n over k letters, or throws if above budget.
inline std::uint64_t checked_word_count(unsigned k, std::size_t n, std::uint64_t budget) {
  require_alphabet(k);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > budget / k) {
      std::ostringstream msg;
      msg << "sweep over " << k << "^" << n << " words exceeds the budget of " << budget;
      throw BudgetExceeded(msg.str());
    }
    total *= k;
  }
  if (total > budget) {
    std::ostringstream msg;
    msg << "sweep over " << k << "^" << n << " words exceeds the budget of " << budget;
    throw BudgetExceeded(msg.str());
  }
  return total;
}

/// Visits every word of length n over k letters once, in lexicographic order.
/// The view handed to the visitor is only valid during the call.
template <typename Visitor>
void for_each_word(unsigned k, std::size_t n, Visitor&& visit,
                   std::uint64_t budget = Config{}.budget) {
  checked_word_count(k, n, budget);
  Word w(n, 0);
  while (true) {
    visit(WordView(w));
    auto digit = w.rbegin();
    for (; digit != w.rend() && *digit == k - 1; ++digit) {
      *digit = 0;
    }
    if (digit == w.rend()) {
      return;
    }
    ++*digit;
  }
}

/// Parallel sweep. The word space is split by fixed prefixes; each worker
/// owns an accumulator and a buffer, and accumulators are merged in prefix
/// order after all workers join. `visit(acc, word)` and `merge(into, from)`
/// must be commutative integer aggregations for the result to be
/// independent of the worker count.
template <typename Acc, typename Visit, typename Merge>
Acc sweep(unsigned k, std::size_t n, const Config& cfg, Acc init, Visit visit, Merge merge) {
  checked_word_count(k, n, cfg.budget);
  const unsigned jobs = cfg.jobs == 0 ? 1 : cfg.jobs;

  std::size_t prefix_len = 0;
  std::uint64_t prefixes = 1;
  while (prefixes < jobs && prefix_len < n) {
    prefixes *= k;
    ++prefix_len;
  }

  auto run_prefix = [&](std::uint64_t index, Acc& acc) {
    Word w(n, 0);
    for (std::size_t i = prefix_len; i > 0; --i) {
      w[i - 1] = static_cast<Symbol>(index % k);
      index /= k;
    }
    const std::size_t free = n - prefix_len;
    while (true) {
      visit(acc, WordView(w));
      std::size_t i = n;
      while (i > prefix_len && w[i - 1] == k - 1) {
        w[i - 1] = 0;
        --i;
      }
      if (i == prefix_len || free == 0) {
        return;
      }
      ++w[i - 1];
    }
  };

  std::vector<Acc> partial(prefixes, init);
  if (jobs == 1) {
    for (std::uint64_t p = 0; p < prefixes; ++p) {
      run_prefix(p, partial[p]);
    }
  } else {
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
      workers.emplace_back([&, j] {
        for (std::uint64_t p = j; p < prefixes; p += jobs) {
          run_prefix(p, partial[p]);
        }
      });
    }
    for (auto& t : workers) {
      t.join();
    }
  }
  Acc total = std::move(init);
  for (auto& acc : partial) {
    merge(total, std::move(acc));
  }
  return total;
}

// ---- naive border machinery --------------------------------------------

inline bool is_border_naive(WordView w, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if (w[i] != w[w.size() - len + i]) {
      return false;
    }
  }
  return true;
}

/// All border lengths by direct comparison, strictly decreasing.
inline std::vector<std::size_t> borders_naive(WordView w) {
  std::vector<std::size_t> out;
  for (std::size_t len = w.size() > 0 ? w.size() - 1 : 0; len >= 1; --len) {
    if (is_border_naive(w, len)) {
      out.push_back(len);
    }
  }
  return out;
}

inline std::size_t shortest_border_naive(WordView w) {
  for (std::size_t len = 1; len < w.size(); ++len) {
    if (is_border_naive(w, len)) {
      return len;
    }
  }
  return 0;
}

inline std::size_t longest_nonoverlapping_border_naive(WordView w) {
  for (std::size_t len = w.size() / 2; len >= 1; --len) {
    if (is_border_naive(w, len)) {
      return len;
    }
  }
  return 0;
}

template <typename Choose>
std::size_t greedy_width_naive(WordView w, Choose choose) {
  std::size_t width = 0;
  while (!w.empty()) {
    const std::size_t b = choose(w);
    if (b == 0) {
      return width + 1;
    }
    width += 2;
    w = w.subspan(b, w.size() - 2 * b);
  }
  return width;
}

inline std::size_t largest_width_naive(WordView w) {
  return greedy_width_naive(w, shortest_border_naive);
}

inline std::size_t smallest_width_naive(WordView w) {
  return greedy_width_naive(w, longest_nonoverlapping_border_naive);
}

// ---- brute-force counts ----------------------------------------------------

using Histogram = std::map<std::size_t, std::uint64_t>;

inline void merge_histogram(Histogram& into, Histogram&& from) {
  for (const auto& [key, count] : from) {
    into[key] += count;
  }
}

/// Histogram of largest-BPF widths over all length-n words.
inline Histogram ib_row_bruteforce(unsigned k, std::size_t n, const Config& cfg = {}) {
  if (n == 0) {
    return {{0, 1}};
  }
  return sweep(
      k, n, cfg, Histogram{},
      [](Histogram& h, WordView w) { ++h[largest_width_naive(w)]; }, merge_histogram);
}

inline std::uint64_t unbordered_bruteforce(unsigned k, std::size_t n, const Config& cfg = {}) {
  if (n == 0) {
    return 1;
  }
  return sweep(
      k, n, cfg, std::uint64_t{0},
      [](std::uint64_t& c, WordView w) { c += shortest_border_naive(w) == 0 ? 1 : 0; },
      [](std::uint64_t& into, std::uint64_t from) { into += from; });
}

struct UniqueBorderCounts {
  std::uint64_t total = 0;
  Histogram by_length;
};

/// Words with exactly one border, bucketed by that border's length.
inline UniqueBorderCounts unique_border_bruteforce(unsigned k, std::size_t n,
                                                   const Config& cfg = {}) {
  auto h = sweep(
      k, n, cfg, Histogram{},
      [](Histogram& hist, WordView w) {
        const auto b = borders_naive(w);
        if (b.size() == 1) {
          ++hist[b.front()];
        }
      },
      merge_histogram);
  UniqueBorderCounts out;
  for (const auto& [t, c] : h) {
    out.total += c;
  }
  out.by_length = std::move(h);
  return out;
}

struct MaxWidth {
  std::size_t width = 0;
  std::vector<Word> witnesses;  // lexicographically first attaining words
};

/// Maximum smallest-BPF width over all length-n words.
inline MaxWidth maxwidth_bruteforce(unsigned k, std::size_t n, const Config& cfg = {}) {
  if (n == 0) {
    return {0, {Word{}}};
  }
  const std::size_t limit = cfg.max_witnesses;
  // Per-worker state is merged in prefix order, so witnesses stay sorted.
  return sweep(
      k, n, cfg, MaxWidth{},
      [limit](MaxWidth& best, WordView w) {
        const std::size_t width = smallest_width_naive(w);
        if (width > best.width) {
          best.width = width;
          best.witnesses.clear();
        }
        if (width == best.width && best.witnesses.size() < limit) {
          best.witnesses.push_back(to_word(w));
        }
      },
      [limit](MaxWidth& into, MaxWidth&& from) {
        if (from.width > into.width) {
          into = std::move(from);
          return;
        }
        if (from.width == into.width) {
          for (auto& w : from.witnesses) {
            if (into.witnesses.size() >= limit) {
              break;
            }
            into.witnesses.push_back(std::move(w));
          }
        }
      });
}

// ---- verification reports ---------------------------------------------------

enum class Subject { ib, unbordered, unique_border, maxwidth, theorem5, bpf_width, borders };

inline const char* to_string(Subject s) {
  switch (s) {
    case Subject::ib: return "ib";
    case Subject::unbordered: return "unbordered";
    case Subject::unique_border: return "unique_border";
    case Subject::maxwidth: return "maxwidth";
    case Subject::theorem5: return "theorem5";
    case Subject::bpf_width: return "bpf_width";
    case Subject::borders: return "borders";
  }
  return "?";
}

struct Mismatch {
  std::string parameters;
  std::string expected;  // oracle
  std::string actual;    // library
};

struct VerificationReport {
  Subject subject = Subject::ib;
  unsigned k = 2;
  std::size_t n_max = 0;
  std::vector<Mismatch> mismatches;
  std::chrono::duration<double> elapsed{0};
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;  // may exceed mismatches.size() for word sweeps

  bool passed() const { return mismatches.empty(); }
};

namespace detail {

template <typename Body>
VerificationReport run_report(Subject subject, unsigned k, std::size_t n_max,
                              const Config& cfg, Body body) {
  require_alphabet(k);
  checked_word_count(k, n_max, cfg.budget);
  VerificationReport report;
  report.subject = subject;
  report.k = k;
  report.n_max = n_max;
  const auto start = std::chrono::steady_clock::now();
  body(report);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

inline std::string params(std::size_t n, std::size_t t) {
  return "n=" + std::to_string(n) + " t=" + std::to_string(t);
}

// Collects words for which a predicate fails, for word-level sweeps.
struct WordFailures {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::vector<Word> failures;
};

template <typename Predicate>
WordFailures word_sweep(unsigned k, std::size_t n, const Config& cfg, Predicate ok) {
  return sweep(
      k, n, cfg, WordFailures{},
      [&ok](WordFailures& acc, WordView w) {
        ++acc.checked;
        if (!ok(w)) {
          ++acc.failed;
          if (acc.failures.size() < 32) {
            acc.failures.push_back(to_word(w));
          }
        }
      },
      [](WordFailures& into, WordFailures&& from) {
        into.checked += from.checked;
        into.failed += from.failed;
        for (auto& w : from.failures) {
          if (into.failures.size() >= 32) {
            break;
          }
          into.failures.push_back(std::move(w));
        }
      });
}

}  // namespace detail

/// Recurrence IB(n, t) against the exhaustive width histogram, n = 0..n_max.
inline VerificationReport verify_ib(unsigned k, std::size_t n_max, const Config& cfg = {}) {
  return detail::run_report(Subject::ib, k, n_max, cfg, [&](VerificationReport& r) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      const Histogram hist = ib_row_bruteforce(k, n, cfg);
      for (std::size_t t = 0; t <= n; ++t) {
        const auto it = hist.find(t);
        const BigInt expected = it == hist.end() ? 0 : it->second;
        const BigInt actual = ib_count(k, n, t);
        ++r.checks;
        if (expected != actual) {
          r.mismatches.push_back({detail::params(n, t), expected.str(), actual.str()});
        }
      }
    }
  });
}

inline VerificationReport verify_unbordered(unsigned k, std::size_t n_max,
                                            const Config& cfg = {}) {
  return detail::run_report(Subject::unbordered, k, n_max, cfg, [&](VerificationReport& r) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      const BigInt expected = unbordered_bruteforce(k, n, cfg);
      const BigInt actual = unbordered_count(k, n);
      ++r.checks;
      if (expected != actual) {
        r.mismatches.push_back({"n=" + std::to_string(n), expected.str(), actual.str()});
      }
    }
  });
}

/// B(n, t) and B(n) against exhaustive counts, n = 2..n_max.
inline VerificationReport verify_unique_border(unsigned k, std::size_t n_max,
                                               const Config& cfg = {}) {
  return detail::run_report(Subject::unique_border, k, n_max, cfg, [&](VerificationReport& r) {
    for (std::size_t n = 2; n <= n_max; ++n) {
      const UniqueBorderCounts brute = unique_border_bruteforce(k, n, cfg);
      for (std::size_t t = 1; t < n; ++t) {
        const auto it = brute.by_length.find(t);
        const BigInt expected = it == brute.by_length.end() ? 0 : it->second;
        const BigInt actual = unique_border_count_t(k, n, t);
        ++r.checks;
        if (expected != actual) {
          r.mismatches.push_back({detail::params(n, t), expected.str(), actual.str()});
        }
      }
      const BigInt actual_total = unique_border_count(k, n);
      ++r.checks;
      if (BigInt(brute.total) != actual_total) {
        r.mismatches.push_back(
            {"n=" + std::to_string(n) + " total", std::to_string(brute.total), actual_total.str()});
      }
    }
  });
}

/// Closed form f_k(n) against the exhaustive maximum, and the witness word
/// against the closed form, n = 0..n_max.
inline VerificationReport verify_maxwidth(unsigned k, std::size_t n_max, const Config& cfg = {}) {
  return detail::run_report(Subject::maxwidth, k, n_max, cfg, [&](VerificationReport& r) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      const MaxWidth brute = maxwidth_bruteforce(k, n, cfg);
      const std::size_t closed = max_smallest_width(k, n);
      ++r.checks;
      if (brute.width != closed) {
        r.mismatches.push_back(
            {"n=" + std::to_string(n), std::to_string(brute.width), std::to_string(closed)});
      }
      const Word witness = max_width_witness(k, n);
      const std::size_t achieved = n == 0 ? 0 : smallest_width_naive(witness);
      ++r.checks;
      if (witness.size() != n || achieved != closed) {
        r.mismatches.push_back({"n=" + std::to_string(n) + " witness=" + to_digits(witness),
                                std::to_string(closed), std::to_string(achieved)});
      }
    }
  });
}

/// coincide(w) == characterization_holds(w) for every word of length 1..n_max,
/// or against characterization_amended(w) when `amended` is set. At most 32
/// counterexamples per length are listed.
inline VerificationReport theorem5_sweep(unsigned k, std::size_t n_max, const Config& cfg = {},
                                         bool amended = false) {
  const auto rhs = amended ? characterization_amended : characterization_holds;
  return detail::run_report(Subject::theorem5, k, n_max, cfg, [&](VerificationReport& r) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      const auto result =
          detail::word_sweep(k, n, cfg, [rhs](WordView w) { return coincide(w) == rhs(w); });
      r.checks += result.checked;
      r.failures += result.failed;
      for (const auto& w : result.failures) {
        r.mismatches.push_back({"w=" + to_digits(w), coincide(w) ? "true" : "false",
                                rhs(w) ? "true" : "false"});
      }
    }
  });
}

/// Greedy largest width against the maximum over every BP-factorization.
inline VerificationReport verify_bpf_width(unsigned k, std::size_t n_max, const Config& cfg = {}) {
  return detail::run_report(Subject::bpf_width, k, n_max, cfg, [&](VerificationReport& r) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      const auto result = detail::word_sweep(k, n, cfg, [](WordView w) {
        std::size_t best = 0;
        for (const auto& f : all_bpfs(w)) {
          best = std::max(best, f.width);
        }
        return best == largest_bpf(w).width;
      });
      r.checks += result.checked;
      r.failures += result.failed;
      for (const auto& w : result.failures) {
        std::size_t best = 0;
        for (const auto& f : all_bpfs(w)) {
          best = std::max(best, f.width);
        }
        r.mismatches.push_back(
            {"w=" + to_digits(w), std::to_string(best), std::to_string(largest_bpf(w).width)});
      }
    }
  });
}

/// Border-array chain against the direct scan, plus u_n against a count.
inline VerificationReport verify_borders(unsigned k, std::size_t n_max, const Config& cfg = {}) {
  return detail::run_report(Subject::borders, k, n_max, cfg, [&](VerificationReport& r) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      const auto result = detail::word_sweep(
          k, n, cfg, [](WordView w) { return borders(w) == borders_naive(w); });
      r.checks += result.checked;
      r.failures += result.failed;
      for (const auto& w : result.failures) {
        r.mismatches.push_back({"w=" + to_digits(w), "naive chain", "border-array chain"});
      }
    }
    auto counts = verify_unbordered(k, n_max, cfg);
    r.checks += counts.checks;
    for (auto& m : counts.mismatches) {
      r.mismatches.push_back(std::move(m));
    }
  });
}

}  // namespace bpfact::oracle
