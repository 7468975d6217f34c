#pragma once

// Exact counts of words by the shape of their borders and factorizations.
//
//   u_n        unbordered words of length n
//   IB(n, t)   words of length n whose largest BP-factorization has width t
//   B(n, t)    words of length n with a unique border, of length t
//
// All three are kept per alphabet size k in a process-wide table that grows
// on demand. Rows are appended under an exclusive lock and never modified
// afterwards, so concurrent callers always observe the same values.

#include <cstddef>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include "bpfact/exact.hpp"

namespace bpfact {

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require_alphabet(unsigned k) {
  if (k < 2) {
    throw InvalidArgument("alphabet size k must be at least 2");
  }
}

class CountTables {
 public:
  explicit CountTables(unsigned k) : k_(k) {
    require_alphabet(k);
    power_.push_back(1);
    unbordered_.push_back(1);
    ib_.push_back({BigInt{1}});
    ub_.push_back({});
  }

  unsigned k() const { return k_; }

  BigInt power(std::size_t n) {
    grow_to(n);
    std::shared_lock lock(mutex_);
    return power_[n];
  }

  BigInt unbordered(std::size_t n) {
    grow_to(n);
    std::shared_lock lock(mutex_);
    return unbordered_[n];
  }

  /// IB(n, t); zero outside 1 <= t <= n except IB(0, 0) = 1.
  BigInt ib(std::size_t n, std::size_t t) {
    grow_to(n);
    std::shared_lock lock(mutex_);
    return t <= n ? ib_[n][t] : BigInt{0};
  }

  /// The whole row IB(n, 0..n).
  std::vector<BigInt> ib_row(std::size_t n) {
    grow_to(n);
    std::shared_lock lock(mutex_);
    return ib_[n];
  }

  /// B(n, t); zero whenever 2t > n or t == 0.
  BigInt unique_border(std::size_t n, std::size_t t) {
    grow_to(n);
    std::shared_lock lock(mutex_);
    return t >= 1 && 2 * t <= n ? ub_[n][t - 1] : BigInt{0};
  }

  /// B(n, 1..floor(n/2)).
  std::vector<BigInt> unique_border_row(std::size_t n) {
    grow_to(n);
    std::shared_lock lock(mutex_);
    return ub_[n];
  }

 private:
  void grow_to(std::size_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < power_.size()) {
        return;
      }
    }
    std::unique_lock lock(mutex_);
    while (power_.size() <= n) {
      append_row();
    }
  }

  // Requires the exclusive lock.
  void append_row() {
    const std::size_t n = power_.size();
    power_.push_back(power_[n - 1] * k_);

    BigInt u = unbordered_[n - 1] * k_;
    if (n % 2 == 0) {
      u -= unbordered_[n / 2];
    }
    unbordered_.push_back(std::move(u));

    ib_.push_back(next_ib_row(n));
    ub_.push_back(next_ub_row(n));
  }

  const BigInt& ib_at(std::size_t n, std::size_t t) const {
    static const BigInt zero{0};
    return t <= n ? ib_[n][t] : zero;
  }

  // Four-case recurrence on the parities of n and t. Only IB(0, 0) = 1 is
  // seeded; IB(n, 1) = u_n and IB(2n, 2) = u_n fall out of the sums.
  std::vector<BigInt> next_ib_row(std::size_t n) const {
    std::vector<BigInt> row(n + 1, BigInt{0});
    const auto& u = unbordered_;
    for (std::size_t t = 1; t <= n; ++t) {
      BigInt sum = 0;
      const bool n_even = n % 2 == 0;
      const bool t_even = t % 2 == 0;
      if (n_even && t_even) {
        for (std::size_t i = 1; i <= (n - t) / 2 + 1; ++i) {
          sum += u[i] * ib_at(n - 2 * i, t - 2);
        }
      } else if (n_even) {
        for (std::size_t i = 1; i <= (n - t + 1) / 2; ++i) {
          sum += u[2 * i] * ib_at(n - 2 * i, t - 1);
        }
      } else if (!t_even) {
        for (std::size_t i = 1; i <= (n - t) / 2 + 1; ++i) {
          sum += u[2 * i - 1] * ib_at(n - 2 * i + 1, t - 1);
        }
      }
      row[t] = std::move(sum);
    }
    return row;
  }

  // B(n, t) = u_t k^(n-2t) - sum_{i=2t}^{floor(n/2)} B(i, t) k^(n-2i)
  //           - [n + t even] B((n+t)/2, t),   for n >= 2t.
  // The last term counts words u v u v u whose second-shortest border
  // u v u overlaps the middle.
  std::vector<BigInt> next_ub_row(std::size_t n) const {
    std::vector<BigInt> row;
    for (std::size_t t = 1; 2 * t <= n; ++t) {
      BigInt value = unbordered_[t] * power_[n - 2 * t];
      for (std::size_t i = 2 * t; i <= n / 2; ++i) {
        value -= ub_at(i, t) * power_[n - 2 * i];
      }
      if ((n + t) % 2 == 0) {
        value -= ub_at((n + t) / 2, t);
      }
      row.push_back(std::move(value));
    }
    return row;
  }

  const BigInt& ub_at(std::size_t n, std::size_t t) const {
    static const BigInt zero{0};
    return 2 * t <= n ? ub_[n][t - 1] : zero;
  }

  unsigned k_;
  mutable std::shared_mutex mutex_;
  std::deque<BigInt> power_;
  std::deque<BigInt> unbordered_;
  std::deque<std::vector<BigInt>> ib_;
  std::deque<std::vector<BigInt>> ub_;
};

/// Process-wide tables for alphabet size k, created once and shared.
inline CountTables& tables_for(unsigned k) {
  require_alphabet(k);
  static std::mutex registry_mutex;
  static std::map<unsigned, std::unique_ptr<CountTables>> registry;
  std::lock_guard lock(registry_mutex);
  auto& slot = registry[k];
  if (!slot) {
    slot = std::make_unique<CountTables>(k);
  }
  return *slot;
}

/// u_n: 1 for n = 0, k u_{n-1} - u_{n/2} for even n > 0, k u_{n-1} for odd n.
inline BigInt unbordered_count(unsigned k, std::size_t n) {
  return tables_for(k).unbordered(n);
}

inline BigInt ib_count(unsigned k, std::size_t n, std::size_t t) {
  return tables_for(k).ib(n, t);
}

/// Count table keyed by (n, t). For the unbordered kind t is always 0.
struct CountTable {
  enum class Kind { unbordered, ib, unique_border };

  unsigned k = 2;
  Kind kind = Kind::ib;
  std::map<std::pair<std::size_t, std::size_t>, BigInt> entries;

  BigInt at(std::size_t n, std::size_t t = 0) const {
    const auto it = entries.find({n, t});
    return it == entries.end() ? BigInt{0} : it->second;
  }
};

struct IndexRange {
  std::size_t first = 0;
  std::size_t last = 0;  // inclusive
};

inline CountTable ib_table(unsigned k, IndexRange rows, IndexRange cols) {
  if (rows.first > rows.last || cols.first > cols.last) {
    throw InvalidArgument("empty range");
  }
  auto& tables = tables_for(k);
  CountTable table{k, CountTable::Kind::ib, {}};
  for (std::size_t n = rows.first; n <= rows.last; ++n) {
    for (std::size_t t = cols.first; t <= cols.last; ++t) {
      table.entries[{n, t}] = tables.ib(n, t);
    }
  }
  return table;
}

inline CountTable unbordered_table(unsigned k, IndexRange rows) {
  if (rows.first > rows.last) {
    throw InvalidArgument("empty range");
  }
  auto& tables = tables_for(k);
  CountTable table{k, CountTable::Kind::unbordered, {}};
  for (std::size_t n = rows.first; n <= rows.last; ++n) {
    table.entries[{n, 0}] = tables.unbordered(n);
  }
  return table;
}

inline CountTable unique_border_table(unsigned k, IndexRange rows, IndexRange cols) {
  if (rows.first > rows.last || cols.first > cols.last) {
    throw InvalidArgument("empty range");
  }
  auto& tables = tables_for(k);
  CountTable table{k, CountTable::Kind::unique_border, {}};
  for (std::size_t n = rows.first; n <= rows.last; ++n) {
    for (std::size_t t = cols.first; t <= cols.last; ++t) {
      table.entries[{n, t}] = tables.unique_border(n, t);
    }
  }
  return table;
}

/// E_{n,k}: mean width of the largest BP-factorization of a uniformly random
/// length-n word.
inline ExactRatio expected_width(unsigned k, std::size_t n) {
  require_alphabet(k);
  if (n < 1) {
    throw InvalidArgument("expected width needs n >= 1");
  }
  auto& tables = tables_for(k);
  const auto row = tables.ib_row(n);
  BigInt weighted = 0;
  for (std::size_t t = 1; t <= n; ++t) {
    weighted += row[t] * t;
  }
  return ExactRatio(weighted, tables.power(n));
}

/// B(n, t): length-n words whose only border has length t.
inline BigInt unique_border_count_t(unsigned k, std::size_t n, std::size_t t) {
  require_alphabet(k);
  if (t < 1 || n <= t) {
    throw InvalidArgument("unique border count needs n > t >= 1");
  }
  return tables_for(k).unique_border(n, t);
}

/// B(n): length-n words with exactly one border.
inline BigInt unique_border_count(unsigned k, std::size_t n) {
  require_alphabet(k);
  if (n < 2) {
    throw InvalidArgument("unique border count needs n >= 2");
  }
  BigInt total = 0;
  for (const auto& v : tables_for(k).unique_border_row(n)) {
    total += v;
  }
  return total;
}

/// P_{n,k} = B(n) / k^n.
inline ExactRatio unique_border_probability(unsigned k, std::size_t n) {
  const BigInt count = unique_border_count(k, n);
  return ExactRatio(count, tables_for(k).power(n));
}

}  // namespace bpfact
