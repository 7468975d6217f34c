#pragma once

// Numeric estimates of lim E_{n,k} and lim P_{n,k}.
//
// Odd lengths admit no even widths, so consecutive terms oscillate; the
// stopping rule compares each parity class against itself:
//   delta(n) = max(|s(n) - s(n-2)|, |s(n-1) - s(n-3)|) < tol.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>

#include "bpfact/counting.hpp"
#include "bpfact/exact.hpp"

namespace bpfact {

struct LimitEstimate {
  ExactRatio exact;        // s(n_used)
  std::string value;       // exact rendered at the requested precision
  std::size_t n_used = 0;
  double last_delta = 0;
  bool converged = false;
};

namespace detail {

inline LimitEstimate estimate_limit(const std::function<ExactRatio(std::size_t)>& term,
                                    std::size_t first_n, double tol, std::size_t n_cap,
                                    unsigned digits) {
  if (!(tol > 0)) {
    throw InvalidArgument("tolerance must be positive");
  }
  if (n_cap < first_n) {
    throw InvalidArgument("n_cap is below the first defined term");
  }
  std::vector<ExactRatio> s;  // s[j] = term(first_n + j)
  LimitEstimate est;
  for (std::size_t n = first_n; n <= n_cap; ++n) {
    s.push_back(term(n));
    est.n_used = n;
    if (s.size() < 4) {
      continue;
    }
    const std::size_t j = s.size() - 1;
    const ExactRatio d_same = abs(s[j] - s[j - 2]);
    const ExactRatio d_other = abs(s[j - 1] - s[j - 3]);
    est.last_delta = to_double(std::max(d_same, d_other));
    if (est.last_delta < tol) {
      est.converged = true;
      break;
    }
  }
  est.exact = s.back();
  est.value = to_decimal(est.exact, digits);
  return est;
}

}  // namespace detail

/// Estimates E_k = lim E_{n,k}.
inline LimitEstimate estimate_E_limit(unsigned k, double tol, std::size_t n_cap,
                                      unsigned digits = 4) {
  require_alphabet(k);
  return detail::estimate_limit([k](std::size_t n) { return expected_width(k, n); }, 1, tol,
                                n_cap, digits);
}

/// Estimates P_k = lim P_{n,k}.
inline LimitEstimate estimate_P_limit(unsigned k, double tol, std::size_t n_cap,
                                      unsigned digits = 4) {
  require_alphabet(k);
  return detail::estimate_limit(
      [k](std::size_t n) { return unique_border_probability(k, n); }, 2, tol, n_cap, digits);
}

}  // namespace bpfact
