#pragma once

// Hatted peak-set counts in types C and D via Pascal-row tail sums, the
// empty-set closed forms, and the tail-sum identity behind them.

#include "peakset/count.hpp"
#include "peakset/peak_partitions.hpp"
#include "peakset/permutation.hpp"

#include <string>
#include <utility>

namespace peakset {

/// Phi(n,k) = sum_{i=k}^{n} C(n,i). k <= 0 gives 2^n, k > n gives 0.
inline Count phi(int n, int k) {
  if (n < 0) throw ArgumentError("phi requires n >= 0");
  Count total = 0;
  for (int i = std::max(k, 0); i <= n; ++i) total += binomial(n, i);
  return total;
}

/// Psi(n,k) = 2^n - Phi(n,k).
inline Count psi(int n, int k) { return pow2(n) - phi(n, k); }

namespace detail {
inline void check_hat_args(int n) {
  if (n < 2) throw ArgumentError("hatted counts require n >= 2");
}
}  // namespace detail

/// Type C. With include_n = false: |P^_C(S;n)|; with include_n = true:
/// |P^_C(S u {n}; n)|. S is a subset of [n-1].
inline Count count_hat_c(const PeakSet& s, int n, bool include_n) {
  detail::check_hat_args(n);
  Count total = 0;
  // k = 1 contributes nothing (no ascent ends at 1) but is kept to match the sum.
  for (int k = 1; k <= n; ++k)
    total += count_ascent_to_k(s, n, k) * (include_n ? psi(n, k) : phi(n, k));
  if (!include_n) total += count_underline(s, n) * pow2(n);
  return total;
}

/// Type D. Ascents to 2k-1 and 2k (n even) or to 2k and 2k+1 (n odd) share a
/// tail sum over row n-1.
inline Count count_hat_d(const PeakSet& s, int n, bool include_n) {
  detail::check_hat_args(n);
  Count total = 0;
  auto tail = [&](int k) { return include_n ? psi(n - 1, k) : phi(n - 1, k); };
  if (n % 2 == 0) {
    for (int k = 1; k <= n / 2; ++k)
      total += (count_ascent_to_k(s, n, 2 * k - 1) + count_ascent_to_k(s, n, 2 * k)) * tail(2 * k - 1);
  } else {
    for (int k = 1; k <= (n - 1) / 2; ++k)
      total += (count_ascent_to_k(s, n, 2 * k + 1) + count_ascent_to_k(s, n, 2 * k)) * tail(2 * k);
  }
  if (!include_n) total += count_underline(s, n) * pow2(n - 1);
  return total;
}

namespace detail {
inline Count exact_div(const Count& num, int den, const char* what) {
  if (num % den != 0) throw std::logic_error(std::string(what) + ": inexact division");
  return num / den;
}
}  // namespace detail

/// (3^n + 1) / 2, n >= 2.
inline Count closed_empty_c(int n) {
  if (n < 2) throw ArgumentError("closed_empty_c requires n >= 2");
  return detail::exact_div(ipow(3, n) + 1, 2, "closed_empty_c");
}

/// 3^m/4 + (-1)^m/4 + 1/2 = (3^m + (-1)^m + 2) / 4, stated for m >= 4.
inline Count closed_empty_d(int m) {
  if (m < 4) throw ArgumentError("closed_empty_d is stated for m >= 4 (got m=" + std::to_string(m) + ")");
  return detail::exact_div(ipow(3, m) + (m % 2 == 0 ? 1 : -1) + 2, 4, "closed_empty_d");
}

/// Both sides of sum_{k=2}^{n+1} 2^{k-2} Phi(n,k-1) + 2^n = 3^n.
inline std::pair<Count, Count> curious_identity(int n) {
  if (n < 2) throw ArgumentError("curious_identity requires n >= 2");
  Count lhs = pow2(n);
  for (int k = 2; k <= n + 1; ++k) lhs += pow2(k - 2) * phi(n, k - 1);
  return {lhs, ipow(3, n)};
}

}  // namespace peakset
