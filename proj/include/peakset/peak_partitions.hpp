#pragma once

// Permutations with a prescribed peak set, split by how they end.
//
// Two independent routes are provided for every cardinality:
//  - enumeration over S_n (enumerate_family / count_family_oracle), and
//  - the max-peak-removal recursions with S1 = S \ {m}, S2 = S1 u {m-1}.
//
// All recursive counters return 0 for sets that are not n-admissible. The
// recursions produce such sets (S = {2,4} gives S2 = {2,3}) and are only
// correct under this convention.

#include "peakset/count.hpp"
#include "peakset/permutation.hpp"

#include <cassert>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

namespace peakset {

enum class EndingKind { Any, AnyAscent, AnyDescent, AscentTo, DescentTo };

/// How a permutation ends: ascent or descent, optionally to a fixed value k.
struct Ending {
  EndingKind kind = EndingKind::Any;
  int value = 0;

  static constexpr Ending any() { return {EndingKind::Any, 0}; }
  static constexpr Ending any_ascent() { return {EndingKind::AnyAscent, 0}; }
  static constexpr Ending any_descent() { return {EndingKind::AnyDescent, 0}; }
  static constexpr Ending ascent_to(int k) { return {EndingKind::AscentTo, k}; }
  static constexpr Ending descent_to(int k) { return {EndingKind::DescentTo, k}; }

  bool matches(const Permutation& p) const {
    const int n = p.size();
    if (kind == EndingKind::Any) return true;
    if (n < 2) return false;
    const bool ascent = p(n - 1) < p(n);
    switch (kind) {
      case EndingKind::AnyAscent: return ascent;
      case EndingKind::AnyDescent: return !ascent;
      case EndingKind::AscentTo: return ascent && p(n) == value;
      case EndingKind::DescentTo: return !ascent && p(n) == value;
      case EndingKind::Any: break;
    }
    return true;
  }

  friend bool operator==(const Ending&, const Ending&) = default;
};

/// P(S;n) restricted by ending.
struct RefinedFamily {
  PeakSet set;
  int n = 1;
  Ending ending;
};

namespace detail {

inline void check_family(const RefinedFamily& f) {
  if (f.n < 1) throw ArgumentError("family requires n >= 1");
  if (f.ending.kind != EndingKind::Any && f.n < 2)
    throw ArgumentError("ascent/descent endings require n >= 2");
  if ((f.ending.kind == EndingKind::AscentTo || f.ending.kind == EndingKind::DescentTo) &&
      (f.ending.value < 1 || f.ending.value > f.n))
    throw ArgumentError("ending value k=" + std::to_string(f.ending.value) + " outside [1," +
                        std::to_string(f.n) + "]");
}

}  // namespace detail

/// Visits the members of the family in lexicographic order.
template <typename Visitor>
void for_each_in_family(const RefinedFamily& f, Visitor&& visit, const EnumerationLimits& limits = {}) {
  detail::check_family(f);
  for (const Permutation& p : enumerate_sn(f.n, limits))
    if (f.ending.matches(p) && peak_set(p) == f.set) visit(p);
}

inline std::vector<Permutation> enumerate_family(const RefinedFamily& f, const EnumerationLimits& limits = {}) {
  std::vector<Permutation> out;
  for_each_in_family(f, [&](const Permutation& p) { out.push_back(p); }, limits);
  return out;
}

/// Cardinality by exhaustion; the brute-force oracle for every counter below.
inline Count count_family_oracle(const RefinedFamily& f, const EnumerationLimits& limits = {}) {
  Count c = 0;
  for_each_in_family(f, [&](const Permutation&) { ++c; }, limits);
  return c;
}

namespace detail {

enum class CountOp { P, Overline, Underline, AscentTo, DescentTo };

/// Process-wide memo shared by all recursive counters. Readers take a shared
/// lock; values are computed outside the lock and inserted idempotently.
class CountMemo {
 public:
  using Key = std::tuple<CountOp, std::vector<int>, int, int>;

  bool lookup(const Key& key, Count& out) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }

  void store(Key key, const Count& value) {
    std::unique_lock lock(mutex_);
    table_.emplace(std::move(key), value);
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Count> table_;
};

inline CountMemo& count_memo() {
  static CountMemo memo;
  return memo;
}

template <typename Compute>
Count memoized(CountOp op, const PeakSet& s, int n, int k, Compute&& compute) {
  CountMemo::Key key{op, std::vector<int>(s.indices().begin(), s.indices().end()), n, k};
  Count value;
  if (count_memo().lookup(key, value)) return value;
  value = compute();
  count_memo().store(std::move(key), value);
  return value;
}

/// The two smaller sets of the recursion. Both have a strictly smaller index
/// sum than s, which is what makes the recursions terminate.
struct Reduction {
  int m;
  PeakSet s1;
  PeakSet s2;
};

inline Reduction reduce(const PeakSet& s) {
  const int m = s.max();
  PeakSet s1 = s.without(m);
  PeakSet s2 = s1.with(m - 1);
  assert(s1.index_sum() < s.index_sum());
  assert(s2.index_sum() < s.index_sum());
  return {m, std::move(s1), std::move(s2)};
}

}  // namespace detail

inline Count count_p(const PeakSet& s, int n);

/// |P(S;n)^{/k}|: peak set S, ending with an ascent to the value k.
inline Count count_ascent_to_k(const PeakSet& s, int n, int k) {
  if (k < 1 || k > n)
    throw ArgumentError("k=" + std::to_string(k) + " outside [1," + std::to_string(n) + "]");
  if (!is_admissible(s, n)) return 0;
  if (s.empty()) return k >= 2 ? pow2(k - 2) : Count(0);
  return detail::memoized(detail::CountOp::AscentTo, s, n, k, [&] {
    const auto [m, s1, s2] = detail::reduce(s);
    const Count head = count_p(s1, m - 1);
    Count total = 0;
    for (int i = 0; i <= k - 2; ++i)
      total += binomial(k - 1, i) * binomial(n - k, m - i - 1) * pow2(k - i - 2);
    total *= head;
    return Count(total - count_ascent_to_k(s1, n, k) - count_ascent_to_k(s2, n, k));
  });
}

/// |P(S;n)_{\k}|: peak set S, ending with a descent to the value k.
inline Count count_descent_to_k(const PeakSet& s, int n, int k) {
  if (k < 1 || k > n)
    throw ArgumentError("k=" + std::to_string(k) + " outside [1," + std::to_string(n) + "]");
  if (n < 2 || !is_admissible(s, n)) return 0;
  // The only peakless word ending in a descent is n (n-1) ... 1.
  if (s.empty()) return k == 1 ? 1 : 0;
  return detail::memoized(detail::CountOp::DescentTo, s, n, k, [&] {
    const auto [m, s1, s2] = detail::reduce(s);
    return Count(binomial(n - k, n - m) * count_p(s1, m - 1) - count_descent_to_k(s1, n, k) -
                 count_descent_to_k(s2, n, k));
  });
}

/// |overline P(S;n)|: peak set S, ending with an ascent.
inline Count count_overline(const PeakSet& s, int n) {
  if (n < 2) throw ArgumentError("count_overline requires n >= 2");
  if (!is_admissible(s, n)) return 0;
  if (s.empty()) return pow2(n - 1) - 1;
  return detail::memoized(detail::CountOp::Overline, s, n, 0, [&] {
    const auto [m, s1, s2] = detail::reduce(s);
    return Count(binomial(n, m - 1) * (pow2(n - m) - 1) * count_p(s1, m - 1) - count_overline(s1, n) -
                 count_overline(s2, n));
  });
}

/// |underline P(S;n)|: peak set S, ending with a descent.
inline Count count_underline(const PeakSet& s, int n) {
  if (n < 2) throw ArgumentError("count_underline requires n >= 2");
  if (!is_admissible(s, n)) return 0;
  if (s.empty()) return 1;
  return detail::memoized(detail::CountOp::Underline, s, n, 0, [&] {
    const auto [m, s1, s2] = detail::reduce(s);
    return Count(binomial(n, m - 1) * count_p(s1, m - 1) - count_underline(s1, n) - count_underline(s2, n));
  });
}

/// Sum of count_ascent_to_k over k = 2..n; agrees with count_overline.
inline Count count_overline_by_k(const PeakSet& s, int n) {
  if (n < 2) throw ArgumentError("count_overline requires n >= 2");
  Count total = 0;
  for (int k = 2; k <= n; ++k) total += count_ascent_to_k(s, n, k);
  return total;
}

/// Sum of count_descent_to_k over k = 1..n-1; agrees with count_underline.
inline Count count_underline_by_k(const PeakSet& s, int n) {
  if (n < 2) throw ArgumentError("count_underline requires n >= 2");
  Count total = 0;
  for (int k = 1; k <= n - 1; ++k) total += count_descent_to_k(s, n, k);
  return total;
}

/// |P(S;n)|.
inline Count count_p(const PeakSet& s, int n) {
  if (n < 1) throw ArgumentError("count_p requires n >= 1");
  if (!is_admissible(s, n)) return 0;
  if (n == 1) return 1;
  if (s.empty()) return pow2(n - 1);
  return detail::memoized(detail::CountOp::P, s, n, 0,
                          [&] { return Count(count_overline(s, n) + count_underline(s, n)); });
}

/// Recursive count for any refined family.
inline Count count_family(const RefinedFamily& f) {
  detail::check_family(f);
  switch (f.ending.kind) {
    case EndingKind::Any: return count_p(f.set, f.n);
    case EndingKind::AnyAscent: return count_overline(f.set, f.n);
    case EndingKind::AnyDescent: return count_underline(f.set, f.n);
    case EndingKind::AscentTo: return count_ascent_to_k(f.set, f.n, f.ending.value);
    case EndingKind::DescentTo: return count_descent_to_k(f.set, f.n, f.ending.value);
  }
  return 0;
}

/// All n-admissible sets, ordered by (max, then lexicographically).
inline std::vector<PeakSet> admissible_sets(int n) {
  std::vector<PeakSet> out;
  const int hi = n - 1;
  // Subsets of {2..hi} with no two consecutive, via bitmask over positions.
  const int width = std::max(0, hi - 1);
  for (unsigned mask = 0; mask < (1u << width); ++mask) {
    if (mask & (mask >> 1)) continue;
    std::vector<int> v;
    for (int b = 0; b < width; ++b)
      if (mask & (1u << b)) v.push_back(b + 2);
    out.emplace_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const PeakSet& a, const PeakSet& b) {
    return std::pair(a.max(), a) < std::pair(b.max(), b);
  });
  return out;
}

}  // namespace peakset
