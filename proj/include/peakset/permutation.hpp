#pragma once

// Permutations of {1..n}, peak sets, flattening, admissibility, and
// lexicographic enumeration of the symmetric group.
//
// All positions and values in the public interface are 1-based.

#include "peakset/count.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace peakset {

/// A bijective word on {1..n}, n >= 1.
class Permutation {
 public:
  Permutation() = default;

  /// Throws ArgumentError unless `word` is a permutation of {1..word.size()}.
  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    if (word_.empty()) throw ArgumentError("permutation must have length n >= 1");
    std::vector<bool> seen(word_.size() + 1, false);
    const int n = static_cast<int>(word_.size());
    for (int v : word_) {
      if (v < 1 || v > n)
        throw ArgumentError("entry " + std::to_string(v) + " outside {1.." + std::to_string(n) + "}");
      if (seen[v]) throw ArgumentError("entry " + std::to_string(v) + " repeated");
      seen[v] = true;
    }
  }

  Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

  static Permutation identity(int n) {
    if (n < 1) throw ArgumentError("identity requires n >= 1");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(unchecked, std::move(w));
  }

  int size() const noexcept { return static_cast<int>(word_.size()); }

  /// The value at 1-based position i.
  int operator()(int i) const { return word_.at(static_cast<std::size_t>(i - 1)); }

  std::span<const int> word() const noexcept { return word_; }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  static constexpr Unchecked unchecked{};
  Permutation(Unchecked, std::vector<int> w) : word_(std::move(w)) {}

  std::vector<int> word_;

  friend class PermutationRange;
  friend Permutation flatten(std::span<const int> word);
};

/// A sorted set of positive indices.
///
/// Peak sets produced by peak_set() are always well formed (every index >= 2
/// and no two consecutive). Arbitrary index sets are still representable
/// because the counting recursions generate inadmissible sets such as {2,3}.
class PeakSet {
 public:
  PeakSet() = default;

  explicit PeakSet(std::vector<int> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
      throw ArgumentError("peak set has a repeated index");
    if (!indices_.empty() && indices_.front() < 1)
      throw ArgumentError("peak set indices must be positive");
  }

  PeakSet(std::initializer_list<int> indices) : PeakSet(std::vector<int>(indices)) {}

  std::span<const int> indices() const noexcept { return indices_; }
  bool empty() const noexcept { return indices_.empty(); }
  int size() const noexcept { return static_cast<int>(indices_.size()); }

  /// Largest index; 0 for the empty set.
  int max() const noexcept { return indices_.empty() ? 0 : indices_.back(); }

  int index_sum() const noexcept { return std::accumulate(indices_.begin(), indices_.end(), 0); }

  bool contains(int i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

  PeakSet with(int i) const {
    if (contains(i)) return *this;
    std::vector<int> v = indices_;
    v.insert(std::upper_bound(v.begin(), v.end(), i), i);
    return PeakSet(std::move(v));
  }

  PeakSet without(int i) const {
    std::vector<int> v;
    v.reserve(indices_.size());
    for (int x : indices_)
      if (x != i) v.push_back(x);
    return PeakSet(std::move(v));
  }

  /// Every index >= 2 and no two consecutive.
  bool is_well_formed() const noexcept {
    for (std::size_t j = 0; j < indices_.size(); ++j) {
      if (indices_[j] < 2) return false;
      if (j > 0 && indices_[j] == indices_[j - 1] + 1) return false;
    }
    return true;
  }

  friend auto operator<=>(const PeakSet&, const PeakSet&) = default;
  friend bool operator==(const PeakSet&, const PeakSet&) = default;

 private:
  std::vector<int> indices_;
};

/// Peaks of any word of pairwise comparable entries: interior positions i
/// (1-based) with w[i-1] < w[i] > w[i+1].
template <typename T>
PeakSet peaks_of(std::span<const T> w) {
  std::vector<int> out;
  for (std::size_t i = 1; i + 1 < w.size(); ++i)
    if (w[i - 1] < w[i] && w[i] > w[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return PeakSet(std::move(out));
}

inline PeakSet peak_set(std::span<const int> w) { return peaks_of<int>(w); }
inline PeakSet peak_set(const Permutation& p) { return peaks_of<int>(p.word()); }

/// The permutation with the same relative order as `word`.
inline Permutation flatten(std::span<const int> word) {
  if (word.empty()) throw ArgumentError("cannot flatten an empty word");
  std::vector<int> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return word[a] < word[b]; });
  std::vector<int> out(word.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && word[order[r]] == word[order[r - 1]])
      throw ArgumentError("cannot flatten a word with repeated entry " + std::to_string(word[order[r]]));
    out[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(Permutation::unchecked, std::move(out));
}

/// True iff some permutation of S_n has peak set exactly `s`.
inline bool is_admissible(const PeakSet& s, int n) {
  if (n < 1) throw ArgumentError("admissibility requires n >= 1");
  if (!s.is_well_formed()) return false;
  return s.empty() || s.max() <= n - 1;
}

/// Caps on exhaustive enumeration. Defaults keep the full test suite fast;
/// the hard ceilings can not be raised.
struct EnumerationLimits {
  static constexpr int kHardMaxSn = 12;
  static constexpr int kHardMaxMirrored = 9;

  int max_sn = 10;
  int max_c = 7;
  int max_d = 8;
};

namespace detail {

inline void check_cap(int n, int cap, int hard, const char* group) {
  const int effective = std::min(cap, hard);
  if (n > effective)
    throw ResourceLimitError("n=" + std::to_string(n) + " exceeds the enumeration cap " +
                                 std::to_string(effective) + " for " + group,
                             effective);
}

}  // namespace detail

inline void check_sn_cap(int n, const EnumerationLimits& limits = {}) {
  detail::check_cap(n, limits.max_sn, EnumerationLimits::kHardMaxSn, "S_n");
}

/// Lexicographic range over S_n.
class PermutationRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation*;
    using reference = const Permutation&;

    iterator() = default;
    explicit iterator(int n) : current_(Permutation::identity(n)), done_(false) {}

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }

    iterator& operator++() {
      done_ = !std::next_permutation(current_.word_.begin(), current_.word_.end());
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    Permutation current_;
    bool done_ = true;
  };

  explicit PermutationRange(int n) : n_(n) {}
  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int n_;
};

/// All n! permutations of {1..n} in lexicographic order.
inline PermutationRange enumerate_sn(int n, const EnumerationLimits& limits = {}) {
  if (n < 1) throw ArgumentError("enumerate_sn requires n >= 1");
  check_sn_cap(n, limits);
  return PermutationRange(n);
}

inline Count factorial(int n) {
  Count r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace peakset
