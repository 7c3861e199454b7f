#pragma once

// Mirrored permutations: the type C and type D groups realised inside S_{2n}.
//
// A word pi_1 ... pi_n | pi_{n+1} ... pi_{2n} is mirrored when
// pi_{2n-i+1} = 2n - pi_i + 1 for every i. Type D further requires an even
// number of first-half entries exceeding n.

#include "peakset/count.hpp"
#include "peakset/peak_partitions.hpp"
#include "peakset/peak_polynomials.hpp"
#include "peakset/permutation.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace peakset {

enum class MirrorKind { C, D };

inline const char* to_string(MirrorKind k) { return k == MirrorKind::C ? "C" : "D"; }

/// Validation failure for a candidate mirrored permutation. `index()` is the
/// 1-based position of the first violation when the failure is positional.
class MirrorError : public ArgumentError {
 public:
  MirrorError(const std::string& what, std::optional<int> index = std::nullopt)
      : ArgumentError(what), index_(index) {}
  std::optional<int> index() const noexcept { return index_; }

 private:
  std::optional<int> index_;
};

class MirroredPermutation {
 public:
  const Permutation& word() const noexcept { return word_; }
  int half_n() const noexcept { return half_n_; }
  MirrorKind kind() const noexcept { return kind_; }

  /// Value at 1-based position i in 1..2n.
  int operator()(int i) const { return word_(i); }

  std::span<const int> first_half() const { return word_.word().first(half_n_); }
  std::span<const int> second_half() const { return word_.word().subspan(half_n_); }

  /// Number of first-half entries exceeding n.
  int high_count() const {
    return static_cast<int>(std::count_if(first_half().begin(), first_half().end(),
                                          [&](int v) { return v > half_n_; }));
  }

  friend std::strong_ordering operator<=>(const MirroredPermutation& a, const MirroredPermutation& b) {
    if (auto c = a.word_ <=> b.word_; c != 0) return c;
    return a.kind_ <=> b.kind_;
  }
  friend bool operator==(const MirroredPermutation& a, const MirroredPermutation& b) {
    return a.word_ == b.word_ && a.kind_ == b.kind_;
  }

 private:
  MirroredPermutation(Permutation w, int n, MirrorKind k) : word_(std::move(w)), half_n_(n), kind_(k) {}

  Permutation word_;
  int half_n_ = 0;
  MirrorKind kind_ = MirrorKind::C;

  friend MirroredPermutation validate_mirrored(const Permutation& word, MirrorKind kind);
};

/// Checks the mirror law and, for type D, the parity of high first-half entries.
inline MirroredPermutation validate_mirrored(const Permutation& word, MirrorKind kind) {
  const int len = word.size();
  if (len % 2 != 0) throw MirrorError("mirrored permutation must have even length, got " + std::to_string(len));
  const int n = len / 2;
  for (int i = 1; i <= len; ++i) {
    if (word(len - i + 1) != len - word(i) + 1)
      throw MirrorError("mirror law fails at position " + std::to_string(i) + ": pi_" + std::to_string(i) + "=" +
                            std::to_string(word(i)) + " but pi_" + std::to_string(len - i + 1) + "=" +
                            std::to_string(word(len - i + 1)),
                        i);
  }
  MirroredPermutation m(word, n, kind);
  if (kind == MirrorKind::D && m.high_count() % 2 != 0)
    throw MirrorError("type D parity fails: first half has " + std::to_string(m.high_count()) +
                      " entries greater than " + std::to_string(n));
  return m;
}

inline MirroredPermutation validate_mirrored(std::vector<int> word, MirrorKind kind) {
  if (word.size() % 2 != 0)
    throw MirrorError("mirrored permutation must have even length, got " + std::to_string(word.size()));
  return validate_mirrored(Permutation(std::move(word)), kind);
}

/// Fills positions n+1..2n from a first half over {1..2n} by the mirror law.
inline MirroredPermutation complete_half(std::span<const int> first_half, MirrorKind kind) {
  const int n = static_cast<int>(first_half.size());
  if (n < 1) throw MirrorError("first half must be nonempty");
  std::vector<bool> used(2 * n + 1, false);
  for (int i = 0; i < n; ++i) {
    const int v = first_half[i];
    if (v < 1 || v > 2 * n)
      throw MirrorError("entry " + std::to_string(v) + " outside {1.." + std::to_string(2 * n) + "}", i + 1);
    if (used[v]) throw MirrorError("entry " + std::to_string(v) + " repeated", i + 1);
    if (used[2 * n - v + 1])
      throw MirrorError("entries " + std::to_string(v) + " and its mirror " + std::to_string(2 * n - v + 1) +
                            " both present",
                        i + 1);
    used[v] = true;
  }
  std::vector<int> w(2 * n);
  for (int i = 0; i < n; ++i) {
    w[i] = first_half[i];
    w[2 * n - 1 - i] = 2 * n - first_half[i] + 1;
  }
  return validate_mirrored(Permutation(std::move(w)), kind);
}

/// The members of C_n or D_n whose first half flattens to `base`.
struct PatternBundle {
  Permutation base;
  MirrorKind kind = MirrorKind::C;
  std::vector<MirroredPermutation> members;  // lexicographic
};

/// Every subset of base entries is kept, the rest replaced by mirror images,
/// and the resulting n values are laid out in base's relative order. Type D
/// only takes subsets whose complement has even size.
inline PatternBundle pattern_bundle(const Permutation& base, MirrorKind kind) {
  const int n = base.size();
  if (n > 30) throw ArgumentError("pattern_bundle supports n <= 30");
  PatternBundle bundle{base, kind, {}};
  bundle.members.reserve(std::size_t{1} << (kind == MirrorKind::C ? n : n - 1));
  std::vector<int> values(n);
  std::vector<int> half(n);
  for (unsigned long kept = 0; kept < (1ul << n); ++kept) {
    const int mirrored = n - std::popcount(kept);
    if (kind == MirrorKind::D && mirrored % 2 != 0) continue;
    // Bit v-1 of `kept` set means value v of base stays fixed.
    for (int v = 1; v <= n; ++v) values[v - 1] = (kept >> (v - 1)) & 1ul ? v : 2 * n - v + 1;
    std::sort(values.begin(), values.end());
    for (int i = 1; i <= n; ++i) half[i - 1] = values[base(i) - 1];
    bundle.members.push_back(complete_half(half, kind));
  }
  std::sort(bundle.members.begin(), bundle.members.end());
  return bundle;
}

inline void check_mirrored_cap(int n, MirrorKind kind, const EnumerationLimits& limits = {}) {
  detail::check_cap(n, kind == MirrorKind::C ? limits.max_c : limits.max_d, EnumerationLimits::kHardMaxMirrored,
                    kind == MirrorKind::C ? "C_n" : "D_n");
}

/// Visits every element of C_n or D_n once, in lexicographic order of the
/// full 2n-word. The first half determines the element, so a depth-first
/// search over admissible first halves in increasing value order suffices.
template <typename Visitor>
void for_each_mirrored(int n, MirrorKind kind, Visitor&& visit, const EnumerationLimits& limits = {}) {
  if (n < 1) throw ArgumentError("mirrored enumeration requires n >= 1");
  check_mirrored_cap(n, kind, limits);
  std::vector<int> half(n);
  std::vector<bool> used(2 * n + 1, false);
  auto rec = [&](auto&& self, int depth, int high) -> void {
    if (depth == n) {
      if (kind == MirrorKind::D && high % 2 != 0) return;
      visit(complete_half(half, kind));
      return;
    }
    for (int v = 1; v <= 2 * n; ++v) {
      if (used[v] || used[2 * n - v + 1]) continue;
      used[v] = true;
      half[depth] = v;
      self(self, depth + 1, high + (v > n ? 1 : 0));
      used[v] = false;
    }
  };
  rec(rec, 0, 0);
}

/// Visits, in lexicographic order, the elements whose plain (or hatted) peak
/// set is exactly `s`. Prefixes whose settled positions already disagree with
/// `s` are pruned.
template <typename Visitor>
void for_each_mirrored_with_peaks(int n, MirrorKind kind, const PeakSet& s, bool hatted, Visitor&& visit,
                                  const EnumerationLimits& limits = {}) {
  if (n < 1) throw ArgumentError("mirrored enumeration requires n >= 1");
  check_mirrored_cap(n, kind, limits);
  const int last = hatted ? n : n - 1;
  std::vector<int> half(n);
  std::vector<bool> used(2 * n + 1, false);
  auto peak_at = [&](int i, int next) { return half[i - 2] < half[i - 1] && half[i - 1] > next; };
  auto rec = [&](auto&& self, int depth, int high) -> void {
    // Position depth-1 (1-based) is settled once depth entries are placed.
    if (depth >= 3 && depth - 1 <= last && peak_at(depth - 1, half[depth - 1]) != s.contains(depth - 1)) return;
    if (depth == n) {
      if (kind == MirrorKind::D && high % 2 != 0) return;
      if (hatted && n >= 2 && peak_at(n, 2 * n - half[n - 1] + 1) != s.contains(n)) return;
      visit(complete_half(half, kind));
      return;
    }
    for (int v = 1; v <= 2 * n; ++v) {
      if (used[v] || used[2 * n - v + 1]) continue;
      used[v] = true;
      half[depth] = v;
      self(self, depth + 1, high + (v > n ? 1 : 0));
      used[v] = false;
    }
  };
  for (int i : s.indices())
    if (i < 2 || i > last) return;
  rec(rec, 0, 0);
}

inline std::vector<MirroredPermutation> enumerate_mirrored(int n, MirrorKind kind,
                                                           const EnumerationLimits& limits = {}) {
  std::vector<MirroredPermutation> out;
  for_each_mirrored(n, kind, [&](const MirroredPermutation& m) { out.push_back(m); }, limits);
  return out;
}

/// The group as the union of pattern bundles over S_n, one bundle per base in
/// lexicographic order of the base.
inline std::vector<PatternBundle> bundle_partition(int n, MirrorKind kind, const EnumerationLimits& limits = {}) {
  check_mirrored_cap(n, kind, limits);
  std::vector<PatternBundle> out;
  for (const Permutation& base : enumerate_sn(n, limits)) out.push_back(pattern_bundle(base, kind));
  return out;
}

/// Right action of the simple generator s_i, 1 <= i <= n.
inline MirroredPermutation apply_generator(const MirroredPermutation& m, int i) {
  const int n = m.half_n();
  if (i < 1 || i > n)
    throw ArgumentError("generator index " + std::to_string(i) + " outside [1," + std::to_string(n) + "]");
  std::vector<int> w(m.word().word().begin(), m.word().word().end());
  auto swap_pos = [&](int a, int b) { std::swap(w[a - 1], w[b - 1]); };
  if (i < n) {
    swap_pos(i, i + 1);
    swap_pos(2 * n - i, 2 * n - i + 1);
  } else if (m.kind() == MirrorKind::C) {
    swap_pos(n, n + 1);
  } else {
    if (n < 2) throw ArgumentError("type D generator s_n requires n >= 2");
    // Blocks (n-1, n) and (n+1, n+2) trade places.
    swap_pos(n - 1, n + 1);
    swap_pos(n, n + 2);
  }
  return validate_mirrored(Permutation(std::move(w)), m.kind());
}

/// Peaks of the first half, or of the first n+1 entries when `hatted`
/// (which allows a peak at n).
inline PeakSet mirrored_peak_set(const MirroredPermutation& m, bool hatted) {
  const int len = m.half_n() + (hatted ? 1 : 0);
  return peak_set(m.word().word().first(len));
}

/// |P_C(S;n)| = |P(S;n)| 2^n and |P_D(S;n)| = |P(S;n)| 2^{n-1}, by bundles.
inline Count count_pc_pd(const PeakSet& s, int n, MirrorKind kind) {
  return count_p(s, n) * pow2(kind == MirrorKind::C ? n : n - 1);
}

/// The same counts as p(n) 2^{2n-|S|-1} (type C) or 2^{2n-|S|-2} (type D).
inline Count count_pc_pd_from_polynomial(const PeakSet& s, int n, MirrorKind kind) {
  if (!is_admissible(s, n)) return 0;
  const PeakPolynomial p = peak_poly(s);
  return p(n) * pow2(2 * n - s.size() - (kind == MirrorKind::C ? 1 : 2));
}

}  // namespace peakset
