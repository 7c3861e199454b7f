#pragma once

// Bijections between mirrored permutations, signed permutations, and ternary
// sequences.
//
//  map_f  : C_n -> B_n, read off the second half (values > n shift down by n,
//           values <= n shift down by n+1).
//  map_g  : global sign flip on B_n.
//  delta_map / theta_map : mirrored permutations with no peak in the first
//           n+1 entries <-> words over {A,B,C} with parity constraints.

#include "peakset/count.hpp"
#include "peakset/mirrored.hpp"
#include "peakset/permutation.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace peakset {

/// beta_1 ... beta_n over nonzero integers with |beta| a permutation of [n].
/// With `zero_prefix`, peaks are taken on 0 beta_1 ... beta_n.
class SignedPermutation {
 public:
  SignedPermutation() = default;

  explicit SignedPermutation(std::vector<int> entries, bool zero_prefix = true)
      : entries_(std::move(entries)), zero_prefix_(zero_prefix) {
    const int n = size();
    if (n < 1) throw ArgumentError("signed permutation must have length n >= 1");
    std::vector<bool> seen(n + 1, false);
    for (int b : entries_) {
      const int a = b < 0 ? -b : b;
      if (a < 1 || a > n)
        throw ArgumentError("signed entry " + std::to_string(b) + " has |value| outside {1.." + std::to_string(n) + "}");
      if (seen[a]) throw ArgumentError("absolute value " + std::to_string(a) + " repeated");
      seen[a] = true;
    }
  }

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  std::span<const int> entries() const noexcept { return entries_; }
  bool zero_prefix() const noexcept { return zero_prefix_; }

  /// beta_i for 1 <= i <= n; beta_0 = 0.
  int operator()(int i) const { return i == 0 ? 0 : entries_.at(static_cast<std::size_t>(i - 1)); }

  SignedPermutation with_zero_prefix(bool z) const {
    SignedPermutation copy = *this;
    copy.zero_prefix_ = z;
    return copy;
  }

  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> entries_;
  bool zero_prefix_ = true;
};

inline SignedPermutation map_f(const MirroredPermutation& m) {
  const int n = m.half_n();
  std::vector<int> beta(n);
  for (int i = 1; i <= n; ++i) {
    const int v = m(n + i);
    beta[i - 1] = v > n ? v - n : v - n - 1;
  }
  return SignedPermutation(std::move(beta), true);
}

/// Inverse of map_f on signed permutations of length n.
inline MirroredPermutation map_f_inverse(const SignedPermutation& b) {
  const int n = b.size();
  std::vector<int> second(n);
  for (int i = 1; i <= n; ++i) second[i - 1] = b(i) > 0 ? b(i) + n : b(i) + n + 1;
  std::vector<int> w(2 * n);
  for (int i = 0; i < n; ++i) {
    w[n + i] = second[i];
    w[n - 1 - i] = 2 * n - second[i] + 1;
  }
  return validate_mirrored(Permutation(std::move(w)), MirrorKind::C);
}

inline SignedPermutation map_g(const SignedPermutation& b) {
  std::vector<int> flipped(b.entries().begin(), b.entries().end());
  for (int& x : flipped) x = -x;
  return SignedPermutation(std::move(flipped), b.zero_prefix());
}

/// Peaks of beta_1..beta_n, or of 0 beta_1..beta_n when zero-prefixed (index
/// i always refers to beta_i, so a peak at 1 becomes possible).
inline PeakSet signed_peak_set(const SignedPermutation& b) {
  if (!b.zero_prefix()) return peak_set(b.entries());
  std::vector<int> w;
  w.reserve(b.size() + 1);
  w.push_back(0);
  w.insert(w.end(), b.entries().begin(), b.entries().end());
  std::vector<int> shifted;
  const PeakSet raw = peak_set(w);
  for (int p : raw.indices()) shifted.push_back(p - 1);
  return PeakSet(std::move(shifted));
}

/// {n - i + 1 : i in s}.
inline PeakSet reflect_set(const PeakSet& s, int n) {
  std::vector<int> out;
  for (int i : s.indices()) {
    if (i < 1 || i > n)
      throw ArgumentError("index " + std::to_string(i) + " outside [1," + std::to_string(n) + "] for reflection");
    out.push_back(n - i + 1);
  }
  return PeakSet(std::move(out));
}

/// Outcome of the exhaustive G∘F peak-correspondence check on C_n.
struct CorrespondenceReport {
  int n = 0;
  std::uint64_t elements = 0;
  std::uint64_t distinct_images = 0;
  std::uint64_t hatted_mismatches = 0;
  std::uint64_t plain_mismatches = 0;
  std::uint64_t inverse_failures = 0;
  std::vector<std::string> counterexamples;  // first few, human readable
  std::map<PeakSet, std::uint64_t> hatted_counts;
  std::map<PeakSet, std::uint64_t> plain_counts;

  bool bijective() const { return distinct_images == elements && inverse_failures == 0; }
  bool ok() const { return bijective() && hatted_mismatches == 0 && plain_mismatches == 0; }
};

namespace detail {
inline std::string join_ints(std::span<const int> v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}
}  // namespace detail

/// Walks C_n and checks that G∘F is a bijection onto B_n carrying the hatted
/// peak set S of every element to the zero-prefixed signed peak set
/// reflect_set(S, n), and the first-half peak set to the unprefixed one.
inline CorrespondenceReport verify_gf_correspondence(int n, const EnumerationLimits& limits = {}) {
  CorrespondenceReport report;
  report.n = n;
  std::set<std::vector<int>> images;
  constexpr std::size_t kMaxExamples = 5;
  for_each_mirrored(
      n, MirrorKind::C,
      [&](const MirroredPermutation& m) {
        ++report.elements;
        const SignedPermutation b = map_g(map_f(m));
        images.emplace(b.entries().begin(), b.entries().end());
        if (map_f_inverse(map_g(b)) != m) ++report.inverse_failures;

        const PeakSet hatted = mirrored_peak_set(m, true);
        const PeakSet plain = mirrored_peak_set(m, false);
        ++report.hatted_counts[hatted];
        ++report.plain_counts[plain];
        const PeakSet got_hatted = signed_peak_set(b);
        const PeakSet got_plain = signed_peak_set(b.with_zero_prefix(false));
        const bool hat_ok = got_hatted == reflect_set(hatted, n);
        const bool plain_ok = got_plain == reflect_set(plain, n);
        if (!hat_ok) ++report.hatted_mismatches;
        if (!plain_ok) ++report.plain_mismatches;
        if ((!hat_ok || !plain_ok) && report.counterexamples.size() < kMaxExamples)
          report.counterexamples.push_back("pi=" + detail::join_ints(m.word().word()) +
                                           " G(F(pi))=" + detail::join_ints(b.entries()));
      },
      limits);
  report.distinct_images = images.size();
  return report;
}

// ---------------------------------------------------------------------------
// Ternary sequences
// ---------------------------------------------------------------------------

/// Type C: even number of B. Type D: even number of A and of B.
enum class ParityKind { C, D };

class TernarySequence {
 public:
  TernarySequence(std::string letters, ParityKind kind) : letters_(std::move(letters)), kind_(kind) {
    int a = 0, b = 0;
    for (char ch : letters_) {
      if (ch == 'A') ++a;
      else if (ch == 'B') ++b;
      else if (ch != 'C') throw ArgumentError(std::string("ternary letter '") + ch + "' not in {A,B,C}");
    }
    if (b % 2 != 0) throw ArgumentError("ternary sequence " + letters_ + " has an odd number of B");
    if (kind_ == ParityKind::D && a % 2 != 0)
      throw ArgumentError("type D ternary sequence " + letters_ + " has an odd number of A");
  }

  const std::string& letters() const noexcept { return letters_; }
  ParityKind kind() const noexcept { return kind_; }
  int size() const noexcept { return static_cast<int>(letters_.size()); }

  friend bool operator==(const TernarySequence&, const TernarySequence&) = default;

 private:
  std::string letters_;
  ParityKind kind_;
};

inline ParityKind parity_kind_of(MirrorKind k) { return k == MirrorKind::C ? ParityKind::C : ParityKind::D; }

/// Splits the first half of a hatted-peak-free element into
///   A: descending entries > n, B: descending entries <= n, C: ascending
/// entries <= n, with the minimum of B C placed so that |B| is even.
struct ShapeDecomposition {
  std::vector<int> a, b, c;
};

/// Throws ArgumentError when the first n+1 entries have a peak, and
/// std::logic_error when the element is peak-free but not of A B C shape.
inline ShapeDecomposition decompose_shape(const MirroredPermutation& m) {
  if (!mirrored_peak_set(m, true).empty())
    throw ArgumentError("delta_map needs an element with no peak among its first n+1 entries");
  const int n = m.half_n();
  const auto half = m.first_half();
  ShapeDecomposition d;
  int i = 0;
  while (i < n && half[i] > n) d.a.push_back(half[i++]);
  // Descending run of low entries down to the minimum, then ascending.
  std::vector<int> down;
  while (i < n && (down.empty() || half[i] < down.back())) {
    if (half[i] > n) throw std::logic_error("high entry after the low part begins");
    down.push_back(half[i++]);
  }
  std::vector<int> up;
  while (i < n) {
    if (half[i] > n) throw std::logic_error("high entry after the low part begins");
    if (!up.empty() && half[i] < up.back()) throw std::logic_error("low part is not descending then ascending");
    up.push_back(half[i++]);
  }
  if (!std::is_sorted(d.a.begin(), d.a.end(), std::greater<>()))
    throw std::logic_error("high prefix is not descending");
  // `down` ends at the minimum of the low part. Keep it in B only when that
  // makes |B| even.
  if (down.size() % 2 == 0) {
    d.b = std::move(down);
    d.c = std::move(up);
  } else {
    d.b.assign(down.begin(), down.end() - 1);
    d.c.push_back(down.back());
    d.c.insert(d.c.end(), up.begin(), up.end());
  }
  return d;
}

inline TernarySequence delta_map(const MirroredPermutation& m) {
  const int n = m.half_n();
  const ShapeDecomposition d = decompose_shape(m);
  std::string x(n, '?');
  for (int v : d.a) x[2 * n - v] = 'A';  // position 2n - v + 1
  for (int v : d.b) x[v - 1] = 'B';
  for (int v : d.c) x[v - 1] = 'C';
  return TernarySequence(std::move(x), parity_kind_of(m.kind()));
}

inline MirroredPermutation theta_map(const TernarySequence& x) {
  const int n = x.size();
  if (n < 1) throw ArgumentError("theta_map needs a nonempty sequence");
  std::vector<int> half;
  half.reserve(n);
  for (int i = 1; i <= n; ++i)
    if (x.letters()[i - 1] == 'A') half.push_back(2 * n - i + 1);
  for (int i = n; i >= 1; --i)
    if (x.letters()[i - 1] == 'B') half.push_back(i);
  for (int i = 1; i <= n; ++i)
    if (x.letters()[i - 1] == 'C') half.push_back(i);
  return complete_half(half, x.kind() == ParityKind::C ? MirrorKind::C : MirrorKind::D);
}

/// All valid sequences of length n, in lexicographic order.
inline std::vector<TernarySequence> all_ternary_sequences(int n, ParityKind kind) {
  if (n < 0 || n > 16) throw ArgumentError("ternary generation supports 0 <= n <= 16");
  std::vector<TernarySequence> out;
  std::string w(n, 'A');
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    int a = 0, b = 0;
    for (int i = n - 1; i >= 0; --i) {
      w[i] = "ABC"[c % 3];
      a += w[i] == 'A';
      b += w[i] == 'B';
      c /= 3;
    }
    if (b % 2 == 0 && (kind == ParityKind::C || a % 2 == 0)) out.emplace_back(w, kind);
  }
  return out;
}

}  // namespace peakset
