#pragma once

// Single-pass brute-force histograms. These only use peak_set() and plain
// enumeration, never the recursions, so they serve as the independent side
// of every formula/oracle comparison.

#include "peakset/count.hpp"
#include "peakset/mirrored.hpp"
#include "peakset/peak_partitions.hpp"
#include "peakset/permutation.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace peakset {

/// Peak-set histogram of S_n refined by the final step and final value.
class SnCensus {
 public:
  explicit SnCensus(int n, const EnumerationLimits& limits = {}) : n_(n) {
    for (const Permutation& p : enumerate_sn(n, limits)) {
      Row& row = rows_[peak_set(p)];
      if (row.ascent_to.empty()) {
        row.ascent_to.assign(n + 1, 0);
        row.descent_to.assign(n + 1, 0);
      }
      ++row.total;
      if (n >= 2) {
        if (p(n - 1) < p(n))
          ++row.ascent_to[p(n)];
        else
          ++row.descent_to[p(n)];
      }
    }
  }

  int n() const noexcept { return n_; }

  std::uint64_t count(const PeakSet& s, Ending e = Ending::any()) const {
    auto it = rows_.find(s);
    if (it == rows_.end()) return 0;
    const Row& r = it->second;
    switch (e.kind) {
      case EndingKind::Any: return r.total;
      case EndingKind::AnyAscent: return sum(r.ascent_to);
      case EndingKind::AnyDescent: return sum(r.descent_to);
      case EndingKind::AscentTo: return in_range(e.value) ? r.ascent_to[e.value] : 0;
      case EndingKind::DescentTo: return in_range(e.value) ? r.descent_to[e.value] : 0;
    }
    return 0;
  }

  /// Peak sets that occur, with their counts.
  std::map<PeakSet, std::uint64_t> histogram() const {
    std::map<PeakSet, std::uint64_t> out;
    for (const auto& [s, r] : rows_) out.emplace(s, r.total);
    return out;
  }

 private:
  struct Row {
    std::uint64_t total = 0;
    std::vector<std::uint64_t> ascent_to;
    std::vector<std::uint64_t> descent_to;
  };

  static std::uint64_t sum(const std::vector<std::uint64_t>& v) {
    std::uint64_t t = 0;
    for (auto x : v) t += x;
    return t;
  }
  bool in_range(int k) const { return k >= 1 && k <= n_; }

  int n_;
  std::map<PeakSet, Row> rows_;
};

/// Peak-set histograms of C_n or D_n over the first n entries (plain) and the
/// first n+1 entries (hatted).
class MirroredCensus {
 public:
  MirroredCensus(int n, MirrorKind kind, const EnumerationLimits& limits = {}) : n_(n), kind_(kind) {
    for_each_mirrored(
        n, kind,
        [&](const MirroredPermutation& m) {
          ++elements_;
          ++plain_[mirrored_peak_set(m, false)];
          ++hatted_[mirrored_peak_set(m, true)];
        },
        limits);
  }

  int n() const noexcept { return n_; }
  MirrorKind kind() const noexcept { return kind_; }
  std::uint64_t elements() const noexcept { return elements_; }

  std::uint64_t plain(const PeakSet& s) const { return lookup(plain_, s); }
  std::uint64_t hatted(const PeakSet& s) const { return lookup(hatted_, s); }

  const std::map<PeakSet, std::uint64_t>& plain_histogram() const noexcept { return plain_; }
  const std::map<PeakSet, std::uint64_t>& hatted_histogram() const noexcept { return hatted_; }

 private:
  static std::uint64_t lookup(const std::map<PeakSet, std::uint64_t>& h, const PeakSet& s) {
    auto it = h.find(s);
    return it == h.end() ? 0 : it->second;
  }

  int n_;
  MirrorKind kind_;
  std::uint64_t elements_ = 0;
  std::map<PeakSet, std::uint64_t> plain_;
  std::map<PeakSet, std::uint64_t> hatted_;
};

}  // namespace peakset
