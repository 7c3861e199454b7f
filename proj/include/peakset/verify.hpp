#pragma once

// Named invariant suites. Every suite compares a formula route against an
// enumeration route (or a fixed reference table) and records each comparison.

#include "peakset/bijections.hpp"
#include "peakset/closed_forms.hpp"
#include "peakset/count.hpp"
#include "peakset/format.hpp"
#include "peakset/mirrored.hpp"
#include "peakset/oracle.hpp"
#include "peakset/peak_partitions.hpp"
#include "peakset/peak_polynomials.hpp"
#include "peakset/permutation.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace peakset {

struct SuiteResult {
  explicit SuiteResult(std::string suite = {}) : name(std::move(suite)) {}

  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> messages;  // first few failures

  bool ok() const noexcept { return failures == 0; }

  template <typename A, typename B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    ++checks;
    if (got == want) return;
    ++failures;
    if (messages.size() < kMaxMessages) messages.push_back(what + ": got " + str(got) + ", expected " + str(want));
  }

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (cond) return;
    ++failures;
    if (messages.size() < kMaxMessages) messages.push_back(what);
  }

 private:
  static constexpr std::size_t kMaxMessages = 8;
  template <typename T>
  static std::string str(const T& v) {
    if constexpr (std::is_same_v<T, Count>)
      return v.str();
    else if constexpr (std::is_same_v<T, std::string>)
      return v;
    else if constexpr (std::is_same_v<T, PeakSet>)
      return "{" + to_text(v) + "}";
    else
      return std::to_string(v);
  }
};

/// Reference prefixes, offset 0.
namespace fixtures {
inline constexpr std::array<std::uint64_t, 13> kA007051{1, 2, 5, 14, 41, 122, 365, 1094, 3281, 9842, 29525, 88574, 265721};
inline constexpr std::array<std::uint64_t, 12> kA122983{1, 1, 3, 7, 21, 61, 183, 547, 1641, 4921, 14763, 44287};
inline constexpr std::array<std::uint64_t, 13> kA000330{0, 1, 5, 14, 30, 55, 91, 140, 204, 285, 385, 506, 650};
}  // namespace fixtures

namespace detail {

inline std::string at(const PeakSet& s, int n) { return "S={" + to_text(s) + "}, n=" + std::to_string(n); }

inline int clamp_mirrored(int max_n, MirrorKind kind, const EnumerationLimits& limits) {
  return std::min(max_n, kind == MirrorKind::C ? limits.max_c : limits.max_d);
}

}  // namespace detail

inline SuiteResult suite_perm_core(int max_n, const EnumerationLimits& limits = {}) {
  SuiteResult r{"perm-core"};
  for (int n = 1; n <= std::min(max_n, limits.max_sn); ++n) {
    std::uint64_t seen = 0;
    std::vector<int> prev;
    bool ordered = true, admissible = true, flat = true;
    for (const Permutation& p : enumerate_sn(n, limits)) {
      ++seen;
      std::vector<int> w(p.word().begin(), p.word().end());
      if (!prev.empty() && !(prev < w)) ordered = false;
      prev = std::move(w);
      if (!is_admissible(peak_set(p), n)) admissible = false;
      if (flatten(p.word()) != p) flat = false;
    }
    r.expect_eq(Count(seen), factorial(n), "|S_" + std::to_string(n) + "|");
    r.expect(ordered, "S_" + std::to_string(n) + " enumeration is not strictly lexicographic");
    r.expect(admissible, "S_" + std::to_string(n) + " realises an inadmissible peak set");
    r.expect(flat, "flatten is not the identity on S_" + std::to_string(n));
  }
  return r;
}

inline SuiteResult suite_peak_partitions(int max_n, const EnumerationLimits& limits = {}) {
  SuiteResult r{"peak-partitions"};
  for (int n = 1; n <= std::min(max_n, limits.max_sn); ++n) {
    const SnCensus census(n, limits);
    Count total = 0;
    for (const PeakSet& s : admissible_sets(n)) {
      const std::string where = detail::at(s, n);
      r.expect_eq(count_p(s, n), Count(census.count(s)), "count_p " + where);
      total += count_p(s, n);
      if (n < 2) continue;
      r.expect_eq(count_overline(s, n), Count(census.count(s, Ending::any_ascent())), "overline " + where);
      r.expect_eq(count_underline(s, n), Count(census.count(s, Ending::any_descent())), "underline " + where);
      r.expect_eq(count_overline_by_k(s, n), count_overline(s, n), "overline sum over k " + where);
      r.expect_eq(count_underline_by_k(s, n), count_underline(s, n), "underline sum over k " + where);
      for (int k = 1; k <= n; ++k) {
        const std::string wk = where + ", k=" + std::to_string(k);
        r.expect_eq(count_ascent_to_k(s, n, k), Count(census.count(s, Ending::ascent_to(k))), "ascent_to " + wk);
        r.expect_eq(count_descent_to_k(s, n, k), Count(census.count(s, Ending::descent_to(k))), "descent_to " + wk);
      }
    }
    r.expect_eq(total, factorial(n), "sum of |P(S;n)| over admissible S, n=" + std::to_string(n));
    // Sets that are not admissible are never realised.
    for (const auto& [s, c] : census.histogram()) r.expect(is_admissible(s, n), "realised inadmissible " + detail::at(s, n));
  }
  return r;
}

inline SuiteResult suite_peak_polynomials(int max_n, const EnumerationLimits& limits = {}) {
  SuiteResult r{"peak-polynomials"};
  const int span = std::max(max_n, 2);
  for (const PeakSet& s : admissible_sets(span)) {
    const PeakPolynomial p = peak_poly(s);
    r.expect_eq(p.degree(), s.empty() ? 0 : s.max() - 1, "deg p_S for S={" + to_text(s) + "}");
    for (int n = std::max(s.max() + 1, 2); n <= span + 4; ++n)
      r.expect_eq(Count(p(n) * pow2(n - s.size() - 1)), count_p(s, n), "p_S(n) 2^{n-|S|-1} " + detail::at(s, n));
    const PeakPolynomial d = poly_delta(s);
    for (int n = std::max(s.max() + 1, 2); n <= span + 4; ++n)
      r.expect_eq(d(n), count_underline(s, n), "p_delta " + detail::at(s, n));
    for (int k = 2; k <= span; ++k) {
      const PeakPolynomial a = poly_alpha_k(s, k);
      for (int n = std::max({s.max() + 1, k, 2}); n <= span + 3; ++n)
        r.expect_eq(a(n), count_ascent_to_k(s, n, k), "p_alpha(" + std::to_string(k) + ") " + detail::at(s, n));
    }
  }
  // p_alpha(6) for S = {2,4}: coefficients, the value at 8, and the oracle.
  const PeakSet s24{{2, 4}};
  const PeakPolynomial a6 = poly_alpha_k(s24, 6);
  r.expect_eq(a6.base_offset, 6, "p_alpha(6) base offset for {2,4}");
  r.expect(a6.coefficients == std::vector<Count>{16, 64, 80, 32}, "p_alpha(6) coefficients for {2,4} != 16,64,80,32");
  r.expect_eq(a6(8), Count(224), "p_alpha(6)(8) for {2,4}");
  if (limits.max_sn >= 8)
    r.expect_eq(Count(SnCensus(8, limits).count(s24, Ending::ascent_to(6))), Count(224),
                "brute |P({2,4};8)^{/6}|");
  // Scaled by 1/16 the values are the square pyramidal numbers.
  for (int n = 6; n <= 17; ++n) {
    const Count v = a6(n);
    r.expect(v % 16 == 0, "p_alpha(6)(" + std::to_string(n) + ") not divisible by 16");
    r.expect_eq(Count(v / 16), Count(fixtures::kA000330[n - 5]), "p_alpha(6)(n)/16 vs A000330, n=" + std::to_string(n));
  }
  return r;
}

inline SuiteResult suite_mirrored_groups(int max_n, const EnumerationLimits& limits = {}) {
  SuiteResult r{"mirrored-groups"};
  for (MirrorKind kind : {MirrorKind::C, MirrorKind::D}) {
    const std::string g = to_string(kind);
    for (int n = 1; n <= detail::clamp_mirrored(max_n, kind, limits); ++n) {
      const std::string gn = g + "_" + std::to_string(n);
      const auto group = enumerate_mirrored(n, kind, limits);
      const Count order = factorial(n) * pow2(kind == MirrorKind::C ? n : n - 1);
      r.expect_eq(Count(group.size()), order, "|" + gn + "|");
      r.expect(std::is_sorted(group.begin(), group.end()), gn + " enumeration is not lexicographic");

      // Bundles partition the group and keep the base's peak set.
      std::vector<MirroredPermutation> united;
      bool sizes = true, peaks = true;
      for (const PatternBundle& b : bundle_partition(n, kind, limits)) {
        if (b.members.size() != (std::size_t{1} << (kind == MirrorKind::C ? n : n - 1))) sizes = false;
        for (const MirroredPermutation& m : b.members) {
          if (mirrored_peak_set(m, false) != peak_set(b.base)) peaks = false;
          if (flatten(m.first_half()) != b.base) peaks = false;
          united.push_back(m);
        }
      }
      std::sort(united.begin(), united.end());
      r.expect(sizes, gn + " bundle sizes");
      r.expect(peaks, gn + " bundle members do not flatten to the base");
      r.expect(united == group, gn + " bundles are not a partition of the group");

      // Generators keep the group closed.
      bool closed = true;
      std::set<std::vector<int>> words;
      for (const auto& m : group) words.emplace(m.word().word().begin(), m.word().word().end());
      for (const auto& m : group)
        for (int i = 1; i <= n; ++i) {
          if (kind == MirrorKind::D && n == 1) continue;
          const auto img = apply_generator(m, i);
          if (!words.count(std::vector<int>(img.word().word().begin(), img.word().word().end()))) closed = false;
        }
      r.expect(closed, gn + " is not closed under its generators");

      // Plain peak-set counts.
      if (n < 2) continue;
      const MirroredCensus census(n, kind, limits);
      for (const PeakSet& s : admissible_sets(n)) {
        r.expect_eq(count_pc_pd(s, n, kind), Count(census.plain(s)), "|P_" + g + "| " + detail::at(s, n));
        r.expect_eq(count_pc_pd_from_polynomial(s, n, kind), count_pc_pd(s, n, kind),
                    "|P_" + g + "| via p_S " + detail::at(s, n));
      }
    }
  }
  return r;
}

inline SuiteResult suite_bijections(int max_n, const EnumerationLimits& limits = {}) {
  SuiteResult r{"bijections"};
  for (int n = 1; n <= detail::clamp_mirrored(max_n, MirrorKind::C, limits); ++n) {
    const CorrespondenceReport rep = verify_gf_correspondence(n, limits);
    r.expect(rep.bijective(), "G.F is not a bijection C_" + std::to_string(n) + " -> B_" + std::to_string(n));
    r.expect_eq(rep.hatted_mismatches, std::uint64_t{0}, "hatted peak correspondence mismatches, n=" + std::to_string(n));
    r.expect_eq(rep.plain_mismatches, std::uint64_t{0}, "plain peak correspondence mismatches, n=" + std::to_string(n));
  }
  for (MirrorKind kind : {MirrorKind::C, MirrorKind::D}) {
    const ParityKind pk = parity_kind_of(kind);
    for (int n = 1; n <= detail::clamp_mirrored(max_n, kind, limits); ++n) {
      const std::string gn = std::string(to_string(kind)) + "_" + std::to_string(n);
      std::uint64_t domain = 0;
      bool round = true;
      for_each_mirrored_with_peaks(
          n, kind, PeakSet{}, true,
          [&](const MirroredPermutation& m) {
            ++domain;
            try {
              if (theta_map(delta_map(m)) != m) round = false;
            } catch (const std::exception&) {
              round = false;
            }
          },
          limits);
      r.expect(round, "theta(delta(pi)) != pi somewhere in " + gn);
      const auto seqs = all_ternary_sequences(n, pk);
      bool back = true;
      for (const auto& x : seqs) {
        const MirroredPermutation m = theta_map(x);
        if (!mirrored_peak_set(m, true).empty() || delta_map(m) != x) back = false;
      }
      r.expect(back, "delta(theta(x)) != x somewhere in length " + std::to_string(n));
      r.expect_eq(domain, std::uint64_t(seqs.size()), "hatted-peak-free elements of " + gn + " vs sequences");
    }
  }
  const auto c10 = complete_half(std::vector<int>{20, 18, 13, 10, 9, 7, 4, 2, 5, 6}, MirrorKind::C);
  const auto d10 = complete_half(std::vector<int>{20, 18, 13, 11, 9, 7, 4, 2, 5, 6}, MirrorKind::D);
  r.expect_eq(delta_map(c10).letters(), std::string("ACABCCBABB"), "delta of the C_10 example");
  r.expect_eq(delta_map(d10).letters(), std::string("ABABCCBABA"), "delta of the D_10 example");
  r.expect(theta_map(TernarySequence("ACABCCBABB", ParityKind::C)) == c10, "theta of ACABCCBABB");
  r.expect(theta_map(TernarySequence("ABABCCBABA", ParityKind::D)) == d10, "theta of ABABCCBABA");
  return r;
}

inline SuiteResult suite_closed_forms(int max_n, const EnumerationLimits& limits = {}) {
  SuiteResult r{"closed-forms"};
  for (MirrorKind kind : {MirrorKind::C, MirrorKind::D}) {
    const std::string g = to_string(kind);
    for (int n = 2; n <= detail::clamp_mirrored(max_n, kind, limits); ++n) {
      const MirroredCensus census(n, kind, limits);
      for (const PeakSet& s : admissible_sets(n)) {
        auto formula = [&](bool inc) { return kind == MirrorKind::C ? count_hat_c(s, n, inc) : count_hat_d(s, n, inc); };
        r.expect_eq(formula(false), Count(census.hatted(s)), "hatted " + g + " " + detail::at(s, n));
        r.expect_eq(formula(true), Count(census.hatted(s.with(n))), "hatted " + g + " with n, " + detail::at(s, n));
      }
    }
  }
  for (int n = 2; n <= 12; ++n) r.expect_eq(closed_empty_c(n), count_hat_c(PeakSet{}, n, false), "(3^n+1)/2, n=" + std::to_string(n));
  for (int m = 4; m <= 12; ++m)
    r.expect_eq(closed_empty_d(m), count_hat_d(PeakSet{}, m, false), "(3^m+(-1)^m+2)/4, m=" + std::to_string(m));
  for (int n = 2; n <= 64; ++n) {
    const auto [lhs, rhs] = curious_identity(n);
    r.expect_eq(lhs, rhs, "tail-sum identity, n=" + std::to_string(n));
  }
  for (int n = 2; n < static_cast<int>(fixtures::kA007051.size()); ++n)
    r.expect_eq(closed_empty_c(n), Count(fixtures::kA007051[n]), "A007051(" + std::to_string(n) + ")");
  for (int m = 2; m < static_cast<int>(fixtures::kA122983.size()); ++m) {
    r.expect_eq(count_hat_d(PeakSet{}, m, false), Count(fixtures::kA122983[m]), "A122983(" + std::to_string(m) + ")");
    if (m >= 4) r.expect_eq(closed_empty_d(m), Count(fixtures::kA122983[m]), "A122983(" + std::to_string(m) + ")");
  }
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"perm-core",       "peak-partitions", "peak-polynomials",
                                              "mirrored-groups", "bijections",      "closed-forms"};
  return names;
}

/// Runs one named suite, or every suite for "all". Unknown names throw.
inline std::vector<SuiteResult> run_suites(const std::string& name, int max_n, const EnumerationLimits& limits = {}) {
  using Fn = SuiteResult (*)(int, const EnumerationLimits&);
  const std::vector<std::pair<std::string, Fn>> table{
      {"perm-core", suite_perm_core},           {"peak-partitions", suite_peak_partitions},
      {"peak-polynomials", suite_peak_polynomials}, {"mirrored-groups", suite_mirrored_groups},
      {"bijections", suite_bijections},         {"closed-forms", suite_closed_forms}};
  std::vector<SuiteResult> out;
  for (const auto& [n, fn] : table)
    if (name == "all" || name == n) out.push_back(fn(max_n, limits));
  if (out.empty()) throw ArgumentError("unknown suite '" + name + "'");
  return out;
}

}  // namespace peakset
