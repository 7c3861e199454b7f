#pragma once

// Peak polynomials recovered by the method of finite differences.
//
// A polynomial is stored in Newton form about its first sample point n0:
//
//     p(n) = sum_j c_j * C(n - n0, j),
//
// where c_j is the leading entry of the j-th difference row. Integer samples
// give integer coefficients, so no rational arithmetic is involved.

#include "peakset/count.hpp"
#include "peakset/peak_partitions.hpp"
#include "peakset/permutation.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace peakset {

using Rational = boost::multiprecision::cpp_rational;

/// The fit was rejected: samples not consecutive, too few, or the row past
/// the degree hint is not identically zero.
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Sample {
  int n;
  Count value;
};

struct PeakPolynomial {
  std::vector<Count> coefficients;  // c_0 .. c_d, trailing zeros trimmed
  int base_offset = 0;              // n0
  int valid_from = 0;               // smallest n at which the identity is asserted

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients.size()) - 1; }

  bool is_zero() const { return coefficients.empty(); }

  Count operator()(int n) const {
    Count total = 0;
    const Count shift = n - base_offset;
    for (std::size_t j = 0; j < coefficients.size(); ++j)
      total += coefficients[j] * binomial_poly(shift, static_cast<int>(j));
    return total;
  }

  /// Coefficients a_0 .. a_d of p(n) = sum_i a_i n^i. Rational in general.
  std::vector<Rational> monomial_coefficients() const {
    std::vector<Rational> out(coefficients.size(), Rational(0));
    // Expand C(n - n0, j) = prod_{t<j} (n - n0 - t) / j! incrementally.
    std::vector<Rational> basis{Rational(1)};
    Rational fact = 1;
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
      if (j > 0) {
        const Rational root = base_offset + static_cast<int>(j) - 1;
        std::vector<Rational> next(basis.size() + 1, Rational(0));
        for (std::size_t i = 0; i < basis.size(); ++i) {
          next[i + 1] += basis[i];
          next[i] -= basis[i] * root;
        }
        basis = std::move(next);
        fact *= static_cast<int>(j);
      }
      for (std::size_t i = 0; i < basis.size(); ++i) out[i] += Rational(coefficients[j]) * basis[i] / fact;
    }
    return out;
  }

  friend bool operator==(const PeakPolynomial&, const PeakPolynomial&) = default;
};

/// Fits samples at consecutive n0, n0+1, ... with a polynomial of degree at
/// most `degree_hint`. At least degree_hint + 2 samples are required so that
/// the (degree_hint+1)-th difference row has an entry to confirm as zero.
inline PeakPolynomial finite_difference_fit(std::span<const Sample> samples, int degree_hint) {
  if (degree_hint < 0) throw FitError("degree hint must be non-negative");
  if (static_cast<int>(samples.size()) < degree_hint + 2)
    throw FitError("need at least " + std::to_string(degree_hint + 2) + " samples for degree " +
                   std::to_string(degree_hint) + ", got " + std::to_string(samples.size()));
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (samples[i].n != samples[i - 1].n + 1)
      throw FitError("samples are not at consecutive n (" + std::to_string(samples[i - 1].n) + " then " +
                     std::to_string(samples[i].n) + ")");

  std::vector<Count> row;
  row.reserve(samples.size());
  for (const Sample& s : samples) row.push_back(s.value);

  PeakPolynomial poly;
  poly.base_offset = samples.front().n;
  poly.valid_from = samples.front().n;
  for (int d = 0; d <= degree_hint; ++d) {
    poly.coefficients.push_back(row.front());
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
  }
  for (const Count& r : row)
    if (r != 0)
      throw FitError("difference row " + std::to_string(degree_hint + 1) + " is not zero (found " + r.str() +
                     "); degree hint too small or samples inconsistent");
  while (!poly.coefficients.empty() && poly.coefficients.back() == 0) poly.coefficients.pop_back();
  return poly;
}

namespace detail {

inline int poly_degree_for(const PeakSet& s) { return s.empty() ? 0 : s.max() - 1; }

inline void require_admissible_somewhere(const PeakSet& s) {
  if (!s.is_well_formed())
    throw ArgumentError("peak set is not admissible for any n (index below 2 or two consecutive indices)");
}

template <typename F>
PeakPolynomial fit_from(int n0, int degree, F&& value_at) {
  std::vector<Sample> samples;
  for (int n = n0; n <= n0 + degree + 1; ++n) samples.push_back({n, value_at(n)});
  return finite_difference_fit(samples, degree);
}

}  // namespace detail

/// p(n) with |P(S;n)| = p(n) 2^{n-|S|-1}; degree max(S)-1.
inline PeakPolynomial peak_poly(const PeakSet& s) {
  detail::require_admissible_somewhere(s);
  const int degree = detail::poly_degree_for(s);
  const int n0 = std::max(s.max() + 1, 2);
  return detail::fit_from(n0, degree, [&](int n) {
    const Count total = count_p(s, n);
    const Count scale = pow2(n - s.size() - 1);
    if (total % scale != 0)
      throw FitError("|P(S;" + std::to_string(n) + ")| = " + total.str() + " is not divisible by 2^" +
                     std::to_string(n - s.size() - 1));
    return Count(total / scale);
  });
}

/// p_delta(n) = |underline P(S;n)|.
inline PeakPolynomial poly_delta(const PeakSet& s) {
  detail::require_admissible_somewhere(s);
  const int n0 = std::max(s.max() + 1, 2);
  return detail::fit_from(n0, detail::poly_degree_for(s), [&](int n) { return count_underline(s, n); });
}

/// p_alpha(k)(n) = |P(S;n)^{/k}| for n >= max(max(S)+1, k).
inline PeakPolynomial poly_alpha_k(const PeakSet& s, int k) {
  if (k < 2) throw ArgumentError("poly_alpha_k requires k >= 2");
  detail::require_admissible_somewhere(s);
  const int n0 = std::max({s.max() + 1, k, 2});
  return detail::fit_from(n0, detail::poly_degree_for(s), [&](int n) { return count_ascent_to_k(s, n, k); });
}

/// "16*C(n-6,0) + 64*C(n-6,1) + ..."; "0" for the zero polynomial.
inline std::string render(const PeakPolynomial& p) {
  if (p.is_zero()) return "0";
  const std::string var = p.base_offset == 0 ? std::string("n")
                          : p.base_offset > 0 ? "n-" + std::to_string(p.base_offset)
                                              : "n+" + std::to_string(-p.base_offset);
  std::string out;
  for (std::size_t j = 0; j < p.coefficients.size(); ++j) {
    const Count& c = p.coefficients[j];
    if (c == 0) continue;
    const std::string term = Count(abs(c)).str() + "*C(" + var + "," + std::to_string(j) + ")";
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace peakset
