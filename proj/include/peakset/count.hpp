#pragma once

// Exact integer arithmetic and the library's exception types.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace peakset {

/// Cardinalities are arbitrary precision: 2^(2n-|S|-1) leaves 64 bits near n = 35.
using Count = boost::multiprecision::cpp_int;

/// A precondition on an argument was violated.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration was requested above its configured cap.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, int cap)
      : std::runtime_error(what), cap_(cap) {}
  int cap() const noexcept { return cap_; }

 private:
  int cap_;
};

/// 2^e for e >= 0; zero for negative exponents.
inline Count pow2(int e) {
  if (e < 0) return 0;
  Count r = 1;
  r <<= e;
  return r;
}

inline Count ipow(int base, int e) {
  Count r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

/// C(n, k) with the usual convention: 0 unless 0 <= k <= n.
inline Count binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Count r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Generalized C(x, j) = x (x-1) ... (x-j+1) / j! for any integer x and j >= 0.
inline Count binomial_poly(const Count& x, int j) {
  if (j < 0) return 0;
  Count num = 1;
  Count den = 1;
  for (int i = 0; i < j; ++i) {
    num *= x - i;
    den *= i + 1;
  }
  return num / den;
}

inline std::string to_string(const Count& c) { return c.str(); }

}  // namespace peakset
