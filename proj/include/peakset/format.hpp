#pragma once

// Text forms shared by the CLI and the test suites.
//
//   Permutation          "231", or "10 2 1 ..." when any entry exceeds 9
//   MirroredPermutation  "231|645", or "20 18 ... 6 | 15 16 ..." when spaced
//   SignedPermutation    "0 -1 2" (zero-prefixed) or "-1 2"
//   PeakSet              "2,4"; "" is the empty set

#include "peakset/bijections.hpp"
#include "peakset/mirrored.hpp"
#include "peakset/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace peakset {

namespace detail {

inline bool needs_spaces(std::span<const int> w) {
  return std::any_of(w.begin(), w.end(), [](int v) { return v > 9 || v < 0; });
}

inline std::string word_text(std::span<const int> w, bool spaced) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (spaced && i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

inline int parse_int(std::string_view tok) {
  int v = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last)
    throw ArgumentError("not an integer: '" + std::string(tok) + "'");
  return v;
}

inline std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != ',') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

inline std::string to_text(const Permutation& p) {
  return detail::word_text(p.word(), detail::needs_spaces(p.word()));
}

inline std::string to_text(const MirroredPermutation& m) {
  const bool spaced = detail::needs_spaces(m.word().word());
  return detail::word_text(m.first_half(), spaced) + (spaced ? " | " : "|") +
         detail::word_text(m.second_half(), spaced);
}

inline std::string to_text(const SignedPermutation& b) {
  std::string out = b.zero_prefix() ? "0" : "";
  for (int x : b.entries()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

inline std::string to_text(const PeakSet& s) {
  std::string out;
  for (int i : s.indices()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

/// "2,4", "2 4", or "" (empty set).
inline PeakSet parse_peak_set(std::string_view text) {
  std::vector<int> v;
  for (auto tok : detail::split_tokens(text)) v.push_back(detail::parse_int(tok));
  return PeakSet(std::move(v));
}

/// A word of integers: compact digits ("231") or separated by spaces/commas.
inline std::vector<int> parse_word(std::string_view text) {
  const auto toks = detail::split_tokens(text);
  std::vector<int> out;
  if (toks.size() == 1 && toks[0].size() > 1 &&
      std::all_of(toks[0].begin(), toks[0].end(), [](char c) { return c >= '1' && c <= '9'; })) {
    for (char c : toks[0]) out.push_back(c - '0');
    return out;
  }
  for (auto tok : toks) out.push_back(detail::parse_int(tok));
  return out;
}

inline Permutation parse_permutation(std::string_view text) { return Permutation(parse_word(text)); }

/// "132|546" or "20 18 ... | 15 ...". The bar is mandatory.
inline MirroredPermutation parse_mirrored(std::string_view text, MirrorKind kind) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ArgumentError("mirrored permutation needs a '|' between the halves");
  std::vector<int> w = parse_word(text.substr(0, bar));
  const std::vector<int> rest = parse_word(text.substr(bar + 1));
  if (w.size() != rest.size())
    throw MirrorError("halves have different lengths (" + std::to_string(w.size()) + " and " +
                      std::to_string(rest.size()) + ")");
  w.insert(w.end(), rest.begin(), rest.end());
  return validate_mirrored(std::move(w), kind);
}

/// "0 -1 2" (leading 0 marks the zero prefix) or "-1 2".
inline SignedPermutation parse_signed(std::string_view text) {
  std::vector<int> v;
  for (auto tok : detail::split_tokens(text)) v.push_back(detail::parse_int(tok));
  bool zero = false;
  if (!v.empty() && v.front() == 0) {
    zero = true;
    v.erase(v.begin());
  }
  return SignedPermutation(std::move(v), zero);
}

}  // namespace peakset
