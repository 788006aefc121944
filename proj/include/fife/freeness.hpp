#pragma once
// beta-power detection. A word contains a factor of exponent >= beta (or
// > beta in the strict variant) iff for some start i and period p the
// p-periodic run starting at i reaches ceil-threshold length. Two
// independent detectors are kept side by side: a naive letter-by-letter
// extension scan (the reference oracle used by the tests) and a Z-array
// scan. Both report the same witness: smallest start, then smallest
// period, truncated to the shortest forbidden length.

#include <optional>
#include <string_view>

#include "exponent.hpp"
#include "word.hpp"

namespace fife {

struct PowerWitness {
  std::size_t pos = 0;     // start of the forbidden factor
  std::size_t period = 0;  // its period
  std::size_t length = 0;  // shortest length at which the threshold trips
  Rational exponent() const {
    return Rational(static_cast<long long>(length),
                    static_cast<long long>(period));
  }
};

namespace detail {

// Shortest run length of period p that violates beta-freeness:
// non-strict needs length/p >= beta, strict needs length/p > beta.
inline std::size_t forbidden_length(std::size_t p, const Rational& beta,
                                    bool strict) {
  unsigned long long np = beta.num() * static_cast<unsigned long long>(p);
  unsigned long long d = static_cast<unsigned long long>(beta.den());
  unsigned long long L = strict ? np / d + 1 : (np + d - 1) / d;
  return static_cast<std::size_t>(L);
}

}  // namespace detail

// Reference oracle: for every start i and period p, extend the match
// w[j] == w[j-p] letter by letter. O(n^3) worst case.
inline std::optional<PowerWitness> find_power_naive(std::string_view w,
                                                    const Rational& beta,
                                                    bool strict = false) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 1; ; ++p) {
      std::size_t need = detail::forbidden_length(p, beta, strict);
      if (i + need > n) break;
      std::size_t run = p;
      while (i + run < n && run < need && w[i + run] == w[i + run - p]) ++run;
      if (run >= need) return PowerWitness{i, p, need};
    }
  }
  return std::nullopt;
}

// Z-array detector: one Z-array per suffix gives all run lengths
// p + lcp(w[i..], w[i+p..]) in O(n^2) total.
inline std::optional<PowerWitness> find_power(std::string_view w,
                                              const Rational& beta,
                                              bool strict = false) {
  const std::size_t n = w.size();
  std::vector<std::size_t> z;
  for (std::size_t i = 0; i < n; ++i) {
    std::string_view suffix = w.substr(i);
    detail::z_array(suffix, z);
    for (std::size_t p = 1; ; ++p) {
      std::size_t need = detail::forbidden_length(p, beta, strict);
      if (need > suffix.size()) break;
      if (p + z[p] >= need) return PowerWitness{i, p, need};
    }
  }
  return std::nullopt;
}

inline std::optional<PowerWitness> find_power(const BinaryWord& w,
                                              const Rational& beta,
                                              bool strict = false) {
  return find_power(w.view(), beta, strict);
}

inline std::optional<PowerWitness> find_power_naive(const BinaryWord& w,
                                                    const Rational& beta,
                                                    bool strict = false) {
  return find_power_naive(w.view(), beta, strict);
}

// strict=false: no factor of exponent >= beta (beta-power-free).
// strict=true: no factor of exponent > beta (beta+-power-free).
inline bool is_power_free(const BinaryWord& w, const Rational& beta,
                          bool strict = false) {
  return !find_power(w.view(), beta, strict).has_value();
}

inline bool is_power_free_naive(const BinaryWord& w, const Rational& beta,
                                bool strict = false) {
  return !find_power_naive(w.view(), beta, strict).has_value();
}

constexpr Rational seven_thirds() { return Rational(7, 3); }

}  // namespace fife
