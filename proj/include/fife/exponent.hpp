#pragma once
// Exact rational exponents and periodicity primitives. The exponent of a
// nonempty word is its length divided by its smallest period; all
// comparisons cross-multiply, no floating point anywhere.

#include <compare>
#include <cstdint>
#include <numeric>
#include <ranges>
#include <string>
#include <vector>

#include "word.hpp"

namespace fife {

// Nonnegative rational in lowest terms, denominator >= 1.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ <= 0 || num_ < 0)
      throw Error("parse", "rational: needs num >= 0, den >= 1");
    long long g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr long long num() const noexcept { return num_; }
  constexpr long long den() const noexcept { return den_; }

  constexpr bool operator==(const Rational&) const = default;
  constexpr std::strong_ordering operator<=>(const Rational& o) const {
    return num_ * o.den_ <=> o.num_ * den_;
  }

  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "p/q" or a bare integer "p".
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    auto to_ll = [](std::string_view s) -> long long {
      if (s.empty()) throw Error("parse", "rational: empty component");
      long long v = 0;
      for (char c : s) {
        if (c < '0' || c > '9') throw Error("parse", "rational: invalid digit");
        v = v * 10 + (c - '0');
        if (v > (1LL << 60)) throw Error("parse", "rational: out of range");
      }
      return v;
    };
    if (slash == std::string_view::npos) return Rational(to_ll(text), 1);
    return Rational(to_ll(text.substr(0, slash)), to_ll(text.substr(slash + 1)));
  }

 private:
  long long num_;
  long long den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.num() << '/' << r.den();
}

// Smallest period of a nonempty word, via the border (failure-function)
// array: the smallest period is n minus the longest proper border.
// Works over any symbol type with equality.
template <std::ranges::random_access_range R>
std::size_t smallest_period(const R& w) {
  const std::size_t n = std::ranges::size(w);
  if (n == 0) throw Error("empty-word", "smallest_period: empty word");
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t b = border[i - 1];
    while (b > 0 && w[i] != w[b]) b = border[b - 1];
    if (w[i] == w[b]) ++b;
    border[i] = b;
  }
  return n - border[n - 1];
}

// exp(w) = |w| / (smallest period of w), as an exact rational.
template <std::ranges::random_access_range R>
Rational word_exponent(const R& w) {
  return Rational(static_cast<long long>(std::ranges::size(w)),
                  static_cast<long long>(smallest_period(w)));
}

inline Rational word_exponent(const BinaryWord& w) {
  return word_exponent(w.view());
}

namespace detail {

// Z-array: z[k] = length of the longest common prefix of w and w[k..].
inline void z_array(std::string_view w, std::vector<std::size_t>& z) {
  const std::size_t n = w.size();
  z.assign(n, 0);
  if (n == 0) return;
  z[0] = n;
  std::size_t l = 0, r = 0;
  for (std::size_t k = 1; k < n; ++k) {
    if (k < r) z[k] = std::min(r - k, z[k - l]);
    while (k + z[k] < n && w[z[k]] == w[k + z[k]]) ++z[k];
    if (k + z[k] > r) {
      l = k;
      r = k + z[k];
    }
  }
}

}  // namespace detail

// Largest exponent over all nonempty factors of w. The p-periodic run
// starting at position i has length p + lcp(w[i..], w[i+p..]), and every
// factor exponent is dominated by one of these runs.
inline Rational max_factor_exponent(const BinaryWord& w) {
  if (w.empty()) throw Error("empty-word", "max_factor_exponent: empty word");
  Rational best(1, 1);
  std::vector<std::size_t> z;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    std::string_view suffix = w.view().substr(i);
    detail::z_array(suffix, z);
    for (std::size_t p = 1; p < suffix.size(); ++p) {
      if (z[p] == 0) continue;
      std::size_t run = p + z[p];
      Rational e(static_cast<long long>(run), static_cast<long long>(p));
      if (e > best) best = e;
    }
  }
  return best;
}

// The longest prefix of w that is q-periodic, together with its exact
// exponent. Any prefix of length <= q is q-periodic by convention, so the
// result length is always at least min(q, |w|).
struct PeriodicPrefix {
  std::size_t period = 0;
  std::size_t length = 0;
  Rational exponent;
};

inline PeriodicPrefix longest_periodic_prefix(const BinaryWord& w,
                                              std::size_t q) {
  if (q == 0 || q > w.size())
    throw Error("bounds", "longest_periodic_prefix: period out of range");
  std::size_t len = q;
  while (len < w.size() && w[len] == w[len - q]) ++len;
  return PeriodicPrefix{q, len,
                        Rational(static_cast<long long>(len),
                                 static_cast<long long>(q))};
}

}  // namespace fife
