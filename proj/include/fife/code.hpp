#pragma once
// The factorization x = p mu(y) with p in {eps, 0, 00, 1, 11} and the
// code sequences it induces: single factorization steps, iterated
// encoding of free words, and decoding of truncated expansions. A code is
// written over the digits 0..4; an ultimately periodic code is
// "head(cycle)" and an all-zero tail carries a marker ";1" (tail 0110...)
// or ";3" (tail 1001...).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "freeness.hpp"
#include "word.hpp"

namespace fife {

// One of the five prefix words: 0 -> eps, 1 -> "0", 2 -> "00",
// 3 -> "1", 4 -> "11".
class PrefixSymbol {
 public:
  constexpr PrefixSymbol() : v_(0) {}
  constexpr explicit PrefixSymbol(int v) : v_(static_cast<std::uint8_t>(v)) {
    if (v < 0 || v > 4) throw Error("parse", "prefix symbol out of range");
  }

  constexpr int value() const noexcept { return v_; }
  char digit() const noexcept { return static_cast<char>('0' + v_); }

  std::string_view word() const noexcept {
    static constexpr std::string_view kWords[5] = {"", "0", "00", "1", "11"};
    return kWords[v_];
  }
  constexpr std::size_t word_size() const noexcept {
    constexpr std::size_t kLen[5] = {0, 1, 2, 1, 2};
    return kLen[v_];
  }

  constexpr bool operator==(const PrefixSymbol&) const = default;
  constexpr auto operator<=>(const PrefixSymbol&) const = default;

 private:
  std::uint8_t v_;
};

using Symbols = std::vector<PrefixSymbol>;

// Complement involution on code symbols: 1 <-> 3, 2 <-> 4, 0 fixed.
constexpr int complement_symbol_value(int v) {
  constexpr int kSwap[5] = {0, 3, 4, 1, 2};
  return kSwap[v];
}

inline Symbols parse_symbols(std::string_view digits) {
  Symbols out;
  out.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '4')
      throw Error("parse", std::string("code: invalid digit '") + c + "'");
    out.emplace_back(c - '0');
  }
  return out;
}

inline std::string symbols_str(std::span<const PrefixSymbol> symbols) {
  std::string out;
  out.reserve(symbols.size());
  for (PrefixSymbol s : symbols) out.push_back(s.digit());
  return out;
}

enum class TailMarker : std::uint8_t { none, one, three };

inline std::string_view marker_word(TailMarker m) {
  return m == TailMarker::one ? std::string_view("0") : std::string_view("1");
}

// Code of a word: finite head, optional cycle repeated forever, and a
// tail marker. An all-zero cycle requires a marker; a cycle with a
// nonzero symbol forbids one; a finite code may carry one to resolve a
// trailing 0.
struct Code {
  Symbols head;
  Symbols cycle;
  TailMarker marker = TailMarker::none;

  bool finite() const noexcept { return cycle.empty(); }

  bool cycle_all_zero() const noexcept {
    for (PrefixSymbol s : cycle)
      if (s.value() != 0) return false;
    return !cycle.empty();
  }

  // 0-based infinite symbol stream; valid for j < head.size() on finite
  // codes.
  PrefixSymbol at(std::size_t j) const {
    if (j < head.size()) return head[j];
    if (cycle.empty())
      throw Error("bounds", "code: symbol index past a finite code");
    return cycle[(j - head.size()) % cycle.size()];
  }

  void validate() const {
    if (!cycle.empty()) {
      if (cycle_all_zero() && marker == TailMarker::none)
        throw Error("ambiguous-tail",
                    "code: all-zero cycle requires tail marker ;1 or ;3");
      if (!cycle_all_zero() && marker != TailMarker::none)
        throw Error("parse", "code: marker is only valid for an all-zero tail");
    }
  }

  std::string str() const {
    std::string out = symbols_str(head);
    if (!cycle.empty()) out += "(" + symbols_str(cycle) + ")";
    if (marker == TailMarker::one) out += ";1";
    if (marker == TailMarker::three) out += ";3";
    return out;
  }

  // Text format: digits, optional "(digits)" cycle, optional ";1"/";3".
  static Code parse(std::string_view text) {
    Code c;
    std::string_view rest = text;
    if (auto semi = rest.find(';'); semi != std::string_view::npos) {
      std::string_view m = rest.substr(semi + 1);
      if (m == "1")
        c.marker = TailMarker::one;
      else if (m == "3")
        c.marker = TailMarker::three;
      else
        throw Error("parse", "code: tail marker must be ;1 or ;3");
      rest = rest.substr(0, semi);
    }
    if (auto open = rest.find('('); open != std::string_view::npos) {
      if (rest.empty() || rest.back() != ')')
        throw Error("parse", "code: unterminated cycle");
      std::string_view cyc = rest.substr(open + 1, rest.size() - open - 2);
      if (cyc.empty()) throw Error("parse", "code: empty cycle");
      c.cycle = parse_symbols(cyc);
      rest = rest.substr(0, open);
    }
    c.head = parse_symbols(rest);
    c.validate();
    return c;
  }

  bool operator==(const Code&) const = default;
};

// Symbol-wise complement of a code (marker swaps with it); decoding the
// result yields the complement word.
inline Code complement_code(const Code& c) {
  Code out;
  for (PrefixSymbol s : c.head)
    out.head.emplace_back(complement_symbol_value(s.value()));
  for (PrefixSymbol s : c.cycle)
    out.cycle.emplace_back(complement_symbol_value(s.value()));
  out.marker = c.marker == TailMarker::one    ? TailMarker::three
               : c.marker == TailMarker::three ? TailMarker::one
                                                : TailMarker::none;
  return out;
}

// C_w(x) = p_{w1} mu(p_{w2} mu(... mu(x)...)).
inline BinaryWord expand(std::span<const PrefixSymbol> w, const BinaryWord& x) {
  BinaryWord out = x;
  for (std::size_t j = w.size(); j-- > 0;) {
    BinaryWord p = BinaryWord(std::string(w[j].word()));
    out = p + mu(out);
  }
  return out;
}

inline BinaryWord expand(std::string_view code_digits, const BinaryWord& x) {
  Symbols w = parse_symbols(code_digits);
  return expand(w, x);
}

// One factorization step candidate: x begins with prefix_word(symbol) and
// the rest splits into mu-blocks whose preimage is the quotient (odd
// leftover letters contribute nothing).
struct FactorizationStep {
  PrefixSymbol symbol;
  BinaryWord quotient;

  bool operator==(const FactorizationStep&) const = default;
};

// All p in {eps, 0, 00, 1, 11} such that p is a prefix of x and every
// complete 2-block of the remainder lies in {01, 10}, in symbol order.
inline std::vector<FactorizationStep> factor_candidates(const BinaryWord& x) {
  std::vector<FactorizationStep> out;
  for (int v = 0; v <= 4; ++v) {
    PrefixSymbol sym(v);
    std::string_view p = sym.word();
    std::string_view bits = x.view();
    if (bits.substr(0, p.size()) != p) continue;
    std::string_view rest = bits.substr(p.size());
    bool ok = true;
    std::string quotient;
    quotient.reserve(rest.size() / 2);
    for (std::size_t i = 0; i + 1 < rest.size(); i += 2) {
      if (rest[i] == rest[i + 1]) {
        ok = false;
        break;
      }
      quotient.push_back(rest[i]);
    }
    if (ok) out.push_back({sym, BinaryWord(std::move(quotient))});
  }
  return out;
}

// A candidate whose remainder ends mid-block has its next letter forced
// (blocks are 01 or 10); the candidate is viable only if appending that
// letter keeps the word free. This is what makes the first five letters
// of a prefix of an infinite free word determine p.
inline bool candidate_viable(const BinaryWord& x, const FactorizationStep& c) {
  std::size_t rem = x.size() - c.symbol.word_size();
  if (rem % 2 == 0) return true;
  BinaryWord forced = x;
  forced.push_back(x[x.size() - 1] == '0' ? '1' : '0');
  return !find_power(forced, seven_thirds(), false).has_value();
}

// The unique factorization step. Prefixes of infinite free words with at
// least 5 letters have exactly one viable candidate; no candidate means x
// cannot be a prefix of any word of the form p mu(y).
inline FactorizationStep factor_step(const BinaryWord& x) {
  if (x.empty()) throw Error("empty-word", "factor_step: empty word");
  auto cands = factor_candidates(x);
  if (cands.size() > 1) {
    std::erase_if(cands, [&](const FactorizationStep& c) {
      return !candidate_viable(x, c);
    });
  }
  if (cands.empty())
    throw Error("not-factorable", "factor_step: no candidate for " + x.str());
  if (cands.size() > 1)
    throw Error("ambiguous-step",
                "factor_step: " + std::to_string(cands.size()) +
                    " candidates for " + x.str() +
                    " (below the 5-letter determination threshold?)");
  return cands.front();
}

struct Encoding {
  Symbols symbols;
  BinaryWord residual;  // final word of length < 5
};

// Iterates factor_step while the current word has at least 5 letters.
// Input must be 7/3-power-free; otherwise throws "not-power-free" with
// the witness in the message.
inline Encoding encode(const BinaryWord& x) {
  if (auto w = find_power(x, seven_thirds(), false)) {
    throw Error("not-power-free",
                "encode: input has forbidden factor " +
                    std::string(x.view().substr(w->pos, w->length)) + "@" +
                    std::to_string(w->pos) + " exp=" + w->exponent().str());
  }
  Encoding enc;
  BinaryWord cur = x;
  while (cur.size() >= 5) {
    FactorizationStep step = factor_step(cur);
    enc.symbols.push_back(step.symbol);
    cur = step.quotient;
  }
  enc.residual = cur;
  return enc;
}

namespace detail {

// Minimal expansion depth whose truncated expansion is guaranteed to
// reach n letters, together with the innermost word. The innermost symbol
// must be the last of a finite code, a nonzero stream symbol, or a
// marker-replaced 0 in an all-zero tail.
struct ExpansionPlan {
  std::size_t depth = 0;        // number of symbols consumed
  std::string innermost;        // word substituted at the innermost level
};

inline unsigned long long guaranteed_length(const Code& c, std::size_t depth,
                                            std::size_t inner_len) {
  unsigned long long total = 0;
  for (std::size_t j = 1; j < depth; ++j) {
    unsigned long long width =
        j - 1 >= 63 ? ~0ULL : (1ULL << (j - 1)) * c.at(j - 1).word_size();
    total += width;
    if (total > (1ULL << 62)) return total;
  }
  if (depth >= 1)
    total += depth - 1 >= 63 ? ~0ULL : (1ULL << (depth - 1)) * inner_len;
  return total;
}

inline ExpansionPlan plan_expansion(const Code& c, std::size_t n) {
  ExpansionPlan plan;
  if (n == 0) return plan;
  if (c.finite()) {
    if (c.head.empty())
      throw Error("code-too-short", "decode: empty code cannot produce letters");
    plan.depth = c.head.size();
    PrefixSymbol last = c.head.back();
    if (last.value() == 0) {
      if (c.marker == TailMarker::none)
        throw Error("ambiguous-tail",
                    "decode: finite code ending in 0 requires a tail marker");
      plan.innermost = std::string(marker_word(c.marker));
    } else {
      plan.innermost = std::string(last.word());
    }
    if (guaranteed_length(c, plan.depth, plan.innermost.size()) < n)
      throw Error("code-too-short",
                  "decode: finite code expands to fewer than " +
                      std::to_string(n) + " letters");
    return plan;
  }
  if (c.cycle_all_zero()) {
    // Everything from z0 on is the symbol 0; the truncation replaces the
    // innermost 0 by the marker letter.
    std::size_t z0 = 0;
    for (std::size_t j = 0; j < c.head.size(); ++j)
      if (c.head[j].value() != 0) z0 = j + 1;
    plan.innermost = std::string(marker_word(c.marker));
    for (std::size_t d = z0 + 1;; ++d) {
      if (guaranteed_length(c, d, 1) >= n) {
        plan.depth = d;
        return plan;
      }
    }
  }
  // Mixed cycle: stop at a nonzero symbol, no replacement.
  for (std::size_t d = 1;; ++d) {
    PrefixSymbol s = c.at(d - 1);
    if (s.value() == 0) continue;
    if (guaranteed_length(c, d, s.word_size()) >= n) {
      plan.depth = d;
      plan.innermost = std::string(s.word());
      return plan;
    }
  }
}

}  // namespace detail

// First n letters of the word the code stands for, by expanding to the
// smallest sufficient depth and truncating.
inline BinaryWord decode(const Code& c, std::size_t n) {
  c.validate();
  if (n == 0) return BinaryWord();
  detail::ExpansionPlan plan = detail::plan_expansion(c, n);
  BinaryWord out = BinaryWord(std::move(plan.innermost));
  for (std::size_t j = plan.depth - 1; j-- > 0;) {
    BinaryWord p = BinaryWord(std::string(c.at(j).word()));
    out = p + mu(out);
  }
  return out.prefix(n);
}

// Decodes a symbol stream given by sym_at(j) (0-based, values 0..4).
// The stream must contain infinitely many nonzero symbols.
template <class Gen>
BinaryWord decode_stream(Gen&& sym_at, std::size_t n) {
  if (n == 0) return BinaryWord();
  std::vector<PrefixSymbol> symbols;
  unsigned long long total = 0;
  std::size_t depth = 0;
  for (std::size_t j = 1;; ++j) {
    PrefixSymbol s(sym_at(j - 1));
    symbols.push_back(s);
    unsigned long long width =
        j - 1 >= 63 ? ~0ULL : (1ULL << (j - 1)) * s.word_size();
    total += width;
    if (s.value() != 0 && total >= n) {
      depth = j;
      break;
    }
  }
  BinaryWord out = BinaryWord(std::string(symbols[depth - 1].word()));
  for (std::size_t j = depth - 1; j-- > 0;) {
    BinaryWord p = BinaryWord(std::string(symbols[j].word()));
    out = p + mu(out);
  }
  return out.prefix(n);
}

// True iff re-encoding the first n decoded letters reproduces a prefix of
// the code's symbol stream. False when the decoded word is not even free.
inline bool roundtrip_check(const Code& c, std::size_t n) {
  BinaryWord w = decode(c, n);
  Encoding enc;
  try {
    enc = encode(w);
  } catch (const Error&) {
    return false;
  }
  for (std::size_t j = 0; j < enc.symbols.size(); ++j) {
    if (c.finite() && j >= c.head.size()) return false;
    if (enc.symbols[j] != c.at(j)) return false;
  }
  return true;
}

// Deterministic producer of prefixes of an infinite word: one of the two
// fixed points of mu, or the word a code stands for.
class InfiniteWordSpec {
 public:
  static InfiniteWordSpec thue_morse(bool complemented = false) {
    InfiniteWordSpec w;
    w.kind_ = complemented ? Kind::tm_complement : Kind::tm;
    return w;
  }
  static InfiniteWordSpec decoded(Code c) {
    c.validate();
    if (c.finite())
      throw Error("code-too-short",
                  "infinite word: finite code denotes a finite word");
    InfiniteWordSpec w;
    w.kind_ = Kind::code;
    w.code_ = std::move(c);
    return w;
  }

  BinaryWord prefix(std::size_t n) const {
    switch (kind_) {
      case Kind::tm:
        return thue_morse_prefix(n, false);
      case Kind::tm_complement:
        return thue_morse_prefix(n, true);
      default:
        return decode(code_, n);
    }
  }

  const Code& code() const { return code_; }
  bool is_decoded_code() const noexcept { return kind_ == Kind::code; }

 private:
  enum class Kind : std::uint8_t { tm, tm_complement, code };
  Kind kind_ = Kind::tm;
  Code code_;
};

}  // namespace fife
