#pragma once
// Binary words over {0,1}, the doubling morphism mu (0 -> 01, 1 -> 10),
// complementation, and prefixes of the two fixed points of mu.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace fife {

// Library-wide error with a short machine-readable code ("parse",
// "odd-length", "not-a-mu-image", "not-factorable", "not-power-free",
// "ambiguous-tail", ...) next to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Finite word over {0,1}, stored as ASCII '0'/'1'.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::string bits) : bits_(std::move(bits)) {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] != '0' && bits_[i] != '1')
        throw Error("parse", "binary word: invalid symbol at position " +
                                 std::to_string(i));
    }
  }

  static BinaryWord parse(std::string_view text) {
    return BinaryWord(std::string(text));
  }

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  char operator[](std::size_t i) const { return bits_[i]; }

  const std::string& str() const noexcept { return bits_; }
  std::string_view view() const noexcept { return bits_; }

  void push_back(char bit) {
    if (bit != '0' && bit != '1') throw Error("parse", "binary word: invalid symbol");
    bits_.push_back(bit);
  }
  void pop_back() { bits_.pop_back(); }

  BinaryWord prefix(std::size_t n) const {
    BinaryWord p;
    p.bits_.assign(bits_, 0, n < bits_.size() ? n : bits_.size());
    return p;
  }

  friend BinaryWord operator+(const BinaryWord& a, const BinaryWord& b) {
    BinaryWord r;
    r.bits_.reserve(a.size() + b.size());
    r.bits_ = a.bits_;
    r.bits_ += b.bits_;
    return r;
  }

  bool operator==(const BinaryWord&) const = default;
  auto operator<=>(const BinaryWord&) const = default;

 private:
  std::string bits_;
};

inline std::ostream& operator<<(std::ostream& os, const BinaryWord& w) {
  return os << w.str();
}

// mu: 0 -> 01, 1 -> 10, applied letterwise. |mu(w)| = 2 |w|.
inline BinaryWord mu(const BinaryWord& w) {
  std::string out;
  out.reserve(2 * w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    out += (w[i] == '0') ? "01" : "10";
  return BinaryWord(std::move(out));
}

// Inverse of mu on its image. Requires even length and every block
// w[2i] w[2i+1] in {01, 10}; otherwise throws "odd-length" or
// "not-a-mu-image" naming the offending block.
inline BinaryWord mu_inverse(const BinaryWord& w) {
  if (w.size() % 2 != 0)
    throw Error("odd-length", "mu_inverse: odd-length input (" +
                                  std::to_string(w.size()) + " letters)");
  std::string out;
  out.reserve(w.size() / 2);
  for (std::size_t i = 0; i + 1 < w.size(); i += 2) {
    if (w[i] == w[i + 1])
      throw Error("not-a-mu-image", "mu_inverse: not-a-mu-image at block " +
                                        std::to_string(i / 2));
    out.push_back(w[i]);  // block 01 came from 0, block 10 from 1
  }
  return BinaryWord(std::move(out));
}

// Bitwise complement (0 <-> 1); an involution.
inline BinaryWord complement(const BinaryWord& w) {
  std::string out(w.str());
  for (char& c : out) c = (c == '0') ? '1' : '0';
  return BinaryWord(std::move(out));
}

// First n letters of t = 0110100110010110... (or of its complement).
// t_i is the parity of the number of 1 bits of i.
inline BinaryWord thue_morse_prefix(std::size_t n, bool complemented = false) {
  std::string out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    int bit = std::popcount(i) & 1;
    if (complemented) bit ^= 1;
    out.push_back(static_cast<char>('0' + bit));
  }
  return BinaryWord(std::move(out));
}

}  // namespace fife
