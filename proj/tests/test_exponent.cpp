#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <string_view>

#include <fife/exponent.hpp>

using namespace fife;

namespace {

// Independent period oracle: check every candidate against the raw
// definition w[i] == w[i+p].
std::size_t period_by_definition(std::string_view w) {
  for (std::size_t p = 1; p < w.size(); ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < w.size(); ++i)
      if (w[i] != w[i + p]) {
        ok = false;
        break;
      }
    if (ok) return p;
  }
  return w.size();
}

// Independent factor-exponent oracle: every factor, period by definition.
Rational max_factor_exponent_by_definition(std::string_view w) {
  Rational best(1, 1);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t len = 1; i + len <= w.size(); ++len) {
      std::string_view f = w.substr(i, len);
      Rational e(static_cast<long long>(len),
                 static_cast<long long>(period_by_definition(f)));
      if (e > best) best = e;
    }
  return best;
}

std::string random_bits(std::mt19937& rng, std::size_t len) {
  std::uniform_int_distribution<int> bit(0, 1);
  std::string s;
  for (std::size_t i = 0; i < len; ++i)
    s.push_back(static_cast<char>('0' + bit(rng)));
  return s;
}

}  // namespace

TEST_CASE("rational ordering is exact") {
  CHECK(Rational(7, 3) == Rational(14, 6));
  CHECK(Rational(7, 3) > Rational(2, 1));
  CHECK(Rational(7, 3) < Rational(5, 2));
  CHECK(Rational(233, 100) < Rational(7, 3));  // 2.33 < 2.333...
  CHECK(Rational(7, 3).str() == "7/3");
  CHECK(Rational(2, 1).str() == "2/1");
  CHECK(Rational::parse("7/3") == Rational(7, 3));
  CHECK(Rational::parse("2") == Rational(2, 1));
  CHECK_THROWS_AS(Rational::parse("7/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x/3"), Error);
}

TEST_CASE("word exponent on the alphabet-generic route") {
  CHECK(word_exponent(std::string_view("alfalfa")) == Rational(7, 3));
  CHECK(word_exponent(BinaryWord("00")) == Rational(2, 1));
  CHECK(word_exponent(BinaryWord("0110")) == Rational(4, 3));
  CHECK(word_exponent(BinaryWord("0")) == Rational(1, 1));
  CHECK_THROWS_AS(word_exponent(BinaryWord("")), Error);
}

TEST_CASE("smallest period agrees with the defining scan") {
  std::mt19937 rng(7331);
  for (int round = 0; round < 500; ++round) {
    std::string w = random_bits(rng, 1 + rng() % 24);
    CHECK(smallest_period(std::string_view(w)) == period_by_definition(w));
  }
}

TEST_CASE("max factor exponent") {
  CHECK(max_factor_exponent(BinaryWord("01101001")) == Rational(2, 1));
  CHECK(max_factor_exponent(BinaryWord("0")) == Rational(1, 1));
  CHECK(max_factor_exponent(BinaryWord("0010010")) == Rational(7, 3));
  CHECK_THROWS_AS(max_factor_exponent(BinaryWord("")), Error);

  std::mt19937 rng(424242);
  for (int round = 0; round < 200; ++round) {
    std::string w = random_bits(rng, 1 + rng() % 16);
    CHECK(max_factor_exponent(BinaryWord(w)) ==
          max_factor_exponent_by_definition(w));
  }
}

TEST_CASE("longest periodic prefix") {
  PeriodicPrefix p = longest_periodic_prefix(BinaryWord("0010010"), 3);
  CHECK(p.length == 7);
  CHECK(p.exponent == Rational(7, 3));

  p = longest_periodic_prefix(BinaryWord("01"), 1);
  CHECK(p.length == 1);
  CHECK(p.exponent == Rational(1, 1));

  p = longest_periodic_prefix(BinaryWord("001001"), 3);
  CHECK(p.length == 6);
  CHECK(p.exponent == Rational(2, 1));

  CHECK_THROWS_AS(longest_periodic_prefix(BinaryWord("01"), 0), Error);
  CHECK_THROWS_AS(longest_periodic_prefix(BinaryWord("01"), 3), Error);
}
