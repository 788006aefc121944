#include <catch2/catch_amalgamated.hpp>

#include <string>

#include <fife/freeness.hpp>
#include <fife/parallel.hpp>
#include <fife/search.hpp>
#include <fife/word.hpp>

using namespace fife;

namespace {

BinaryWord from_bits(unsigned long long bits, int len) {
  std::string s(static_cast<std::size_t>(len), '0');
  for (int i = 0; i < len; ++i)
    if (bits & (1ULL << i)) s[static_cast<std::size_t>(i)] = '1';
  return BinaryWord(std::move(s));
}

}  // namespace

TEST_CASE("freeness spot checks") {
  CHECK_FALSE(is_power_free(BinaryWord("0010010"), Rational(7, 3)));
  CHECK(is_power_free(BinaryWord("0110100110010110"), Rational(7, 3)));
  CHECK(is_power_free(BinaryWord(""), Rational(7, 3)));
  // t is overlap-free: no factor of exponent > 2, but it has squares.
  BinaryWord t = thue_morse_prefix(64);
  CHECK(is_power_free(t, Rational(2, 1), true));
  CHECK_FALSE(is_power_free(t, Rational(2, 1), false));
}

TEST_CASE("witnesses carry the shortest forbidden factor") {
  auto w = find_power(BinaryWord("0010010"), Rational(7, 3), false);
  REQUIRE(w.has_value());
  CHECK(w->pos == 0);
  CHECK(w->period == 3);
  CHECK(w->length == 7);
  CHECK(w->exponent() == Rational(7, 3));

  auto n = find_power_naive(BinaryWord("0010010"), Rational(7, 3), false);
  REQUIRE(n.has_value());
  CHECK(n->pos == w->pos);
  CHECK(n->period == w->period);
  CHECK(n->length == w->length);
}

TEST_CASE("detectors agree exhaustively to length 18") {
  const Rational betas[] = {Rational(2, 1), Rational(7, 3), Rational(5, 2)};
  for (int len = 1; len <= 18; ++len) {
    const unsigned long long total = 1ULL << len;
    const std::size_t chunks = worker_count();
    std::vector<long long> mismatches(chunks, 0);
    parallel_chunks(total, chunks,
                    [&](std::size_t c, std::size_t begin, std::size_t end) {
                      for (unsigned long long bits = begin; bits < end;
                           ++bits) {
                        BinaryWord x = from_bits(bits, len);
                        for (const Rational& beta : betas)
                          for (bool strict : {false, true}) {
                            auto a = find_power(x, beta, strict);
                            auto b = find_power_naive(x, beta, strict);
                            bool same =
                                a.has_value() == b.has_value() &&
                                (!a || (a->pos == b->pos &&
                                        a->period == b->period &&
                                        a->length == b->length));
                            if (!same) ++mismatches[c];
                          }
                      }
                    });
    long long total_mismatch = 0;
    for (long long m : mismatches) total_mismatch += m;
    INFO("length " << len);
    REQUIRE(total_mismatch == 0);
  }
}

TEST_CASE("incremental search agrees with the oracle on acceptance") {
  FreeWordSearch search;
  // Every push decision must match a fresh oracle run on the would-be word.
  std::string w;
  auto dfs = [&](auto&& self, int depth) -> void {
    if (depth == 0) return;
    for (char bit : {'0', '1'}) {
      w.push_back(bit);
      bool oracle_free =
          !find_power_naive(std::string_view(w), Rational(7, 3), false);
      bool pushed = search.push(bit);
      CHECK(pushed == oracle_free);
      if (pushed) {
        self(self, depth - 1);
        search.pop();
      }
      w.pop_back();
    }
  };
  dfs(dfs, 14);
}

TEST_CASE("free word counts for tiny lengths") {
  auto counts = count_free_words_incremental(5);
  REQUIRE(counts.size() == 5);
  CHECK(counts[0] == 2);
  CHECK(counts[1] == 4);
  CHECK(counts[2] == 6);  // 000 and 111 are the only exclusions
  auto oracle = count_free_words_oracle(5);
  CHECK(counts == oracle);
}
