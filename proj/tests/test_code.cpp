#include <catch2/catch_amalgamated.hpp>

#include <string>

#include <fife/code.hpp>
#include <fife/search.hpp>

using namespace fife;

TEST_CASE("code text format round-trips and enforces the marker rules") {
  Code c = Code::parse("203(0);3");
  CHECK(c.head == parse_symbols("203"));
  CHECK(c.cycle == parse_symbols("0"));
  CHECK(c.marker == TailMarker::three);
  CHECK(c.str() == "203(0);3");

  CHECK(Code::parse("(0);1").str() == "(0);1");
  CHECK(Code::parse("13").str() == "13");
  CHECK(Code::parse("2030;3").str() == "2030;3");
  CHECK(Code::parse("(10)").str() == "(10)");

  try {
    Code::parse("203(0)");
    FAIL("all-zero cycle without marker must be rejected");
  } catch (const Error& e) {
    CHECK(e.code() == "ambiguous-tail");
  }
  CHECK_THROWS_AS(Code::parse("(10);1"), Error);
  CHECK_THROWS_AS(Code::parse("5"), Error);
  CHECK_THROWS_AS(Code::parse("20()"), Error);
}

TEST_CASE("factor step candidates") {
  // t(16) = mu(t(8)): the empty prefix works and nothing else does.
  FactorizationStep s = factor_step(BinaryWord("0110100110010110"));
  CHECK(s.symbol.value() == 0);
  CHECK(s.quotient.str() == "01101001");

  s = factor_step(BinaryWord("0010011001"));
  CHECK(s.symbol.value() == 2);
  CHECK(mu(s.quotient).str() == "10011001");
  CHECK(s.quotient.str() == "1010");

  s = factor_step(BinaryWord("1101001"));
  CHECK(s.symbol.value() == 3);
  CHECK(s.quotient.str() == "110");

  // Below 5 letters the candidate set may be bigger.
  auto cands = factor_candidates(BinaryWord("1010"));
  CHECK(cands.size() == 2);
  CHECK(cands[0].symbol.value() == 0);
  CHECK(cands[1].symbol.value() == 3);

  CHECK(factor_candidates(BinaryWord("000011")).empty());
  CHECK_THROWS_AS(factor_step(BinaryWord("000011")), Error);
}

TEST_CASE("forced-completion disambiguates dangling half-blocks") {
  // 00101 admits two raw candidates; the 00-candidate forces the next
  // letter to 0 and 001010 contains 01010, so only p = 0 survives.
  auto cands = factor_candidates(BinaryWord("00101"));
  REQUIRE(cands.size() == 2);
  CHECK_FALSE(is_power_free(BinaryWord("001010"), Rational(7, 3)));
  FactorizationStep s = factor_step(BinaryWord("00101"));
  CHECK(s.symbol.value() == 1);
  CHECK(s.quotient.str() == "00");
}

TEST_CASE("maximal free words exist and have no factorization") {
  // A dead end: free, but both one-letter extensions have a forbidden
  // factor, and no p in P matches. The uniqueness statement is about
  // prefixes of infinite free words, which this is not.
  BinaryWord w("001001100100");
  CHECK(is_power_free(w, Rational(7, 3)));
  CHECK_FALSE(is_power_free(BinaryWord("0010011001000"), Rational(7, 3)));
  CHECK_FALSE(is_power_free(BinaryWord("0010011001001"), Rational(7, 3)));
  CHECK(factor_candidates(w).empty());
}

TEST_CASE("factorization is unique on extendable free words of length 5..14") {
  FreeWordSearch search;
  long long checked = 0;
  search.walk(14, [&](const std::string& w) {
    if (w.size() < 5) return;
    FreeWordSearch probe;
    probe.seed(w);
    if (!probe.extendable(16)) return;
    ++checked;
    BinaryWord x(w);
    auto cands = factor_candidates(x);
    std::erase_if(cands, [&](const FactorizationStep& c) {
      return !candidate_viable(x, c);
    });
    INFO("word " << w);
    REQUIRE(cands.size() == 1);
    CHECK(cands.front() == factor_step(x));
  });
  CHECK(checked > 300);
}

TEST_CASE("encode iterates the factorization") {
  Encoding enc = encode(thue_morse_prefix(32));
  CHECK(symbols_str(enc.symbols) == "000");
  CHECK(enc.residual.str() == "0110");

  enc = encode(BinaryWord("0"));
  CHECK(enc.symbols.empty());
  CHECK(enc.residual.str() == "0");

  enc = encode(decode(Code::parse("203(0);3"), 32));
  CHECK(symbols_str(enc.symbols) == "203");
  CHECK(enc.residual.str() == "100");

  try {
    encode(BinaryWord("0010010"));
    FAIL("non-free input must be rejected");
  } catch (const Error& e) {
    CHECK(e.code() == "not-power-free");
    CHECK(std::string(e.what()).find("0010010@0") != std::string::npos);
  }
}

TEST_CASE("decode expands truncations") {
  CHECK(decode(Code::parse("(0);1"), 16).str() == "0110100110010110");
  CHECK(decode(Code::parse("(0);3"), 4).str() == "1001");
  CHECK(decode(Code::parse("203(0);3"), 10).str() == "0010011001");
  CHECK(decode(Code::parse("(0);1"), 0).str() == "");

  // Finite codes expand to finite words; trailing 0 needs the marker.
  CHECK(decode(Code::parse("2030;3"), 14).str() == "00100110010110");
  try {
    Code c;
    c.head = parse_symbols("2030");
    decode(c, 4);
    FAIL("trailing 0 without marker must be rejected");
  } catch (const Error& e) {
    CHECK(e.code() == "ambiguous-tail");
  }
  try {
    decode(Code::parse("13"), 100);
    FAIL("finite codes cannot produce arbitrarily long prefixes");
  } catch (const Error& e) {
    CHECK(e.code() == "code-too-short");
  }
}

TEST_CASE("decoded prefixes are consistent") {
  const char* codes[] = {"(0);1", "(0);3", "203(0);3", "13(0);1",
                         "(10)",  "(34020)", "2(030402)"};
  for (const char* text : codes) {
    Code c = Code::parse(text);
    BinaryWord big = decode(c, 257);
    for (std::size_t n : {0u, 1u, 2u, 31u, 64u, 100u, 256u}) {
      INFO("code " << text << " n " << n);
      CHECK(decode(c, n).view() == big.view().substr(0, n));
    }
  }
}

TEST_CASE("decoding the complement code gives the complement word") {
  const char* codes[] = {"(0);1", "203(0);3", "13(0);1", "(10)", "2(030402)"};
  for (const char* text : codes) {
    Code c = Code::parse(text);
    CHECK(decode(complement_code(c), 128) == complement(decode(c, 128)));
  }
}

TEST_CASE("roundtrip checks") {
  CHECK(roundtrip_check(Code::parse("13(0);1"), 64));
  CHECK(roundtrip_check(Code::parse("(0);1"), 32));
  // A code beginning 400... decodes to a word with a 7/3-power, so
  // re-encoding fails.
  CHECK_FALSE(roundtrip_check(Code::parse("4(0);1"), 32));
}

TEST_CASE("expansion of a code word over an input") {
  CHECK(expand("21", BinaryWord("1")).str() == "00011001");
  CHECK(expand("", BinaryWord("01")).str() == "01");
  CHECK(expand("0", BinaryWord("0")).str() == "01");
}

TEST_CASE("infinite word specs produce consistent prefixes") {
  auto t = InfiniteWordSpec::thue_morse();
  CHECK(t.prefix(16) == thue_morse_prefix(16));
  auto least = InfiniteWordSpec::decoded(Code::parse("203(0);3"));
  CHECK(least.prefix(10).str() == "0010011001");
  CHECK_THROWS_AS(InfiniteWordSpec::decoded(Code::parse("13")), Error);
}
