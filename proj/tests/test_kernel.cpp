#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <fife/kernel.hpp>

using namespace fife;

TEST_CASE("the kernel of t is {t, tbar}") {
  auto t = InfiniteWordSpec::thue_morse();
  KernelSummary s = kernel_summary(t, 3, 64);
  CHECK(s.distinct_count == 2);
  REQUIRE(s.representatives.size() == 2);
  CHECK(s.representatives[0].i == 0);
  CHECK(s.representatives[0].j == 0);
  CHECK(s.representatives[0].prefix == thue_morse_prefix(64).str());
  CHECK(s.representatives[1].i == 1);
  CHECK(s.representatives[1].j == 1);
  CHECK(s.representatives[1].prefix == thue_morse_prefix(64, true).str());

  CHECK(kernel_summary(t, 0, 64).distinct_count == 1);
  CHECK_THROWS_AS(kernel_summary(t, 13, 64), Error);
  CHECK_THROWS_AS(kernel_summary(t, 3, 1 << 14), Error);
}

TEST_CASE("kernel rows subsample the stream correctly") {
  auto word = InfiniteWordSpec::decoded(Code::parse("203(0);3"));
  const int d = 4, m = 128;
  KernelSummary s = kernel_summary(word, d, m);
  BinaryWord direct = word.prefix((1u << d) * m);
  std::mt19937 rng(99);
  for (int round = 0; round < 10; ++round) {
    int i = static_cast<int>(rng() % (d + 1));
    unsigned long long j = rng() % (1ull << i);
    std::string row;
    for (int n = 0; n < m; ++n)
      row.push_back(direct[(1ull << i) * n + j]);
    bool found = false;
    for (const KernelElement& e : s.representatives)
      if (e.prefix == row) found = true;
    CHECK(found);
  }
}

TEST_CASE("kernel counts stabilize for ultimately periodic codes") {
  auto word = InfiniteWordSpec::decoded(Code::parse("203(0);3"));
  int at4 = kernel_summary(word, 4, 128).distinct_count;
  int at5 = kernel_summary(word, 5, 128).distinct_count;
  CHECK(at4 == at5);

  AutomaticityReport r = automaticity_report(Code::parse("203(0);3"), 5, 256);
  CHECK(r.automatic);
  CHECK(r.classification == "2-automatic");
  CHECK(r.stabilized);
  CHECK(r.summary.distinct_count <= r.bound);

  r = automaticity_report(Code::parse("(0);1"), 5, 256);
  CHECK(r.summary.distinct_count == 2);
  CHECK(r.bound == 2);
}

TEST_CASE("kernel bound envelope") {
  CHECK(periodic_code_kernel_bound(parse_symbols(""), parse_symbols("0"),
                                   TailMarker::one) == 2);
  long long b203 = periodic_code_kernel_bound(parse_symbols("203"),
                                              parse_symbols("0"),
                                              TailMarker::three);
  CHECK(b203 >= 2);
  long long b10 = periodic_code_kernel_bound(parse_symbols(""),
                                             parse_symbols("10"),
                                             TailMarker::none);
  CHECK(b10 > 0);
  auto w10 = InfiniteWordSpec::decoded(Code::parse("(10)"));
  CHECK(kernel_summary(w10, 5, 256).distinct_count <= b10);

  CHECK_THROWS_AS(periodic_code_kernel_bound(parse_symbols("203"),
                                             parse_symbols("0"),
                                             TailMarker::one),
                  Error);
}

TEST_CASE("kernel counts are monotone in depth and length") {
  auto words = {InfiniteWordSpec::thue_morse(),
                InfiniteWordSpec::decoded(Code::parse("203(0);3")),
                InfiniteWordSpec::decoded(Code::parse("(10)"))};
  for (const auto& w : words) {
    for (int d = 1; d <= 4; ++d) {
      CHECK(kernel_summary(w, d, 64).distinct_count <=
            kernel_summary(w, d + 1, 64).distinct_count);
      CHECK(kernel_summary(w, d, 64).distinct_count <=
            kernel_summary(w, d, 128).distinct_count);
    }
  }
}

TEST_CASE("kernel counts are complement-invariant") {
  Code c = Code::parse("203(0);3");
  auto a = InfiniteWordSpec::decoded(c);
  auto b = InfiniteWordSpec::decoded(complement_code(c));
  CHECK(kernel_summary(a, 4, 128).distinct_count ==
        kernel_summary(b, 4, 128).distinct_count);
  CHECK(kernel_summary(InfiniteWordSpec::thue_morse(), 4, 128).distinct_count ==
        kernel_summary(InfiniteWordSpec::thue_morse(true), 4, 128)
            .distinct_count);
}

TEST_CASE("the growing-run code is accepted and aperiodic in measure") {
  GrowingRunCode gen;
  // 1-based positions 1, 3, 6, 10 carry the symbol 1.
  CHECK(gen(0) == 1);
  CHECK(gen(1) == 0);
  CHECK(gen(2) == 1);
  CHECK(gen(5) == 1);
  CHECK(gen(8) == 0);
  CHECK(gen(9) == 1);

  Symbols prefix;
  for (std::size_t j = 0; j < 40; ++j) prefix.emplace_back(gen(j));
  CHECK(accepts_path(std::span<const PrefixSymbol>(prefix)).accepted);

  VerificationReport r = aperiodicity_evidence(gen, 5, 256, 4);
  INFO(r.note);
  CHECK(r.pass);

  // Negative control: an ultimately periodic code flatlines at 2.
  auto t = InfiniteWordSpec::decoded(Code::parse("(0);1"));
  CHECK(kernel_summary(t, 6, 512).distinct_count == 2);
}

TEST_CASE("automaticity report rejects bad codes") {
  CHECK_THROWS_AS(automaticity_report(Code::parse("203(0);1")), Error);
  CHECK_THROWS_AS(automaticity_report(Code::parse("13")), Error);
}
