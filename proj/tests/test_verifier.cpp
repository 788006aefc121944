#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <set>

#include <fife/verifier.hpp>

using namespace fife;

TEST_CASE("the claim database is the frozen figure inventory") {
  const auto& db = claim_database();
  int equalities = 0, empties = 0, others = 0;
  std::set<std::string> ids;
  for (const Claim& c : db) {
    CHECK(ids.insert(c.id).second);  // no duplicates
    if (c.kind == ClaimKind::equality) ++equalities;
    else if (c.kind == ClaimKind::emptiness) ++empties;
    else ++others;
  }
  CHECK(equalities == 31);
  CHECK(empties == 30);
  CHECK(others == 7);
  CHECK(db.size() == 68);

  CHECK(ids.count("eq-0=eps"));
  CHECK(ids.count("eq-10=eps"));
  CHECK(ids.count("eq-30=eps"));
  CHECK(ids.count("eq-2030=310"));
  CHECK(ids.count("eq-4010=130"));
  CHECK(ids.count("empty-14"));
  CHECK(ids.count("empty-32"));
  CHECK(ids.count("empty-200"));
  CHECK(ids.count("empty-400"));
  CHECK(ids.count("empty-2031"));
  CHECK(ids.count("empty-4013"));
  CHECK(ids.count("table-figure1"));
  CHECK(ids.count("automaton-soundness"));
  CHECK(ids.count("automaton-completeness"));
}

TEST_CASE("emptiness claims find early forbidden factors") {
  VerificationReport r = verify_emptiness("21", 8, 64);
  CHECK(r.pass);
  CHECK(r.examined == 256);
  CHECK(r.bound <= 8);  // expansions start 000

  r = verify_emptiness("14", 8, 64);
  CHECK(r.pass);
  CHECK(r.bound <= 8);  // the factor 01010 sits at the front

  r = verify_emptiness("200", 8, 64);
  CHECK(r.pass);
  CHECK(r.bound <= 7);  // 000 or 0010010

  std::string line = report_line(r);
  CHECK(line.find("CLAIM empty-200 PASS") == 0);
}

TEST_CASE("equality claims agree under the oracle") {
  CHECK(verify_equality("10", "", 10).pass);
  CHECK(verify_equality("110", "3", 10).pass);
  CHECK(verify_equality("2030", "310", 9).pass);
  VerificationReport r = verify_equality("0", "", 10);
  CHECK(r.pass);
  CHECK(r.examined == 1024);
  CHECK(r.substantive > 0);
}

TEST_CASE("prefix exponent observation") {
  VerificationReport r = verify_star(8);
  CHECK(r.pass);
  CHECK(r.substantive > 0);
  // The length-6 prefix 001001 is an exact square.
  CHECK(word_exponent(BinaryWord("001001")) == Rational(2, 1));
}

TEST_CASE("lemma suites at reduced bounds") {
  CHECK(verify_lemma_squares(9).pass);
  CHECK(verify_lemma_freeness(10).pass);
  CHECK(verify_lemma_periodic_prefix(9).pass);
}

TEST_CASE("table cross-check against the claim database and the file") {
  VerificationReport r = verify_table_against_figure1(FIFE_DATA_FILE);
  CHECK(r.pass);
  CHECK(r.examined == 75);  // 15 states x 5 symbols
  CHECK(r.bound == 45);

  // Corrupting one edge must be detected.
  namespace fs = std::filesystem;
  fs::path tmp = fs::temp_directory_path() / "fife_corrupt_table.txt";
  {
    std::ifstream in(FIFE_DATA_FILE);
    std::ofstream out(tmp);
    std::string line;
    bool corrupted = false;
    while (std::getline(in, line)) {
      if (!corrupted && line == "203 0 310") {
        out << "203 0 130\n";
        corrupted = true;
        continue;
      }
      out << line << '\n';
    }
    REQUIRE(corrupted);
  }
  VerificationReport bad = verify_table_against_figure1(tmp.string());
  CHECK_FALSE(bad.pass);
  CHECK(bad.witness.has_value());
  fs::remove(tmp);

  VerificationReport missing = verify_table_against_figure1("/nonexistent");
  CHECK_FALSE(missing.pass);
}

TEST_CASE("bounded automaton soundness and completeness") {
  VerificationReport r = verify_automaton_soundness(4, 128);
  CHECK(r.pass);
  CHECK(r.examined > 50);

  r = verify_automaton_completeness(12, 10);
  CHECK(r.pass);
  CHECK(r.examined > 0);
  CHECK(r.substantive > 0);
}

TEST_CASE("the quick profile runs the whole database green") {
  VerifyConfig cfg = quick_profile();
  cfg.table_path = FIFE_DATA_FILE;
  auto reports = run_all(cfg);
  REQUIRE(reports.size() == claim_database().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    INFO(report_line(reports[i]));
    CHECK(reports[i].pass);
    CHECK(reports[i].claim_id == claim_database()[i].id);
  }
}
