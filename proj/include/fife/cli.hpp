#pragma once
// Command-line surface. Every command is deterministic (identical inputs
// give byte-identical output) and follows one exit-code contract:
// 0 success/true, 1 semantic failure (not free, claim failed, mismatch),
// 2 usage or parse error. --format records emits one JSON object per
// line carrying the same facts plus effort counters.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fife.hpp"

namespace fife::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitSemantic = 1;
inline constexpr int kExitUsage = 2;

struct Output {
  std::ostream& out;
  bool records = false;

  void plain(const std::string& line) {
    if (!records) out << line << '\n';
  }
  void record(const json& j) {
    if (records) out << j.dump() << '\n';
  }
};

namespace detail {

inline json report_json(const VerificationReport& r) {
  json j{{"claim", r.claim_id},
         {"status", r.pass ? "PASS" : "FAIL"},
         {"examined", r.examined},
         {"bound", r.bound},
         {"substantive", r.substantive},
         {"note", r.note}};
  if (r.witness)
    j["witness"] = {{"word", r.witness->word}, {"pos", r.witness->pos}};
  return j;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Toolkit for infinite binary 7/3-power-free words: exact "
               "exponents, code encode/decode, the 15-state automaton, "
               "claim verification, and 2-kernels"};
  app.require_subcommand(1);
  std::string format = "plain";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "records"}));

  // check <word> [beta] [--strict]
  auto* check = app.add_subcommand("check", "Test a word for power-freeness");
  std::string check_word, check_beta = "7/3";
  bool check_strict = false;
  check->add_option("word", check_word, "Binary word")->required();
  check->add_option("beta", check_beta, "Exponent threshold p/q");
  check->add_flag("--strict", check_strict,
                  "Forbid exponents > beta instead of >= beta");

  // exponent <word> [--max-factor]
  auto* exponent = app.add_subcommand("exponent", "Exact exponent of a word");
  std::string exp_word;
  bool exp_factors = false;
  exponent->add_option("word", exp_word, "Binary word")->required();
  exponent->add_flag("--max-factor", exp_factors,
                     "Maximum exponent over all factors");

  // encode <word>
  auto* enc_cmd = app.add_subcommand("encode", "Factorization code of a word");
  std::string enc_word;
  enc_cmd->add_option("word", enc_word, "7/3-power-free binary word")
      ->required();

  // decode <code> <n>
  auto* dec_cmd = app.add_subcommand("decode", "First n letters of a code");
  std::string dec_code;
  long long dec_n = 0;
  dec_cmd->add_option("code", dec_code, "Code, e.g. 203(0);3")->required();
  dec_cmd->add_option("n", dec_n, "Number of letters")
      ->required()
      ->check(CLI::Range(0LL, 1LL << 20));

  // enumerate --len K [--count-only]
  auto* enum_cmd = app.add_subcommand("enumerate", "Accepted length-k codes");
  int enum_len = 0;
  bool enum_count_only = false;
  enum_cmd->add_option("--len", enum_len, "Path length")
      ->required()
      ->check(CLI::Range(0, 14));
  enum_cmd->add_flag("--count-only", enum_count_only,
                     "Print only the path count");

  // count --len N
  auto* count_cmd =
      app.add_subcommand("count", "Free-word counts by two methods");
  int count_len = 0;
  count_cmd->add_option("--len", count_len, "Maximum length")
      ->required()
      ->check(CLI::Range(1, 26));

  // least --len N [--horizon H]
  auto* least_cmd =
      app.add_subcommand("least", "Lexicographically least free word");
  long long least_len = 0;
  int least_horizon = 16;
  least_cmd->add_option("--len", least_len, "Prefix length")
      ->required()
      ->check(CLI::Range(1LL, 1LL << 20));
  least_cmd->add_option("--horizon", least_horizon,
                        "Extendability horizon for the greedy route")
      ->check(CLI::Range(1, 64));

  // kernel <t|tbar|code|aperiodic> [--depth D --cmplen M --threshold T]
  auto* kernel_cmd = app.add_subcommand("kernel", "2-kernel summary");
  std::string kernel_word;
  int kernel_depth = 5, kernel_cmplen = 256, kernel_threshold = 8;
  kernel_cmd
      ->add_option("word", kernel_word,
                   "t, tbar, a code, or 'aperiodic' for the growing-run code")
      ->required();
  kernel_cmd->add_option("--depth", kernel_depth, "Kernel depth")
      ->check(CLI::Range(2, kKernelMaxDepth));
  kernel_cmd->add_option("--cmplen", kernel_cmplen, "Comparison length")
      ->check(CLI::Range(1, kKernelMaxCmpLen));
  kernel_cmd->add_option("--threshold", kernel_threshold,
                         "Growth threshold for the aperiodic report");

  // verify [--profile quick|full] [--table PATH]
  auto* verify_cmd = app.add_subcommand("verify", "Run the claim database");
  std::string verify_profile = "quick";
  std::string verify_table = "data/fife_transitions.txt";
  verify_cmd->add_option("--profile", verify_profile, "Bound profile")
      ->check(CLI::IsMember({"quick", "full"}));
  verify_cmd->add_option("--table", verify_table, "Transition table file");

  // witness
  auto* witness_cmd =
      app.add_subcommand("witness", "Check the uncountability cycle witnesses");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Output o{out, format == "records"};
  try {
    if (*check) {
      Rational beta = Rational::parse(check_beta);
      if (beta <= Rational(1, 1))
        throw Error("parse", "check: beta must exceed 1");
      BinaryWord w = BinaryWord::parse(check_word);
      auto hit = find_power(w, beta, check_strict);
      if (!hit) {
        o.plain("FREE");
        o.record({{"cmd", "check"}, {"word", check_word}, {"free", true},
                  {"beta", beta.str()}, {"strict", check_strict}});
        return kExitOk;
      }
      std::string factor(w.view().substr(hit->pos, hit->length));
      o.plain("NOT-FREE witness=" + factor + "@" + std::to_string(hit->pos) +
              " exp=" + hit->exponent().str());
      o.record({{"cmd", "check"}, {"word", check_word}, {"free", false},
                {"beta", beta.str()}, {"strict", check_strict},
                {"witness", {{"factor", factor}, {"pos", hit->pos},
                             {"period", hit->period},
                             {"exponent", hit->exponent().str()}}}});
      return kExitSemantic;
    }

    if (*exponent) {
      BinaryWord w = BinaryWord::parse(exp_word);
      Rational e = exp_factors ? max_factor_exponent(w) : word_exponent(w);
      o.plain(e.str());
      o.record({{"cmd", "exponent"}, {"word", exp_word},
                {"max_factor", exp_factors}, {"exponent", e.str()}});
      return kExitOk;
    }

    if (*enc_cmd) {
      BinaryWord w = BinaryWord::parse(enc_word);
      Encoding enc;
      try {
        enc = encode(w);
      } catch (const Error& e) {
        if (e.code() == "not-power-free" || e.code() == "not-factorable") {
          o.plain(std::string("NOT-ENCODABLE ") + e.what());
          o.record({{"cmd", "encode"}, {"word", enc_word},
                    {"error", e.code()}, {"detail", e.what()}});
          return kExitSemantic;
        }
        throw;
      }
      o.plain("symbols=" + symbols_str(enc.symbols) +
              " residual=" + enc.residual.str());
      o.record({{"cmd", "encode"}, {"word", enc_word},
                {"symbols", symbols_str(enc.symbols)},
                {"residual", enc.residual.str()}});
      return kExitOk;
    }

    if (*dec_cmd) {
      Code c = Code::parse(dec_code);
      BinaryWord w = decode(c, static_cast<std::size_t>(dec_n));
      o.plain(w.str());
      o.record({{"cmd", "decode"}, {"code", dec_code}, {"n", dec_n},
                {"word", w.str()}});
      return kExitOk;
    }

    if (*enum_cmd) {
      unsigned long long n = count_paths(enum_len);
      if (enum_count_only) {
        o.plain(std::to_string(n));
      } else {
        auto codes = enumerate_codes(enum_len);
        if (codes.size() != n)
          throw Error("dual-mismatch",
                      "enumerate: path count disagrees with the table product");
        for (const Symbols& s : codes) o.plain(symbols_str(s));
      }
      o.record({{"cmd", "enumerate"}, {"len", enum_len}, {"count", n}});
      return kExitOk;
    }

    if (*count_cmd) {
      auto by_oracle = count_free_words_oracle(count_len);
      auto by_runs = count_free_words_incremental(count_len);
      bool agree = by_oracle == by_runs;
      for (int l = 1; l <= count_len; ++l) {
        std::string line = std::to_string(l) + " " +
                           std::to_string(by_runs[static_cast<std::size_t>(l - 1)]);
        if (!agree &&
            by_oracle[static_cast<std::size_t>(l - 1)] !=
                by_runs[static_cast<std::size_t>(l - 1)])
          line += " MISMATCH oracle=" +
                  std::to_string(by_oracle[static_cast<std::size_t>(l - 1)]);
        o.plain(line);
        o.record({{"cmd", "count"}, {"len", l},
                  {"count", by_runs[static_cast<std::size_t>(l - 1)]},
                  {"oracle", by_oracle[static_cast<std::size_t>(l - 1)]},
                  {"agree", by_oracle[static_cast<std::size_t>(l - 1)] ==
                                by_runs[static_cast<std::size_t>(l - 1)]}});
      }
      return agree ? kExitOk : kExitSemantic;
    }

    if (*least_cmd) {
      BinaryWord w = least_word(static_cast<std::size_t>(least_len),
                                least_horizon);
      o.plain(w.str());
      o.record({{"cmd", "least"}, {"len", least_len},
                {"horizon", least_horizon}, {"word", w.str()}});
      return kExitOk;
    }

    if (*kernel_cmd) {
      if (kernel_word == "aperiodic") {
        GrowingRunCode gen;
        VerificationReport r = aperiodicity_evidence(gen, kernel_depth,
                                                     kernel_cmplen,
                                                     kernel_threshold);
        o.plain("CLASS aperiodic-evidence " + r.note + " " +
                (r.pass ? "PASS" : "FAIL"));
        o.record(detail::report_json(r));
        return r.pass ? kExitOk : kExitSemantic;
      }
      KernelSummary s;
      json extra;
      if (kernel_word == "t" || kernel_word == "tbar") {
        auto w = InfiniteWordSpec::thue_morse(kernel_word == "tbar");
        s = kernel_summary(w, kernel_depth, kernel_cmplen);
      } else {
        Code c = Code::parse(kernel_word);
        AutomaticityReport r =
            automaticity_report(c, kernel_depth, kernel_cmplen);
        s = r.summary;
        extra = {{"classification", r.classification},
                 {"bound", r.bound},
                 {"stabilized", r.stabilized}};
      }
      o.plain("KERNEL depth=" + std::to_string(s.depth) +
              " cmplen=" + std::to_string(s.cmp_len) +
              " distinct=" + std::to_string(s.distinct_count));
      for (const KernelElement& e : s.representatives)
        o.plain("REP " + std::to_string(e.i) + " " + std::to_string(e.j));
      if (!extra.is_null() && !o.records) {
        o.plain("CLASS " + extra["classification"].get<std::string>() +
                " bound=" + std::to_string(extra["bound"].get<long long>()) +
                " stabilized=" +
                (extra["stabilized"].get<bool>() ? "yes" : "no"));
      }
      json j{{"cmd", "kernel"}, {"word", kernel_word}, {"depth", s.depth},
             {"cmplen", s.cmp_len}, {"distinct", s.distinct_count}};
      if (!extra.is_null()) j["automaticity"] = extra;
      o.record(j);
      return kExitOk;
    }

    if (*verify_cmd) {
      VerifyConfig cfg =
          verify_profile == "full" ? full_profile() : quick_profile();
      cfg.table_path = verify_table;
      bool all_pass = true;
      for (const VerificationReport& r : run_all(cfg)) {
        o.plain(report_line(r));
        o.record(detail::report_json(r));
        if (!r.pass) all_pass = false;
      }
      return all_pass ? kExitOk : kExitSemantic;
    }

    if (*witness_cmd) {
      VerificationReport r = verify_cycle_witnesses();
      o.plain(report_line(r));
      o.record(detail::report_json(r));
      return r.pass ? kExitOk : kExitSemantic;
    }
  } catch (const Error& e) {
    err << "error [" << e.code() << "]: " << e.what() << '\n';
    bool usage = e.code() == "parse" || e.code() == "bounds" ||
                 e.code() == "ambiguous-tail" || e.code() == "io" ||
                 e.code() == "empty-word" || e.code() == "code-too-short";
    return usage ? kExitUsage : kExitSemantic;
  }
  return kExitUsage;
}

inline int run_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace fife::cli
