#pragma once
// 2-kernel computation on decoded words. A word is 2-automatic iff its
// 2-kernel (the subsequences a_{2^i n + j}) has finitely many distinct
// members; here kernel rows are compared on length-m prefixes, with a
// stabilization check one level deeper standing in for exact sequence
// equality. For an ultimately periodic code the fixed-point construction
// yields a finite covering set whose cardinality bounds the kernel from
// above; for aperiodic codes the kernel keeps growing, which is measured
// and reported as evidence.

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "automaton.hpp"
#include "code.hpp"
#include "report.hpp"

namespace fife {

struct KernelElement {
  int i = 0;
  unsigned long long j = 0;
  std::string prefix;  // first cmp_len letters of (a_{2^i n + j})
};

struct KernelSummary {
  int depth = 0;
  int cmp_len = 0;
  int distinct_count = 0;
  std::vector<KernelElement> representatives;  // first (i, j) per class
};

inline constexpr int kKernelMaxDepth = 12;
inline constexpr int kKernelMaxCmpLen = 4096;

// Subsamples the materialized prefix for every (i, j) with i <= d and
// deduplicates the length-m row prefixes exactly.
template <class Source>
KernelSummary kernel_summary(const Source& word, int d, int m) {
  if (d < 0 || d > kKernelMaxDepth || m < 1 || m > kKernelMaxCmpLen)
    throw Error("bounds", "kernel_summary: depth <= 12 and cmp_len <= 4096");
  KernelSummary summary;
  summary.depth = d;
  summary.cmp_len = m;
  const unsigned long long need =
      (1ULL << d) * static_cast<unsigned long long>(m);
  BinaryWord prefix = word.prefix(static_cast<std::size_t>(need));
  std::map<std::string, std::pair<int, unsigned long long>> classes;
  for (int i = 0; i <= d; ++i) {
    const unsigned long long stride = 1ULL << i;
    for (unsigned long long j = 0; j < stride; ++j) {
      std::string row;
      row.reserve(static_cast<std::size_t>(m));
      for (int n = 0; n < m; ++n)
        row.push_back(prefix[static_cast<std::size_t>(
            stride * static_cast<unsigned long long>(n) + j)]);
      classes.emplace(std::move(row), std::make_pair(i, j));
    }
  }
  summary.distinct_count = static_cast<int>(classes.size());
  std::vector<KernelElement> reps;
  for (const auto& [row, ij] : classes)
    reps.push_back(KernelElement{ij.first, ij.second, row});
  std::sort(reps.begin(), reps.end(), [](const KernelElement& a,
                                         const KernelElement& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  summary.representatives = std::move(reps);
  return summary;
}

// Upper envelope for the kernel size of the word decoded from the
// ultimately periodic code y z^omega. The cycle word w satisfies
// w = T mu^k(w) with k = |z| and T the one-period expansion block, so its
// kernel lies in {u mu^i(v) mu^{i+k}(v) ... : |u| <= |T|, v in {T, ~T},
// 1 <= i <= k}; an all-zero cycle denotes a fixed point of mu whose
// kernel is the two fixed points. The head block is absorbed as one more
// bounded-prefix choice. Deliberately coarse: asserted as an upper bound,
// never as a tight value.
inline long long periodic_code_kernel_bound(const Symbols& y, const Symbols& z,
                                            TailMarker marker) {
  if (z.empty())
    throw Error("parse", "kernel bound: cycle must be nonempty");
  Code c;
  c.head = y;
  c.cycle = z;
  c.marker = marker;
  c.validate();
  CodeValidation v = validate_code(c);
  if (!v.accepted)
    throw Error("rejected-code", "kernel bound: " + v.reason);

  auto pow2_guarded = [](unsigned long long e) -> long long {
    return e >= 40 ? (1LL << 40) : static_cast<long long>(1ULL << e);
  };
  unsigned long long head_len = 0;
  for (std::size_t j = 0; j < y.size(); ++j)
    head_len += (1ULL << j) * y[j].word_size();

  long long cycle_set;
  if (c.cycle_all_zero()) {
    cycle_set = 2;  // the two fixed points of mu
  } else {
    unsigned long long block_len = 0;
    for (std::size_t j = 0; j < z.size(); ++j)
      block_len += (1ULL << j) * z[j].word_size();
    long long k = static_cast<long long>(z.size());
    cycle_set = (pow2_guarded(block_len + 1) - 1) * 2 * k;
  }
  return (pow2_guarded(head_len + 1) - 1) * cycle_set;
}

// Default accepted, non-ultimately-periodic code: the symbol 1 separated
// by runs of 0 of growing length (positions 1, 3, 6, 10, ... are 1).
// Reading it walks eps -> 1 -> eps -> ... forever.
struct GrowingRunCode {
  int operator()(std::size_t j0) const {
    // 1-based position j is a 1 iff j = m(m+1)/2 for some m >= 1.
    unsigned long long j = j0 + 1;
    unsigned long long m = static_cast<unsigned long long>(
        (std::sqrt(8.0 * static_cast<double>(j) + 1.0) - 1.0) / 2.0);
    for (unsigned long long t = (m > 1 ? m - 1 : 1); t <= m + 1; ++t)
      if (t * (t + 1) / 2 == j) return 1;
    return 0;
  }

  BinaryWord prefix(std::size_t n) const {
    return decode_stream(*this, n);
  }
};

// Growth evidence for non-automaticity: the kernel count at depth d must
// exceed the threshold and strictly increase from depth d-2 through d.
template <class Source>
VerificationReport aperiodicity_evidence(const Source& word, int d, int m,
                                         int threshold) {
  if (d < 2) throw Error("bounds", "aperiodicity_evidence: depth >= 2");
  VerificationReport report;
  report.claim_id = "kernel-growth";
  report.bound = m;
  int counts[3];
  for (int k = 0; k < 3; ++k) {
    KernelSummary s = kernel_summary(word, d - 2 + k, m);
    counts[k] = s.distinct_count;
    report.examined += (2LL << (d - 2 + k)) - 1;
  }
  report.pass =
      counts[2] > threshold && counts[0] < counts[1] && counts[1] < counts[2];
  report.note = "distinct counts " + std::to_string(counts[0]) + " -> " +
                std::to_string(counts[1]) + " -> " + std::to_string(counts[2]) +
                ", threshold " + std::to_string(threshold);
  if (!report.pass)
    report.witness = Witness{"depth " + std::to_string(d), 0};
  return report;
}

struct AutomaticityReport {
  bool automatic = false;
  KernelSummary summary;
  long long bound = 0;      // kernel-size envelope (automatic case)
  bool stabilized = false;  // distinct count equal at depth d-1 and d
  std::string classification;
};

// Classifies a code: an accepted, ultimately periodic code is
// 2-automatic, reported with its kernel summary and envelope. The report
// never claims a proof for anything else.
inline AutomaticityReport automaticity_report(const Code& c, int d = 5,
                                              int m = 256) {
  c.validate();
  if (c.finite())
    throw Error("code-too-short",
                "automaticity: a finite code denotes a finite word");
  CodeValidation v = validate_code(c);
  if (!v.accepted) throw Error("rejected-code", "automaticity: " + v.reason);
  AutomaticityReport report;
  report.automatic = true;
  report.classification = "2-automatic";
  InfiniteWordSpec word = InfiniteWordSpec::decoded(c);
  report.summary = kernel_summary(word, d, m);
  KernelSummary shallower = kernel_summary(word, d - 1, m);
  report.stabilized =
      shallower.distinct_count == report.summary.distinct_count;
  report.bound = periodic_code_kernel_bound(c.head, c.cycle, c.marker);
  return report;
}

}  // namespace fife
