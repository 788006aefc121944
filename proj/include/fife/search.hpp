#pragma once
// Backtracking search over beta-power-free binary words. The incremental
// state keeps, for the current word w and every period p <= |w|, the
// length of the longest p-periodic suffix; appending a letter updates all
// of them in O(|w|), and a forbidden power ending at the new letter is
// exactly a suffix run reaching the threshold.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "freeness.hpp"

namespace fife {

class FreeWordSearch {
 public:
  explicit FreeWordSearch(Rational beta = seven_thirds(), bool strict = false)
      : beta_(beta), strict_(strict) {}

  const std::string& word() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }

  // Appends bit if the extension stays free; returns false (state
  // unchanged) otherwise.
  bool push(char bit) {
    const std::size_t n = word_.size();
    if (levels_.size() <= n + 1) levels_.resize(n + 2);
    const std::vector<std::int32_t>& prev = levels_[n];
    std::vector<std::int32_t>& cur = levels_[n + 1];
    cur.resize(n + 2);
    // run[p] for the extended word; the new letter sits at index n.
    for (std::size_t p = 1; p <= n; ++p) {
      std::int32_t run = (word_[n - p] == bit)
                             ? prev[p] + 1
                             : static_cast<std::int32_t>(p);
      cur[p] = run;
      if (static_cast<unsigned long long>(run) >=
          detail::forbidden_length(p, beta_, strict_))
        return false;
    }
    cur[n + 1] = static_cast<std::int32_t>(n + 1);
    word_.push_back(bit);
    return true;
  }

  void pop() { word_.pop_back(); }

  // Resets to the given word; returns false if it is not free itself.
  bool seed(std::string_view w) {
    word_.clear();
    for (char bit : w)
      if (!push(bit)) {
        word_.clear();
        return false;
      }
    return true;
  }

  // True iff the current word extends by `horizon` more letters while
  // staying free. Restores the search state before returning.
  bool extendable(int horizon) {
    if (horizon <= 0) return true;
    for (char bit : {'0', '1'}) {
      if (push(bit)) {
        bool ok = extendable(horizon - 1);
        pop();
        if (ok) return true;
      }
    }
    return false;
  }

  // Like extendable, but appends the free extension it finds to `found`.
  bool extendable_path(int horizon, std::string& found) {
    if (horizon <= 0) return true;
    for (char bit : {'0', '1'}) {
      if (push(bit)) {
        found.push_back(bit);
        if (extendable_path(horizon - 1, found)) {
          pop();
          return true;
        }
        found.pop_back();
        pop();
      }
    }
    return false;
  }

  // Depth-first walk over every free extension of the current word, up to
  // `max_extra` additional letters. visit(word) runs at every node below
  // the root, including inner ones.
  template <class Visit>
  void walk(int max_extra, Visit&& visit) {
    if (max_extra <= 0) return;
    for (char bit : {'0', '1'}) {
      if (push(bit)) {
        visit(static_cast<const std::string&>(word_));
        walk(max_extra - 1, visit);
        pop();
      }
    }
  }

 private:
  Rational beta_;
  bool strict_;
  std::string word_;
  // levels_[k] = suffix run lengths for the length-k prefix of the current
  // branch; kept per length so backtracking never recomputes.
  std::vector<std::vector<std::int32_t>> levels_{1};
};

// Counts of 7/3-power-free words for each length 1..n, by incremental
// search.
inline std::vector<unsigned long long> count_free_words_incremental(int n) {
  std::vector<unsigned long long> counts(static_cast<std::size_t>(n) + 1, 0);
  FreeWordSearch search;
  search.walk(n, [&](const std::string& w) { ++counts[w.size()]; });
  counts.erase(counts.begin());
  return counts;
}

// Same counts by an independent route: plain recursion that re-runs the
// naive all-factors oracle on every candidate word.
inline std::vector<unsigned long long> count_free_words_oracle(int n) {
  std::vector<unsigned long long> counts(static_cast<std::size_t>(n) + 1, 0);
  std::string w;
  const Rational beta = seven_thirds();
  auto dfs = [&](auto&& self) -> void {
    if (w.size() >= static_cast<std::size_t>(n)) return;
    for (char bit : {'0', '1'}) {
      w.push_back(bit);
      if (!find_power_naive(std::string_view(w), beta, false)) {
        ++counts[w.size()];
        self(self);
      }
      w.pop_back();
    }
  };
  dfs(dfs);
  counts.erase(counts.begin());
  return counts;
}

}  // namespace fife
