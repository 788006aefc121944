#pragma once
// The 15-state automaton whose infinite paths from the start state are
// exactly the codes of infinite 7/3-power-free binary words. States are
// named by the code word that reaches them; a missing edge means the
// corresponding set of continuations is empty. Also: path acceptance
// with tail-marker rules, code enumeration and counting, the cycle
// witnesses behind uncountability, and the lexicographically least word.

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "code.hpp"
#include "report.hpp"
#include "search.hpp"

namespace fife {

enum class State : std::uint8_t {
  eps, s1, s2, s3, s4, s11, s13, s20, s31, s33, s40, s130, s203, s310, s401
};

inline constexpr int kStateCount = 15;

inline constexpr std::array<std::string_view, kStateCount> kStateNames = {
    "eps", "1",  "2",  "3",   "4",   "11",  "13", "20",
    "31",  "33", "40", "130", "203", "310", "401"};

inline std::string_view state_name(State s) {
  return kStateNames[static_cast<int>(s)];
}

inline std::optional<State> state_from_name(std::string_view name) {
  for (int i = 0; i < kStateCount; ++i)
    if (kStateNames[i] == name) return static_cast<State>(i);
  return std::nullopt;
}

// Complement involution on states: swap digits 1<->3 and 2<->4 in the
// state's code word.
inline State complement_state(State s) {
  constexpr std::array<State, kStateCount> kMap = {
      State::eps, State::s3,   State::s4,   State::s1,   State::s2,
      State::s33, State::s31,  State::s40,  State::s13,  State::s11,
      State::s20, State::s310, State::s401, State::s130, State::s203};
  return kMap[static_cast<int>(s)];
}

struct Edge {
  State from;
  int symbol;
  State to;

  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

// The 45 edges of the automaton.
inline constexpr std::array<Edge, 45> kCanonicalEdges = {{
    {State::eps, 0, State::eps}, {State::eps, 1, State::s1},
    {State::eps, 2, State::s2},  {State::eps, 3, State::s3},
    {State::eps, 4, State::s4},
    {State::s1, 0, State::eps},  {State::s1, 1, State::s11},
    {State::s1, 2, State::s2},   {State::s1, 3, State::s13},
    {State::s2, 0, State::s20},  {State::s2, 3, State::s13},
    {State::s3, 0, State::eps},  {State::s3, 1, State::s31},
    {State::s3, 3, State::s33},  {State::s3, 4, State::s4},
    {State::s4, 0, State::s40},  {State::s4, 1, State::s31},
    {State::s11, 0, State::s3},  {State::s11, 1, State::s11},
    {State::s11, 2, State::s2},  {State::s11, 3, State::s13},
    {State::s13, 0, State::s130}, {State::s13, 1, State::s31},
    {State::s20, 3, State::s203}, {State::s20, 4, State::s4},
    {State::s31, 0, State::s310}, {State::s31, 3, State::s13},
    {State::s33, 0, State::s1},  {State::s33, 1, State::s31},
    {State::s33, 3, State::s33}, {State::s33, 4, State::s4},
    {State::s40, 1, State::s401}, {State::s40, 2, State::s2},
    {State::s130, 0, State::s130}, {State::s130, 1, State::s1},
    {State::s130, 2, State::s2},
    {State::s203, 0, State::s310}, {State::s203, 3, State::s33},
    {State::s203, 4, State::s4},
    {State::s310, 0, State::s310}, {State::s310, 3, State::s3},
    {State::s310, 4, State::s4},
    {State::s401, 0, State::s130}, {State::s401, 1, State::s11},
    {State::s401, 2, State::s2},
}};

class TransitionTable {
 public:
  TransitionTable() { *this = from_edges(kCanonicalEdges); }

  static TransitionTable from_edges(std::span<const Edge> edges) {
    TransitionTable t(Empty{});
    for (const Edge& e : edges) {
      std::int8_t& slot = t.next_[static_cast<int>(e.from)][e.symbol];
      if (slot != -1 && slot != static_cast<std::int8_t>(e.to))
        throw Error("parse", "transition table: conflicting edges from " +
                                 std::string(state_name(e.from)) + " on " +
                                 std::to_string(e.symbol));
      slot = static_cast<std::int8_t>(e.to);
    }
    return t;
  }

  std::optional<State> step(State s, PrefixSymbol a) const {
    std::int8_t t = next_[static_cast<int>(s)][a.value()];
    if (t < 0) return std::nullopt;
    return static_cast<State>(t);
  }

  std::vector<PrefixSymbol> out_symbols(State s) const {
    std::vector<PrefixSymbol> out;
    for (int v = 0; v <= 4; ++v)
      if (next_[static_cast<int>(s)][v] >= 0) out.emplace_back(v);
    return out;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int s = 0; s < kStateCount; ++s)
      for (int v = 0; v <= 4; ++v)
        if (next_[s][v] >= 0)
          out.push_back({static_cast<State>(s), v,
                         static_cast<State>(next_[s][v])});
    return out;
  }

  std::size_t edge_count() const {
    std::size_t n = 0;
    for (int s = 0; s < kStateCount; ++s)
      for (int v = 0; v <= 4; ++v)
        if (next_[s][v] >= 0) ++n;
    return n;
  }

  // Swapping symbols 1<->3, 2<->4 and complementing states maps the edge
  // set onto itself.
  bool involution_closed() const {
    for (const Edge& e : edges()) {
      auto img = step(complement_state(e.from),
                      PrefixSymbol(complement_symbol_value(e.symbol)));
      if (!img || *img != complement_state(e.to)) return false;
    }
    return true;
  }

  bool operator==(const TransitionTable& o) const {
    for (int s = 0; s < kStateCount; ++s)
      for (int v = 0; v <= 4; ++v)
        if (next_[s][v] != o.next_[s][v]) return false;
    return true;
  }

  // Plain text edge list "state symbol target", one per line,
  // order-insensitive. '#' starts a comment.
  static TransitionTable load(std::istream& in) {
    std::vector<Edge> edges;
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
      std::istringstream ls(line);
      std::string from, sym, to;
      if (!(ls >> from)) continue;
      if (!(ls >> sym >> to))
        throw Error("parse", "transition table: malformed line: " + line);
      auto s = state_from_name(from);
      auto t = state_from_name(to);
      if (!s || !t || sym.size() != 1 || sym[0] < '0' || sym[0] > '4')
        throw Error("parse", "transition table: bad edge: " + line);
      edges.push_back({*s, sym[0] - '0', *t});
    }
    return from_edges(edges);
  }

  static TransitionTable load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io", "transition table: cannot open " + path);
    return load(in);
  }

  void save(std::ostream& out) const {
    for (const Edge& e : edges())
      out << state_name(e.from) << ' ' << e.symbol << ' '
          << state_name(e.to) << '\n';
  }

 private:
  struct Empty {};
  explicit TransitionTable(Empty) {
    for (auto& row : next_)
      for (auto& cell : row) cell = -1;
  }

  std::int8_t next_[kStateCount][5];
};

inline const TransitionTable& canonical_table() {
  static const TransitionTable table;
  return table;
}

struct PathRejection {
  State state;
  PrefixSymbol symbol;
  std::size_t pos;
};

// Which tail markers are valid if the path continues with 0^omega right
// here: cycling on eps allows both, on 310 only ;3, on 130 only ;1.
struct ValidTails {
  bool one = false;
  bool three = false;

  bool empty() const noexcept { return !one && !three; }
};

struct PathReport {
  bool accepted = false;
  State final_state = State::eps;
  std::optional<PathRejection> rejection;
  ValidTails valid_tails;
  std::vector<PrefixSymbol> continuations;  // raw out-edges of the final state
};

inline ValidTails tails_for_state(State s) {
  if (s == State::eps) return {true, true};
  if (s == State::s310) return {false, true};
  if (s == State::s130) return {true, false};
  return {};
}

inline PathReport accepts_path(std::span<const PrefixSymbol> symbols,
                               const TransitionTable& table = canonical_table()) {
  PathReport report;
  State cur = State::eps;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    auto next = table.step(cur, symbols[i]);
    if (!next) {
      report.accepted = false;
      report.rejection = PathRejection{cur, symbols[i], i};
      return report;
    }
    cur = *next;
  }
  report.accepted = true;
  report.final_state = cur;
  report.valid_tails = tails_for_state(cur);
  report.continuations = table.out_symbols(cur);
  return report;
}

inline PathReport accepts_path(std::string_view digits,
                               const TransitionTable& table = canonical_table()) {
  Symbols symbols = parse_symbols(digits);
  return accepts_path(symbols, table);
}

// All accepted length-k symbol sequences in lexicographic order
// (symbol order 0 < 1 < 2 < 3 < 4).
inline std::vector<Symbols> enumerate_codes(
    int k, const TransitionTable& table = canonical_table(), int bound = 14) {
  if (k < 0 || k > bound)
    throw Error("bounds", "enumerate_codes: length " + std::to_string(k) +
                              " exceeds bound " + std::to_string(bound));
  std::vector<Symbols> out;
  Symbols path;
  auto dfs = [&](auto&& self, State s, int left) -> void {
    if (left == 0) {
      out.push_back(path);
      return;
    }
    for (int v = 0; v <= 4; ++v) {
      auto next = table.step(s, PrefixSymbol(v));
      if (!next) continue;
      path.emplace_back(v);
      self(self, *next, left - 1);
      path.pop_back();
    }
  };
  dfs(dfs, State::eps, k);
  return out;
}

// Number of length-k paths from the start state, by iterated
// vector-times-table products.
inline unsigned long long count_paths(
    int k, const TransitionTable& table = canonical_table()) {
  if (k < 0) throw Error("bounds", "count_paths: negative length");
  std::array<unsigned long long, kStateCount> cur{};
  cur[static_cast<int>(State::eps)] = 1;
  for (int step = 0; step < k; ++step) {
    std::array<unsigned long long, kStateCount> next{};
    for (int s = 0; s < kStateCount; ++s) {
      if (cur[s] == 0) continue;
      for (int v = 0; v <= 4; ++v) {
        auto t = table.step(static_cast<State>(s), PrefixSymbol(v));
        if (t) next[static_cast<int>(*t)] += cur[s];
      }
    }
    cur = next;
  }
  unsigned long long total = 0;
  for (auto c : cur) total += c;
  return total;
}

// Loop labels that witness uncountably many paths from each state back to
// itself: the eight states on one side of the complement symmetry, as
// listed in the uncountability argument; the other seven follow by
// applying the involution.
inline const std::vector<std::pair<State, std::vector<std::string>>>&
cycle_witnesses() {
  static const std::vector<std::pair<State, std::vector<std::string>>> w = {
      {State::eps, {"0", "10"}},
      {State::s1, {"01", "001"}},
      {State::s2, {"0402", "030402"}},
      {State::s11, {"0011", "00011"}},
      {State::s13, {"013", "0013"}},
      {State::s20, {"4020", "34020"}},
      {State::s401, {"10401", "203401"}},
      {State::s130, {"0", "104010"}},
  };
  return w;
}

inline VerificationReport verify_cycle_witnesses(
    const TransitionTable& table = canonical_table()) {
  VerificationReport report;
  report.claim_id = "cycle-witnesses";
  report.pass = true;
  auto complement_label = [](const std::string& label) {
    std::string out;
    for (char c : label)
      out.push_back(static_cast<char>(
          '0' + complement_symbol_value(c - '0')));
    return out;
  };
  auto check_loop = [&](State s, const std::string& label) {
    State cur = s;
    for (char c : label) {
      auto next = table.step(cur, PrefixSymbol(c - '0'));
      if (!next) return false;
      cur = *next;
    }
    return cur == s;
  };
  for (const auto& [state, labels] : cycle_witnesses()) {
    for (const std::string& label : labels) {
      ++report.examined;
      if (!check_loop(state, label)) {
        report.pass = false;
        report.witness = Witness{std::string(state_name(state)) + ":" + label, 0};
        return report;
      }
      ++report.examined;
      State mirror = complement_state(state);
      std::string mlabel = complement_label(label);
      if (!check_loop(mirror, mlabel)) {
        report.pass = false;
        report.witness =
            Witness{std::string(state_name(mirror)) + ":" + mlabel, 0};
        return report;
      }
    }
  }
  return report;
}

// Shortest (then lexicographically least) symbol word leading from s to a
// state with a 0-loop, so any accepted path can be completed into an
// all-zero tail.
struct ZeroTail {
  Symbols bridge;
  State landing = State::eps;
};

inline ZeroTail zero_tail(State s,
                          const TransitionTable& table = canonical_table()) {
  auto has_zero_loop = [](State q) {
    return q == State::eps || q == State::s130 || q == State::s310;
  };
  if (has_zero_loop(s)) return {Symbols{}, s};
  std::vector<std::pair<State, Symbols>> frontier = {{s, {}}};
  std::array<bool, kStateCount> seen{};
  seen[static_cast<int>(s)] = true;
  while (!frontier.empty()) {
    std::vector<std::pair<State, Symbols>> next_frontier;
    for (const auto& [q, path] : frontier) {
      for (int v = 0; v <= 4; ++v) {
        auto t = table.step(q, PrefixSymbol(v));
        if (!t) continue;
        Symbols p = path;
        p.emplace_back(v);
        if (has_zero_loop(*t)) return {p, *t};
        if (!seen[static_cast<int>(*t)]) {
          seen[static_cast<int>(*t)] = true;
          next_frontier.emplace_back(*t, std::move(p));
        }
      }
    }
    frontier = std::move(next_frontier);
  }
  throw Error("unreachable", "zero_tail: no 0-loop reachable from " +
                                 std::string(state_name(s)));
}

// Checks a full code against the automaton: the head must be accepted,
// the cycle must run forever, and a marker must match the tail rule of
// the 0-loop it settles on.
struct CodeValidation {
  bool accepted = false;
  std::string reason;
};

inline CodeValidation validate_code(
    const Code& c, const TransitionTable& table = canonical_table()) {
  c.validate();
  PathReport head = accepts_path(std::span<const PrefixSymbol>(c.head), table);
  if (!head.accepted)
    return {false, "head rejected at position " +
                       std::to_string(head.rejection->pos)};
  if (c.finite()) return {true, ""};
  State cur = head.final_state;
  // Run the cycle until the entry state repeats; rejection anywhere means
  // the infinite path does not exist.
  std::vector<signed char> seen(kStateCount, 0);
  for (int round = 0; round <= kStateCount; ++round) {
    if (seen[static_cast<int>(cur)]) break;
    seen[static_cast<int>(cur)] = 1;
    for (std::size_t i = 0; i < c.cycle.size(); ++i) {
      auto next = table.step(cur, c.cycle[i]);
      if (!next)
        return {false, "cycle rejected from state " +
                           std::string(state_name(cur)) + " at symbol " +
                           std::to_string(c.cycle[i].value())};
      cur = *next;
    }
  }
  if (c.cycle_all_zero()) {
    ValidTails tails = tails_for_state(cur);
    bool ok = (c.marker == TailMarker::one && tails.one) ||
              (c.marker == TailMarker::three && tails.three);
    if (!ok)
      return {false, "tail marker does not match the 0-cycle on state " +
                         std::string(state_name(cur))};
  }
  return {true, ""};
}

// One-sided finite proxy for "x is a prefix of an infinite free word":
// true iff some free extension by `horizon` letters exists. False is
// definitive; true may be optimistic for small horizons.
inline bool is_extendable(const BinaryWord& x, int horizon) {
  FreeWordSearch search;
  if (!search.seed(x.view()))
    throw Error("not-power-free", "is_extendable: input is not 7/3-power-free");
  return search.extendable(horizon);
}

// Length-n prefix of the lexicographically least infinite 7/3-power-free
// word, computed two independent ways that must agree: decoding the code
// 203(0);3 traced through the automaton, and a greedy bit-by-bit search
// certifying each bit with an extendability probe. The probe horizon
// scales with the current length: a wrong 0 taken at position p is only
// refuted about p/2.5 letters later (the mu structure stretches mistakes
// across scales), so any fixed horizon dead-ends eventually. A found
// extension is kept as a certificate so most steps skip the search.
inline BinaryWord least_word(std::size_t n, int horizon = 16) {
  Code code;
  code.head = parse_symbols("203");
  code.cycle = parse_symbols("0");
  code.marker = TailMarker::three;
  BinaryWord via_code = decode(code, n);

  FreeWordSearch search;
  std::string cert;  // known free extension of the committed word
  std::size_t cert_from = 0;
  while (search.size() < n) {
    const int need = static_cast<int>(
        std::max<std::size_t>(static_cast<std::size_t>(horizon),
                              search.size() + 1));
    bool placed = false;
    for (char bit : {'0', '1'}) {
      std::size_t used = search.size() - cert_from;
      if (cert.size() > used && cert[used] == bit &&
          cert.size() - used - 1 >= static_cast<std::size_t>(need)) {
        if (!search.push(bit))
          throw Error("dead-end", "least_word: certificate went stale");
        placed = true;
        break;
      }
      if (!search.push(bit)) continue;
      // Ask for an extension long enough to certify every later step, so
      // each refutation of a wrong 0 is paid exactly once.
      std::string found;
      if (search.extendable_path(static_cast<int>(2 * (n + 1) - search.size()),
                                 found)) {
        cert = std::move(found);
        cert_from = search.size();
        placed = true;
        break;
      }
      search.pop();
    }
    if (!placed)
      throw Error("dead-end",
                  "least_word: greedy search hit a dead end at length " +
                      std::to_string(search.size()));
  }
  BinaryWord greedy = BinaryWord(search.word());

  if (greedy != via_code)
    throw Error("dual-mismatch",
                "least_word: decoded and greedy words disagree");
  return via_code;
}

}  // namespace fife
