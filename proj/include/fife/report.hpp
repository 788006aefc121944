#pragma once
// Machine-readable outcome of one bounded check. Failures always carry a
// witness; bounds record how far the search actually had to look. Every
// pass is bounded evidence for the claim it checks, not a proof.

#include <optional>
#include <sstream>
#include <string>

namespace fife {

struct Witness {
  std::string word;
  std::size_t pos = 0;
};

struct VerificationReport {
  std::string claim_id;
  bool pass = false;
  long long examined = 0;      // inputs inspected
  long long bound = 0;         // maximal prefix length / position needed
  long long substantive = 0;   // inputs where the check was non-vacuous
  std::optional<Witness> witness;
  std::string note;
};

// "CLAIM <id> <PASS|FAIL> examined=<n> bound=<b> [witness=<word>@<pos>]"
inline std::string report_line(const VerificationReport& r) {
  std::ostringstream os;
  os << "CLAIM " << r.claim_id << ' ' << (r.pass ? "PASS" : "FAIL")
     << " examined=" << r.examined << " bound=" << r.bound;
  if (r.witness)
    os << " witness=" << r.witness->word << '@' << r.witness->pos;
  return os.str();
}

}  // namespace fife
