#ifndef MODALWB_TOOLS_SWEEPS_HPP_
#define MODALWB_TOOLS_SWEEPS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace modalwb::sweep {

// pc-oracle, proper-oracle, raut-oracle, cover-oracle, axiom-frame.
std::vector<std::string> kinds();
int max_size(const std::string& kind);

struct SweepReport {
  std::string kind;
  int n = 0;
  std::size_t total = 0;
  std::size_t agree = 0;
  // First few disagreements, formatted.
  std::vector<std::string> counterexamples;
  // Kind-specific counters, e.g. how many operators have a proper companion.
  nlohmann::json counters = nlohmann::json::object();

  bool ok() const { return total == agree; }
  nlohmann::json to_json() const;
  std::string to_text() const;
};

// Throws Error(CapExceeded) above max_size(kind), Error(Name) for unknown kinds.
// cover-oracle at n = 3 samples 10^4 pairs from `seed`; everything else is exhaustive.
SweepReport run(const std::string& kind, int n, std::uint64_t seed = 0);

}  // namespace modalwb::sweep

#endif  // MODALWB_TOOLS_SWEEPS_HPP_
