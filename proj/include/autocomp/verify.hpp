#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "autocomp/config.hpp"
#include "autocomp/nfa.hpp"

namespace autocomp {

// Work tiers for the regression harness: zero runs only the figure-fixture
// checks; fast targets minutes; standard adds the p-value explanations and
// deeper scans (under an hour); extended runs the deepest documented scans.
enum class VerifyTier { zero, fast, standard, extended };

const char* tier_name(VerifyTier t);

struct VerifyBudget {
  VerifyTier tier = VerifyTier::fast;
  // Explicit scan-length cap for the range-scanning ids (tenComp, hyde,
  // pacific, thermalbad); unset means the tier's documented depth.
  std::optional<int> length;
};

// Accepts "fast" | "standard" | "extended" | a nonnegative integer. "0"
// selects the zero tier; a positive integer caps scan lengths and implies
// fast (<= 6), standard (<= 8) or extended depth for the other ids.
VerifyBudget parse_budget(const std::string& text);

struct TheoremReport {
  std::string id;
  bool pass = false;
  std::string claim;         // self-contained statement of what is checked
  nlohmann::json computed;   // recomputed values; carries the counterexample on failure
  nlohmann::json expected;
  double elapsed_seconds = 0.0;
  std::string note;          // coverage depth and any resolution remarks
};

nlohmann::json report_to_json(const TheoremReport& r);

// All known ids in verify_all order (figure checks first).
std::vector<std::string> theorem_ids();

// Least tier at which an id runs. Errors: UnknownTheorem.
VerifyTier minimum_tier(const std::string& id);

// Recomputes one claim from scratch through the library. Errors:
// UnknownTheorem; BudgetExceeded when a bounded sub-search gives out (the
// message reports the range verified so far).
TheoremReport verify_theorem(const std::string& id, const VerifyBudget& budget = {},
                             const Config& config = {});

// Runs every id whose minimum tier is within budget.tier, in theorem_ids()
// order. The zero tier runs only the figure checks.
std::vector<TheoremReport> verify_all(const VerifyBudget& budget = {},
                                      const Config& config = {});

// Test hook: the figure-fixture checks against an alternative fixture
// provider, to exercise failure reporting on corrupted fixtures.
TheoremReport verify_figures_with(const std::function<Nfa(const std::string&)>& provider);

}  // namespace autocomp
