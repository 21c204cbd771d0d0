#pragma once

#include <string>

namespace autocomp {

// Length/state guards. These are configuration, not hard limits: defaults are
// chosen so every operation finishes in minutes on one core; callers may
// raise them knowingly.
struct Guards {
  int frontier_max_n = 24;      // structure functions / single-word complexity
  int pvalue_max_n = 14;        // exact p-values enumerate all b^n words
  int doubleton_max_n = 10;     // pair searches
  int equality_scan_max_len = 12;  // a_pi vs a_omega census
  int dagger_max_n = 12;        // unique-single-path-word search
  long long dagger_node_budget = 400'000'000;
  long long pair_node_budget = 2'000'000'000;
};

struct Config {
  int jobs = 1;
  std::string cache_dir;  // empty: resolved from AC_CACHE_DIR or ~/.cache/autocomp
  Guards guards;
};

}  // namespace autocomp
