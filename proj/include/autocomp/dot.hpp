#pragma once

#include <string>

#include "autocomp/nfa.hpp"

namespace autocomp {

// Deterministic DOT rendering: states ascending, per-edge labels with symbols
// ascending and parallel symbols joined by commas; initial state marked by an
// arrow from a point node, accept state double-circled. UTF-8, LF endings.
std::string to_dot(const Nfa& m);

}  // namespace autocomp
