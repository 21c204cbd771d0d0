#pragma once

#include <vector>

#include "autocomp/complexity.hpp"
#include "autocomp/pvalue.hpp"
#include "autocomp/state_sequence.hpp"

namespace autocomp {

// The optimal models of a word in one mode: the frontier point minimizing the
// exact p-value (ties broken toward fewer states), with every witness state
// sequence at that point, deduplicated so each induced automaton appears once
// up to state relabeling (lexicographically least sequence kept).
struct ExplanationReport {
  Word word;
  int base = 2;
  Mode mode = Mode::pi;
  StructureFrontier frontier;
  std::vector<PValue> frontier_pvalues;  // parallel to frontier.points
  int optimal_states = 0;
  int optimal_log_acc = 0;
  PValue p_value;
  std::vector<StateSequence> witnesses;
  std::uint64_t candidates_considered = 0;  // search leaves examined for the witness set
  double elapsed_seconds = 0.0;
};

ExplanationReport explain(const Word& x, int b, Mode mode, PValueCache* cache = nullptr,
                          int jobs = 1, const Guards& guards = {});

// Explanations in all three modes plus pairwise disjointness of the witness
// sets, compared as sets of induced automata up to state relabeling.
struct ModeComparison {
  ExplanationReport delta_report;
  ExplanationReport pi_report;
  ExplanationReport omega_report;
  bool disjoint_delta_pi = false;
  bool disjoint_delta_omega = false;
  bool disjoint_pi_omega = false;
};

ModeComparison compare_modes(const Word& x, int b, PValueCache* cache = nullptr, int jobs = 1,
                             const Guards& guards = {});

// True iff the two witness lists share no automaton up to relabeling.
bool witnesses_disjoint(const Word& x, const std::vector<StateSequence>& a,
                        const std::vector<StateSequence>& b);

}  // namespace autocomp
