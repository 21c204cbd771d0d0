#pragma once

#include <functional>
#include <string>
#include <vector>

#include "autocomp/counting.hpp"
#include "autocomp/nfa.hpp"

namespace autocomp {

// Restricted-growth sequence s_0..s_n: s_0 = 0 and s_i <= 1 + max_{j<i} s_j.
// Records the states visited along an accepting path; the set partition it
// encodes is the automaton's state set.
struct StateSequence {
  std::vector<int> entries;

  int size() const { return static_cast<int>(entries.size()); }
  int operator[](int i) const { return entries[static_cast<size_t>(i)]; }
  int num_states() const;  // 1 + max entry (= number of distinct values)

  bool operator==(const StateSequence&) const = default;
  auto operator<=>(const StateSequence&) const = default;
};

// True iff entries form a restricted-growth sequence.
bool is_restricted_growth(const std::vector<int>& entries);

// Digit-string rendering ("012120120120") when all entries <= 9, else
// comma-separated. parse accepts both.
std::string format_sequence(const StateSequence& s);
StateSequence parse_sequence(const std::string& text);

// The automaton with states = distinct values of s, initial s_0, accept s_n,
// transitions exactly {(s_i, w_{i+1}, s_{i+1})} with duplicates merged.
// Always accepts w. Requires |s| = |w| + 1.
Nfa induced_nfa(const StateSequence& s, const Word& w);

// Calls fn for every restricted-growth sequence of the given length with at
// most max_states distinct values, in lexicographic order, each exactly once.
void enumerate_state_sequences(int length, int max_states,
                               const std::function<void(const StateSequence&)>& fn);

// Same stream, restricted to sequences extending `prefix` (itself a valid
// restricted-growth prefix). Together with partition_prefixes this splits the
// space into disjoint ranges for parallel consumption.
void enumerate_state_sequences_with_prefix(const StateSequence& prefix, int length, int max_states,
                                           const std::function<void(const StateSequence&)>& fn);

// All valid prefixes of the given depth (depth <= length), in lexicographic
// order; the sequence space is the disjoint union of their extensions.
std::vector<StateSequence> partition_prefixes(int length, int max_states, int depth);

// Number of sequences enumerate_state_sequences(length, max_states) yields:
// sum over k <= max_states of Stirling-set numbers S(length, k).
Count count_state_sequences(int length, int max_states);

}  // namespace autocomp
