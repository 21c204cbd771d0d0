#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "autocomp/counting.hpp"
#include "autocomp/nfa.hpp"
#include "autocomp/state_sequence.hpp"

namespace autocomp {

inline constexpr int kMaxSearchLength = 26;  // single-word search length cap
inline constexpr int kMaxSearchStates = 28;  // covers partial-DFA witnesses up to n+1 states
inline constexpr int kMaxSearchBase = 4;
inline constexpr int kMaxSubsetStates = 13;  // word-count DP cap inside searches

namespace detail {

// Incremental bookkeeping for the automaton induced by the DFS path so far:
// transition refcounts (the same triple can be induced by several steps),
// per-(from,to) symbol multiplicities, per-(from,symbol) fanout for the
// determinism counter, per-symbol target-mask rows for the word-count DP, a
// compact edge list for the path-count DP, and the running product of
// step-time pair multiplicities. That product lower-bounds both the final
// path count and the final word count of every completion (each symbol
// choice along one state sequence spells a distinct accepted word), which is
// the workhorse prune in every mode.
struct TransitionLedger {
  std::uint8_t ref[kMaxSearchStates][kMaxSearchBase][kMaxSearchStates] = {};
  std::uint8_t pair_mult[kMaxSearchStates][kMaxSearchStates] = {};
  std::uint8_t outdeg[kMaxSearchStates][kMaxSearchBase] = {};
  std::uint32_t row[kMaxSearchBase][kMaxSearchStates] = {};
  int nondet = 0;
  struct Edge {
    std::uint8_t u, sym, v;
  };
  Edge edges[2 * kMaxSearchLength + 4];
  int num_edges = 0;
  std::int16_t edge_pos[kMaxSearchStates][kMaxSearchBase][kMaxSearchStates];
  std::uint64_t prod = 1;

  TransitionLedger();

  // Returns the multiplicity of the (u,v) pair after the add; updates prod.
  int add(int u, int sym, int v);
  // Exact inverse of the matching add (LIFO discipline required).
  void remove(int u, int sym, int v);

  // Length-n walk count from state 0 to `accept` over the current edges.
  unsigned __int128 count_paths(int n, int accept, int num_states) const;
};

// Exact number of length-n words accepted from state 0 with the given accept
// state, over ledger rows; subset DP with reusable scratch. num_states <=
// kMaxSubsetStates.
class WordCounter {
 public:
  std::uint64_t count(const TransitionLedger& ledger, int n, int accept, int num_states, int base);

 private:
  std::vector<std::uint32_t> stamp_, pos_;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> cur_, next_;
  std::uint32_t gen_ = 0;
};

}  // namespace detail

// Exhaustive search over the automata induced by accepting paths of one fixed
// word. Deleting transitions from any automaton accepting the word — keeping
// just one accepting path — can only lower acceptance counts and preserves
// determinism, so membership questions about (states, logAcc) pairs are
// decided over this restricted space (the full-enumeration oracle
// cross-checks that claim in tests).
//
// Not thread-safe; create one instance per worker.
class SequenceSearcher {
 public:
  SequenceSearcher() = default;

  void set_word(const Word& w);

  // True iff some restricted-growth sequence with at most max_states values
  // has logAcc_mode(induced_nfa(s, w), n, base) <= m. Fills *witness with the
  // lexicographically least qualifying sequence when given.
  bool decide(int max_states, int m, Mode mode, StateSequence* witness = nullptr);

  // Exact minimum logAcc per exact state count d (at index d-1), full
  // enumeration up to max_states; LogAcc::inf() where no automaton exists
  // (delta mode with deterministically unreachable state counts).
  std::vector<LogAcc> min_logacc_by_states(int max_states, Mode mode);

  // Restriction of the enumeration to sequences extending `prefix`; results
  // merge by elementwise min across a prefix partition.
  std::vector<LogAcc> min_logacc_by_states_prefix(const StateSequence& prefix, int max_states,
                                                  Mode mode);

  // Every qualifying sequence (<= max_states values, logAcc <= m), in
  // lexicographic order; fn returning false stops the enumeration.
  void enumerate_qualifying(int max_states, int m, Mode mode,
                            const std::function<bool(const StateSequence&)>& fn);

  std::uint64_t leaves() const { return leaves_; }

 private:
  enum class Purpose { kDecide, kEnumerate, kMinTable };

  bool dfs(int depth, int cur, int maxv);
  bool leaf_qualifies(int num_states);
  void prepare(int max_states, Mode mode, Purpose purpose, int m);

  int n_ = 0;
  int b_ = 2;
  std::uint8_t w_[kMaxSearchLength] = {};
  int seq_[kMaxSearchLength + 2] = {};

  detail::TransitionLedger ledger_;
  detail::WordCounter words_;

  Purpose purpose_ = Purpose::kDecide;
  Mode mode_ = Mode::pi;
  int qmax_ = 1;
  unsigned __int128 thr_ = 1;
  std::vector<int> best_;
  const std::function<bool(const StateSequence&)>* fn_ = nullptr;
  StateSequence* witness_ = nullptr;
  std::uint64_t leaves_ = 0;
};

// Ceiling log base b of a nonzero 128-bit count (smallest m with b^m >= v).
int ceil_log_u128(unsigned __int128 value, int b);

// b^m as a 128-bit value, saturating far above any count these searches see.
unsigned __int128 pow_u128(int b, int m);

// Smallest total state count q <= qmax admitting an automaton induced by a
// pair of accepting paths for the two distinct equal-length words (shared
// initial 0, shared accept state) whose length-n acceptance count in `mode`
// is exactly 2 (pi: two accepting paths; omega: two accepted words, i.e. the
// length-n language is exactly the pair). Returns -1 if none. Throws
// SearchBudgetExceeded when the node budget runs out.
int pair_min_states(const Word& x, const Word& y, Mode mode, int qmax, long long node_budget);

}  // namespace autocomp
