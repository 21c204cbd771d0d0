#pragma once

#include <functional>
#include <vector>

#include "autocomp/config.hpp"
#include "autocomp/constructions.hpp"
#include "autocomp/counting.hpp"
#include "autocomp/nfa.hpp"
#include "autocomp/state_sequence.hpp"

namespace autocomp {

// q <= floor(n/2) + 1 suffices for any single word in the path- and
// word-counting modes (the backtracking-cycle witness construction).
inline int hyde_bound(int n) { return n / 2 + 1; }

struct FrontierPoint {
  int states = 0;
  int log_acc = 0;
  bool operator==(const FrontierPoint&) const = default;
};

// Pareto frontier of the feasible (states, logAcc) pairs for models of a
// word: along points, states strictly increase and log_acc strictly
// decreases; (q, m) is feasible iff some point has states <= q and
// log_acc <= m.
struct StructureFrontier {
  Word word;
  int base = 2;
  Mode mode = Mode::pi;
  std::vector<FrontierPoint> points;

  bool member(int q, int m) const;
};

// Exact frontier with states capped at hyde_bound(|x|). Searches automata
// induced by accepting-path state sequences; with jobs > 1 the sequence space
// is split by prefix and merged by elementwise min.
// Errors: WordTooLong (|x| > guards.frontier_max_n), BaseTooSmall (b < 2 or
// b < largest symbol bound of x).
StructureFrontier structure_frontier(const Word& x, int b, Mode mode, int jobs = 1,
                                     const Guards& guards = {});

// min m with (k, m) feasible. Never infinite for k >= 1 (the one-state
// automaton with the needed self-loops models x in every mode), but the
// return type allows it.
LogAcc h(const Word& x, int k, int b, Mode mode, const Guards& guards = {});

// min q with (q, m) feasible; unlike the frontier this is not capped at the
// backtracking bound, so the deterministic mode can exceed it. Fills
// *witness with the lexicographically least qualifying sequence.
int h_star(const Word& x, int m, int b, Mode mode, StateSequence* witness = nullptr,
           const Guards& guards = {});

// Minimum states of an NFA accepting x with exactly one accepting path of
// length |x| (= h_star at m = 0 in path-counting mode).
int a_pi(const Word& x, StateSequence* witness = nullptr, const Guards& guards = {});

// Minimum states of an NFA whose length-|x| language is exactly {x}.
int a_omega(const Word& x, StateSequence* witness = nullptr, const Guards& guards = {});

// Minimum states of a partial DFA whose length-|x| language is exactly {x}.
int a_minus(const Word& x, StateSequence* witness = nullptr, const Guards& guards = {});

// Minimum states of an NFA for which x is the unique length-|x| word accepted
// along exactly one path. Deleting transitions can push another word's path
// count down onto exactly one, so the sequence-induced restriction is
// unsound here; this search enumerates unrestricted automata, exhaustively
// for <= 3 states, then staged strategies for 4. Binary words, |x| <= 12,
// answers <= 4; beyond that it raises SearchBudgetExceeded carrying the best
// known upper bound.
int a_dagger(const Word& x, const Guards& guards = {});

// Minimum states of an NFA whose length-n language is exactly the query set
// (pi mode: additionally exactly |F| accepting paths). Modes: pi, omega.
int doubleton_complexity(const DoubletonQuery& f, Mode mode, const Guards& guards = {});

struct EqualityScanOptions {
  int min_len = 1;
  int jobs = 1;
  // Called after each completed length with (length, words scanned so far).
  std::function<void(int, std::uint64_t)> progress;
};

// All binary words with min_len <= |x| <= max_len and a_omega(x) != a_pi(x),
// in (length, value) order. Scans one representative per
// complement/reversal orbit and expands hits back to full orbits.
std::vector<Word> check_mode_equality(int max_len, const EqualityScanOptions& opts = {},
                                      const Guards& guards = {});

// Independent brute-force h_star over ALL automata with <= 3 states (no
// sequence-induced restriction), binary alphabet, |x| <= 6. Raises
// SearchBudgetExceeded when the answer exceeds 3 states. Used to validate
// the sequence-induced search.
int oracle_h_star(const Word& x, int m, int b, Mode mode);

}  // namespace autocomp
