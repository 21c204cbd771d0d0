#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "autocomp/counting.hpp"
#include "autocomp/nfa.hpp"

namespace autocomp {

// Dense automaton for exhaustive enumeration: at most 4 states and 4 symbols,
// initial state 0, one accept state, transitions as target bitmasks. This is
// the unrestricted search space backing the brute-force oracles — no
// sequence-induced pruning, every transition-set assignment is visited.
struct TinyNfa {
  int q = 1;
  int b = 2;
  int accept = 0;
  std::uint8_t row[4][4] = {};  // row[u][sym] = bitmask of targets

  Nfa to_nfa() const;
};

// Invokes fn for every TinyNfa with exactly q states over b symbols (every
// target-subset assignment, every accept state). With canonical_only, emits
// one representative per relabeling class (permutations fixing the initial
// state); complexity measures, acceptance counts, and accepted-word sets are
// invariant under relabeling, so oracles lose nothing. Returns the number of
// automata visited, or stops early (returning -1) once fn returns false.
long long for_each_tiny(int q, int b, bool canonical_only,
                        const std::function<bool(const TinyNfa&)>& fn);

bool tiny_is_deterministic(const TinyNfa& t);

// Length-n walk count from state 0 to the accept state.
std::uint64_t tiny_paths_total(const TinyNfa& t, int n);

// Accepting-path count for one word (symbols MSB-first, length n).
std::uint64_t tiny_paths_for_word(const TinyNfa& t, const std::uint8_t* w, int n);

// Number of accepted length-n words (subset DP over <= 16 subsets).
std::uint64_t tiny_words_count(const TinyNfa& t, int n);

// Invokes fn(code) for every accepted length-n word in increasing code order,
// where code reads the word as an MSB-first base-b numeral. Returns false if
// fn stopped the scan.
bool tiny_accepted_words(const TinyNfa& t, int n, const std::function<bool(std::uint32_t)>& fn);

// True iff the accepted length-n language is exactly the given sorted,
// duplicate-free code list.
bool tiny_language_equals(const TinyNfa& t, int n, const std::vector<std::uint32_t>& codes);

// True iff x (length n) is accepted along exactly one path while every other
// length-n word is accepted along a number of paths different from one.
bool tiny_unique_single_path_word(const TinyNfa& t, const std::uint8_t* x, int n);

// Oracle table over all automata with at most 3 states (binary alphabet
// only): for each length-n word and exact state count q, the minimum
// logAcc_mode over automata accepting that word, or -1 when none does.
struct OracleTable {
  int n = 0;
  int b = 2;
  Mode mode = Mode::pi;
  std::vector<std::array<int, 3>> best;  // [word code][q - 1]
};

// Memoized build (n <= 8 kept small by the callers; binary alphabet).
const OracleTable& oracle_table(int n, Mode mode);

// MSB-first numeral value of a word, and its inverse.
std::uint32_t word_code(const Word& w);
Word word_from_code(std::uint32_t code, int n, int b);

// Lexicographically least relabeling of the automaton over state
// permutations fixing the initial state: the canonical representative of its
// relabeling class, for witness deduplication. Guard: at most 8 states.
Nfa canonical_form(const Nfa& m);

}  // namespace autocomp
