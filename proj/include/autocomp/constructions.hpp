#pragma once

#include <string>
#include <vector>

#include "autocomp/nfa.hpp"
#include "autocomp/rational.hpp"

namespace autocomp {

// A query set of 1 or 2 distinct words of equal length.
struct DoubletonQuery {
  std::vector<Word> words;  // size 1 or 2, equal lengths, distinct
  int base = 2;

  static DoubletonQuery of(std::vector<Word> ws);  // validates, sorts, infers base
  int length() const { return words.front().size(); }
  int cardinality() const { return static_cast<int>(words.size()); }
};

// The floor(n/2)+1-state witness accepting x along exactly one length-n path
// (and therefore accepting no other length-n word). Odd n = 2m+1: states
// 0..m, initial = accept = 0, forward chain labeled x_1..x_m, loop x_{m+1} at
// state m, backward chain labeled x_{m+2}..x_n. Even n: the construction for
// x_1..x_{n-1} plus one fresh accept state reached by x_n from state 0.
Nfa kayleigh(const Word& x);

// Deterministic variant: every state whose forward out-label equals its
// backward out-label is split into a forward copy (keeps the forward
// out-edge and the forward in-edge) and a starred copy (keeps the backward
// out-edge and the backward in-edge). States: floor(n/2)+1 + #conflicts.
// Accepts exactly {x} among length-n words.
Nfa exploded_kayleigh(const Word& x);

// Shared-root doubleton witness: |F| = 1 reduces to kayleigh; |F| = 2 builds
// one branch per word into a shared accept state, f*floor(n/2)+1 states,
// exactly f accepting paths, and L ∩ [b]^n = F for distinct words.
Nfa chambers_hyde(const DoubletonQuery& f);

// Hard-coded regression automata: "fig2", "fig3", "fig4-left", "fig4-right",
// "fig5", "fig6", "fig7", "fig8".
Nfa fixture(const std::string& id);
std::vector<std::string> fixture_ids();

// Exact fraction of x in [b]^n whose exploded_kayleigh witness has at most
// (1/2 + 1/(2b) + epsilon) * n states; closed form from the binomial
// distribution of conflict counts. Requires n odd, 1 <= b <= 4, epsilon > 0.
Rational density_fraction(int n, int b, const Rational& epsilon);

// The same fraction by direct construction over all b^n words (n <= 13
// cross-check oracle).
Rational density_fraction_by_enumeration(int n, int b, const Rational& epsilon);

}  // namespace autocomp
