#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "autocomp/error.hpp"

namespace autocomp {

using State = int;
using Symbol = std::uint8_t;

// Acceptance-counting semantics.
enum class Mode { delta, pi, omega };

const char* mode_name(Mode m);                  // "delta" / "pi" / "omega"
std::optional<Mode> parse_mode(const std::string& s);

struct Transition {
  State from = 0;
  Symbol symbol = 0;
  State to = 0;

  auto operator<=>(const Transition&) const = default;
};

// A word over the alphabet [base] = {0, ..., base-1}.
struct Word {
  std::vector<Symbol> symbols;
  int base = 2;

  int size() const { return static_cast<int>(symbols.size()); }
  bool empty() const { return symbols.empty(); }
  Symbol operator[](int i) const { return symbols[static_cast<size_t>(i)]; }

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
};

// Parses a digit string over 0..3 ("010110"); base = max(2, 1 + max digit)
// unless an explicit base is given (which must cover every digit).
Word parse_word(const std::string& text, std::optional<int> base = {});
std::string format_word(const Word& w);

Word complement_word(const Word& w);  // symbol c -> base-1-c
Word reverse_word(const Word& w);

// Epsilon-free NFA with one initial state (always 0) and one accept state.
// `transitions` has set semantics: validate() rejects duplicates.
struct Nfa {
  int num_states = 1;
  int alphabet_size = 2;
  State initial = 0;
  State accept = 0;
  std::vector<Transition> transitions;

  bool operator==(const Nfa&) const = default;
};

// Checks all Nfa invariants (state/symbol ranges, initial = 0, no duplicate
// triples). Throws Error on violation; returns its argument otherwise.
const Nfa& validate(const Nfa& m);

// Sorts transitions, asserting set semantics. Normalized form is what
// fixtures and canonical comparisons use.
Nfa normalized(Nfa m);

bool is_deterministic(const Nfa& m);

// True iff some path from initial to accept spells w.
bool accepts(const Nfa& m, const Word& w);

}  // namespace autocomp
