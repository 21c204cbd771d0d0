#include "autocomp/nfa.hpp"

#include <algorithm>

namespace autocomp {

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::delta: return "delta";
    case Mode::pi: return "pi";
    case Mode::omega: return "omega";
  }
  return "?";
}

std::optional<Mode> parse_mode(const std::string& s) {
  if (s == "delta") return Mode::delta;
  if (s == "pi") return Mode::pi;
  if (s == "omega") return Mode::omega;
  return std::nullopt;
}

Word parse_word(const std::string& text, std::optional<int> base) {
  Word w;
  int max_digit = -1;
  for (char c : text) {
    if (c < '0' || c > '3') fail(Errc::BadArgument, "word digits must be in 0..3, got '" + std::string(1, c) + "'");
    int d = c - '0';
    max_digit = std::max(max_digit, d);
    w.symbols.push_back(static_cast<Symbol>(d));
  }
  int inferred = std::max(2, max_digit + 1);
  if (base) {
    if (*base < inferred)
      fail(Errc::BadArgument, "base " + std::to_string(*base) + " cannot represent word (needs >= " + std::to_string(inferred) + ")");
    w.base = *base;
  } else {
    w.base = inferred;
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string s;
  s.reserve(w.symbols.size());
  for (Symbol c : w.symbols) s.push_back(static_cast<char>('0' + c));
  return s;
}

Word complement_word(const Word& w) {
  Word r = w;
  for (Symbol& c : r.symbols) c = static_cast<Symbol>(w.base - 1 - c);
  return r;
}

Word reverse_word(const Word& w) {
  Word r = w;
  std::reverse(r.symbols.begin(), r.symbols.end());
  return r;
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::OutOfRangeState: return "OutOfRangeState";
    case Errc::OutOfRangeSymbol: return "OutOfRangeSymbol";
    case Errc::DuplicateTransition: return "DuplicateTransition";
    case Errc::AlphabetMismatch: return "AlphabetMismatch";
    case Errc::StateCountTooLargeForWordCounting: return "StateCountTooLargeForWordCounting";
    case Errc::NoAcceptanceAtLength: return "NoAcceptanceAtLength";
    case Errc::BaseTooSmall: return "BaseTooSmall";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::WordTooLong: return "WordTooLong";
    case Errc::LengthTooLarge: return "LengthTooLarge";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::BadCardinality: return "BadCardinality";
    case Errc::EmptyWord: return "EmptyWord";
    case Errc::UnknownFixture: return "UnknownFixture";
    case Errc::BadBase: return "BadBase";
    case Errc::BadEpsilon: return "BadEpsilon";
    case Errc::InfiniteLogAcc: return "InfiniteLogAcc";
    case Errc::UnknownTheorem: return "UnknownTheorem";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::BadArgument: return "BadArgument";
  }
  return "UnknownError";
}

bool is_guard_violation(Errc c) {
  switch (c) {
    case Errc::WordTooLong:
    case Errc::LengthTooLarge:
    case Errc::StateCountTooLargeForWordCounting:
    case Errc::SearchBudgetExceeded:
    case Errc::BudgetExceeded:
      return true;
    default:
      return false;
  }
}

const Nfa& validate(const Nfa& m) {
  if (m.num_states < 1) fail(Errc::OutOfRangeState, "automaton needs at least one state");
  if (m.alphabet_size < 1) fail(Errc::OutOfRangeSymbol, "alphabet size must be >= 1");
  if (m.initial != 0) fail(Errc::OutOfRangeState, "initial state must be 0");
  if (m.accept < 0 || m.accept >= m.num_states)
    fail(Errc::OutOfRangeState, "accept state " + std::to_string(m.accept) + " with " + std::to_string(m.num_states) + " states");
  for (const Transition& t : m.transitions) {
    if (t.from < 0 || t.from >= m.num_states || t.to < 0 || t.to >= m.num_states)
      fail(Errc::OutOfRangeState, "transition (" + std::to_string(t.from) + "," + std::to_string(int(t.symbol)) + "," + std::to_string(t.to) + ") with " + std::to_string(m.num_states) + " states");
    if (t.symbol >= m.alphabet_size)
      fail(Errc::OutOfRangeSymbol, "symbol " + std::to_string(int(t.symbol)) + " with alphabet size " + std::to_string(m.alphabet_size));
  }
  std::vector<Transition> sorted = m.transitions;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(Errc::DuplicateTransition, "transition set contains a duplicate triple");
  return m;
}

Nfa normalized(Nfa m) {
  validate(m);
  std::sort(m.transitions.begin(), m.transitions.end());
  return m;
}

bool is_deterministic(const Nfa& m) {
  std::vector<Transition> sorted = m.transitions;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i].from == sorted[i - 1].from && sorted[i].symbol == sorted[i - 1].symbol)
      return false;
  return true;
}

bool accepts(const Nfa& m, const Word& w) {
  if (w.base > m.alphabet_size)
    fail(Errc::AlphabetMismatch, "word base " + std::to_string(w.base) + " exceeds automaton alphabet " + std::to_string(m.alphabet_size));
  for (Symbol c : w.symbols)
    if (c >= m.alphabet_size)
      fail(Errc::AlphabetMismatch, "word symbol out of automaton alphabet");
  std::vector<char> cur(static_cast<size_t>(m.num_states), 0);
  std::vector<char> next(static_cast<size_t>(m.num_states), 0);
  cur[0] = 1;
  for (Symbol c : w.symbols) {
    std::fill(next.begin(), next.end(), 0);
    bool any = false;
    for (const Transition& t : m.transitions)
      if (t.symbol == c && cur[static_cast<size_t>(t.from)]) {
        next[static_cast<size_t>(t.to)] = 1;
        any = true;
      }
    cur.swap(next);
    if (!any) return false;
  }
  return cur[static_cast<size_t>(m.accept)] != 0;
}

}  // namespace autocomp
