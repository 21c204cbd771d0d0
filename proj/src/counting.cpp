#include "autocomp/counting.hpp"

#include <bit>
#include <vector>

namespace autocomp {

std::string to_string(const AcceptanceCount& c) {
  return c.infinite ? "inf" : c.value.str();
}

std::string to_string(LogAcc l) {
  return l.is_infinite() ? "inf" : std::to_string(l.value());
}

int ceil_log(const Count& count, int b) {
  if (b < 2) fail(Errc::BaseTooSmall, "log base must be >= 2");
  if (count < 1) fail(Errc::NoAcceptanceAtLength, "ceil_log requires count >= 1");
  int m = 0;
  Count power = 1;
  while (power < count) {
    power *= b;
    ++m;
  }
  return m;
}

Count count_paths_total(const Nfa& m, int n) {
  std::vector<Count> cur(static_cast<size_t>(m.num_states), 0);
  std::vector<Count> next(static_cast<size_t>(m.num_states), 0);
  cur[0] = 1;
  for (int step = 0; step < n; ++step) {
    for (Count& c : next) c = 0;
    for (const Transition& t : m.transitions)
      next[static_cast<size_t>(t.to)] += cur[static_cast<size_t>(t.from)];
    cur.swap(next);
  }
  return cur[static_cast<size_t>(m.accept)];
}

Count count_paths_for_word(const Nfa& m, const Word& w) {
  if (w.base > m.alphabet_size)
    fail(Errc::AlphabetMismatch, "word base exceeds automaton alphabet");
  std::vector<Count> cur(static_cast<size_t>(m.num_states), 0);
  std::vector<Count> next(static_cast<size_t>(m.num_states), 0);
  cur[0] = 1;
  for (Symbol c : w.symbols) {
    for (Count& x : next) x = 0;
    for (const Transition& t : m.transitions)
      if (t.symbol == c)
        next[static_cast<size_t>(t.to)] += cur[static_cast<size_t>(t.from)];
    cur.swap(next);
  }
  return cur[static_cast<size_t>(m.accept)];
}

namespace {

constexpr int kWordCountStateGuard = 12;

Count count_words_subset_dp(const Nfa& m, int n) {
  const int q = m.num_states;
  const size_t num_subsets = size_t{1} << q;
  // per-(symbol, state) successor masks
  std::vector<std::uint32_t> row(static_cast<size_t>(m.alphabet_size) * q, 0);
  for (const Transition& t : m.transitions)
    row[static_cast<size_t>(t.symbol) * q + static_cast<size_t>(t.from)] |=
        std::uint32_t{1} << t.to;

  std::vector<Count> cur(num_subsets, 0);
  std::vector<Count> next(num_subsets, 0);
  cur[1] = 1;  // the empty prefix reaches exactly {initial}
  for (int step = 0; step < n; ++step) {
    for (Count& c : next) c = 0;
    for (size_t s = 1; s < num_subsets; ++s) {
      if (cur[s] == 0) continue;
      for (int sym = 0; sym < m.alphabet_size; ++sym) {
        std::uint32_t target = 0;
        std::uint32_t rest = static_cast<std::uint32_t>(s);
        while (rest) {
          int u = std::countr_zero(rest);
          rest &= rest - 1;
          target |= row[static_cast<size_t>(sym) * q + static_cast<size_t>(u)];
        }
        if (target) next[target] += cur[s];
      }
    }
    cur.swap(next);
  }
  Count total = 0;
  const std::uint32_t accept_bit = std::uint32_t{1} << m.accept;
  for (size_t s = 1; s < num_subsets; ++s)
    if ((s & accept_bit) && cur[s] != 0) total += cur[s];
  return total;
}

}  // namespace

Count count_words(const Nfa& m, int n) {
  if (is_deterministic(m)) return count_paths_total(m, n);
  if (m.num_states > kWordCountStateGuard)
    fail(Errc::StateCountTooLargeForWordCounting,
         "word counting guarded at " + std::to_string(kWordCountStateGuard) +
             " states for nondeterministic automata, got " +
             std::to_string(m.num_states));
  return count_words_subset_dp(m, n);
}

AcceptanceCount acceptance_count(const Nfa& m, int n, Mode mode) {
  switch (mode) {
    case Mode::pi:
      return AcceptanceCount::of(count_paths_total(m, n));
    case Mode::omega:
      return AcceptanceCount::of(count_words(m, n));
    case Mode::delta:
      if (!is_deterministic(m)) return AcceptanceCount::inf();
      return AcceptanceCount::of(count_paths_total(m, n));
  }
  fail(Errc::BadArgument, "unknown mode");
}

LogAcc log_acc(const Nfa& m, int n, int b, Mode mode) {
  if (b < 2) fail(Errc::BaseTooSmall, "logAcc base must be >= 2");
  AcceptanceCount acc = acceptance_count(m, n, mode);
  if (acc.infinite) return LogAcc::inf();
  if (acc.value == 0)
    fail(Errc::NoAcceptanceAtLength, "automaton accepts nothing at length " + std::to_string(n));
  return LogAcc(ceil_log(acc.value, b));
}

}  // namespace autocomp
