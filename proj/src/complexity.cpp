#include "autocomp/complexity.hpp"

#include <algorithm>
#include <set>

#include "autocomp/enumeration.hpp"
#include "autocomp/error.hpp"
#include "autocomp/parallel.hpp"
#include "autocomp/search.hpp"

namespace autocomp {

namespace {

// Common validation: length guard, base bounds, symbols within base.
Word effective_word(const Word& x, int b, int max_n) {
  if (static_cast<int>(x.size()) > max_n) fail(Errc::WordTooLong, "word exceeds the length guard");
  if (b < 2) fail(Errc::BaseTooSmall, "base must be at least 2");
  if (b > kMaxSearchBase) fail(Errc::BadArgument, "alphabets larger than 4 are unsupported");
  for (const Symbol s : x.symbols)
    if (s >= b) fail(Errc::BaseTooSmall, "base too small for the word's symbols");
  Word w = x;
  w.base = b;
  return w;
}

int delta_state_cap(int n) { return n + 2; }  // the determinized witness has <= n+1 states

int state_cap(int n, Mode mode) {
  return mode == Mode::delta ? delta_state_cap(n) : hyde_bound(n);
}

}  // namespace

bool StructureFrontier::member(int q, int m) const {
  for (const auto& p : points)
    if (p.states <= q && p.log_acc <= m) return true;
  return false;
}

StructureFrontier structure_frontier(const Word& x, int b, Mode mode, int jobs,
                                     const Guards& guards) {
  const Word w = effective_word(x, b, guards.frontier_max_n);
  const int n = static_cast<int>(w.size());
  const int qcap = hyde_bound(n);

  std::vector<LogAcc> table;
  if (jobs <= 1) {
    SequenceSearcher ss;
    ss.set_word(w);
    table = ss.min_logacc_by_states(qcap, mode);
  } else {
    int depth = 1;
    while (depth < n + 1 && depth < 6 &&
           count_state_sequences(depth, qcap) < Count(4) * jobs)
      ++depth;
    const auto prefixes = partition_prefixes(n + 1, qcap, depth);
    const auto partials = run_indexed<std::vector<LogAcc>>(
        static_cast<int>(prefixes.size()), jobs, [&](int i) {
          SequenceSearcher ss;
          ss.set_word(w);
          return ss.min_logacc_by_states_prefix(prefixes[static_cast<std::size_t>(i)], qcap, mode);
        });
    table.assign(static_cast<std::size_t>(qcap), LogAcc::inf());
    for (const auto& part : partials)
      for (std::size_t i = 0; i < part.size(); ++i) table[i] = std::min(table[i], part[i]);
  }

  StructureFrontier f;
  f.word = w;
  f.base = b;
  f.mode = mode;
  LogAcc best = LogAcc::inf();
  for (int q = 1; q <= qcap; ++q) {
    const LogAcc t = table[static_cast<std::size_t>(q - 1)];
    if (t < best) {
      f.points.push_back({q, t.value()});
      best = t;
    }
  }
  return f;
}

LogAcc h(const Word& x, int k, int b, Mode mode, const Guards& guards) {
  if (k < 1) fail(Errc::BadArgument, "state bound must be positive");
  const Word w = effective_word(x, b, guards.frontier_max_n);
  const int n = static_cast<int>(w.size());
  SequenceSearcher ss;
  ss.set_word(w);
  const int cap = std::min(k, n + 1);  // a length-n path visits at most n+1 distinct states
  for (int m = 0; m <= n; ++m)
    if (ss.decide(cap, m, mode)) return LogAcc(m);
  return LogAcc::inf();  // unreachable: the one-state model reaches m = n
}

int h_star(const Word& x, int m, int b, Mode mode, StateSequence* witness, const Guards& guards) {
  if (m < 0) fail(Errc::BadArgument, "log-count bound must be nonnegative");
  const Word w = effective_word(x, b, guards.frontier_max_n);
  const int n = static_cast<int>(w.size());
  SequenceSearcher ss;
  ss.set_word(w);
  const int cap = std::max(1, state_cap(n, mode));
  for (int q = 1; q <= cap; ++q)
    if (ss.decide(q, m, mode, witness)) return q;
  fail(Errc::BadArgument, "internal error: no model within the state cap");
}

int a_pi(const Word& x, StateSequence* witness, const Guards& guards) {
  return h_star(x, 0, std::max(2, x.base), Mode::pi, witness, guards);
}

int a_omega(const Word& x, StateSequence* witness, const Guards& guards) {
  return h_star(x, 0, std::max(2, x.base), Mode::omega, witness, guards);
}

int a_minus(const Word& x, StateSequence* witness, const Guards& guards) {
  return h_star(x, 0, std::max(2, x.base), Mode::delta, witness, guards);
}

int a_dagger(const Word& x, const Guards& guards) {
  const int n = static_cast<int>(x.size());
  if (n > guards.dagger_max_n) fail(Errc::WordTooLong, "word exceeds the unique-path length guard");
  if (x.base != 2) fail(Errc::BadArgument, "unique-path search supports binary words");
  if (n == 0) return 1;

  long long budget = guards.dagger_node_budget;
  const auto spend = [&budget](long long amount) {
    budget -= amount;
    if (budget < 0)
      fail(Errc::SearchBudgetExceeded, "unique-path search budget exhausted");
  };

  // Exhaustive over all automata with up to 3 states.
  for (int q = 1; q <= 3; ++q) {
    bool found = false;
    for_each_tiny(q, 2, /*canonical_only=*/true, [&](const TinyNfa& t) {
      spend(1);
      if (tiny_unique_single_path_word(t, x.symbols.data(), n)) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) return q;
  }

  // A single-accepting-path witness is also a unique-path witness (the other
  // words all have zero paths), so a_pi bounds the answer from above; since
  // no 3-state witness exists, a_pi >= 4 here, and a_pi == 4 settles it.
  const int ub = a_pi(x, nullptr, guards);
  if (ub <= 4) return 4;

  // Cheap 4-state pass: automata induced by accepting paths of x. Finding a
  // witness here proves the answer is 4; not finding one proves nothing.
  bool found4 = false;
  {
    SequenceSearcher ss;
    ss.set_word(x);
    ss.enumerate_qualifying(4, 4 * n, Mode::pi, [&](const StateSequence& s) {
      spend(1);
      const Nfa m = induced_nfa(s, x);
      TinyNfa t;
      t.q = m.num_states;
      t.b = m.alphabet_size;
      t.accept = m.accept;
      for (const auto& tr : m.transitions)
        t.row[tr.from][tr.symbol] |= static_cast<std::uint8_t>(1u << tr.to);
      if (tiny_unique_single_path_word(t, x.symbols.data(), n)) {
        found4 = true;
        return false;
      }
      return true;
    });
  }
  if (found4) return 4;

  // Last resort: unrestricted 4-state enumeration under the budget. Complete
  // exhaustion proves the answer exceeds the 4-state guard; either way the
  // caller gets the honest signal with the known upper bound.
  const long long visited = for_each_tiny(4, 2, /*canonical_only=*/true, [&](const TinyNfa& t) {
    spend(1);
    if (tiny_unique_single_path_word(t, x.symbols.data(), n)) {
      found4 = true;
      return false;
    }
    return true;
  });
  if (found4) return 4;
  (void)visited;
  fail(Errc::SearchBudgetExceeded,
       "no witness within 4 states; best known upper bound is " + std::to_string(ub) +
           " (single-accepting-path witness)");
}

int doubleton_complexity(const DoubletonQuery& f, Mode mode, const Guards& guards) {
  if (mode == Mode::delta) fail(Errc::BadArgument, "set complexity modes: pi, omega");
  const int n = static_cast<int>(f.words[0].size());
  if (n > guards.doubleton_max_n) fail(Errc::WordTooLong, "word exceeds the pair length guard");
  if (f.words.size() == 1)
    return h_star(f.words[0], 0, std::max(2, f.base), mode, nullptr, guards);
  const int ub = 2 * (n / 2) + 1;  // the two-branch witness construction
  const int r =
      pair_min_states(f.words[0], f.words[1], mode, ub, guards.pair_node_budget);
  if (r < 0) fail(Errc::BadArgument, "internal error: no model within the construction bound");
  return r;
}

namespace {

std::uint32_t reverse_code(std::uint32_t code, int n) {
  std::uint32_t out = 0;
  for (int i = 0; i < n; ++i) {
    out = (out << 1) | (code & 1u);
    code >>= 1;
  }
  return out;
}

}  // namespace

std::vector<Word> check_mode_equality(int max_len, const EqualityScanOptions& opts,
                                      const Guards& guards) {
  if (max_len > guards.equality_scan_max_len)
    fail(Errc::WordTooLong, "scan exceeds the length guard");
  std::vector<Word> out;
  std::uint64_t scanned = 0;
  for (int n = std::max(1, opts.min_len); n <= max_len; ++n) {
    const std::uint32_t total = 1u << n;
    const std::uint32_t full_mask = total - 1;
    std::vector<std::uint32_t> reps;
    for (std::uint32_t code = 0; code < total; ++code) {
      const std::uint32_t comp = code ^ full_mask;
      const std::uint32_t rev = reverse_code(code, n);
      const std::uint32_t revcomp = rev ^ full_mask;
      if (code <= comp && code <= rev && code <= revcomp) reps.push_back(code);
    }
    const auto differs = run_indexed<std::uint8_t>(
        static_cast<int>(reps.size()), opts.jobs, [&](int i) -> std::uint8_t {
          const Word w = word_from_code(reps[static_cast<std::size_t>(i)], n, 2);
          SequenceSearcher ss;
          ss.set_word(w);
          int api = 0;
          for (int q = 1; q <= hyde_bound(n); ++q)
            if (ss.decide(q, 0, Mode::pi)) {
              api = q;
              break;
            }
          if (api <= 1) return 0;
          // a_omega < a_pi iff a witness exists with one state fewer
          return ss.decide(api - 1, 0, Mode::omega) ? 1 : 0;
        });
    std::set<std::uint32_t> hits;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (!differs[i]) continue;
      const std::uint32_t code = reps[i];
      hits.insert(code);
      hits.insert(code ^ full_mask);
      hits.insert(reverse_code(code, n));
      hits.insert(reverse_code(code, n) ^ full_mask);
    }
    for (const std::uint32_t code : hits) out.push_back(word_from_code(code, n, 2));
    scanned += total;
    if (opts.progress) opts.progress(n, scanned);
  }
  return out;
}

int oracle_h_star(const Word& x, int m, int b, Mode mode) {
  if (static_cast<int>(x.size()) > 6) fail(Errc::WordTooLong, "oracle supports lengths 0..6");
  if (b != 2 || x.base > 2) fail(Errc::BadArgument, "oracle supports binary words");
  if (m < 0) fail(Errc::BadArgument, "log-count bound must be nonnegative");
  const int n = static_cast<int>(x.size());
  const auto& tab = oracle_table(n, mode);
  const std::uint32_t code = word_code(x);
  for (int q = 1; q <= 3; ++q) {
    const int slot = tab.best[code][static_cast<std::size_t>(q - 1)];
    if (slot >= 0 && slot <= m) return q;
  }
  fail(Errc::SearchBudgetExceeded, "oracle bound: answer exceeds 3 states");
}

}  // namespace autocomp
