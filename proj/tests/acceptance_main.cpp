// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion recomputes its claim through the public library API
// and carries a wall-clock cap; exceeding the cap fails the criterion even if
// the values check out.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "autocomp/complexity.hpp"
#include "autocomp/constructions.hpp"
#include "autocomp/counting.hpp"
#include "autocomp/enumeration.hpp"
#include "autocomp/error.hpp"
#include "autocomp/explain.hpp"

using namespace autocomp;

namespace {

struct Ctx {
  std::vector<std::string> failures;

  void check(bool cond, const std::string& what) {
    if (!cond) failures.push_back(what);
  }
  template <typename A, typename B>
  void eq(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << got << ", want " << want;
      failures.push_back(os.str());
    }
  }
};

struct Criterion {
  std::string name;
  double cap_seconds;
  std::function<void(Ctx&)> run;
};

bool extended_scan() {
  const char* v = std::getenv("AC_ACCEPTANCE_EXTENDED");
  return v != nullptr && std::strcmp(v, "1") == 0;
}

std::uint32_t reverse_code(std::uint32_t code, int n) {
  std::uint32_t r = 0;
  for (int i = 0; i < n; ++i) {
    r = (r << 1) | (code & 1u);
    code >>= 1;
  }
  return r;
}

// --- criteria ---------------------------------------------------------------

void c1_benchmark_word(Ctx& ctx) {
  ctx.eq(a_pi(parse_word("010111010")), 5, "path complexity of 010111010");
}

void c2_separation_at_four(Ctx& ctx) {
  const Word x = parse_word("001011");
  ctx.eq(h_star(x, 4, 2, Mode::pi), 3, "min states at log-count 4, path mode");
  ctx.eq(h_star(x, 4, 2, Mode::omega), 2, "min states at log-count 4, word mode");
}

void c3_separation_at_one(Ctx& ctx) {
  const Word x = parse_word("000010000");
  ctx.eq(h_star(x, 1, 2, Mode::pi), 5, "min states at log-count 1, path mode");
  ctx.eq(h_star(x, 1, 2, Mode::omega), 4, "min states at log-count 1, word mode");
}

void c4_selection_long_word(Ctx& ctx) {
  const Word x = parse_word("01111011011");

  const ExplanationReport pi = explain(x, 2, Mode::pi);
  ctx.eq(pi.optimal_states, 3, "path-mode optimal states");
  ctx.eq(pi.optimal_log_acc, 2, "path-mode optimal log-count");
  ctx.eq(pi.p_value.rounded2(), std::string("0.04"), "path-mode p-value");
  ctx.eq(pi.witnesses.size(), std::size_t{1}, "path-mode witness count");
  if (!pi.witnesses.empty())
    ctx.eq(format_sequence(pi.witnesses.front()), std::string("012120120120"),
           "path-mode witness");

  const ExplanationReport de = explain(x, 2, Mode::delta);
  ctx.eq(de.optimal_states, 3, "deterministic-mode optimal states");
  ctx.eq(de.optimal_log_acc, 4, "deterministic-mode optimal log-count");
  ctx.eq(de.p_value.rounded2(), std::string("0.30"), "deterministic-mode p-value");
  ctx.eq(de.witnesses.size(), std::size_t{1}, "deterministic-mode witness count");
  if (!de.witnesses.empty())
    ctx.eq(format_sequence(de.witnesses.front()), std::string("012020120120"),
           "deterministic-mode witness");
}

void c5_selection_plain_word(Ctx& ctx) {
  const Word x = parse_word("0110001000");

  const ExplanationReport pi = explain(x, 2, Mode::pi);
  ctx.eq(pi.optimal_states, 4, "path-mode optimal states");
  ctx.eq(pi.optimal_log_acc, 2, "path-mode optimal log-count");
  ctx.eq(pi.p_value.rounded2(), std::string("0.79"), "path-mode p-value");
  ctx.check(!pi.witnesses.empty(), "path-mode witness set must not be empty");

  const ExplanationReport om = explain(x, 2, Mode::omega);
  ctx.eq(om.optimal_states, 2, "word-mode optimal states");
  ctx.eq(om.optimal_log_acc, 7, "word-mode optimal log-count");
  ctx.eq(om.p_value.rounded2(), std::string("0.60"), "word-mode p-value");
}

void c6_pair_modes_split(Ctx& ctx) {
  const std::vector<std::uint32_t> lang = {6, 15};  // {0110, 1111}
  for (int q = 1; q <= 2; ++q) {
    bool any = false;
    for_each_tiny(q, 2, /*canonical_only=*/true, [&](const TinyNfa& t) {
      if (tiny_language_equals(t, 4, lang)) {
        any = true;
        return false;
      }
      return true;
    });
    ctx.check(!any, "no " + std::to_string(q) + "-state machine pins the pair at length 4");
  }
  bool any3 = false;
  std::uint64_t min_paths = UINT64_MAX;
  for_each_tiny(3, 2, /*canonical_only=*/true, [&](const TinyNfa& t) {
    if (tiny_language_equals(t, 4, lang)) {
      any3 = true;
      const std::uint64_t p = tiny_paths_total(t, 4);
      if (p < min_paths) min_paths = p;
    }
    return true;
  });
  ctx.check(any3, "some 3-state machine pins the pair at length 4");
  ctx.eq(min_paths, std::uint64_t{3}, "fewest accepting paths over 3-state pair machines");

  const auto f = DoubletonQuery::of({parse_word("0110"), parse_word("1111")});
  ctx.eq(doubleton_complexity(f, Mode::omega), 3, "pair complexity, word mode");
  ctx.eq(doubleton_complexity(f, Mode::pi), 4, "pair complexity, path mode");
}

void c7_mode_equality_scan(Ctx& ctx) {
  const int max_len = extended_scan() ? 10 : 8;
  EqualityScanOptions opts;
  const std::vector<Word> diff = check_mode_equality(max_len, opts);
  std::ostringstream os;
  for (const Word& w : diff) os << ' ' << format_word(w);
  ctx.check(diff.empty(),
            "words with differing path/word complexity through length " +
                std::to_string(max_len) + ":" + os.str());
}

void c8_state_bound(Ctx& ctx) {
  // The bound is witnessed constructively: a floor(n/2)+1-state automaton
  // accepting x along exactly one length-n path is, by definition, an upper
  // bound on the path-mode complexity.  Verifying the witness for every word
  // proves the bound exhaustively; no minimization search is needed.
  for (int n = 1; n <= 12; ++n) {
    const int bound = hyde_bound(n);
    for (std::uint32_t code = 0; code < (1u << n); ++code) {
      const Word x = word_from_code(code, n, 2);
      const Nfa k = kayleigh(x);
      if (k.num_states != bound || count_paths_total(k, n) != 1 || count_words(k, n) != 1 ||
          count_paths_for_word(k, x) != 1) {
        ctx.check(false, "backtracking-cycle witness malformed for " + format_word(x));
        return;
      }
    }
  }
  // Cross-check against the exact search engine where that is affordable:
  // the computed minimum must respect the same bound.
  for (int n = 1; n <= 9; ++n) {
    const std::uint32_t mask = (1u << n) - 1u;
    const int bound = hyde_bound(n);
    for (std::uint32_t code = 0; code < (1u << n); ++code) {
      const std::uint32_t comp = (~code) & mask;
      const std::uint32_t rev = reverse_code(code, n);
      const std::uint32_t revcomp = (~rev) & mask;
      // complement and reversal preserve path complexity; scan orbit leaders
      if (code > comp || code > rev || code > revcomp) continue;
      const Word x = word_from_code(code, n, 2);
      const int got = a_pi(x);
      if (got > bound) {
        ctx.check(false, "path complexity " + std::to_string(got) + " exceeds bound " +
                             std::to_string(bound) + " for " + format_word(x));
        return;
      }
    }
  }
}

void c9_oracle_agreement(Ctx& ctx) {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint32_t code = 0; code < (1u << n); ++code) {
      const Word x = word_from_code(code, n, 2);
      for (const Mode mode : {Mode::pi, Mode::omega}) {
        for (int m = 0; m <= 6; ++m) {
          const int fast = h_star(x, m, 2, mode);
          bool ok;
          if (fast <= 3) {
            int slow = -1;
            try {
              slow = oracle_h_star(x, m, 2, mode);
              ok = (slow == fast);
            } catch (const Error&) {
              ok = false;
            }
          } else {
            try {
              oracle_h_star(x, m, 2, mode);
              ok = false;  // oracle found an answer within 3 states; search missed it
            } catch (const Error& e) {
              ok = (e.code() == Errc::SearchBudgetExceeded);
            }
          }
          if (!ok) {
            ctx.check(false, "search/oracle mismatch at word " + format_word(x) + ", mode " +
                                 mode_name(mode) + ", log-count " + std::to_string(m));
            return;
          }
        }
      }
    }
  }
}

void c10_witness_census(Ctx& ctx) {
  for (int n = 1; n <= 13; n += 2) {
    for (std::uint32_t code = 0; code < (1u << n); ++code) {
      const Word x = word_from_code(code, n, 2);
      const Nfa e = exploded_kayleigh(x);
      if (!is_deterministic(e) || count_words(e, n) != 1 || !accepts(e, x)) {
        ctx.check(false, "split-state witness malformed for " + format_word(x));
        return;
      }
    }
  }
  const Rational eps = parse_rational("0.1");
  ctx.check(density_fraction(13, 2, eps) == density_fraction_by_enumeration(13, 2, eps),
            "closed-form density must match direct enumeration at length 13");
}

void c11_counting_invariants(Ctx& ctx) {
  std::mt19937 rng(20260816u);
  std::uniform_int_distribution<int> qd(1, 5), nd(0, 10);
  std::uniform_int_distribution<int> keep(0, 999);
  for (int trial = 0; trial < 10000; ++trial) {
    const int q = qd(rng);
    Nfa m;
    m.num_states = q;
    m.alphabet_size = 2;
    m.accept = std::uniform_int_distribution<int>(0, q - 1)(rng);
    for (int u = 0; u < q; ++u)
      for (int sym = 0; sym < 2; ++sym)
        for (int v = 0; v < q; ++v)
          if (keep(rng) < 1500 / q)
            m.transitions.push_back({u, static_cast<Symbol>(sym), v});
    const int n = nd(rng);

    const Count total = count_paths_total(m, n);
    const Count words = count_words(m, n);
    if (words > total) {
      ctx.check(false, "more words than paths at trial " + std::to_string(trial));
      return;
    }
    if (is_deterministic(m) && words != total) {
      ctx.check(false, "deterministic path/word mismatch at trial " + std::to_string(trial));
      return;
    }
    if (n <= 8) {
      Count path_sum = 0;
      Count accepted = 0;
      for (std::uint32_t code = 0; code < (1u << n); ++code) {
        const Word w = word_from_code(code, n, 2);
        const Count p = count_paths_for_word(m, w);
        path_sum += p;
        if (p > 0) ++accepted;
        if ((p > 0) != accepts(m, w)) {
          ctx.check(false, "acceptance/path-count disagreement at trial " + std::to_string(trial));
          return;
        }
      }
      if (path_sum != total || accepted != words) {
        ctx.check(false, "per-word sums disagree with totals at trial " + std::to_string(trial));
        return;
      }
    }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"path complexity of the nine-symbol benchmark word is five", 60, c1_benchmark_word},
      {"counting modes separate at log-count four on 001011", 10, c2_separation_at_four},
      {"counting modes separate at log-count one on 000010000", 300, c3_separation_at_one},
      {"model selection on 01111011011: optima, p-values, sole witnesses", 1800,
       c4_selection_long_word},
      {"model selection on 0110001000: optima and p-values", 1800, c5_selection_plain_word},
      {"the pair {0110,1111} needs three states by words, four by paths", 600,
       c6_pair_modes_split},
      {std::string("path and word complexities agree on all binary words through length ") +
           (extended_scan() ? "10" : "8"),
       3600, c7_mode_equality_scan},
      {"path complexity obeys the floor(n/2)+1 bound through length twelve", 600, c8_state_bound},
      {"sequence-induced search matches the unrestricted three-state oracle", 600,
       c9_oracle_agreement},
      {"split-state witnesses are deterministic singletons; density closed form checks out", 300,
       c10_witness_census},
      {"counting invariants hold on ten thousand random machines", 120, c11_counting_invariants},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    Ctx ctx;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(ctx);
    } catch (const std::exception& e) {
      ctx.check(false, std::string("unexpected exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > c.cap_seconds)
      ctx.check(false, "time cap of " + std::to_string(c.cap_seconds) + "s exceeded");

    const bool pass = ctx.failures.empty();
    failed += pass ? 0 : 1;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << "  [" << (i + 1) << "/" << criteria.size() << "] "
         << c.name << "  (" << std::fixed;
    line.precision(1);
    line << elapsed << "s)";
    std::cout << line.str() << '\n';
    for (const std::string& f : ctx.failures) std::cout << "      - " << f << '\n';
    std::cout.flush();
  }

  if (failed == 0) {
    std::cout << "acceptance: all " << criteria.size() << " criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failed << " of " << criteria.size() << " criteria FAILED\n";
  return 1;
}
