#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "autocomp/complexity.hpp"
#include "autocomp/enumeration.hpp"
#include "autocomp/error.hpp"
#include "test_util.hpp"

using namespace autocomp;
using testutil::thrown_code;

TEST_CASE("single-word complexity anchor values") {
  CHECK(a_pi(parse_word("")) == 1);
  CHECK(a_omega(parse_word("")) == 1);
  CHECK(a_minus(parse_word("")) == 1);
  // the one-state loop accepts 0000 along exactly one path
  CHECK(a_pi(parse_word("0000")) == 1);
  CHECK(a_omega(parse_word("0000")) == 1);
  CHECK(a_minus(parse_word("0000000000000")) == 1);
  CHECK(a_minus(parse_word("01")) == 2);
  CHECK(a_pi(parse_word("01")) == 2);

  StateSequence wit;
  CHECK(a_pi(parse_word("010111010"), &wit) == 5);
  const Nfa m = induced_nfa(wit, parse_word("010111010"));
  CHECK(m.num_states == 5);
  CHECK(count_paths_total(m, 9) == 1);
}

TEST_CASE("partial-DFA complexity dominates path complexity") {
  for (int n = 0; n <= 7; ++n) {
    for (std::uint32_t code = 0; code < (1u << n); ++code) {
      const Word x = word_from_code(code, n, 2);
      const int am = a_minus(x);
      const int ap = a_pi(x);
      const int aw = a_omega(x);
      CHECK(am >= ap);
      CHECK(am >= aw);
      CHECK(ap <= hyde_bound(n));
      CHECK(aw <= hyde_bound(n));
    }
  }
}

TEST_CASE("unique-single-path complexity") {
  CHECK(a_dagger(parse_word("")) == 1);
  CHECK(a_dagger(parse_word("0000")) == 1);
  const Word x = parse_word("010111010");
  CHECK(a_dagger(x) == 4);
  CHECK(a_dagger(x) < a_pi(x));
  Guards tight;
  tight.dagger_max_n = 5;
  CHECK(thrown_code([&] { a_dagger(parse_word("010101"), tight); }) == Errc::WordTooLong);
}

TEST_CASE("structure function h at the extremes") {
  for (const char* text : {"01", "0110", "010011"}) {
    const Word x = parse_word(text);
    const int n = x.size();
    // one state forces the full-loop model: 2^n accepted words
    CHECK(h(x, 1, 2, Mode::omega) == LogAcc(n));
    CHECK(h(x, 1, 2, Mode::delta) == LogAcc(n));
    CHECK(h(x, 1, 2, Mode::pi) == LogAcc(n));
    // the backtracking-cycle witness pins the word exactly
    CHECK(h(x, hyde_bound(n), 2, Mode::pi) == LogAcc(0));
    CHECK(h(x, hyde_bound(n), 2, Mode::omega) == LogAcc(0));
  }
  // single-symbol words embed in the one-state loop
  CHECK(h(parse_word("00000"), 1, 2, Mode::pi) == LogAcc(0));
}

TEST_CASE("structure functions are dual and the frontier is a staircase") {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint32_t code = 0; code < (1u << n); ++code) {
      const Word x = word_from_code(code, n, 2);
      for (const Mode mode : {Mode::delta, Mode::pi, Mode::omega}) {
        const StructureFrontier f = structure_frontier(x, 2, mode);
        REQUIRE(!f.points.empty());
        for (std::size_t i = 1; i < f.points.size(); ++i) {
          CHECK(f.points[i].states > f.points[i - 1].states);
          CHECK(f.points[i].log_acc < f.points[i - 1].log_acc);
        }
        CHECK(f.points.front().states >= 1);
        CHECK(f.points.back().states <= hyde_bound(n));
        // h is the frontier read horizontally
        for (int k = 1; k <= hyde_bound(n); ++k) {
          const LogAcc hk = h(x, k, 2, mode);
          LogAcc best = LogAcc::inf();
          for (const auto& p : f.points)
            if (p.states <= k) best = std::min(best, LogAcc(p.log_acc));
          CHECK(hk == best);
          CHECK(f.member(k, hk.is_infinite() ? 0 : hk.value()) == !hk.is_infinite());
        }
        // h_star is the frontier read vertically (within the capped range)
        for (int m = 0; m <= n; ++m) {
          const int q = h_star(x, m, 2, mode);
          CHECK(q >= 1);
          if (q <= hyde_bound(n)) {
            CHECK(f.member(q, m));
            if (q > 1) CHECK(!f.member(q - 1, m));
          } else {
            CHECK(mode == Mode::delta);  // only delta can exceed the cap
            CHECK(!f.member(hyde_bound(n), m));
          }
          // duality: h(h_star(m)) <= m within the frontier range
          if (q <= hyde_bound(n)) {
            const LogAcc back = h(x, q, 2, mode);
            CHECK(!back.is_infinite());
            CHECK(back.value() <= m);
          }
        }
      }
    }
  }
}

TEST_CASE("structure-function argument and guard errors") {
  CHECK(thrown_code([] { h_star(parse_word("0101"), -1, 2, Mode::pi); }) == Errc::BadArgument);
  CHECK(thrown_code([] { structure_frontier(parse_word("0101"), 1, Mode::pi); }) ==
        Errc::BaseTooSmall);
  CHECK(thrown_code([] { structure_frontier(parse_word("012"), 2, Mode::pi); }) ==
        Errc::BaseTooSmall);
  Guards tight;
  tight.frontier_max_n = 4;
  CHECK(thrown_code([&] {
          structure_frontier(parse_word("01010"), 2, Mode::pi, 1, tight);
        }) == Errc::WordTooLong);
  CHECK(thrown_code([&] { a_pi(parse_word("01010"), nullptr, tight); }) == Errc::WordTooLong);
}

TEST_CASE("sequence-induced search agrees with the unrestricted oracle") {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint32_t code = 0; code < (1u << n); ++code) {
      const Word x = word_from_code(code, n, 2);
      for (const Mode mode : {Mode::pi, Mode::omega}) {
        for (int m = 0; m <= 4; ++m) {
          const int fast = h_star(x, m, 2, mode);
          if (fast <= 3) {
            CHECK(oracle_h_star(x, m, 2, mode) == fast);
          } else {
            CHECK(thrown_code([&] { oracle_h_star(x, m, 2, mode); }) ==
                  Errc::SearchBudgetExceeded);
          }
        }
      }
    }
  }
}

TEST_CASE("path- and word-counting complexities coincide on short binary words") {
  CHECK(check_mode_equality(6).empty());
}

TEST_CASE("equality scan guard and options") {
  Guards g;
  g.equality_scan_max_len = 4;
  CHECK(thrown_code([&] { check_mode_equality(5, {}, g); }) == Errc::WordTooLong);
  EqualityScanOptions opts;
  opts.min_len = 3;
  std::vector<int> lengths;
  opts.progress = [&](int len, std::uint64_t) { lengths.push_back(len); };
  CHECK(check_mode_equality(5, opts).empty());
  CHECK(lengths == std::vector<int>{3, 4, 5});
}

TEST_CASE("two-word complexity: values, reductions, and guards") {
  const auto pair = DoubletonQuery::of({parse_word("0110"), parse_word("1111")});
  CHECK(doubleton_complexity(pair, Mode::omega) == 3);
  CHECK(doubleton_complexity(pair, Mode::pi) == 4);
  CHECK(thrown_code([&] { doubleton_complexity(pair, Mode::delta); }) == Errc::BadArgument);

  const auto single = DoubletonQuery::of({parse_word("010111010")});
  CHECK(doubleton_complexity(single, Mode::pi) == a_pi(parse_word("010111010")));
  CHECK(doubleton_complexity(single, Mode::omega) == a_omega(parse_word("010111010")));

  Guards tight;
  tight.doubleton_max_n = 3;
  CHECK(thrown_code([&] {
          doubleton_complexity(DoubletonQuery::of({parse_word("0110"), parse_word("1001")}),
                               Mode::omega, tight);
        }) == Errc::WordTooLong);
}

TEST_CASE("two-word complexity is bounded by the shared-root construction") {
  for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{
           {"0110", "1001"}, {"00000", "11111"}, {"01010", "01100"}}) {
    const auto f = DoubletonQuery::of({parse_word(a), parse_word(b)});
    const int bound = 2 * (f.length() / 2) + 1;
    for (const Mode mode : {Mode::pi, Mode::omega}) {
      const int got = doubleton_complexity(f, mode);
      CHECK(got >= 1);
      CHECK(got <= bound);
    }
    CHECK(doubleton_complexity(f, Mode::omega) <= doubleton_complexity(f, Mode::pi));
  }
}
