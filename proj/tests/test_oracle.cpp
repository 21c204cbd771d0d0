#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "autocomp/counting.hpp"
#include "autocomp/enumeration.hpp"
#include "autocomp/error.hpp"
#include "test_util.hpp"

using namespace autocomp;
using testutil::thrown_code;

TEST_CASE("exhaustive machine counts") {
  auto count_all = [](int q, int b, bool canon) {
    return for_each_tiny(q, b, canon, [](const TinyNfa&) { return true; });
  };
  // one state: 2 target subsets per symbol, accept forced to 0
  CHECK(count_all(1, 2, false) == 4);
  CHECK(count_all(1, 2, true) == 4);
  CHECK(count_all(1, 3, false) == 8);
  // two states: 4^(2*2) transition assignments times 2 accept choices; no
  // nontrivial relabeling fixes the initial state, so canonical == all
  CHECK(count_all(2, 2, false) == 512);
  CHECK(count_all(2, 2, true) == 512);
  // three states: 8^6 * 3 total; swapping the two non-initial states fixes
  // 4^2 * 8^2 * 1 machines, so Burnside gives (786432 + 1024) / 2 classes
  CHECK(count_all(3, 2, false) == 786432);
  CHECK(count_all(3, 2, true) == 393728);
}

TEST_CASE("enumeration stops early when the callback declines") {
  int seen = 0;
  const long long r = for_each_tiny(2, 2, false, [&](const TinyNfa&) { return ++seen < 10; });
  CHECK(r == -1);
  CHECK(seen == 10);
}

TEST_CASE("dense counters agree with the general automaton counters") {
  const int n = 4;
  for_each_tiny(2, 2, false, [&](const TinyNfa& t) {
    const Nfa m = t.to_nfa();
    CHECK(tiny_is_deterministic(t) == is_deterministic(m));
    CHECK(Count(tiny_paths_total(t, n)) == count_paths_total(m, n));
    CHECK(Count(tiny_words_count(t, n)) == count_words(m, n));

    std::vector<std::uint32_t> accepted;
    for (std::uint32_t code = 0; code < (1u << n); ++code) {
      const Word w = word_from_code(code, n, 2);
      std::uint8_t sym[4];
      for (int i = 0; i < n; ++i) sym[i] = static_cast<std::uint8_t>(w.symbols[i]);
      const Count paths = count_paths_for_word(m, w);
      CHECK(Count(tiny_paths_for_word(t, sym, n)) == paths);
      CHECK((paths > 0) == accepts(m, w));
      if (paths > 0) accepted.push_back(code);

      bool unique_direct = (paths == 1);
      for (std::uint32_t other = 0; unique_direct && other < (1u << n); ++other) {
        if (other == code) continue;
        std::uint8_t osym[4];
        const Word ow = word_from_code(other, n, 2);
        for (int i = 0; i < n; ++i) osym[i] = static_cast<std::uint8_t>(ow.symbols[i]);
        if (tiny_paths_for_word(t, osym, n) == 1) unique_direct = false;
      }
      CHECK(tiny_unique_single_path_word(t, sym, n) == unique_direct);
    }

    std::vector<std::uint32_t> streamed;
    tiny_accepted_words(t, n, [&](std::uint32_t code) {
      streamed.push_back(code);
      return true;
    });
    CHECK(streamed == accepted);
    CHECK(tiny_language_equals(t, n, accepted));
    std::vector<std::uint32_t> perturbed = accepted;
    if (perturbed.empty()) {
      perturbed.push_back(0);
    } else {
      perturbed.pop_back();
    }
    CHECK(!tiny_language_equals(t, n, perturbed));
    return true;
  });
}

TEST_CASE("accepted-word stream honors early stop") {
  TinyNfa t;  // one state, both loops, accepts everything
  t.q = 1;
  t.b = 2;
  t.row[0][0] = 1;
  t.row[0][1] = 1;
  std::vector<std::uint32_t> first_three;
  const bool completed = tiny_accepted_words(t, 4, [&](std::uint32_t code) {
    first_three.push_back(code);
    return first_three.size() < 3;
  });
  CHECK(!completed);
  CHECK(first_three == std::vector<std::uint32_t>{0, 1, 2});
}

TEST_CASE("oracle table spot values") {
  const OracleTable& table = oracle_table(4, Mode::pi);
  REQUIRE(table.n == 4);
  REQUIRE(table.best.size() == 16);
  // the only one-state machine reading both symbols has both loops: it
  // accepts 0110 along one of 16 length-4 walks
  CHECK(table.best[word_code(parse_word("0110"))][0] == 4);
  // the floor(n/2)+1-state witness accepts 0110 along exactly one walk
  CHECK(table.best[word_code(parse_word("0110"))][2] == 0);
  // one state, loop on 0 only: unique walk for the all-zeros word
  CHECK(table.best[word_code(parse_word("0000"))][0] == 0);

  const OracleTable& omega = oracle_table(4, Mode::omega);
  // same one-state machine counted by words: 16 accepted words
  CHECK(omega.best[word_code(parse_word("0110"))][0] == 4);
  CHECK(omega.best[word_code(parse_word("0000"))][0] == 0);

  const OracleTable& delta = oracle_table(4, Mode::delta);
  // deterministic one-state machine accepting 0110 accepts all 16 words
  CHECK(delta.best[word_code(parse_word("0110"))][0] == 4);
}

TEST_CASE("word codes round-trip") {
  CHECK(word_code(parse_word("0110")) == 6);
  CHECK(word_code(parse_word("")) == 0);
  for (int n = 0; n <= 6; ++n) {
    for (std::uint32_t code = 0; code < (1u << n); ++code) {
      const Word w = word_from_code(code, n, 2);
      CHECK(w.size() == n);
      CHECK(w.base == 2);
      CHECK(word_code(w) == code);
    }
  }
  for (std::uint32_t code = 0; code < 81; ++code) {
    const Word w = word_from_code(code, 4, 3);
    CHECK(w.base == 3);
    CHECK(word_code(w) == code);
  }
  CHECK(word_from_code(5, 4, 2) == parse_word("0101"));
}

TEST_CASE("canonical form: relabeling invariance, idempotence, counts") {
  std::mt19937 rng(99u);
  for (int trial = 0; trial < 200; ++trial) {
    const Nfa m = testutil::random_nfa(rng, 4, 2);
    const Nfa canon = canonical_form(m);
    CHECK(canon.num_states == m.num_states);
    CHECK(canonical_form(testutil::relabeled(m, rng)) == canon);
    CHECK(canonical_form(canon) == canon);
    for (int n = 0; n <= 5; ++n) {
      CHECK(count_paths_total(canon, n) == count_paths_total(m, n));
      CHECK(count_words(canon, n) == count_words(m, n));
    }
  }
}

TEST_CASE("canonical form guards its state count") {
  Nfa big;
  big.num_states = 9;
  big.alphabet_size = 2;
  big.accept = 0;
  CHECK(thrown_code([&] { canonical_form(big); }) == Errc::BadArgument);
}
