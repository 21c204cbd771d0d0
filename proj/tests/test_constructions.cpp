#include <doctest.h>

#include <vector>

#include "autocomp/constructions.hpp"
#include "autocomp/counting.hpp"
#include "autocomp/enumeration.hpp"
#include "autocomp/error.hpp"
#include "test_util.hpp"

using namespace autocomp;
using testutil::thrown_code;

TEST_CASE("fixture registry") {
  const auto ids = fixture_ids();
  REQUIRE(ids.size() == 8);
  for (const auto& id : ids) CHECK(fixture(id).num_states >= 2);
  CHECK(thrown_code([] { fixture("nosuch"); }) == Errc::UnknownFixture);
}

TEST_CASE("four-state nondeterministic fixture accepts its word along one path") {
  const Nfa m = fixture("fig2");
  CHECK(m.num_states == 4);
  CHECK(!is_deterministic(m));
  CHECK(count_paths_for_word(m, parse_word("010111010")) == 1);
}

TEST_CASE("four-state two-word fixture") {
  const Nfa m = fixture("fig3");
  CHECK(m.num_states == 4);
  CHECK(count_words(m, 9) == 2);
  CHECK(count_paths_total(m, 9) == 3);
}

TEST_CASE("three-state pair: nondeterministic path-counter and deterministic word-counter") {
  const Nfa left = fixture("fig4-left");
  CHECK(left.num_states == 3);
  CHECK(!is_deterministic(left));
  CHECK(accepts(left, parse_word("01111011011")));
  CHECK(count_paths_total(left, 11) == 4);

  const Nfa right = fixture("fig4-right");
  CHECK(right.num_states == 3);
  CHECK(is_deterministic(right));
  CHECK(accepts(right, parse_word("01111011011")));
  CHECK(count_words(right, 11) == 9);
}

TEST_CASE("five-state doubleton fixture equals the shared-root construction") {
  const Nfa m = fixture("fig5");
  CHECK(m.num_states == 5);
  CHECK(count_words(m, 4) == 2);
  CHECK(count_paths_total(m, 4) == 2);
  const Nfa built = chambers_hyde(DoubletonQuery::of({parse_word("0110"), parse_word("1111")}));
  CHECK(canonical_form(m) == canonical_form(built));
}

TEST_CASE("three-state doubleton fixture splits path counts 1 and 2") {
  const Nfa m = fixture("fig6");
  CHECK(m.num_states == 3);
  CHECK(count_words(m, 4) == 2);
  CHECK(count_paths_for_word(m, parse_word("0110")) == 1);
  CHECK(count_paths_for_word(m, parse_word("1111")) == 2);
  CHECK(count_paths_total(m, 4) == 3);
}

TEST_CASE("eight-state deterministic fixture equals the split-state construction") {
  const Nfa m = fixture("fig7");
  CHECK(m.num_states == 8);
  CHECK(is_deterministic(m));
  CHECK(count_words(m, 13) == 1);
  CHECK(accepts(m, parse_word("0101010101110")));
  CHECK(canonical_form(m) == canonical_form(exploded_kayleigh(parse_word("0101010101110"))));
}

TEST_CASE("two-state fixture accepts 114 words of length ten") {
  const Nfa m = fixture("fig8");
  CHECK(m.num_states == 2);
  CHECK(accepts(m, parse_word("0110001000")));
  CHECK(count_words(m, 10) == 114);
}

TEST_CASE("single-word witness graph: size and unique acceptance, exhaustively") {
  for (int n = 1; n <= 8; ++n) {
    for (std::uint32_t code = 0; code < (1u << n); ++code) {
      const Word x = word_from_code(code, n, 2);
      const Nfa k = kayleigh(x);
      CHECK(k.num_states == n / 2 + 1);
      CHECK(count_paths_for_word(k, x) == 1);
      CHECK(count_paths_total(k, n) == 1);
      CHECK(count_words(k, n) == 1);
    }
  }
  CHECK(thrown_code([] { kayleigh(parse_word("")); }) == Errc::EmptyWord);
}

TEST_CASE("single-word witness graph on a wider alphabet") {
  const Word x = parse_word("0123012");
  const Nfa k = kayleigh(x);
  CHECK(k.alphabet_size == 4);
  CHECK(k.num_states == 4);
  CHECK(count_paths_for_word(k, x) == 1);
  CHECK(count_words(k, 7) == 1);
}

TEST_CASE("split-state graph is deterministic with a singleton language, exhaustively") {
  for (int n = 1; n <= 9; ++n) {
    for (std::uint32_t code = 0; code < (1u << n); ++code) {
      const Word x = word_from_code(code, n, 2);
      const Nfa e = exploded_kayleigh(x);
      CHECK(is_deterministic(e));
      CHECK(count_words(e, n) == 1);
      CHECK(accepts(e, x));
      CHECK(e.num_states >= n / 2 + 1);
    }
  }
  CHECK(thrown_code([] { exploded_kayleigh(parse_word("")); }) == Errc::EmptyWord);
}

TEST_CASE("split-state graph sizes: all-conflicts and no-conflicts extremes") {
  // every interior state of 0^13 conflicts, plus the loop state: 7 + 6
  CHECK(exploded_kayleigh(parse_word("0000000000000")).num_states == 13);
  // alternating word: forward and backward labels always differ
  CHECK(exploded_kayleigh(parse_word("0101010")).num_states == 4);
  CHECK(canonical_form(exploded_kayleigh(parse_word("0101010"))) ==
        canonical_form(kayleigh(parse_word("0101010"))));
}

TEST_CASE("shared-root doubleton witness: size, language, and path count") {
  // singleton queries reduce to the single-word witness
  CHECK(canonical_form(chambers_hyde(DoubletonQuery::of({parse_word("01101")}))) ==
        canonical_form(kayleigh(parse_word("01101"))));

  for (int n = 2; n <= 6; ++n) {
    for (std::uint32_t i = 0; i < (1u << n); ++i) {
      for (std::uint32_t j = i + 1; j < (1u << n); ++j) {
        const Word x = word_from_code(i, n, 2);
        const Word y = word_from_code(j, n, 2);
        const Nfa c = chambers_hyde(DoubletonQuery::of({x, y}));
        CHECK(c.num_states == 2 * (n / 2) + 1);
        CHECK(count_words(c, n) == 2);
        CHECK(count_paths_total(c, n) == 2);
        CHECK(accepts(c, x));
        CHECK(accepts(c, y));
      }
    }
  }
}

TEST_CASE("doubleton query validation") {
  CHECK(thrown_code([] { DoubletonQuery::of({}); }) == Errc::BadCardinality);
  CHECK(thrown_code([] {
          DoubletonQuery::of({parse_word("00"), parse_word("01"), parse_word("10")});
        }) == Errc::BadCardinality);
  CHECK(thrown_code([] { DoubletonQuery::of({parse_word("00"), parse_word("00")}); }) ==
        Errc::BadCardinality);
  CHECK(thrown_code([] { DoubletonQuery::of({parse_word("00"), parse_word("010")}); }) ==
        Errc::LengthMismatch);
  // base widens to cover both words
  const auto f = DoubletonQuery::of({parse_word("00"), parse_word("02")});
  CHECK(f.base == 3);
  CHECK(f.words[0].base == 3);
  CHECK(f.cardinality() == 2);
  CHECK(f.length() == 2);
}

TEST_CASE("witness-density fraction: closed form equals direct enumeration") {
  const Rational tenth = parse_rational("0.1");
  for (int n : {5, 7, 9, 11, 13}) {
    CHECK(density_fraction(n, 2, tenth) == density_fraction_by_enumeration(n, 2, tenth));
  }
  CHECK(density_fraction(7, 3, tenth) == density_fraction_by_enumeration(7, 3, tenth));
  CHECK(density_fraction(7, 2, parse_rational("1/3")) ==
        density_fraction_by_enumeration(7, 2, parse_rational("1/3")));
  // a generous margin admits every word
  CHECK(density_fraction(9, 2, parse_rational("1")) == Rational::make(1, 1));
}

TEST_CASE("witness-density argument validation") {
  const Rational tenth = parse_rational("0.1");
  CHECK(thrown_code([&] { density_fraction(8, 2, tenth); }) == Errc::BadArgument);  // even n
  CHECK(thrown_code([&] { density_fraction(7, 5, tenth); }) == Errc::BadBase);
  CHECK(thrown_code([&] { density_fraction(7, 0, tenth); }) == Errc::BadBase);
  CHECK(thrown_code([&] { density_fraction(7, 2, Rational::make(0, 1)); }) == Errc::BadEpsilon);
}

TEST_CASE("rational helpers") {
  CHECK(to_fraction_string(Rational::make(72, 2048)) == "9/256");
  CHECK(to_decimal_string(Rational::make(72, 2048), 2) == "0.04");
  CHECK(to_decimal_string(Rational::make(616, 1024), 2) == "0.60");
  CHECK(to_decimal_string(Rational::make(1, 2), 0) == "1");  // half rounds up
  CHECK(to_decimal_string(Rational::make(1, 1), 2) == "1.00");
  CHECK(parse_rational("57/64") == Rational::make(57, 64));
  CHECK(parse_rational("0.1") == Rational::make(1, 10));
  CHECK(parse_rational("3") == Rational::make(3, 1));
  CHECK(compare(Rational::make(1, 3), Rational::make(1, 2)) < 0);
  CHECK(Rational::make(2, 4) == Rational::make(1, 2));
  CHECK(thrown_code([] { parse_rational("x"); }) == Errc::BadArgument);
  CHECK(thrown_code([] { parse_rational("1/x"); }) == Errc::BadArgument);
  CHECK(thrown_code([] { parse_rational("0.x"); }) == Errc::BadArgument);
  CHECK(thrown_code([] { Rational::make(1, 0); }) == Errc::BadArgument);
}
