#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "autocomp/constructions.hpp"
#include "autocomp/error.hpp"
#include "autocomp/verify.hpp"
#include "test_util.hpp"

using namespace autocomp;
using testutil::thrown_code;

TEST_CASE("theorem registry") {
  const auto ids = theorem_ids();
  REQUIRE(ids.size() == 17);
  CHECK(ids.front() == "figures");
  for (const char* expected :
       {"aaaa", "pacific", "hyde", "thermalbad", "tenComp", "eeee", "ffff"}) {
    CHECK(std::find(ids.begin(), ids.end(), expected) != ids.end());
  }
  CHECK(minimum_tier("figures") == VerifyTier::zero);
  CHECK(minimum_tier("aaaa") == VerifyTier::fast);
  CHECK(minimum_tier("eeee") == VerifyTier::standard);
  CHECK(thrown_code([] { minimum_tier("nosuch"); }) == Errc::UnknownTheorem);
  CHECK(thrown_code([] { verify_theorem("nosuch"); }) == Errc::UnknownTheorem);
}

TEST_CASE("budget parsing") {
  CHECK(parse_budget("fast").tier == VerifyTier::fast);
  CHECK(!parse_budget("fast").length.has_value());
  CHECK(parse_budget("").tier == VerifyTier::fast);
  CHECK(parse_budget("standard").tier == VerifyTier::standard);
  CHECK(parse_budget("extended").tier == VerifyTier::extended);
  CHECK(parse_budget("0").tier == VerifyTier::zero);

  const VerifyBudget seven = parse_budget("7");
  REQUIRE(seven.length.has_value());
  CHECK(*seven.length == 7);
  CHECK(seven.tier == VerifyTier::standard);
  CHECK(parse_budget("5").tier == VerifyTier::fast);
  CHECK(parse_budget("9").tier == VerifyTier::extended);

  CHECK(thrown_code([] { parse_budget("65"); }) == Errc::BadArgument);
  CHECK(thrown_code([] { parse_budget("soon"); }) == Errc::BadArgument);
  CHECK(thrown_code([] { parse_budget("-3"); }) == Errc::BadArgument);

  CHECK(std::string(tier_name(VerifyTier::zero)) == "zero");
  CHECK(std::string(tier_name(VerifyTier::extended)) == "extended");
}

TEST_CASE("figure checks pass and serialize") {
  const TheoremReport r = verify_theorem("figures");
  CHECK(r.pass);
  CHECK(r.id == "figures");
  CHECK(!r.claim.empty());

  const nlohmann::json j = report_to_json(r);
  CHECK(j.at("id") == "figures");
  CHECK(j.at("status") == "pass");
  CHECK(!j.at("claim").get<std::string>().empty());
  CHECK(j.contains("computed"));
  CHECK(j.contains("expected"));
  CHECK(j.contains("elapsed_seconds"));
}

TEST_CASE("corrupted fixtures are reported with the mismatching keys") {
  const TheoremReport r = verify_figures_with([](const std::string& id) {
    return fixture(id == "fig3" ? "fig2" : id);
  });
  CHECK(!r.pass);
  CHECK(r.note.find("failed checks") != std::string::npos);
  CHECK(r.note.find("fig3") != std::string::npos);
  const nlohmann::json j = report_to_json(r);
  CHECK(j.at("status") == "fail");
  CHECK(j.at("computed") != j.at("expected"));
}

TEST_CASE("fast single-word claims verify end-to-end") {
  for (const char* id : {"aaaa", "mainThm", "daggerThm", "smallThm", "bbbb", "cccc"}) {
    const TheoremReport r = verify_theorem(id);
    CHECK(r.pass);
    CHECK(r.id == id);
    CHECK(r.elapsed_seconds >= 0.0);
  }
}

TEST_CASE("zero budget runs only the figure checks") {
  const auto reports = verify_all(parse_budget("0"));
  REQUIRE(reports.size() == 1);
  CHECK(reports.front().id == "figures");
  CHECK(reports.front().pass);
}

TEST_CASE("short explicit scan lengths keep the range ids cheap") {
  VerifyBudget budget = parse_budget("4");
  const TheoremReport pacific = verify_theorem("pacific", budget);
  CHECK(pacific.pass);
  CHECK(pacific.computed.at("max_length") == 4);
  const TheoremReport ten = verify_theorem("tenComp", budget);
  CHECK(ten.pass);
  CHECK(ten.note.find("4") != std::string::npos);
}
