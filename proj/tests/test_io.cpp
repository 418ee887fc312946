#include <gtest/gtest.h>

#include <filesystem>

#include "gammalab/error.hpp"
#include "gammalab/io.hpp"
#include "test_support.hpp"

using namespace gammalab;
using namespace gammalab::testing;

namespace {
  ErrorCode code_of(std::function<void()> const& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::wrong_shape;
  }

  std::string message_of(std::function<void()> const& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.what();
    }
    return {};
  }

  template <typename T, typename From>
  void expect_round_trip(Json const& doc, From from_json) {
    T const back = from_json(doc);
    EXPECT_EQ(to_json(back).dump(), doc.dump());
  }
}  // namespace

TEST(ParseGrade, AcceptedForms) {
  EXPECT_EQ(parse_grade("0.3"), gr(3, 10));
  EXPECT_EQ(parse_grade(".25"), gr(1, 4));
  EXPECT_EQ(parse_grade("2/4"), gr(1, 2));
  EXPECT_EQ(parse_grade("1"), Grade::one());
  EXPECT_EQ(parse_grade("0"), Grade::zero());
  EXPECT_EQ(parse_grade("1.000"), Grade::one());
  EXPECT_EQ(parse_grade(" 0.125 "), gr(1, 8));
}

TEST(ParseGrade, Rejected) {
  EXPECT_EQ(code_of([] { parse_grade("abc"); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([] { parse_grade("1/0"); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([] { parse_grade("0.3.1"); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([] { parse_grade(""); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([] { parse_grade("1.5"); }), ErrorCode::invalid_grade);
  EXPECT_EQ(code_of([] { parse_grade("-0.1"); }), ErrorCode::invalid_grade);
}

TEST(ParseLevel, HalfOpenInterval) {
  EXPECT_EQ(parse_level("2/5"), gr(2, 5));
  EXPECT_EQ(parse_level("1"), Grade::one());
  EXPECT_EQ(code_of([] { parse_level("0"); }), ErrorCode::alpha_out_of_range);
  EXPECT_EQ(code_of([] { parse_level("6/5"); }), ErrorCode::alpha_out_of_range);
}

TEST(GroupoidDocument, RoundTripsFixtures) {
  for (auto const& info : fixture_catalog()) {
    if (info.kind != FixtureKind::groupoid) {
      continue;
    }
    auto const G   = groupoid_fixture(info.name);
    auto const doc = groupoid_to_json(G);
    EXPECT_EQ(groupoid_from_json(doc), G);
    EXPECT_EQ(groupoid_to_json(groupoid_from_json(doc)).dump(), doc.dump());
  }
}

TEST(GroupoidDocument, F2TableIsOneBased) {
  auto const doc = groupoid_to_json(F2());
  EXPECT_EQ(doc["n"], 5);
  EXPECT_EQ(doc["gamma"], 1);
  EXPECT_EQ(doc["tables"][0][2], Json::array({1, 2, 4, 5, 3}));
}

TEST(GroupoidDocument, ShortRowNamesTheRow) {
  auto doc = groupoid_to_json(F2());
  doc["tables"][0][3] = Json::array({1, 2, 3, 4});
  EXPECT_EQ(code_of([&] { groupoid_from_json(doc); }), ErrorCode::parse_error);
  EXPECT_NE(message_of([&] { groupoid_from_json(doc); }).find("row 4"), std::string::npos);
}

TEST(GroupoidDocument, ValidationErrorsSurface) {
  auto doc = groupoid_to_json(F2());
  doc["tables"][0][0][0] = 6;
  EXPECT_EQ(code_of([&] { groupoid_from_json(doc); }), ErrorCode::out_of_range);
  doc = groupoid_to_json(F2());
  doc.erase("n");
  EXPECT_EQ(code_of([&] { groupoid_from_json(doc); }), ErrorCode::parse_error);
  doc = groupoid_to_json(F2());
  doc["tables"][0][1][1] = "2";
  EXPECT_EQ(code_of([&] { groupoid_from_json(doc); }), ErrorCode::parse_error);
}

TEST(IfsDocument, RoundTripAndDecimals) {
  auto const A = ifs_fixture("A-fgh");
  EXPECT_EQ(ifs_from_json(ifs_to_json(A)), A);
  auto const doc = Json::parse(R"({"mu": ["0.3", "1/2", 0], "nu": [".7", "0.5", 1]})");
  auto const B   = ifs_from_json(doc);
  EXPECT_EQ(B.mu(0), gr(3, 10));
  EXPECT_EQ(B.nu(0), gr(7, 10));
  EXPECT_EQ(B.nu(2), Grade::one());
  EXPECT_EQ(ifs_to_json(B)["mu"], Json::array({"3/10", "1/2", "0/1"}));
}

TEST(IfsDocument, SumBoundNeedsExplicitOptOut) {
  auto doc = ifs_to_json(ifs_fixture("A-ex"));
  EXPECT_EQ(doc["allow_sum_over_one"], true);
  EXPECT_EQ(ifs_from_json(doc), ifs_fixture("A-ex"));
  doc.erase("allow_sum_over_one");
  EXPECT_EQ(code_of([&] { ifs_from_json(doc); }), ErrorCode::sum_exceeds_one);
}

TEST(IfsDocument, BadGradeNamesTheField) {
  auto const doc = Json::parse(R"({"mu": ["0.3", "x"], "nu": ["0", "0"]})");
  EXPECT_NE(message_of([&] { ifs_from_json(doc); }).find("mu[1]"), std::string::npos);
  EXPECT_EQ(code_of([&] { ifs_from_json(Json::parse(R"({"mu": ["1"], "nu": []})")); }),
            ErrorCode::length_mismatch);
}

TEST(Json, MalformedTextIsParseError) {
  EXPECT_EQ(code_of([] { parse_json_text("{\"n\": ", "inline"); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([] { read_json_file("/nonexistent/file.json"); }), ErrorCode::parse_error);
}

TEST(VerdictDocument, LawRoundTrip) {
  for (auto law : all_laws) {
    expect_round_trip<LawReport>(to_json(check_law(F1(), law)), law_report_from_json);
    expect_round_trip<LawReport>(to_json(check_law(F3(), law)), law_report_from_json);
  }
}

TEST(VerdictDocument, IntraRoundTrip) {
  expect_round_trip<IntraRegularityReport>(to_json(intra_regularity(F2())), intra_report_from_json);
  expect_round_trip<IntraRegularityReport>(to_json(intra_regularity(F3())), intra_report_from_json);
}

TEST(VerdictDocument, CrispRoundTrip) {
  auto const G = F3();
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    auto const A = CrispSubset::from_mask(5, mask);
    for (auto kind : all_crisp_kinds) {
      auto const doc  = to_json(is_crisp(G, A, kind), A);
      auto const back = crisp_verdict_from_json(doc);
      EXPECT_EQ(to_json(back, A).dump(), doc.dump());
    }
  }
}

TEST(VerdictDocument, IfsRoundTrip) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    auto const A = random_ifs(5, 3, s);
    for (auto kind : all_ifs_kinds) {
      expect_round_trip<IfsVerdict>(to_json(is_if(F2(), A, kind)), ifs_verdict_from_json);
    }
  }
}

TEST(VerdictDocument, TheoremRoundTrip) {
  std::vector<TheoremVerdict> verdicts;
  for (auto const& info : theorem_catalog()) {
    std::vector<Ifs> sets(info.min_sets, ifs_fixture("A-cut"));
    verdicts.push_back(verify(info.id, {F2(), sets, {}}, {true}));
    verdicts.push_back(verify(info.id, {F3(), std::vector<Ifs>(info.min_sets, ifs_fixture("A-fgh")), {}}));
  }
  for (auto const& v : verdicts) {
    expect_round_trip<TheoremVerdict>(to_json(v), theorem_verdict_from_json);
  }
}

TEST(VerdictDocument, StableFieldOrder) {
  auto const doc = to_json(is_if(F2(), ifs_fixture("A-cut"), IfsKind::right));
  std::vector<std::string> keys;
  for (auto const& [k, v] : doc.items()) {
    keys.push_back(k);
  }
  EXPECT_EQ(keys, (std::vector<std::string>{"type", "kind", "holds", "witness"}));
}

TEST(Kinds, NameAliases) {
  EXPECT_EQ(ifs_kind_from_name("right-ideal"), IfsKind::right);
  EXPECT_EQ(ifs_kind_from_name("IF_TWO_SIDED"), IfsKind::two_sided);
  EXPECT_EQ(ifs_kind_from_name("generalized-bi"), IfsKind::generalized_bi);
  EXPECT_EQ(crisp_kind_from_name("left-ideal"), CrispKind::left_ideal);
  EXPECT_EQ(crisp_kind_from_name("QUASI"), CrispKind::quasi);
  EXPECT_FALSE(ifs_kind_from_name("sideways").has_value());
}

TEST(Fixtures, FilesMatchDump) {
  std::filesystem::path const dir = GAMMALAB_SOURCE_DIR "/fixtures";
  for (auto const& info : fixture_catalog()) {
    auto const file = dir / (std::string(info.name) + ".json");
    ASSERT_TRUE(std::filesystem::exists(file)) << file;
    auto const expected = info.kind == FixtureKind::groupoid
                              ? groupoid_to_json(groupoid_fixture(info.name))
                              : ifs_to_json(ifs_fixture(info.name));
    EXPECT_EQ(read_json_file(file), expected) << info.name;
  }
}

TEST(Fixtures, UnknownName) {
  EXPECT_EQ(code_of([] { groupoid_fixture("F9"); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([] { ifs_fixture("F2"); }), ErrorCode::parse_error);
}
