// Copyright 2026 The onefact Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "onefact/serialize.hpp"
#include "unit/oracles.hpp"

namespace onefact {
namespace {

using testing::expect_error;

std::vector<StarterFile> sample_starters() {
  std::vector<StarterFile> out;
  for (std::uint32_t n : {5u, 9u, 15u}) {
    const Group g = Group::cyclic(n);
    out.push_back({g, patterned_starter(g)});
  }
  for (std::uint32_t q : {7u, 11u, 27u, 243u}) {
    const Field f = make_field(q);
    const Group g = Group::of_field(f);
    out.push_back({g, patterned_starter(g)});
    for (Elem b : f.nqr_set()) {
      if (b == f.neg(f.one())) continue;
      const Starter s = horton_starter(f, b);
      out.push_back({g, s});
      out.push_back({g, negate_starter(g, s)});
      break;
    }
  }
  return out;
}

TEST(Json, FieldDescription) {
  EXPECT_EQ(dump(to_json(make_field(27).spec())), "{\"q\":27,\"p\":3,\"k\":3,\"poly\":[1,2,0,1]}\n");
  EXPECT_EQ(dump(to_json(make_field(11).spec())), "{\"q\":11,\"p\":11,\"k\":1}\n");
  EXPECT_EQ(dump(to_json(Group::cyclic(9))), "{\"n\":9}\n");
}

TEST(Json, StarterFileLayout) {
  const Field f = make_field(11);
  const Group g = Group::of_field(f);
  EXPECT_EQ(dump(starter_to_json(g, horton_starter(f, Elem{7}))),
            "{\"group\":{\"q\":11,\"p\":11,\"k\":1},\"provenance\":{\"kind\":\"horton\",\"beta\":7},"
            "\"pairs\":[[1,7],[2,5],[3,10],[4,6],[8,9]]}\n");
  EXPECT_NE(dump(starter_to_json(g, negate_starter(g, horton_starter(f, Elem{7}))))
                .find("\"provenance\":{\"kind\":\"negated\",\"inner\":{\"kind\":\"horton\",\"beta\":7}}"),
            std::string::npos);
}

TEST(Json, StarterRoundTrip) {
  for (const auto& [group, starter] : sample_starters()) {
    const std::string text = dump(starter_to_json(group, starter));
    const StarterFile back = starter_from_json(Json::parse(text));
    EXPECT_TRUE(back.group == group);
    EXPECT_EQ(back.starter, starter);
    EXPECT_EQ(dump(starter_to_json(back.group, back.starter)), text);
  }
}

TEST(Json, StarterInputIsNormalized) {
  const StarterFile s = starter_from_json(Json::parse(
      R"({"group":{"n":7},"provenance":{"kind":"custom"},"pairs":[[5,2],[6,1],[4,3]]})"));
  EXPECT_EQ(dump(starter_to_json(s.group, s.starter)),
            "{\"group\":{\"n\":7},\"provenance\":{\"kind\":\"custom\"},\"pairs\":[[1,6],[2,5],[3,4]]}\n");
}

TEST(Json, FactorizationRoundTrip) {
  for (const auto& [group, starter] : sample_starters()) {
    if (group.order() > 27) continue;
    const OneFactorization f = factorization_from_starter(group, starter);
    const std::string text = dump(factorization_to_json(f));
    const OneFactorization back = factorization_from_json(Json::parse(text));
    EXPECT_EQ(dump(factorization_to_json(back)), text);
    EXPECT_FALSE(back.fast_path_available());
    ASSERT_TRUE(back.source().starter.has_value());
    EXPECT_EQ(back.source().starter->pairs(), starter.pairs());
    EXPECT_TRUE(is_one_factorization(back).ok);
  }
  const OneFactorization z5 = factorization_from_starter(Group::cyclic(5), patterned_starter(Group::cyclic(5)));
  EXPECT_EQ(dump(factorization_to_json(z5)),
            "{\"group\":{\"n\":5},\"provenance\":{\"kind\":\"starter\",\"source\":{\"kind\":\"patterned\"}},"
            "\"factors\":[{\"gamma\":0,\"edges\":[[\"inf\",0],[1,4],[2,3]]},"
            "{\"gamma\":1,\"edges\":[[\"inf\",1],[0,2],[3,4]]},{\"gamma\":2,\"edges\":[[\"inf\",2],[0,4],[1,3]]},"
            "{\"gamma\":3,\"edges\":[[\"inf\",3],[0,1],[2,4]]},{\"gamma\":4,\"edges\":[[\"inf\",4],[0,3],[1,2]]}]}\n");
}

TEST(Json, CustomFactorization) {
  const OneFactorization f = factorization_from_json(Json::parse(
      R"({"group":{"n":3},"provenance":{"kind":"custom"},"factors":[
         {"gamma":0,"edges":[["inf",0],[1,2]]},{"gamma":1,"edges":[[0,2],["inf",1]]},
         {"gamma":2,"edges":[["inf",2],[0,1]]}]})"));
  EXPECT_TRUE(is_one_factorization(f).ok);
  EXPECT_FALSE(f.source().starter.has_value());
  EXPECT_NE(dump(factorization_to_json(f)).find("\"edges\":[[\"inf\",1],[0,2]]"), std::string::npos);
}

TEST(Json, RejectsMalformedInput) {
  auto parse_group = [](const char* text) { return group_from_json(Json::parse(text)); };
  expect_error([&] { parse_group(R"({"q":27,"p":3,"k":3,"poly":[2,1,0,1]})"); }, ErrorCode::InvalidInput);
  expect_error([&] { parse_group(R"({"q":27,"p":3,"k":3})"); }, ErrorCode::InvalidInput);
  expect_error([&] { parse_group(R"({"q":11,"p":3,"k":1})"); }, ErrorCode::InvalidInput);
  expect_error([&] { parse_group(R"({"q":12,"p":2,"k":2})"); }, ErrorCode::NotPrimePower);
  expect_error([&] { parse_group(R"({"n":8})"); }, ErrorCode::EvenOrder);
  expect_error([&] { parse_group(R"({"n":-3})"); }, ErrorCode::InvalidInput);
  expect_error([&] { parse_group("[]"); }, ErrorCode::InvalidInput);
  expect_error([] { starter_from_json(Json::parse(R"({"group":{"n":7},"provenance":{"kind":"custom"},"pairs":[[1,9]]})")); },
               ErrorCode::InvalidInput);
  expect_error([] { starter_from_json(Json::parse(R"({"group":{"n":7},"provenance":{"kind":"odd"},"pairs":[]})")); },
               ErrorCode::InvalidInput);
  expect_error([] { factorization_from_json(Json::parse(R"({"group":{"n":3},"provenance":{"kind":"custom"},"factors":[{"gamma":0,"edges":[["oo",0]]}]})")); },
               ErrorCode::InvalidInput);
}

TEST(Json, WitnessLayout) {
  const OneFactorization z9 = factorization_from_starter(Group::cyclic(9), patterned_starter(Group::cyclic(9)));
  const auto w = factors_c4(z9.factor(Elem{0}), z9.factor(Elem{3}));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(dump(to_json(*w)),
            "{\"cycle\":[\"inf\",0,6,3],\"edges\":[{\"u\":\"inf\",\"v\":0,\"owner\":\"F[0]\"},"
            "{\"u\":0,\"v\":6,\"owner\":\"F[3]\"},{\"u\":6,\"v\":3,\"owner\":\"F[0]\"},"
            "{\"u\":3,\"v\":\"inf\",\"owner\":\"F[3]\"}]}\n");
}

TEST(Json, ReportsCarrySchemaAndSummary) {
  CampaignRequest req;
  req.kind = CampaignKind::Main;
  req.from = req.to = 11;
  const Json j = to_json(run_campaign(req), false);
  EXPECT_EQ(j.at("schema_version"), kReportSchemaVersion);
  EXPECT_EQ(j.at("summary").at("cases"), 2);
  EXPECT_FALSE(dump(j).find("millis") != std::string::npos);
  EXPECT_TRUE(dump(to_json(run_campaign(req), true)).find("millis") != std::string::npos);
  const std::string text = to_text(run_campaign(req), false);
  EXPECT_NE(text.find("GF(11) [main]: PASS"), std::string::npos);
}

}  // namespace
}  // namespace onefact
