#include <gtest/gtest.h>

#include "tlinks/classify.hpp"
#include "tlinks/serialize.hpp"

using namespace tlinks;

namespace {

GeometricVerdict of(const char* text) { return classify(parse_tlink(text)); }

bool has_rule(const GeometricVerdict& v, Rule r) {
  for (const auto& c : v.certificates)
    if (c.rule == r) return true;
  return false;
}

}  // namespace

TEST(Parent, HyperbolicityCriterion) {
  EXPECT_EQ(classify_parent(parse_parent("P(7,2;[2,3,4])")).kind, VerdictKind::Hyperbolic);
  EXPECT_EQ(classify_parent(parse_parent("P(5,3;[2])")).kind, VerdictKind::Hyperbolic);
  EXPECT_EQ(classify_parent(parse_parent("P(5,3;[2])")).certificates.front().rule, Rule::ParentAllBelowQ);
  EXPECT_EQ(classify_parent(parse_parent("P(7,3;[6])")).kind, VerdictKind::NotHyperbolic);
  EXPECT_EQ(classify_parent(parse_parent("P(7,3;[6])")).certificates.front().rule, Rule::ParentSatellite);
  EXPECT_EQ(classify_parent(parse_parent("P(7,3;[3])")).certificates.front().rule, Rule::ParentAnnular);
  // a_i = q alongside smaller a_i: neither clause holds.
  EXPECT_EQ(classify_parent(parse_parent("P(7,3;[2,3])")).kind, VerdictKind::NotHyperbolic);
  EXPECT_EQ(classify_parent(parse_parent("P(11,3;[2,5])")).kind, VerdictKind::Hyperbolic);
}

TEST(Parent, AsymptoticVerdicts) {
  EXPECT_EQ(classify_asymptotic(parse_parent("P(7,2;[2,3,4])")).kind, VerdictKind::AsymptoticallyHyperbolic);
  EXPECT_EQ(classify_asymptotic(parse_parent("P(7,3;[6])")).kind, VerdictKind::SatelliteForAllFillings);
  EXPECT_EQ(classify_asymptotic(parse_parent("P(7,3;[3])")).kind, VerdictKind::NotHyperbolic);
}

TEST(Classify, FixtureKinds) {
  EXPECT_EQ(of("T((5,3))").kind, VerdictKind::TorusLink);
  const auto two = of("T((2,2),(3,6),(5,12))");
  EXPECT_EQ(two.kind, VerdictKind::Hyperbolic);
  EXPECT_TRUE(has_rule(two, Rule::TwoTwists));
  const auto some = of("T((3,6),(4,8),(5,2))");
  EXPECT_EQ(some.kind, VerdictKind::Hyperbolic);
  EXPECT_TRUE(has_rule(some, Rule::SomeParams));
  const auto sat = of("T((4,4),(7,2))");
  EXPECT_EQ(sat.kind, VerdictKind::Satellite);
  ASSERT_TRUE(sat.decomposition);
  EXPECT_EQ(format_tlink(sat.decomposition->companion), "T((2,3))");
}

TEST(Classify, AbsorbsBeforeDeciding) {
  // (2,2) is a full twist on q = 2 strands: T((2,2),(5,2)) = T(7,2).
  const auto v = of("T((2,2),(5,2))");
  EXPECT_EQ(v.kind, VerdictKind::TorusLink);
  EXPECT_EQ(*v.certificates.front().witness("p"), 7);
}

TEST(Classify, TwoTwistsExcludedCase) {
  // S = 11 leaves q = 1, outside 1 < q.
  EXPECT_FALSE(certify_2twists(parse_tlink("T((2,2),(3,6),(5,11))")));
  EXPECT_TRUE(certify_2twists(parse_tlink("T((2,4),(3,6),(5,12))")));
  // k must be at least 2.
  EXPECT_FALSE(certify_2twists(parse_tlink("T((2,2),(3,6),(5,7))")));
}

TEST(Classify, SomeParamsBranches) {
  EXPECT_TRUE(certify_someparams(parse_tlink("T((3,6),(4,8),(5,2))")));
  // q > a_{n-1} branch needs gcd(a_n, q) = 1.
  EXPECT_TRUE(certify_someparams(parse_tlink("T((2,4),(5,10),(7,3))")));
  EXPECT_FALSE(certify_someparams(parse_tlink("T((2,4),(6,12),(7,3))")));
  // s_{n-1} >= 2 fails.
  EXPECT_FALSE(certify_someparams(parse_tlink("T((3,3),(4,8),(5,2))")));
}

TEST(Classify, NotTorusAlternatives) {
  EXPECT_EQ(*certify_not_torus(parse_tlink("T((4,4),(7,2))"))->witness("alternative"), 1);
  EXPECT_EQ(*certify_not_torus(parse_tlink("T((2,2),(8,3))"))->witness("alternative"), 2);
  EXPECT_EQ(*certify_not_torus(parse_tlink("T((2,4),(7,3))"))->witness("alternative"), 3);
  EXPECT_EQ(*certify_not_torus(parse_tlink("T((2,2),(4,4),(11,5))"))->witness("alternative"), 4);
  EXPECT_FALSE(certify_not_torus(parse_tlink("T((2,2),(3,3),(11,5))")));
  EXPECT_FALSE(certify_not_torus(parse_tlink("T((2,2),(7,2))")));
}

TEST(Certificates, RevalidateAndRejectTampering) {
  for (const char* text : {"T((2,2),(3,6),(5,12))", "T((3,6),(4,8),(5,2))", "T((4,4),(7,2))", "T((5,3))"}) {
    for (const auto& c : of(text).certificates) {
      EXPECT_TRUE(revalidate(c)) << text << " " << to_string(c.rule);
      if (c.rule == Rule::TorusLink) continue;
      Certificate bad = c;
      for (auto& [k, v] : bad.witnesses)
        if (k == "q") v = v + 100;
      EXPECT_FALSE(revalidate(bad)) << text << " " << to_string(c.rule);
    }
  }
  Certificate forged{Rule::ParentAllBelowQ, {{"p", 7}, {"q", 3}, {"n", 1}, {"a1", 6}}};
  EXPECT_FALSE(revalidate(forged));
  Certificate truncated{Rule::SomeParams, {{"p", 5}, {"q", 2}, {"n", 2}, {"a1", 3}}};
  EXPECT_FALSE(revalidate(truncated));
}

TEST(Serialize, StableJson) {
  const auto v = of("T((2,2),(3,6),(5,12))");
  const std::string a = to_json("T((2,2),(3,6),(5,12))", v).dump();
  const std::string b = to_json("T((2,2),(3,6),(5,12))", of("T((2,2),(3,6),(5,12))")).dump();
  EXPECT_EQ(a, b);
  const Json j = Json::parse(a);
  EXPECT_EQ(j["kind"], "Hyperbolic");
  EXPECT_EQ(j["certificates"][0]["anchor"], "TwoTwistsHyperbolic");
  EXPECT_EQ(j["certificates"][0]["witnesses"]["k"], 2);
  EXPECT_EQ(to_json(Polynomial::from_terms({{-1, 1}, {0, -1}, {1, 1}})).dump(), R"({"-1":1,"0":-1,"1":1})");
}

TEST(Serialize, DecompositionWithAndWithoutVerification) {
  const TLinkSpec spec = parse_tlink("T((4,4),(7,2))");
  const auto d = halftwist_satellite(spec);
  ASSERT_TRUE(d);
  const Json skipped = to_json(*d, std::nullopt);
  EXPECT_TRUE(skipped["verified"]["alexander"].is_null());
  const Json checked = to_json(*d, verify_satellite(spec, *d));
  EXPECT_EQ(checked["verified"]["genus"], true);
  EXPECT_EQ(checked["companion"], "T((2,3))");
  EXPECT_EQ(checked["leftover_convention"], "p - r_m*q");
}
