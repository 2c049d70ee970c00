#include <gtest/gtest.h>

#include "toruschar/serialize.hpp"
#include "toruschar/verify.hpp"

using namespace toruschar;

TEST(Serialize, KClassRoundTrip) {
  const KClass c = kclass_sl(3, KnotParams::make(7, 4));
  const json j = poly_to_json(c);
  EXPECT_EQ(j.at("text"), c.str());
  EXPECT_EQ(kclass_from_json(json::parse(j.dump())), c);
  EXPECT_EQ(kclass_from_json(json::parse("[4, -5, 3]")), kclass_sl(3, KnotParams::make(2, 3)));
}

TEST(Serialize, BigCoefficientsAsStrings) {
  const BigInt huge("98765432109876543210987654321");
  const KClass c = KClass::constant(huge) * lefschetz();
  const json j = poly_to_json(c);
  EXPECT_TRUE(j["coeffs"][1].is_string());
  EXPECT_EQ(kclass_from_json(json::parse(j.dump())), c);
  EXPECT_THROW(kclass_from_json(json::parse("{\"coeffs\": [1.5]}")), InvalidLabel);
}

TEST(Serialize, DescriptorSchema) {
  for (const auto& d : census_pgl(3, KnotParams::make(4, 9))) {
    const json j = descriptor_to_json(d);
    for (const char* key : {"kind", "variant", "group", "rank", "dimension", "kclass", "chart",
                            "eigen_label"})
      EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(kclass_from_json(j["kclass"]), d.kclass);
    if (d.eigen_label) {
      EXPECT_EQ(j["eigen_label"]["order"], d.eigen_label->order);
      EXPECT_EQ(j["eigen_label"]["a_exps"].size(), d.eigen_label->a_exps.size());
    } else {
      EXPECT_TRUE(j["eigen_label"].is_null());
    }
  }
}

TEST(Serialize, CurveAndQuotient) {
  const json c = curve_to_json(boundary_curve(KnotParams::make(3, 5), 1));
  EXPECT_EQ(c["component_key"], json::array({1, 1}));
  const auto q = quotient_basis({1, 2, 2}, 3);
  const json j = quotient_basis_to_json({1, 2, 2}, 3, q);
  EXPECT_TRUE(j["verified"].get<bool>());
  EXPECT_EQ(j["matrix"].size(), 3u);
}

TEST(Verify, GridReportIsDeterministicAndSorted) {
  const auto a = grid_report_to_json(verify_grid(7, {2, 3}, {}));
  const auto b = grid_report_to_json(verify_grid(7, {2, 3}, {}));
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a["ok"].get<bool>());
  long prev_m = 0, prev_n = 0;
  for (const auto& p : a["pairs"]) {
    const long m = p["m"], n = p["n"];
    EXPECT_TRUE(std::pair(prev_m, prev_n) < std::pair(m, n));
    prev_m = m;
    prev_n = n;
  }
}

TEST(Verify, BudgetFailuresAreReported) {
  const auto r = verify_pair(5, 7, {3}, OracleConfig{5});
  EXPECT_FALSE(r.ok());
  bool saw = false;
  for (const auto& c : r.checks)
    if (c.detail.find("budget") != std::string::npos) saw = true;
  EXPECT_TRUE(saw);
}
