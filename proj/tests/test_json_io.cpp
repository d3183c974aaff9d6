#include <gtest/gtest.h>

#include "cubicmrc/json_io.hpp"
#include "oracles.hpp"

using namespace cubicmrc;

TEST(BettiJson, Format) {
  const BettiDiagram B = predicted_diagram(22).diagram;
  const json j = to_json(B);
  EXPECT_EQ(j.at("presentation"), "R/I");
  EXPECT_EQ(j.at("entries").size(), 5u);
  EXPECT_EQ(j.at("entries")[0].dump(), R"({"i":0,"j":0,"b":1})");
}

TEST(BettiJson, RoundTrip) {
  for (std::int64_t z : {19, 22, 30, 31, 60}) {
    const BettiDiagram B = predicted_diagram(z).diagram;
    EXPECT_EQ(betti_from_json(json::parse(to_json(B).dump())), B) << z;
  }
  json bad = to_json(predicted_diagram(22).diagram);
  bad["presentation"] = "I";
  EXPECT_THROW(betti_from_json(bad), std::invalid_argument);
}

TEST(PredictionJson, Fields) {
  const json j = to_json(predicted_diagram(22));
  EXPECT_EQ(j.at("z"), 22);
  EXPECT_EQ(j.at("r"), 4);
  EXPECT_EQ(j.at("source").dump(), R"({"kind":"q_formula"})");
  const json f = to_json(family_prediction(FamilyTag::o, 4));
  EXPECT_EQ(f.at("source").dump(), R"({"kind":"theorem_family","family":"o","a":4})");
}

TEST(ChainJson, StepsAndVerdict) {
  const auto steps = link_chain(3, 4);
  const json j = chain_to_json(3, 4, steps);
  EXPECT_EQ(j.at("verdict"), "pass");
  ASSERT_EQ(j.at("steps").size(), 4u);
  EXPECT_EQ(j.at("steps")[0].at("from"), "m(3)");
  EXPECT_EQ(j.at("steps")[0].at("to"), "n(3)");
  EXPECT_EQ(j.at("steps")[3].at("to"), "m(5)");
  EXPECT_FALSE(j.at("steps")[0].at("shapes").contains("on_curve"));
  EXPECT_TRUE(j.at("steps")[1].at("shapes").contains("on_curve"));
  EXPECT_EQ(j.at("steps")[0].at("cancellations").size(), 2u);
  EXPECT_EQ(j.at("steps")[0].at("cancellations")[0].at("between").dump(), "[2,3]");
}

TEST(RunReportJson, KeysAndTimings) {
  ExperimentConfig cfg;
  cfg.family = FamilyTag::m;
  cfg.a = 3;
  cfg.trials = 1;
  const RunReport r = run_experiment(cfg);
  const json j = to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"config", "surface", "z", "d_max", "prediction", "theorem_diagram",
                                            "trials", "verdict"}));
  EXPECT_EQ(j.at("config").at("family"), "m");
  EXPECT_TRUE(j.at("config").at("z").is_null());
  const json& t = j.at("trials")[0];
  EXPECT_TRUE(t.contains("seconds"));
  EXPECT_EQ(t.at("points").size(), 12u);
  EXPECT_TRUE(t.at("mrc").is_null());
  EXPECT_EQ(t.at("verdict"), "pass");
  EXPECT_FALSE(to_json(r, false).at("trials")[0].contains("seconds"));
}

TEST(FreeResolutionJson, ModulesAndMatrices) {
  const Ring R4{};
  const Ideal I(R4, {oracle::P(R4, "x0"), oracle::P(R4, "x1")});
  const FreeResolution res = minimize(free_resolution(I));
  const json j = to_json(res);
  EXPECT_TRUE(j.contains("modules"));
  EXPECT_TRUE(j.contains("maps"));
  EXPECT_FALSE(to_json(res, false).contains("maps"));
}
