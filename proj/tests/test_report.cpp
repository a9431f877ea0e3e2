#include "hessalg/hessalg.hpp"
#include "hessalg/report.hpp"

#include <gtest/gtest.h>

using namespace hessalg;
using report::Json;

TEST(Report, ShapesListing) {
  auto j = report::shapes_json(3, true);
  EXPECT_EQ(j["schema"], "hessalg/1");
  EXPECT_EQ(j["count"], 5);
  EXPECT_EQ(j["shapes"][0]["function"], "h:1,2,3");
  EXPECT_EQ(j["shapes"][0]["mask"], Json::array({"***", "0**", "00*"}));
  EXPECT_EQ(j["shapes"][4]["negative_roots"], Json::array({"-a1", "-a1-a2", "-a2"}));
  auto text = report::shapes_text(2, false);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 6);
  EXPECT_NE(text.find("h:0,0  mask=00/00  yd:2,2\n"), std::string::npos);
  EXPECT_NE(text.find("h:1,2  mask=**/0*  yd:1  M_H={}\n"), std::string::npos);
}

TEST(Report, VarietyJsonWithFit) {
  report::VarietyQuery q{OperatorSpec::parse("jordan:0^3"), parse_shape("h:2,3,3"), {2, 3, 5}, {}, 10};
  auto j = report::variety_json(q);
  EXPECT_EQ(j["results"][0]["count"], 9);
  EXPECT_EQ(j["results"][0]["points"].size(), 9u);
  EXPECT_TRUE(j["results"][2]["points_omitted"].get<bool>());
  EXPECT_EQ(j["fit"]["polynomial"], "q^2+2q+1");
  EXPECT_EQ(j["over"], "F_p");
  std::vector<std::string> keys;
  for (auto &[k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"schema", "command", "operator", "n", "shape", "diagram", "strict", "over",
                                            "results", "fit"}));
}

TEST(Report, PosetJsonAndDot) {
  auto poset = build_poset(OperatorSpec::parse("jordan:1^1,0^1"), {2, 3}, false);
  auto j = report::poset_json(poset);
  EXPECT_EQ(j["classes"].size(), 5u);
  EXPECT_EQ(j["classes"][0]["shapes"], Json::array({"h:0,0", "h:0,1"}));
  EXPECT_EQ(j["hasse"][0], Json::array({"h:0,0", "h:0,2"}));
  EXPECT_EQ(j["p"], Json::array({2, 3}));
  auto dot = report::poset_dot(poset);
  EXPECT_EQ(dot.rfind("digraph P_X {", 0), 0u);
  EXPECT_NE(dot.find("c0 [label=\"∅-variety | λ=(2,2)=(2,1) | h=(0,0) | #0,0\"];"), std::string::npos);
  EXPECT_NE(dot.find("c4 [label=\"λ=∅ | h=(2,2) | #3,4\"];"), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '>'), 5);
}

TEST(Report, WitnessJsonFieldOrder) {
  auto x = OperatorSpec::parse("jordan:a^3,b^2,c^1");
  auto cert = witness_certificate(x.jordan_spec(PrimeField(3)), 2, 4);
  auto j = report::witness_json(cert, x.name());
  std::vector<std::string> keys;
  for (auto &[k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"schema", "command", "operator", "p", "pair", "flag_columns",
                                            "lemma_checks", "memberships", "field_independent", "verified"}));
  EXPECT_EQ(j["flag_columns"], Json::array({"e4", "e2", "e5", "e1", "e6", "e3"}));
  EXPECT_TRUE(j["verified"].get<bool>());
}

TEST(Report, ByteStableAcrossRunsAndWorkers) {
  auto op = OperatorSpec::parse("jordan:0^2,1^2");
  auto a = report::poset_json(build_poset(op, {2, 3}, false, {1, false})).dump(2);
  auto b = report::poset_json(build_poset(op, {2, 3}, false, {1, false})).dump(2);
  auto c = report::poset_json(build_poset(op, {2, 3}, false, {3, false})).dump(2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_EQ(report::poset_dot(build_poset(op, {2}, true, {1, false})),
            report::poset_dot(build_poset(op, {2}, true, {4, false})));
}

TEST(Report, DecompositionAndInterval) {
  auto j = report::decomposition_json(verify_decomposition(parse_shape("h:3,3,3,5,5"), 2));
  EXPECT_EQ(j["count"], 63);
  EXPECT_EQ(j["factor_counts"], Json::array({21, 3}));
  auto iv = report::interval_json(indecomposable_interval(4));
  EXPECT_EQ(iv["bottom"], "h:2,3,4,4");
  EXPECT_TRUE(iv["verified"].get<bool>());
  auto f = report::failure_json("variety", "usage-error", "bad");
  EXPECT_EQ(f.dump(), R"({"schema":"hessalg/1","command":"variety","status":"usage-error","message":"bad"})");
}
