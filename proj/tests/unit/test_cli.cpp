#include <gtest/gtest.h>

#include <set>
#include <string>

#include "profusion/cli.hpp"
#include "profusion/error.hpp"

namespace profusion {
namespace {

const std::string kData = PF_TOOL_DATA;

JobSpec job(std::string command) {
  JobSpec j;
  j.command = std::move(command);
  return j;
}

const Check& check(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  throw std::out_of_range(name);
}

TEST(CliBlocks, S4AtTwoHasOnlyThePrincipalBlock) {
  auto j = job("blocks");
  j.group = "S4";
  j.oracle = true;
  auto r = run(j);
  ASSERT_FALSE(r.error) << *r.error;
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.result["block_count"], 1);
  EXPECT_EQ(r.result["blocks"][0]["defect_group"]["order"], 8);
  EXPECT_EQ(check(r, "oracle_exhaustive_idempotents").verdict, Verdict::Pass);
  EXPECT_EQ(r.field["modulus"], "t^2+t+1");
}

TEST(CliBlocks, S3AtTwoHasADefectZeroBlock) {
  auto j = job("blocks");
  j.group = "S3";
  j.oracle = true;
  auto r = run(j);
  EXPECT_TRUE(r.passed());
  ASSERT_EQ(r.result["block_count"], 2);
  std::set<int> orders;
  for (const auto& b : r.result["blocks"]) orders.insert(b["defect_group"]["order"].get<int>());
  EXPECT_EQ(orders, (std::set<int>{1, 2}));
}

TEST(CliBlocks, LargeCenterSkipsTheOracle) {
  auto j = job("blocks");
  j.group = "D16";
  j.oracle = true;
  auto r = run(j);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(check(r, "oracle_exhaustive_idempotents").verdict, Verdict::Skipped);
}

TEST(CliFusion, S4PrincipalBlockIsNotNilpotent) {
  auto j = job("fusion");
  j.group = "S4";
  j.nilpotent = true;
  j.oracle = true;
  auto r = run(j);
  ASSERT_FALSE(r.error) << *r.error;
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.result["blocks"][0]["nilpotent"], false);
  EXPECT_EQ(check(r, "block 0: equals Sylow fusion").verdict, Verdict::Pass);
  EXPECT_EQ(check(r, "block 0: oracle conjugation counts").verdict, Verdict::Pass);
}

TEST(CliFusion, NilpotentVerdictOnlyWhenAsked) {
  auto j = job("fusion");
  j.group = "D8";
  auto r = run(j);
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.result["blocks"][0].contains("nilpotent"));
  j.nilpotent = true;
  EXPECT_EQ(run(j).result["blocks"][0]["nilpotent"], true);
}

TEST(CliFusion, AllBlocksAtThree) {
  auto j = job("fusion");
  j.group = "S4";
  j.p = 3;
  j.block = "all";
  j.oracle = true;
  auto r = run(j);
  ASSERT_FALSE(r.error) << *r.error;
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.result["blocks"].size(), 3u);
  EXPECT_EQ(check(r, "block 1: oracle conjugation counts").verdict, Verdict::Skipped);
  EXPECT_EQ(r.result["blocks"][2]["defect_group"]["order"], 1);
}

TEST(CliBrauerPairs, MaximalPairsAreConjugate) {
  auto j = job("brauer-pairs");
  j.group = "A5";
  j.block = "all";
  auto r = run(j);
  ASSERT_FALSE(r.error) << *r.error;
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.result["blocks"][0]["defect_group"]["order"], 4);
}

TEST(CliPathalg, TameOneAtDegreeFour) {
  auto j = job("pathalg");
  j.tame = 1;
  j.degree = 4;
  j.oracle = true;
  auto r = run(j);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.result["degree_dims"], "1,2,2,2");
  EXPECT_EQ(check(r, "oracle span").verdict, Verdict::Pass);
}

TEST(CliPathalg, QuiverFile) {
  auto j = job("pathalg");
  j.quiver = kData + "/loop_and_cycle.quiver";
  j.degree = 3;
  j.p = 3;
  j.oracle = true;
  auto r = run(j);
  ASSERT_FALSE(r.error) << *r.error;
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.result["degree_dims"], "2,3,3");
}

TEST(CliPathalg, ExtensionFieldSkipsTheOracle) {
  auto j = job("pathalg");
  j.tame = 3;
  j.degree = 3;
  j.field_degree = 2;
  j.oracle = true;
  auto r = run(j);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(check(r, "oracle span").verdict, Verdict::Skipped);
}

TEST(CliPresentation, D8Layers) {
  auto j = job("presentation");
  j.group = "D8";
  j.oracle = true;
  auto r = run(j);
  ASSERT_FALSE(r.error) << *r.error;
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.result["degree_dims"], "1,2,2,2,1,0");
}

TEST(CliPresentation, NonPGroupIsAnError) {
  auto j = job("presentation");
  j.group = "S3";
  auto r = run(j);
  ASSERT_TRUE(r.error);
  EXPECT_EQ(r.error->rfind("NotPGroup", 0), 0u);
  EXPECT_FALSE(r.passed());
}

TEST(CliTower, S4OverKleinFour) {
  auto j = job("tower");
  j.tower = kData + "/s4_klein.tower";
  auto r = run(j);
  ASSERT_FALSE(r.error) << *r.error;
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.result["level_orders"], nlohmann::ordered_json::parse("[6, 24]"));
  EXPECT_EQ(check(r, "centralizer bijection").verdict, Verdict::Pass);
}

TEST(CliTower, TruncatedTowerSkipsTheBijection) {
  auto j = job("tower");
  j.tower = kData + "/d16_center.tower";
  j.depth = 1;
  auto r = run(j);
  ASSERT_FALSE(r.error) << *r.error;
  EXPECT_EQ(r.result["level_orders"].size(), 1u);
  EXPECT_EQ(r.result["reaches_trivial"], false);
  EXPECT_EQ(check(r, "centralizer bijection").verdict, Verdict::Skipped);
}

TEST(CliDihedral, ProjectiveGroupOverD8) {
  auto j = job("dihedral-certify");
  j.group = "pgl(2,7)";
  j.oracle = true;
  auto r = run(j);
  ASSERT_FALSE(r.error) << *r.error;
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.result["level_orders"], nlohmann::ordered_json::parse("[8, 16]"));
}

TEST(CliDihedral, OddPrimeIsAnError) {
  auto j = job("dihedral-certify");
  j.group = "S3";
  j.p = 3;
  auto r = run(j);
  ASSERT_TRUE(r.error);
  EXPECT_EQ(r.error->rfind("PreconditionViolated", 0), 0u);
}

TEST(CliValidate, RejectsBadJobs) {
  EXPECT_THROW(validate(job("frobnicate")), Error);
  EXPECT_THROW(validate(job("blocks")), Error);
  auto t = job("tower");
  t.tower = "/nonexistent/file.tower";
  EXPECT_THROW(validate(t), Error);
  auto p = job("pathalg");
  EXPECT_THROW(validate(p), Error);
  p.tame = 1;
  p.quiver = kData + "/loop_and_cycle.quiver";
  EXPECT_THROW(validate(p), Error);
  auto b = job("blocks");
  b.group = "S4";
  b.depth = 0;
  EXPECT_THROW(validate(b), Error);
  b.depth.reset();
  b.field_degree = 0;
  EXPECT_THROW(validate(b), Error);
  b.field_degree.reset();
  EXPECT_NO_THROW(validate(b));
}

TEST(CliValidate, ErrorsAreReported) {
  auto j = job("fusion");
  j.group = "S4";
  j.block = "7";
  auto r = run(j);
  ASSERT_TRUE(r.error);
  EXPECT_EQ(r.to_json()["passed"], false);
  EXPECT_FALSE(r.to_json().contains("result"));
}

TEST(CliReport, CheckNamesAreUnique) {
  Report r;
  r.add("x", true);
  EXPECT_THROW(r.add("x", false), Error);
  r.add("y", Verdict::Skipped);
  EXPECT_TRUE(r.passed());
  r.add("z", false);
  EXPECT_FALSE(r.passed());
}

TEST(CliReport, RepeatedRunsAreByteIdentical) {
  for (const char* g : {"S4", "A5", "D16"}) {
    auto j = job("fusion");
    j.group = g;
    j.block = "all";
    EXPECT_EQ(run(j).to_json().dump(2), run(j).to_json().dump(2)) << g;
  }
  auto t = job("tower");
  t.tower = kData + "/s4_klein.tower";
  EXPECT_EQ(run(t).to_json().dump(), run(t).to_json().dump());
}

TEST(CliReport, TimingIsOptIn) {
  auto j = job("pathalg");
  j.tame = 2;
  EXPECT_FALSE(run(j).to_json().contains("elapsed_ms"));
  j.timing = true;
  EXPECT_TRUE(run(j).to_json().contains("elapsed_ms"));
}

}  // namespace
}  // namespace profusion
