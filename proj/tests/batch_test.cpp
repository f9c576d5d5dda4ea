#include "gtest/gtest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

#include "pfusion/batch.hpp"
#include "pfusion/error.hpp"

using namespace pfusion;
using nlohmann::json;

namespace
{

BatchSpec spec_for(std::vector<std::string> groups, std::vector<Check> checks,
                   std::optional<std::vector<unsigned>> primes = std::nullopt)
{
  BatchSpec spec;
  spec.groups = std::move(groups);
  spec.checks = std::move(checks);
  spec.primes = std::move(primes);
  return spec;
}

int run_cli(std::string const &args)
{
  std::string cmd = std::string(PFUSION_CLI) + ' ' + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // anonymous namespace

TEST(BatchSpecTest, Parse)
{
  auto spec = parse_batch_spec(json::parse(R"({
    "groups": ["S4", "A4"], "primes": [3], "family": "max-elementary-abelian",
    "checks": ["theorem-a", "gt"], "output": "out.json", "quantifier": "existential"
  })"));
  EXPECT_EQ(2u, spec.groups.size());
  EXPECT_EQ(std::vector<unsigned>{3u}, *spec.primes);
  EXPECT_EQ(FamilyKind::MaxElementaryAbelian, spec.family);
  EXPECT_EQ((std::vector<Check>{Check::TheoremA, Check::GlaubermanThompson}), spec.checks);
  EXPECT_EQ(Quantifier::Existential, spec.config.quantifier);

  auto all = parse_batch_spec(json::parse(R"({"groups": ["S4"], "primes": "all-odd",
                                               "checks": ["zj"]})"));
  EXPECT_FALSE(all.primes);

  for (auto bad : {R"({"groups": [], "checks": ["gt"]})", R"({"groups": ["S4"]})",
                   R"({"groups": ["S4"], "checks": ["nope"]})",
                   R"({"groups": ["S4"], "checks": ["gt"], "primes": "some"})",
                   R"({"groups": ["S4"], "checks": ["gt"], "colour": 1})",
                   R"({"groups": "S4", "checks": ["gt"]})",
                   R"({"groups": ["S4"], "checks": ["gt"], "family": "custom"})"}) {
    EXPECT_THROW(parse_batch_spec(json::parse(bad)), Error) << bad;
  }

  for (auto c : {Check::Frobenius, Check::GlaubermanThompson, Check::TheoremA, Check::TheoremB,
                 Check::ZJ, Check::Replacement})
    EXPECT_EQ(c, parse_check(check_name(c)));
}

TEST(BatchTest, SingleConfirmed)
{
  auto res = run_batch(spec_for({"S4"}, {Check::TheoremA}, std::vector<unsigned>{3u}));
  EXPECT_EQ(ExitOk, res.exit_code);
  auto const &reports = res.report["reports"];
  ASSERT_GE(reports.size(), 1u);
  EXPECT_EQ("theorem-a", reports[0]["theorem"]);
  EXPECT_EQ("confirmed", reports[0]["verdict"]);
  EXPECT_EQ(tool_version, res.report["tool_version"]);
  EXPECT_EQ(0, res.report["summary"]["falsified"]);
}

TEST(BatchTest, ExitCodes)
{
  EXPECT_EQ(ExitInputError, run_batch(spec_for({"S4", "nosuch"}, {Check::GlaubermanThompson}))
                              .exit_code);
  EXPECT_EQ(ExitInputError,
            run_batch(spec_for({"S4"}, {Check::TheoremA}, std::vector<unsigned>{2u})).exit_code);
  EXPECT_EQ(ExitInputError,
            run_batch(spec_for({"S4"}, {Check::Frobenius}, std::vector<unsigned>{4u})).exit_code);
  EXPECT_EQ(ExitOk,
            run_batch(spec_for({"S4"}, {Check::Frobenius}, std::vector<unsigned>{2u})).exit_code);

  auto unmet = run_batch(spec_for({"A4"}, {Check::ZJ}));
  EXPECT_EQ(ExitHypothesesUnmet, unmet.exit_code);
  EXPECT_GT(unmet.report["summary"]["hypotheses_unmet"].get<int>(), 0);

  // Size limits are input errors.
  auto small = spec_for({"S6"}, {Check::GlaubermanThompson});
  small.config.max_order = 100u;
  EXPECT_EQ(ExitInputError, run_batch(small).exit_code);

  auto lattice = spec_for({"C3wrC3"}, {Check::TheoremA});
  lattice.config.lattice_exponent = 3u;
  EXPECT_EQ(ExitInputError, run_batch(lattice).exit_code);

  // p not dividing |G| is skipped, not an error.
  auto skip = run_batch(spec_for({"C7:C3"}, {Check::GlaubermanThompson},
                                 std::vector<unsigned>{5u}));
  EXPECT_EQ(ExitOk, skip.exit_code);
  EXPECT_EQ(1u, skip.report["skipped"].size());
}

TEST(BatchTest, FaultsAreFatal)
{
  auto corrupt = spec_for({"C3wrC2"}, {Check::TheoremA});
  corrupt.config.fault = Fault::CorruptFamily;
  auto res = run_batch(corrupt);
  EXPECT_EQ(ExitFalsified, res.exit_code);
  EXPECT_GT(res.report["summary"]["falsified"].get<int>(), 0);

  auto dedup = spec_for({"S4"}, {Check::Frobenius}, std::vector<unsigned>{3u});
  dedup.config.fault = Fault::BrokenDedup;
  res = run_batch(dedup);
  EXPECT_EQ(ExitFalsified, res.exit_code);
  ASSERT_EQ(1u, res.report["errors"].size());
  EXPECT_EQ("MethodDisagreement", res.report["errors"][0]["code"]);

  // Fatal beats input errors.
  auto both = spec_for({"nosuch", "C3wrC2"}, {Check::TheoremA});
  both.config.fault = Fault::CorruptFamily;
  EXPECT_EQ(ExitFalsified, run_batch(both).exit_code);
}

TEST(BatchTest, AbortsAfterFatalItem)
{
  auto spec = spec_for({"S3", "C3wrC2", "S4", "A4", "SL(2,3)"}, {Check::TheoremA});
  spec.config.fault = Fault::CorruptFamily;
  for (unsigned threads : {1u, 3u}) {
    auto res = run_batch(spec, threads);
    EXPECT_EQ(ExitFalsified, res.exit_code);
    EXPECT_EQ(3, res.report["summary"]["aborted"]);
    for (auto const &r : res.report["reports"])
      EXPECT_TRUE(r["group"] == "S3" || r["group"] == "C3wrC2");
  }
}

TEST(BatchTest, Deterministic)
{
  auto spec = spec_for({"S4", "SL(2,3)", "3^1+2", "C7:C3", "A5"},
                       {Check::Frobenius, Check::GlaubermanThompson, Check::TheoremA,
                        Check::TheoremB, Check::ZJ, Check::Replacement});
  auto a = run_batch(spec, 1u);
  auto b = run_batch(spec, 4u);
  EXPECT_EQ(a.exit_code, b.exit_code);
  EXPECT_EQ(deterministic_dump(a.report), deterministic_dump(b.report));
  EXPECT_FALSE(json::parse(deterministic_dump(a.report)).contains("run_info"));
  EXPECT_TRUE(a.report["run_info"].contains("timestamp"));

  // Only run_info differs.
  auto x = a.report, y = b.report;
  x.erase("run_info");
  y.erase("run_info");
  EXPECT_EQ(x, y);
}

TEST(BatchTest, WritesReport)
{
  auto spec = spec_for({"S4"}, {Check::GlaubermanThompson});
  spec.output = testing::TempDir() + "batch_report.json";
  auto res = run_batch(spec);

  std::ifstream in(spec.output);
  ASSERT_TRUE(in);
  auto doc = json::parse(in);
  EXPECT_EQ(res.report, doc);
  std::remove(spec.output.c_str());

  spec.output = "/nonexistent-dir/x.json";
  EXPECT_EQ(ExitInputError, run_batch(spec).exit_code);
}

TEST(BatchTest, WitnessesSerialized)
{
  BatchSpec spec = spec_for({"ASL(2,3)"}, {Check::ZJ});
  auto res = run_batch(spec);
  bool saw = false;
  for (auto const &r : res.report["reports"]) {
    if (r["hypotheses"].contains("acts_p_stably") && !r["hypotheses"]["acts_p_stably"])
      saw = true;
  }
  EXPECT_TRUE(saw);
  EXPECT_EQ(ExitHypothesesUnmet, res.exit_code);
}

TEST(CliTest, ExitCodes)
{
  EXPECT_EQ(0, run_cli("check-a S4 -p 3"));
  EXPECT_EQ(0, run_cli("gt 'SL(2,3)'"));
  EXPECT_EQ(0, run_cli("info 'PSL(2,7)'"));
  EXPECT_EQ(0, run_cli("stability S4 -p 3 --full"));
  EXPECT_EQ(0, run_cli("family 3^1+2 -p 3 --kind all-abelian"));
  EXPECT_EQ(0, run_cli("check-b S4 -p 3 --closed P"));
  EXPECT_EQ(0, run_cli("replacement C3wrC3"));
  EXPECT_EQ(2, run_cli("zj A4 -p 3"));
  EXPECT_EQ(3, run_cli("info nosuch"));
  EXPECT_EQ(3, run_cli("check-b S4 -p 3 --closed '(1 2)'"));
  EXPECT_EQ(1, run_cli("check-a C3wrC2 -p 3 --inject-fault corrupt-family"));
  EXPECT_EQ(1, run_cli("nilpotency S4 -p 3 --inject-fault broken-dedup"));
  EXPECT_NE(0, run_cli("frobnicate S4"));
}

TEST(CliTest, BatchSpecFile)
{
  std::string spec = testing::TempDir() + "cli_spec.json";
  std::string out = testing::TempDir() + "cli_out.json";
  {
    std::ofstream f(spec);
    f << R"({"groups": ["S4", "C13:C3"], "primes": "all-odd", "checks": ["theorem-a", "gt"]})";
  }
  EXPECT_EQ(0, run_cli("batch --spec " + spec + " --report " + out));
  std::ifstream in(out);
  ASSERT_TRUE(in);
  auto doc = json::parse(in);
  EXPECT_EQ(0, doc["summary"]["exit_code"]);
  EXPECT_EQ(0, doc["summary"]["falsified"]);
  std::remove(spec.c_str());
  std::remove(out.c_str());

  EXPECT_EQ(3, run_cli("batch --spec /nonexistent.json"));
}
