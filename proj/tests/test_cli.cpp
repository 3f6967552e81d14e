#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "aiforge/cli.hpp"
#include "aiforge/errors.hpp"
#include "aiforge/golden_tables.hpp"
#include "aiforge/record.hpp"

using namespace aiforge;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "aiforge");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<FunctionRecord> records(const std::string& out) {
  std::vector<FunctionRecord> rs;
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) rs.push_back(FunctionRecord::from_json(line));
  return rs;
}

}  // namespace

TEST(Cli, Construct) {
  auto r = run({"--json", "construct", "--k", "6", "--d", "6", "--m", "000", "--free", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(records(r.out).at(0).svv, "0000000111111");

  r = run({"construct", "--json", "--k", "6", "--d", "6", "--m", "111", "--free", "1", "--sanf"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rec = records(r.out).at(0);
  EXPECT_EQ(rec.svv, "1111111000000");
  EXPECT_EQ(rec.sanf, "1000000110000");
  ASSERT_TRUE(rec.params.has_value());
  EXPECT_EQ(rec.params->m, "111");

  r = run({"construct", "--k", "6", "--d", "5"});
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.err.find("suffix"), std::string::npos);
  EXPECT_TRUE(r.out.empty());

  r = run({"construct", "--k", "6", "--d", "1"});
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.err.find("at least 2"), std::string::npos);
}

TEST(Cli, ConstructFreeIndex) {
  const auto a = run({"--json", "construct", "--k", "13", "--d", "5", "--m", "000", "--free-index", "1"});
  ASSERT_EQ(a.code, 0) << a.err;
  const auto rec = records(a.out).at(0);
  EXPECT_EQ(rec.params->free, std::string(16, '0') + "1");
  EXPECT_EQ(rec.svv[21], '1');
  EXPECT_NE(run({"construct", "--k", "6", "--d", "6", "--free-index", "2"}).code, 0);
}

TEST(Cli, Transform) {
  auto r = run({"--json", "transform", "--svv", "0000000111111"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(records(r.out).at(0).sanf, "0000000110000");
  r = run({"--json", "transform", "--sanf", "1000000110000"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(records(r.out).at(0).svv, "1111111000000");
  r = run({"--json", "transform", "--svv", "00"});
  EXPECT_EQ(records(r.out).at(0).sanf, "00");
  EXPECT_NE(run({"transform", "--svv", "01x"}).code, 0);
  EXPECT_NE(run({"transform"}).code, 0);
  EXPECT_NE(run({"transform", "--svv", "01", "--sanf", "01"}).code, 0);
}

TEST(Cli, Ai) {
  auto r = run({"--json", "ai", "--svv", "0010000111011"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rec = records(r.out).at(0);
  EXPECT_EQ(rec.ai, 6u);
  EXPECT_EQ(rec.ai_kind, "exact");
  EXPECT_EQ(records(run({"--json", "ai", "--svv", "000"}).out).at(0).ai, 0u);
  EXPECT_EQ(records(run({"--json", "ai", "--svv", "0101011010101"}).out).at(0).ai, 6u);

  r = run({"--json", "ai", "--svv", "0110", "--witness"});
  rec = records(r.out).at(0);
  ASSERT_TRUE(rec.witness.has_value());
  EXPECT_FALSE(rec.witness->monomials.empty());

  r = run({"ai", "--svv", std::string(26, '0')});
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.err.find("certify"), std::string::npos);
}

TEST(Cli, Certify) {
  const std::string table2 = "00000" + std::string(17, '0') + "11111";
  auto r = run({"--json", "certify", "--svv", table2, "--d", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rec = records(r.out).at(0);
  ASSERT_TRUE(rec.certificate.has_value());
  EXPECT_TRUE(rec.certificate->certified);
  EXPECT_EQ(rec.certificate->rank_f, 17902u);
  EXPECT_EQ(rec.ai_kind, "lower_bound");

  rec = records(run({"--json", "certify", "--svv", "000", "--d", "1"}).out).at(0);
  EXPECT_FALSE(rec.certificate->certified);
  EXPECT_FALSE(rec.ai.has_value());

  rec = records(run({"--json", "certify", "--svv", "0000000111111", "--d", "6"}).out).at(0);
  EXPECT_TRUE(rec.certificate->certified);

  EXPECT_NE(run({"certify", "--svv", "0000000111111", "--d", "7"}).code, 0);
}

TEST(Cli, CertifyAgreesWithAi) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 40; ++i) {
    const unsigned n = 2 + rng() % 9;
    std::string svv;
    for (unsigned j = 0; j <= n; ++j) svv.push_back((rng() & 1U) ? '1' : '0');
    const unsigned d = 1 + rng() % (n / 2);
    const auto c = records(run({"--json", "certify", "--svv", svv, "--d", std::to_string(d)}).out).at(0);
    const auto a = records(run({"--json", "ai", "--svv", svv}).out).at(0);
    if (c.certificate->certified) EXPECT_GE(*a.ai, d) << svv;
  }
}

TEST(Cli, Enumerate) {
  auto r = run({"--json", "enumerate", "--k", "6", "--d", "6", "--verify-ai"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rs = records(r.out);
  ASSERT_EQ(rs.size(), 16u);
  for (const auto& rec : rs) EXPECT_EQ(rec.ai, 6u);

  r = run({"enumerate", "--k", "13", "--d", "5", "--count-only"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1048576\n");

  r = run({"--json", "enumerate", "--k", "2", "--d", "2", "--verify-ai"});
  rs = records(r.out);
  ASSERT_EQ(rs.size(), 8u);
  for (const auto& rec : rs) EXPECT_GE(*rec.ai, 2u);

  rs = records(run({"--json", "enumerate", "--k", "13", "--d", "5", "--limit", "3"}).out);
  EXPECT_EQ(rs.size(), 3u);

  EXPECT_NE(run({"enumerate", "--k", "13", "--d", "5", "--verify-ai", "--limit", "1"}).code, 0);
  EXPECT_NE(run({"enumerate", "--k", "6", "--d", "4"}).code, 0);
}

TEST(Cli, VerifyTable) {
  auto r = run({"verify-table", "--table", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("PASS, 16/16 rows"), std::string::npos);
  r = run({"verify-table", "--table", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("PASS, 8/8 patterns"), std::string::npos);
  r = run({"verify-table", "--table", "3"});
  EXPECT_NE(r.code, 0);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_NE(run({}).code, 0);
  EXPECT_NE(run({"bogus"}).code, 0);
  EXPECT_NE(run({"construct", "--k", "6"}).code, 0);
}

TEST(Record, JsonRoundTripIsByteIdentical) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 200; ++i) {
    FunctionRecord r;
    r.n = 1 + rng() % 30;
    for (unsigned j = 0; j <= r.n; ++j) r.svv.push_back((rng() & 1U) ? '1' : '0');
    if (rng() & 1U) r.sanf = r.svv;
    if (rng() & 1U) {
      r.ai = rng() % 10;
      r.ai_kind = (rng() & 1U) ? "exact" : "lower_bound";
    }
    if (rng() & 1U) r.params = RecordParams{6, 6, "010", "1"};
    if (rng() & 1U) r.witness = RecordWitness{"f+1", {0, 3, 5}};
    if (rng() & 1U) r.certificate = RecordCertificate{2, true, 10, 10, 9, 11, 12};
    const std::string once = r.to_json();
    const auto parsed = FunctionRecord::from_json(once);
    EXPECT_EQ(parsed, r);
    EXPECT_EQ(parsed.to_json(), once);
  }
}

TEST(Record, RejectsInconsistentRecords) {
  EXPECT_THROW(FunctionRecord::from_json(R"({"n":3,"svv":"01"})"), ContractViolation);
  EXPECT_THROW(FunctionRecord::from_json(R"({"n":1,"svv":"01","ai":1,"ai_kind":"guess"})"), ContractViolation);
  EXPECT_THROW(FunctionRecord::from_json("{not json"), ContractViolation);
}

TEST(GoldenTables, PatternsExpand) {
  const auto rows = table2_rows();
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[4].pattern, "10101" + std::string(17, '?') + "01010");
  EXPECT_EQ(table1_rows().size(), 16u);
}
