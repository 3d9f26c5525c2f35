#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qps/cli/commands.hpp"
#include "qps/cli/point_parse.hpp"
#include "qps/errors.hpp"

using namespace qps;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(PointParse, Forms) {
  EXPECT_EQ(parse_point("1,4"), QPoint(1, 4));
  EXPECT_EQ(parse_point("1/2,-3/2").to_text(), "1/2,-3/2");
  const QPoint q = parse_point("1,1*sqrt(2):d=2");
  EXPECT_EQ(q.radicand(), 2);
  EXPECT_EQ(q.to_text(), "1,1*sqrt(2)");
  EXPECT_EQ(parse_point("1:d=5,2").to_text(), "1,2");
  for (const std::string s : {"1,1*sqrt(2)", "-1/3,2-5*sqrt(7)", "0,-1"}) {
    EXPECT_EQ(parse_point(s).to_text(), s);
  }
}

TEST(PointParse, ErrorsHavePositions) {
  try {
    parse_point("1,2+y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_point("1"), ParseError);
  EXPECT_THROW(parse_point("1,2,3"), ParseError);
  EXPECT_THROW(parse_point("1,1*sqrt(2):d=3"), ParseError);
  EXPECT_THROW(parse_point("1,2:q=3"), ParseError);
  EXPECT_THROW(parse_point("1*sqrt(2),1*sqrt(3)"), ParseError);
  EXPECT_THROW(parse_point("0,0"), PreconditionError);
}

TEST(Cli, Psi) {
  EXPECT_EQ(cli({"psi", "--point", "1,4", "--n", "16"}).out, "37634\n");
  EXPECT_EQ(cli({"psi", "--point", "1,-2", "--n", "6"}).out, "2\n");
  EXPECT_EQ(cli({"psi", "--point", "1,1*sqrt(2):d=2", "--n", "2"}).out, "-1*sqrt(2)\n");
  EXPECT_EQ(cli({"psi", "--point", "1,4", "--n", "16", "--mod", "31"}).out, "0\n");
  CliRun bad = cli({"psi", "--point", "1,x", "--n", "3"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("position 2"), std::string::npos);
  EXPECT_EQ(cli({"psi", "--n", "3"}).code, kExitUsage);
}

TEST(Cli, Omega) {
  EXPECT_EQ(cli({"omega", "--point", "1,1", "--n", "7", "--r", "0", "--k", "3"}).out, "120\n");
  EXPECT_EQ(cli({"omega", "--point", "0,-1", "--n", "7", "--r", "0", "--k", "3"}).out, "120\n");
  EXPECT_EQ(cli({"omega", "--point", "1,1", "--n", "6", "--k", "3", "--mod", "5"}).out, "0\n");
  EXPECT_EQ(cli({"omega", "--point", "1,1", "--n", "7", "--r", "2", "--k", "2"}).code, kExitUsage);
  CliRun whole = cli({"omega", "--point", "1,1", "--n", "7", "--format", "json"});
  EXPECT_EQ(whole.code, 0);
  EXPECT_TRUE(nlohmann::json::accept(whole.out));
}

TEST(Cli, Verify) {
  CliRun r = cli({"verify", "AU7", "--nmax", "2000", "--format", "json"});
  EXPECT_EQ(r.code, kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["cases_run"], 1999);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(cli({"verify", "bogus"}).code, kExitUsage);
  EXPECT_EQ(cli({"verify", "gen1"}).code, kExitViolation);
  EXPECT_EQ(cli({"verify", "G4", "--mutation"}).code, kExitViolation);
}

TEST(Cli, VerifyOutputFileAndCsv) {
  const std::string path = testing::TempDir() + "qps_report.csv";
  CliRun r = cli({"verify", "G4", "--format", "csv", "--output", path});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_NE(buf.str().find("G4,"), std::string::npos);
  EXPECT_NE(buf.str().find("\r\n"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, VerifyJsonReproducible) {
  const std::vector<std::string> args = {"verify", "infinite_params", "--format", "json",
                                         "--no-timing"};
  EXPECT_EQ(cli(args).out, cli(args).out);
}

TEST(Cli, MersenneEmergeTable) {
  EXPECT_EQ(cli({"mersenne", "13"}).out, "prime\n");
  EXPECT_EQ(cli({"mersenne", "11"}).out, "composite\n");
  EXPECT_EQ(cli({"mersenne", "3"}).out, "prime\n");
  EXPECT_EQ(cli({"mersenne", "7", "--exact"}).out, "prime\n");
  EXPECT_EQ(cli({"emerge", "2", "--point", "1,1"}).out, "p3=5 divides Omega0=120 : PASS\n");
  CliRun t = cli({"table", "--point", "1,1", "--nmax", "12", "--format", "json"});
  EXPECT_EQ(t.code, 0);
  const auto rows = nlohmann::json::parse(t.out)["rows"];
  ASSERT_EQ(rows.size(), 12u);
  const std::vector<std::string> period = {"2", "1", "-1", "-2", "-1", "1"};  // n mod 6 = 0..5
  for (const auto& row : rows) {
    const int n = row["n"];
    EXPECT_EQ(row["psi"], period[n % 6]);
    EXPECT_EQ(row["omega_ratio"], period[n % 6]);
  }
}

TEST(Cli, WorkerCountValidated) {
  EXPECT_EQ(cli({"verify", "G4", "--workers", "0"}).code, kExitUsage);
  EXPECT_EQ(cli({"verify", "G4", "--workers", "2"}).code, kExitPass);
}
