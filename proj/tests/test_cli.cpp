#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ucrga_cli.hpp"

using namespace ucrga;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;

  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ucrga");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return Outcome{code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("ucrga_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(CliCompute, StrictOnA) {
  const auto r = run_cli({"compute", "--input", fixtures::data_path("A.csv"), "--method", "strict", "--output", "json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j["method"], "strict");
  EXPECT_EQ(j["rank"], 3);
  EXPECT_EQ(j["shape"], nlohmann::json({3, 3}));
  EXPECT_LE(max_abs_diff(matrix_from_json(j["rga"]), fixtures::rga_a_printed()), 5e-3);
  EXPECT_EQ(j["checks"].size(), 3u);
}

TEST(CliCompute, TableOutput) {
  const auto r = run_cli({"compute", "--input", fixtures::data_path("A.csv"), "--method", "strict", "--digits", "2"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("method: strict"), std::string::npos);
  EXPECT_NE(r.out.find("-2.47"), std::string::npos);
  EXPECT_NE(r.out.find("5.88"), std::string::npos);
  EXPECT_NE(r.out.find("rank: 3"), std::string::npos);
}

TEST(CliCompute, StrictOnSingularExitsTwo) {
  const auto r = run_cli({"compute", "--input", fixtures::data_path("ones3.csv"), "--method", "strict"});
  EXPECT_EQ(r.code, cli::kSingular);
  EXPECT_NE(r.err.find("singular"), std::string::npos);
  EXPECT_NE(r.err.find("--method uc"), std::string::npos);
  EXPECT_EQ(run_cli({"compute", "--input", fixtures::data_path("M.csv"), "--method", "strict"}).code, cli::kSingular);
}

TEST(CliCompute, UcOnMRepeatsBlocks) {
  const auto r = run_cli({"compute", "--input", fixtures::data_path("M.csv"), "--output", "json"});
  ASSERT_EQ(r.code, cli::kOk);
  const auto j = r.json();
  EXPECT_EQ(j["method"], "uc");
  EXPECT_EQ(j["balancer_converged"], true);
  const auto rga = matrix_from_json(j["rga"]);
  EXPECT_LE(max_abs_diff(block(rga, 0, 0, 3, 3), block(rga, 0, 3, 3, 3)), 1e-9);
  EXPECT_LE(max_abs_diff(rga, fixtures::uc_rga_m_printed()), 5e-3);
}

TEST(CliCompute, AllMethodsSkipsStrictWhenSingular) {
  const auto r = run_cli({"compute", "--input", fixtures::data_path("ones3.csv"), "--method", "all", "--output", "json"});
  ASSERT_EQ(r.code, cli::kOk);
  const auto j = r.json();
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["method"], "mp");
  EXPECT_EQ(j[1]["method"], "uc");
  EXPECT_NE(r.err.find("strict RGA skipped"), std::string::npos);

  const auto three = run_cli({"compute", "--input", fixtures::data_path("A.csv"), "--method", "all", "--output", "json"});
  EXPECT_EQ(three.json().size(), 3u);
}

TEST(CliCompute, CsvOutputIsFullPrecision) {
  const auto r = run_cli({"compute", "--input", fixtures::data_path("A.csv"), "--method", "strict", "--output", "csv"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(parse_csv(r.out), rga_strict(fixtures::a()).rga);
}

TEST(CliCompute, JsonInput) {
  const auto path = temp_file("a.json", to_json(fixtures::a()).dump());
  const auto r = run_cli({"compute", "--input", path, "--method", "strict", "--output", "json"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(matrix_from_json(r.json()["rga"]), rga_strict(fixtures::a()).rga);
  const auto forced = temp_file("a_json.txt", to_json(fixtures::a()).dump());
  EXPECT_EQ(run_cli({"compute", "--input", forced, "--format", "json"}).code, cli::kOk);
}

TEST(CliCompute, BalancerWarningIsSurfaced) {
  const auto path = temp_file("sparse.csv", "1,3,0\n0,2,7\n5,0,9\n");
  const auto r = run_cli({"compute", "--input", path, "--max-iter", "1", "--output", "json"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.json()["balancer_converged"], false);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(CliCompare, ScaledOnes) {
  const auto r = run_cli({"compare", "--input", fixtures::data_path("scaled_ones3.csv"), "--output", "json"});
  ASSERT_EQ(r.code, cli::kOk);
  const auto j = r.json();
  EXPECT_LE(max_abs_diff(matrix_from_json(j["uc"]["rga"]), DenseMatrix(3, 3, 1.0 / 9.0)), 1e-9);
  EXPECT_LE(max_abs_diff(matrix_from_json(j["mp"]["rga"]), fixtures::mp_rga_scaled_ones3_exact()), 1e-9);
  EXPECT_NEAR(j["max_abs_difference"].get<double>(), 3.0 / 9.0, 1e-12);
  EXPECT_GT(j["scaling_residual"]["mp"].get<double>(), 1e-2);
  EXPECT_LE(j["scaling_residual"]["uc"].get<double>(), 1e-7);
}

TEST(CliCompare, NonsingularMethodsCoincide) {
  random::Engine rng(70);
  std::ostringstream os;
  write_csv(os, random::gaussian(rng, 4, 4));
  const auto r = run_cli({"compare", "--input", temp_file("rand4.csv", os.str()), "--output", "json"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_LE(r.json()["max_abs_difference"].get<double>(), 1e-8);
}

TEST(CliCompare, MpOnM) {
  const auto r = run_cli({"compare", "--input", fixtures::data_path("M.csv"), "--output", "json"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_LE(max_abs_diff(matrix_from_json(r.json()["mp"]["rga"]), fixtures::mp_rga_m_exact()), 1e-12);
  const auto table = run_cli({"compare", "--input", fixtures::data_path("M.csv")});
  EXPECT_NE(table.out.find("max_abs_difference"), std::string::npos);
}

TEST(CliCheck, ExitCodes) {
  EXPECT_EQ(run_cli({"check", "--input", fixtures::data_path("A.csv")}).code, cli::kOk);
  EXPECT_EQ(run_cli({"check", "--input", fixtures::data_path("A.csv"), "--method", "all"}).code, cli::kOk);
  const auto mp = run_cli({"check", "--input", fixtures::data_path("ones3.csv"), "--method", "mp", "--output", "json"});
  EXPECT_EQ(mp.code, cli::kPropertyFailure);
  bool scaling_failed = false;
  const auto report = mp.json();
  for (const auto& c : report["checks"])
    if (c["name"] == "scaling_invariance") scaling_failed = !c["passed"].get<bool>();
  EXPECT_TRUE(scaling_failed);

  const auto zero = run_cli({"check", "--input", fixtures::data_path("zero2.csv"), "--output", "json"});
  EXPECT_EQ(zero.code, cli::kOk);
  EXPECT_EQ(zero.json()["rank"], 0);
  EXPECT_EQ(zero.json()["element_sum"], 0.0);
}

TEST(CliErrors, IoAndParseFailuresExitOne) {
  EXPECT_EQ(run_cli({"compute", "--input", "/nonexistent/file.csv"}).code, cli::kIoError);
  const auto ragged = run_cli({"compute", "--input", temp_file("ragged.csv", "1,2\n3\n")});
  EXPECT_EQ(ragged.code, cli::kIoError);
  EXPECT_NE(ragged.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run_cli({"compute", "--input", temp_file("empty.csv", "")}).code, cli::kIoError);
  EXPECT_EQ(run_cli({"compute"}).code, cli::kIoError);
  EXPECT_EQ(run_cli({"compute", "--input", "x.csv", "--method", "bogus"}).code, cli::kIoError);
  EXPECT_EQ(run_cli({"compute", "--input", "x.csv", "--rank-tol", "-1"}).code, cli::kIoError);
  EXPECT_EQ(run_cli({}).code, cli::kIoError);
  EXPECT_EQ(run_cli({"--help"}).code, cli::kOk);
}

TEST(CliProperties, DeterministicMachineOutput) {
  for (const char* cmd : {"compute", "compare", "check"}) {
    const std::vector<std::string> args{cmd, "--input", fixtures::data_path("M.csv"), "--output", "json", "--seed", "7"};
    EXPECT_EQ(run_cli(args).out, run_cli(args).out) << cmd;
  }
}

TEST(CliProperties, JsonRoundTripIsLossless) {
  for (const char* method : {"mp", "uc"}) {
    for (const char* file : {"M.csv", "scaled_ones3.csv", "A.csv"}) {
      const auto r = run_cli({"compute", "--input", fixtures::data_path(file), "--method", method, "--output", "json"});
      ASSERT_EQ(r.code, cli::kOk);
      const auto g = parse_csv(read_file(fixtures::data_path(file)));
      const auto expected = compute_rga(g, *parse_method(method)).rga;
      EXPECT_EQ(parse_json(r.json()["rga"].dump()), expected);
    }
  }
}
