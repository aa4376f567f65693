#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "suval_cli/app.hpp"
#include "suval_cli/io.hpp"
#include "suval_cli/oracle.hpp"

namespace fs = std::filesystem;
using suval::cli::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "suval");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = suval::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("suval_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

const char* kLagrangian = R"({"n":2,"basis":[[[1,0],[0,0]],[[0,0],[1,0]]]})";

}  // namespace

TEST_F(CliTest, Dims) {
  const auto r = run({"dims", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "10\n");
  EXPECT_EQ(run({"dims", "--n", "3"}).out, "12\n");
}

TEST_F(CliTest, ThetaOfLagrangian) {
  const auto r = run({"theta", "--subspace", file("lagr.json", kLagrangian)});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"value\":[1,0],\"mod_sign\":true}\n");
}

TEST_F(CliTest, KahlerAndOrbitEq) {
  const std::string lagr = file("lagr.json", kLagrangian);
  const std::string other = file("other.json", R"({"n":2,"basis":[[[1,0],[0,0]],[[0,0],[0,1]]]})");
  EXPECT_EQ(run({"kahler", "--subspace", lagr}).out, "{\"angles\":[1.5707963267948966]}\n");
  EXPECT_EQ(run({"orbit-eq", "--a", lagr, "--b", lagr}).code, 0);
  const auto r = run({"orbit-eq", "--a", lagr, "--b", other});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "{\"same_orbit\":false}\n");
}

TEST_F(CliTest, EvaluateAndProduct) {
  const std::string box = file("box.json", R"({"box":[2,1,2,1]})");
  auto r = run({"evaluate", "--valuation", "phi2", "--polytope", box});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_NEAR(j["value_re"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(j["value_im"].get<double>(), 0.0, 1e-12);

  const std::string cube = file("cube.json", R"({"halfspaces":[
    {"normal":[1,0,0,0],"offset":1},{"normal":[-1,0,0,0],"offset":0},
    {"normal":[0,1,0,0],"offset":1},{"normal":[0,-1,0,0],"offset":0},
    {"normal":[0,0,1,0],"offset":1},{"normal":[0,0,-1,0],"offset":0},
    {"normal":[0,0,0,1],"offset":1},{"normal":[0,0,0,-1],"offset":0}]})");
  r = run({"evaluate", "--valuation", "one_2", "--polytope", cube});
  EXPECT_NEAR(Json::parse(r.out)["value_re"].get<double>(), 6.0, 1e-12);

  r = run({"product", "--a", "phi1_bar", "--b", "phi1", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NEAR(Json::parse(r.out)["value_re"].get<double>(), 4.0, 1e-9);
}

TEST_F(CliTest, UsageAndInputErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"theta"}).code, 2);
  EXPECT_EQ(run({"theta", "--subspace", path("missing.json")}).code, 2);
  EXPECT_EQ(run({"theta", "--subspace", file("bad.json", "{not json")}).code, 2);
  const auto r = run({"evaluate", "--valuation", "psi", "--polytope", file("box.json", R"({"box":[1,1,1,1]})")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("unknown valuation"), std::string::npos);
  EXPECT_EQ(run({"product", "--a", "phi1_bar", "--b", "phi1", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"kinematic", "additive", "--K", file("v.json", R"({"vertices":[[0,0,0,0],[1,0,0,0]]})"), "--L",
                 path("v.json")})
                .code,
            2);
}

TEST_F(CliTest, VerifyFormsReport) {
  const std::string out = path("forms.json");
  const auto r = run({"verify", "forms", "--n", "2", "--samples", "10", "--seed", "3", "--json", out});
  EXPECT_EQ(r.code, 0) << r.out;
  const Json j = Json::parse(slurp(out));
  EXPECT_EQ(j["schema"], "suval.report/1");
  EXPECT_EQ(j["command"], "verify forms");
  EXPECT_EQ(j["config"]["seed"], 3);
  EXPECT_EQ(j["config"]["samples"], 10);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_GT(j["checks"].size(), 20u);
  for (const auto& c : j["checks"]) {
    EXPECT_EQ(c["value"]["provenance"], "exact");
    EXPECT_EQ(c["reference"]["provenance"], "reference");
  }
}

TEST_F(CliTest, KinematicReportIsReproducible) {
  const std::string box = file("box.json", R"({"box":[2,1,2,1]})");
  const std::string a = path("a.json"), b = path("b.json");
  const std::vector<std::string> args{"kinematic", "additive", "--K", box, "--L", box, "--samples", "2000", "--seed", "5"};
  auto with = [&](std::string json, std::string workers) {
    auto v = args;
    v.insert(v.end(), {"--json", json, "--workers", workers});
    return run(v);
  };
  const auto r1 = with(a, "1");
  const auto r2 = with(b, "1");
  EXPECT_EQ(r1.out, r2.out);
  Json ja = Json::parse(slurp(a)), jb = Json::parse(slurp(b));
  ja.erase("timing");
  jb.erase("timing");
  EXPECT_EQ(ja.dump(), jb.dump());
  EXPECT_EQ(ja["checks"][0]["value"]["provenance"], "mc");
  EXPECT_TRUE(ja["checks"][0]["value"].contains("stderr"));
  const Json out = Json::parse(r1.out);
  for (const char* key : {"estimate", "stderr", "reference", "z_score", "pass"}) EXPECT_TRUE(out.contains(key)) << key;
  EXPECT_EQ(with(path("c.json"), "3").out, r1.out);
}

TEST_F(CliTest, KinematicReproduce) {
  const std::string box = file("box.json", R"({"box":[2,1,2,1]})");
  const auto r = run({"kinematic", "reproduce", "--K", box, "--L", box, "--mu", "vol", "--samples", "4000"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NEAR(Json::parse(r.out)["reference"][0].get<double>(), 16.0, 1e-12);
}

TEST_F(CliTest, SelftestSubset) {
  const std::string out = path("self.json");
  const auto r = run({"selftest", "--criteria", "5,13", "--json", out});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS  [ 5]"), std::string::npos);
  EXPECT_NE(r.out.find("PASS  [13]"), std::string::npos);
  EXPECT_TRUE(Json::parse(slurp(out))["pass"].get<bool>());
}

TEST(Io, SubspaceRoundTrip) {
  const Json j = Json::parse(kLagrangian);
  const auto w = suval::cli::subspace_from_json(j);
  EXPECT_EQ(w.dim(), 2);
  EXPECT_TRUE(suval::cli::subspace_from_json(suval::cli::subspace_to_json(w)).same_span(w));
}

TEST(Io, NumbersPrintCompactly) {
  EXPECT_EQ(suval::cli::number(1.0).dump(), "1");
  EXPECT_EQ(suval::cli::number(-0.0).dump(), "0");
  EXPECT_EQ(suval::cli::number(0.5).dump(), "0.5");
}

TEST(Oracle, BoxEnumerationMatchesClosedForm) {
  const std::vector<double> s{2.5, 0.5, 1.25, 3.0};
  EXPECT_NEAR(std::abs(suval::oracle::phi2_box(s) - suval::oracle::phi2_box_closed_form(s)), 0.0, 1e-12);
  EXPECT_DOUBLE_EQ(suval::oracle::elementary_symmetric(s, 0), 1.0);
  EXPECT_DOUBLE_EQ(suval::oracle::elementary_symmetric(s, 4), 2.5 * 0.5 * 1.25 * 3.0);
}
