#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "octoplane/errors.hpp"
#include "octoplane/serialization.hpp"
#include "octoplane/verify.hpp"

using namespace octoplane;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(OCTOPLANE_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Report, PassFlagFollowsResidual) {
  VerifyConfig cfg;
  SuiteReport r;
  r.add("a", "", 1e-9, 1e-8, cfg);
  r.add("b", "", 1e-8, 1e-8, cfg);
  EXPECT_TRUE(r.pass());
  r.add("c", "", std::numeric_limits<double>::quiet_NaN(), 1.0, cfg);
  EXPECT_FALSE(r.find("c")->pass);
  EXPECT_FALSE(r.pass());
  cfg.tol = 1e-12;
  SuiteReport s;
  s.add("a", "", 1e-9, 1e-8, cfg);
  s.add_count("n", "", 0);
  EXPECT_FALSE(s.find("a")->pass);
  EXPECT_TRUE(s.find("n")->pass);
}

TEST(Report, SeedsAndRounding) {
  EXPECT_NE(suite_seed(42, "metric", PlaneKind::OP2), suite_seed(42, "metric", PlaneKind::OH2));
  EXPECT_NE(suite_seed(42, "metric", PlaneKind::OP2), suite_seed(42, "plane", PlaneKind::OP2));
  EXPECT_EQ(suite_seed(7, "plane", PlaneKind::OP11), suite_seed(7, "plane", PlaneKind::OP11));
  EXPECT_EQ(round_residual(1.23456e-9), 1.23e-9);
  EXPECT_EQ(round_residual(0.0), 0.0);
}

TEST(Report, JsonIsDeterministic) {
  VerifyConfig cfg;
  cfg.samples = 5;
  const auto a = to_json(run_suite("plane", PlaneKind::ParaOP2, cfg)).dump();
  const auto b = to_json(run_suite("plane", PlaneKind::ParaOP2, cfg)).dump();
  EXPECT_EQ(a, b);
  EXPECT_THROW((void)run_suite("nope", PlaneKind::OP2, cfg), std::invalid_argument);
}

TEST(Serialization, StepsRoundTrip) {
  const PlaneKind k = PlaneKind::OP2;
  const auto O = AlgebraKind::Octonion;
  const IsometryComposition c{{make_euclidean(k, 2, 0.6, HyperNumber::real(O, 0.8)),
                               make_rotation(k, 0.4, 3)}};
  const Json j = to_json(c);
  const IsometryComposition back = composition_from_json(k, j);
  EXPECT_EQ(to_json(back).dump(), j.dump());
  EXPECT_THROW((void)step_from_json(k, Json::parse(R"({"kind":"euclidean","chart":1,"r":2,"lambda":[0,0,0,0,0,0,0,0]})")),
               InvalidStepError);
  EXPECT_THROW((void)step_from_json(k, Json::parse(R"({"kind":"shear"})")), InvalidStepError);
}

TEST(Serialization, Points) {
  const Json j = Json::parse("[[0,1,0,0,0,0,0,0],[0,0,1,0,0,0,0,0],[1,0,0,0,0,0,0,0]]");
  const ChartPoint p = point_from_json(PlaneKind::OP2, j);
  EXPECT_EQ(p.chart, 3);
  EXPECT_EQ(p.u[1], 1.0);
  EXPECT_THROW((void)point_from_json(PlaneKind::OP2, Json::parse("[[1,2]]")), Error);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("verify plane --plane op2 --samples 3"), 0);
  EXPECT_EQ(run_cli("verify metric --plane op11 --tol 1e-12 --samples 1"), 1);
  EXPECT_EQ(run_cli("verify metric --plane nowhere"), 2);
  EXPECT_EQ(run_cli("verify everything"), 2);
  EXPECT_EQ(run_cli("verify metric --samples abc"), 2);
  EXPECT_EQ(run_cli("apply --plane op2 --point '[[1,0,0,0,0,0,0,0],[0,0,0,0,0,0,0,0],[0,0,0,0,0,0,0,0]]' "
                    "--steps '{\"kind\":\"rotation\",\"t\":0.5}'"),
            0);
  EXPECT_EQ(run_cli("apply --plane op2 --point '[1]' --steps '[]'"), 2);
}

TEST(Cli, OssermanJsonHasWitness) {
  const std::string path = ::testing::TempDir() + "osserman_para.json";
  ASSERT_EQ(run_cli("verify osserman --plane para --samples 10 --json " + path), 0);
  const Json doc = Json::parse(slurp(path));
  EXPECT_EQ(doc["schema"], 1);
  const Json& w = doc["reports"][0]["details"]["witness"];
  EXPECT_EQ(w["kernel_dimension"], 8);
  EXPECT_EQ(w["spacelike_preimage_exists"], false);
}
