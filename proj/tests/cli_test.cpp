#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "solvcoh/serialize.hpp"

namespace solvcoh {
namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string model_path(const std::string& name) { return std::string(SOLVCOH_MODELS_DIR) + "/" + name; }

TEST(Cli, FamilyPipesIntoValidate) {
  const CliResult fam = run({"family", "bigalke-rollenske", "--n", "2"});
  ASSERT_EQ(fam.code, cli::kOk) << fam.err;
  const CliResult v = run({"validate"}, fam.out);
  EXPECT_EQ(v.code, cli::kOk) << v.err;
  EXPECT_NE(v.out.find("nilpotent complex structure: yes"), std::string::npos);
  const CliResult flags = run({"family", "nakamura", "--lambda", "1,-1", "--t", "1/3", "--flags", "--format", "json"});
  ASSERT_EQ(flags.code, cli::kOk);
  const Json j = Json::parse(flags.out);
  EXPECT_TRUE(j.at("only_trivial_integral_weights").get<bool>());
  EXPECT_FALSE(j.at("disjoint_nonzero_integral_weight").get<bool>());
}

TEST(Cli, ShippedModelsMatchGenerators) {
  std::ifstream f(model_path("bigalke_rollenske_2.json"));
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), run({"family", "bigalke-rollenske", "--n", "2"}).out);
}

TEST(Cli, MasseyCertificateRoundTrip) {
  const CliResult r = run({"massey", "--model", model_path("bigalke_rollenske_2.json"), "--a12", "phi2^phibar2", "--a23",
                     "phi4^phibar4", "--a34", "phi4^phibar4", "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const CliResult ok = run({"certify"}, r.out);
  EXPECT_EQ(ok.code, cli::kOk) << ok.out;
  EXPECT_NE(ok.out.find("verified"), std::string::npos);

  Json tampered = Json::parse(r.out);
  tampered["certificate"]["value"] = scalar_to_json(Scalar(12345));
  const CliResult bad = run({"certify"}, tampered.dump());
  EXPECT_EQ(bad.code, cli::kValidationError);
  EXPECT_NE(bad.out.find("REJECTED"), std::string::npos);
}

TEST(Cli, MasseyTableAndPairing) {
  const CliResult r = run({"massey", "--model", model_path("nakamura_t1.json"), "--a12", "f*phi0^phi1", "--a23",
                     "conj(f*phi0^phi1)", "--a34", "f*phibar0^phibar2", "--pairing"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("verdict: non_vanishing"), std::string::npos);
  EXPECT_NE(r.out.find("orthogonality characters: {f{-2}, f{2}}"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes) {
  const std::string br = model_path("bigalke_rollenske_2.json");
  EXPECT_EQ(run({"massey", "--model", br, "--a12", "phi1^phibar1", "--a23", "phi2^phibar3", "--a34",
                 "phi3^phibar3"}).code,
            cli::kUndefinedProduct);
  EXPECT_EQ(run({"massey", "--model", br, "--a12", "phi5^phibar5", "--a23", "phi4^phibar4", "--a34",
                 "phi4^phibar4"}).code,
            cli::kValidationError);
  EXPECT_EQ(run({"massey", "--model", br, "--a12", "phi9", "--a23", "phi1", "--a34", "phi1"}).code, cli::kParseError);
  EXPECT_EQ(run({"validate"}, "{not json").code, cli::kParseError);
  EXPECT_EQ(run({"bogus"}).code, cli::kParseError);
  EXPECT_EQ(run({}).code, cli::kParseError);
  EXPECT_EQ(run({"family", "nakamura", "--lambda", "1,1"}).code, cli::kValidationError);
  EXPECT_EQ(run({"cohomology", "--model", br, "--bidegree", "9,9"}).code, cli::kParseError);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);

  Json broken = Json::parse(run({"family", "torus", "--n", "2"}).out);
  broken["metric"][0] = {0, 1};
  EXPECT_EQ(run({"validate"}, broken.dump()).code, cli::kValidationError);
}

TEST(Cli, AsthenoScanCertifies) {
  const CliResult r = run({"astheno", "--model", model_path("semidirect_1_1.json"), "--pool", "phi1+phi2", "--format",
                     "json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("kind"), "astheno_scan");
  EXPECT_FALSE(j.at("certificates").empty());
  EXPECT_EQ(run({"certify"}, r.out).code, cli::kOk);
  const CliResult table = run({"astheno", "--model", model_path("bigalke_rollenske_2.json")});
  EXPECT_NE(table.out.find("Stokes"), std::string::npos);
}

TEST(Cli, ReportsAndDeterminism) {
  const std::string nak = model_path("nakamura_t1_3.json");
  const CliResult dd = run({"ddbar-check", "--model", nak});
  EXPECT_NE(dd.out.find("model-level ∂∂̄-lemma: holds"), std::string::npos);
  const CliResult can = run({"canonical", "--model", model_path("bigalke_rollenske_2.json")});
  EXPECT_NE(can.out.find("Kodaira dimension (invariant level): 0"), std::string::npos);
  const CliResult formal = run({"formality", "--model", nak});
  EXPECT_NE(formal.out.find("formality: pass"), std::string::npos);

  const std::vector<std::string> args{"harmonics", "--model", model_path("nakamura_t1.json"), "--format", "json"};
  auto parallel = args;
  parallel.insert(parallel.end(), {"--jobs", "4"});
  const CliResult a = run(args), b = run(args), c = run(parallel);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  const CliResult coh = run({"cohomology", "--model", model_path("nakamura_t1.json"), "--char-bound", "1",
                       "--representatives"});
  EXPECT_EQ(coh.code, cli::kOk) << coh.err;
}

}  // namespace
}  // namespace solvcoh
