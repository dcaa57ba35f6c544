// Copyright 2026 The paulient Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "paulient/error.hpp"
#include "paulient/runner.hpp"

namespace paulient::cli {
namespace {

using nlohmann::json;

const std::string kData = PAULIENT_DATA_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_config(std::optional<Command> c, const json& file, const json& flags) {
  std::ostringstream out, err;
  try {
    const RunConfig rc = make_config(c, file, flags);
    const int code = run(rc, out, err);
    return {code, out.str(), err.str()};
  } catch (const ConfigError& e) {
    return {2, "", e.what()};
  }
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

TEST(Commands, NamesRoundTrip) {
  for (Command c : all_commands()) EXPECT_EQ(parse_command(command_name(c)), c);
  EXPECT_FALSE(parse_command("nope").has_value());
}

TEST(Config, DefaultsAndUnknownKeys) {
  const RunConfig rc = make_config(Command::kPeTypical, nullptr, json::object());
  EXPECT_EQ(rc.params.at("d"), 16);
  EXPECT_EQ(rc.seed(), 1u);
  EXPECT_TRUE(rc.explicit_keys.empty());
  EXPECT_THROW(make_config(Command::kPeTypical, {{"bogus", 1}}, nullptr), ConfigError);
  EXPECT_THROW(make_config(Command::kPeTypical, nullptr, {{"bogus", "1"}}), ConfigError);
  EXPECT_THROW(make_config(Command::kPeExact, nullptr, json::object()), ConfigError);  // matrix required
  EXPECT_THROW(make_config(Command::kPeTypical, {{"d", "sixteen"}}, nullptr), ConfigError);
  EXPECT_THROW(make_config(std::nullopt, json::object(), nullptr), ConfigError);
}

TEST(Config, FlagsWinOverFile) {
  const json file = {{"command", "pe-typical"}, {"d", 4}, {"d_a", 2}};
  const RunConfig rc = make_config(std::nullopt, file, {{"d", "16"}});
  EXPECT_EQ(rc.command, Command::kPeTypical);
  EXPECT_EQ(rc.params.at("d"), 16);
  EXPECT_EQ(rc.params.at("d_a"), 2);
  EXPECT_THROW(make_config(Command::kPeExact, file, nullptr), ConfigError);
}

TEST(Config, DigestIgnoresWorkersAndOut) {
  const RunConfig a = make_config(Command::kPeTypical, nullptr, {{"workers", "1"}});
  const RunConfig b = make_config(Command::kPeTypical, nullptr, {{"workers", "4"}, {"out", "x.csv"}});
  const RunConfig c = make_config(Command::kPeTypical, nullptr, {{"seed", "2"}});
  EXPECT_EQ(config_digest(a), config_digest(b));
  EXPECT_NE(config_digest(a), config_digest(c));
  EXPECT_EQ(config_digest(a).size(), 64u);
}

TEST(Run, TypicalValue) {
  const Outcome o = run_config(Command::kPeTypical, nullptr, {{"d", "16"}, {"d_a", "4"}});
  ASSERT_EQ(o.code, 0) << o.err;
  const json doc = json::parse(o.out);
  EXPECT_NEAR(doc["result"]["haar_average"].get<double>(), 0.875348, 1e-6);
  EXPECT_TRUE(doc.contains("config_sha256"));
  EXPECT_EQ(doc["seed"], 1);
}

TEST(Run, Thm1CheckOnStoredClifford) {
  const Outcome o = run_config(Command::kThm1Check, nullptr, {{"matrix", kData + "/cnot.txt"}});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_TRUE(json::parse(o.out)["result"]["product-preserving"].get<bool>());
}

TEST(Run, FactorizeWritesReport) {
  const std::string path = ::testing::TempDir() + "/factorization.txt";
  const Outcome o = run_config(Command::kThm1Factorize, nullptr, {{"matrix", kData + "/cnot.txt"}, {"out", path}});
  ASSERT_EQ(o.code, 0) << o.err;
  const std::string report = read_file(path);
  EXPECT_NE(report.find("# config_sha256 "), std::string::npos);
  EXPECT_NE(report.find("tableau 2"), std::string::npos);
  EXPECT_NE(report.find("residual"), std::string::npos);
}

TEST(Run, ComputationErrorsExitOne) {
  const Outcome o = run_config(Command::kThm1Factorize, nullptr, {{"matrix", kData + "/xx_pi8.txt"}});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("NotProductPreserving"), std::string::npos);
}

TEST(Run, BadInputsExitTwo) {
  EXPECT_EQ(run_config(Command::kPeExact, nullptr, {{"matrix", "/no/such/file"}}).code, 2);
  EXPECT_EQ(run_config(Command::kPeExact, nullptr, {{"matrix", kData + "/cnot.txt"}, {"n_a", "2"}}).code, 2);
  EXPECT_EQ(run_config(Command::kSpinchainRun, nullptr, {{"sweep", "h=0"}}).code, 2);  // xyz sweeps Jz
  EXPECT_EQ(run_config(Command::kSpinchainRun, nullptr, {{"sweep", "Jz=0"}, {"mode", "sampled"}}).code, 2);
}

TEST(Run, PeCsvIsReproducible) {
  const std::string a = ::testing::TempDir() + "/pe_a.csv";
  const std::string b = ::testing::TempDir() + "/pe_b.csv";
  const json flags = {{"matrix", kData + "/xx_pi8.txt"}, {"seed", "5"}};
  json fa = flags, fb = flags;
  fa["out"] = a;
  fb["out"] = b;
  fb["workers"] = "2";
  ASSERT_EQ(run_config(Command::kPeSample, nullptr, fa).code, 0);
  ASSERT_EQ(run_config(Command::kPeSample, nullptr, fb).code, 0);
  auto strip_wall = [](std::string s) {
    // drop the last CSV field of the data row
    const auto last_comma = s.rfind(',');
    return s.substr(0, last_comma);
  };
  const std::string ta = read_file(a);
  EXPECT_NE(ta.find("value,sem,n_samples,wall_time"), std::string::npos);
  EXPECT_NE(ta.find("# seed 5"), std::string::npos);
  EXPECT_EQ(strip_wall(ta), strip_wall(read_file(b)));
}

TEST(Run, SpinchainCsvIsByteIdentical) {
  const json flags = {{"model", "tfim"}, {"sweep", "h=0:0.5:0.5"}, {"n", "4"}, {"mode", "sampled"}, {"seed", "3"}};
  const Outcome a = run_config(Command::kSpinchainRun, nullptr, flags);
  json f2 = flags;
  f2["workers"] = "1";
  const Outcome b = run_config(Command::kSpinchainRun, nullptr, f2);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("sweep_value,n_sites,mean_PE,mean_E,n_steps,total_samples,converged"), std::string::npos);
}

TEST(Run, MpuLibrary) {
  const Outcome o = run_config(Command::kMpuPe, nullptr, {{"library", "hcz"}, {"n_a", "3"}, {"n_b", "3"}});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NEAR(json::parse(o.out)["result"]["pauli_entangling_power"].get<double>(), 0.0, 1e-10);
  EXPECT_EQ(run_config(Command::kMpuPe, nullptr, json::object()).code, 2);
}

TEST(Run, Selftest) { EXPECT_EQ(run_config(Command::kSelftest, nullptr, json::object()).code, 0); }

}  // namespace
}  // namespace paulient::cli
