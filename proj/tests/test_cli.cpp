// Copyright 2026 The vitalpovm Authors
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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "oracles.hpp"
#include "vitalpovm/io.hpp"
#include "vitalpovm_cli/cli.hpp"

namespace vitalpovm {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("vitalpovm-cli-" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
    return path(name);
  }

  std::string construct(const std::string& name, const std::vector<std::string>& args) const {
    std::vector<std::string> full = {"construct"};
    full.insert(full.end(), args.begin(), args.end());
    const CliResult r = run(full);
    EXPECT_EQ(r.code, 0) << r.err;
    return write(name, r.out);
  }

  fs::path dir_;
};

TEST_F(Cli, ConstructFamilies) {
  CliResult r = run({"construct", "--family", "real-max", "--n", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = parse_json(r.out);
  EXPECT_EQ(frame_from_json(j).size(), 6u);
  EXPECT_EQ(j["config"]["family"], "real-max");
  EXPECT_EQ(j["config"]["seed"], 0);

  r = run({"construct", "--family", "design-agl17", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = parse_json(r.out);
  EXPECT_EQ(frame_from_json(j).size(), 21u);
  EXPECT_EQ(j["meta"]["seed"], 7);

  r = run({"construct", "--family", "gonzalez", "--n", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error:"), std::string::npos);

  EXPECT_EQ(run({"construct", "--family", "nope", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"construct", "--family", "cauchy"}).code, 2);
  EXPECT_EQ(run({"construct", "--family", "cauchy", "--n", "3", "--bogus"}).code, 2);
  EXPECT_EQ(run({"construct", "--family", "design-pairs", "--n", "4", "--w", "3"}).code, 2);
  EXPECT_EQ(run({"construct", "--family", "design-pairs", "--n", "4", "--w", "2"}).code, 0);
  EXPECT_EQ(run({"construct", "--family", "real-max", "--n", "3", "--w", "2"}).code, 2);
  EXPECT_EQ(run({"construct", "--family", "design-file"}).code, 2);
}

TEST_F(Cli, ByteIdenticalOutput) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"construct", "--family", "gonzalez", "--n", "5", "--seed", "3"},
        std::vector<std::string>{"construct", "--family", "design-complements", "--n", "5", "--seed", "2"},
        std::vector<std::string>{"design", "--kind", "agl17"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
  const std::string f = construct("rm3.json", {"--family", "real-max", "--n", "3"});
  EXPECT_EQ(run({"certify", f}).out, run({"certify", f}).out);
  EXPECT_EQ(run({"tomo", f, "--trials", "20", "--noise", "1e-3", "--seed", "4"}).out,
            run({"tomo", f, "--trials", "20", "--noise", "1e-3", "--seed", "4"}).out);
}

TEST_F(Cli, DesignFileRoundTrip) {
  const CliResult d = run({"design", "--kind", "complements", "--n", "4"});
  ASSERT_EQ(d.code, 0);
  const std::string design = write("d.json", d.out);
  const CliResult c = run({"construct", "--family", "design-file", "--design", design, "--seed", "5"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(frame_from_json(parse_json(c.out)).size(), 8u);

  const CliResult v = run({"design", "--verify", design});
  EXPECT_EQ(v.code, 0);
  const Json report = parse_json(v.out);
  EXPECT_EQ(report["valid"], true);
  EXPECT_EQ(report["params"]["lambda"], 2);
  EXPECT_EQ(report["incidence"]["holds"], true);

  const std::string bad = write("bad.json", R"({"n":3,"blocks":[[1,2],[3]]})");
  const CliResult b = run({"design", "--verify", bad});
  EXPECT_EQ(b.code, 1);
  EXPECT_EQ(parse_json(b.out)["valid"], false);
  EXPECT_EQ(parse_json(b.out)["incidence"]["S"], Json::array({1}));
  EXPECT_EQ(run({"construct", "--family", "design-file", "--design", bad}).code, 2);
  EXPECT_EQ(run({"design", "--kind", "pairs", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"design"}).code, 2);
}

TEST_F(Cli, CertifyModes) {
  const std::string rm4 = construct("rm4.json", {"--family", "real-max", "--n", "4"});
  CliResult r = run({"certify", "--mode", "vital", rm4});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = parse_json(r.out);
  EXPECT_EQ(j["certificates"].size(), 10u);
  EXPECT_EQ(j["vital"], true);
  EXPECT_EQ(j["psiComplete"], true);
  EXPECT_EQ(j["ic"], true);
  EXPECT_EQ(j["fingerprint"]["maxNonSpanningCount"].is_number(), true);

  const std::string cx = write("cx.json", dump(to_json(oracle::counterexample4())));
  for (const char* mode : {"cp", "psi", "vital"}) {
    r = run({"certify", "--mode", mode, cx});
    EXPECT_EQ(r.code, 1) << mode;
    j = parse_json(r.out);
    EXPECT_EQ(j["witness"]["normal"], Json::array({"1/1", "-1/1", "0/1", "0/1"})) << mode;
    EXPECT_EQ(j["collision"]["scope"], "full");
  }
  r = run({"certify", "--mode", "cp", "--exhaustive", cx});
  EXPECT_EQ(r.code, 1);

  const std::string c2 = construct("c2.json", {"--family", "complex-max", "--n", "2"});
  EXPECT_EQ(run({"certify", "--mode", "vital", c2}).code, 0);
  EXPECT_EQ(run({"certify", "--mode", "ic", c2}).code, 0);
  EXPECT_EQ(run({"certify", "--mode", "cp", c2}).code, 2);
  Frame reduced = construct_complex_max(2).without(0);
  const std::string c3 = write("c3.json", dump(to_json(reduced)));
  r = run({"certify", "--mode", "psi", c3});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(parse_json(r.out)["status"], "undecided");
  r = run({"certify", "--mode", "ic", c3});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(parse_json(r.out)["kernelOperator"].size(), 2u);

  const std::string cauchy = construct("cauchy.json", {"--family", "cauchy", "--n", "4"});
  EXPECT_EQ(run({"certify", "--mode", "fullspark", cauchy}).code, 0);
  r = run({"certify", "--mode", "fullspark", rm4});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(parse_json(r.out)["dependent"], Json::array({0, 1, 2, 4}));
  EXPECT_EQ(run({"certify", "--mode", "nope", rm4}).code, 2);
}

TEST_F(Cli, CertifyInputErrors) {
  const std::string bad = write("bad.json", "{\"field\": \"R\", ");
  CliResult r = run({"certify", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ParseError"), std::string::npos) << r.err;
  EXPECT_EQ(run({"certify", path("missing.json")}).code, 2);
  EXPECT_EQ(run({"certify"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--version"}).code, 0);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, ReadsStdinAndWritesFiles) {
  const CliResult c = run({"construct", "--family", "real-max", "--n", "2"});
  std::istringstream in(c.out);
  auto* old = std::cin.rdbuf(in.rdbuf());
  const CliResult r = run({"certify", "-", "--mode", "cp"});
  std::cin.rdbuf(old);
  EXPECT_EQ(r.code, 0) << r.err;

  const std::string out = path("report.json");
  const std::string f = write("rm2.json", c.out);
  const CliResult w = run({"certify", "--frame", f, "--out", out});
  EXPECT_EQ(w.code, 0);
  EXPECT_TRUE(w.out.empty());
  std::ifstream is(out);
  std::stringstream text;
  text << is.rdbuf();
  EXPECT_EQ(text.str(), run({"certify", f}).out);
}

TEST_F(Cli, FingerprintCompare) {
  const std::string b5 = construct("b5.json", {"--family", "design-complements", "--n", "5", "--seed", "1"});
  const std::string g5 = construct("g5.json", {"--family", "gonzalez", "--n", "5", "--seed", "1"});
  CliResult r = run({"fingerprint", b5, "--compare", g5});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(parse_json(r.out)["compare"]["equal"], false);

  std::mt19937_64 rng(61);
  const Frame f = frame_from_json(read_json_file(b5));
  const Frame g = f.transformed(oracle::random_invertible(rng, 5));
  const std::string gl = write("gl.json", dump(to_json(g)));
  EXPECT_EQ(run({"fingerprint", b5, "--compare", gl}).code, 0);

  const std::string cauchy = construct("cauchy.json", {"--family", "cauchy", "--n", "5"});
  r = run({"fingerprint", cauchy});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_json(r.out)["fingerprint"]["maxNonSpanningCount"], 0);

  const std::string c2 = construct("c2.json", {"--family", "complex-max", "--n", "2"});
  EXPECT_EQ(run({"fingerprint", c2}).code, 2);
}

TEST_F(Cli, Tomo) {
  const std::string f = construct("rm3.json", {"--family", "real-max", "--n", "3"});
  CliResult r = run({"tomo", "--frame", f, "--trials", "25", "--seed", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse_json(r.out);
  EXPECT_EQ(j["trials"].size(), 25u);
  EXPECT_LE(j["summary"]["max"].get<double>(), 1e-8);
  EXPECT_EQ(j["config"]["seed"], 2);
  EXPECT_EQ(run({"tomo", f, "--trials", "0"}).code, 2);
  EXPECT_EQ(run({"tomo", f, "--noise", "-1"}).code, 2);
  const std::string cauchy = construct("cauchy.json", {"--family", "cauchy", "--n", "4"});
  EXPECT_EQ(run({"tomo", cauchy}).code, 2);
}

}  // namespace
}  // namespace vitalpovm
