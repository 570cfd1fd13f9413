/* Copyright 2026 The superschur Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "superschur/catalog.hpp"
#include "superschur/cli.hpp"

namespace {

using namespace superschur;

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& s, const std::string& part) {
  std::size_t n = 0;
  for (auto pos = s.find(part); pos != std::string::npos; pos = s.find(part, pos + 1)) ++n;
  return n;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv("SUPERSCHUR_FORMAT"); }
};

TEST_F(Cli, MultiplierBothOnHeisenberg) {
  Outcome o = run({"multiplier", "--method", "both", "--algebra", "heis3"});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(count(o.out, "(2|0)"), 2u) << o.out;
  EXPECT_NE(o.out.find("agree: true"), std::string::npos);
}

TEST_F(Cli, GlobalOptionsBeforeSubcommand) {
  Outcome o = run({"--algebra", "heis3", "multiplier", "--method", "hopf"});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(count(o.out, "(2|0)"), 1u) << o.out;
}

TEST_F(Cli, BoundsSkipAbelian) {
  Outcome o = run({"bounds", "--algebra", "A(2|1)"});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("hypotheses not met (r+s=0)"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("skipped"), std::string::npos) << o.out;
}

TEST_F(Cli, BoundsNumbersMatchLibrary) {
  Outcome o = run({"--format", "json", "bounds", "--algebra", "heis3+A(1|0)"});
  ASSERT_EQ(o.code, 0) << o.err;
  cli::Json j = cli::Json::parse(o.out);
  const auto& r = j["results"][0];
  bounds::BoundReport b = bounds::check_bound(*standard_catalog().find("heis3+A(1|0)"));
  EXPECT_EQ(r["main"].get<bounds::Int>(), b.main);
  EXPECT_EQ(r["dim_multiplier"].get<bounds::Int>(), b.actual());
  EXPECT_EQ(r["nayak"].dump(), b.nayak.get_str());
  EXPECT_TRUE(r["tight"].get<bool>());
}

TEST_F(Cli, IdentitySweep) {
  Outcome o = run({"--format", "json", "identity", "--arity-max", "4"});
  ASSERT_EQ(o.code, 0) << o.err;
  cli::Json j = cli::Json::parse(o.out);
  ASSERT_EQ(j["results"].size(), 2u);
  EXPECT_EQ(j["results"][0]["cases"], 16);
  EXPECT_EQ(j["results"][1]["cases"], 32);
  EXPECT_EQ(j["results"][0]["zero_residuals"], 16);
  EXPECT_EQ(j["results"][1]["zero_residuals"], 32);
  EXPECT_EQ(j["status"], "ok");
}

TEST_F(Cli, IdentityArityRange) {
  EXPECT_EQ(run({"identity", "--arity-max", "2"}).code, 1);
  EXPECT_EQ(run({"identity", "--arity-max", "9"}).code, 1);
}

TEST_F(Cli, Free) {
  Outcome o = run({"free", "--even", "0", "--odd", "1", "--class", "3", "--hilbert"});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("(1|1)"), std::string::npos) << o.out;
  EXPECT_EQ(run({"free", "--even", "0", "--odd", "0", "--class", "2"}).code, 1);
  EXPECT_EQ(run({"free", "--even", "1"}).code, 1);
}

TEST_F(Cli, VerifyAllPasses) {
  Outcome o = run({"verify"});
  EXPECT_EQ(o.code, 0) << o.err << o.out;
  EXPECT_EQ(count(o.out, "status: failed"), 0u);
}

TEST_F(Cli, VerifySelectedChecks) {
  Outcome o = run({"--format", "json", "verify", "--check", "eq21,eq24", "--algebra", "heis3"});
  ASSERT_EQ(o.code, 0) << o.err;
  cli::Json j = cli::Json::parse(o.out);
  EXPECT_EQ(j["results"].size(), 2u);
  EXPECT_EQ(run({"verify", "--check", "bogus"}).code, 1);
}

TEST_F(Cli, CheckAndInvariants) {
  EXPECT_EQ(run({"check"}).code, 0);
  Outcome o = run({"--format", "json", "invariants", "--algebra", "filiform4"});
  ASSERT_EQ(o.code, 0) << o.err;
  cli::Json j = cli::Json::parse(o.out);
  EXPECT_EQ(j["results"][0]["class"], 3);
}

TEST_F(Cli, UnknownAlgebra) {
  Outcome o = run({"multiplier", "--algebra", "nope"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("nope"), std::string::npos);
}

TEST_F(Cli, Usage) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"--format", "xml", "check"}).code, 1);
  EXPECT_EQ(run({"multiplier", "--method", "guess"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, ParseErrorFromStdin) {
  Outcome o = run({"check", "-"}, "algebra g\neven e1 e2\nodd f\n[e1,e2] = f\nend\n");
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("line 4"), std::string::npos) << o.err;
  EXPECT_NE(o.err.find("grading error in [e1,e2]"), std::string::npos) << o.err;
}

TEST_F(Cli, StdinCatalog) {
  Outcome o = run({"multiplier", "-"}, "algebra h\neven a b c\n[a,b] = c\nend\n");
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(count(o.out, "(2|0)"), 2u) << o.out;
}

TEST_F(Cli, MissingFile) { EXPECT_EQ(run({"check", "/nonexistent/catalog.cat"}).code, 1); }

TEST_F(Cli, Formats) {
  Outcome j = run({"--format", "json", "multiplier", "--algebra", "sh(0|1)"});
  ASSERT_EQ(j.code, 0);
  cli::Json doc = cli::Json::parse(j.out);
  EXPECT_EQ(doc["command"], "multiplier");
  EXPECT_EQ(doc["results"][0]["hopf"], "(0|0)");
  Outcome c = run({"--format", "csv", "multiplier", "--algebra", "heis3", "--algebra", "sh(0|1)"});
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(count(c.out, "\n"), 3u) << c.out;
  EXPECT_EQ(c.out.rfind("algebra,", 0), 0u) << c.out;
}

TEST_F(Cli, FormatFromEnvironment) {
  setenv("SUPERSCHUR_FORMAT", "json", 1);
  Outcome o = run({"multiplier", "--algebra", "heis3"});
  unsetenv("SUPERSCHUR_FORMAT");
  ASSERT_EQ(o.code, 0);
  EXPECT_NO_THROW(cli::Json::parse(o.out));
  setenv("SUPERSCHUR_FORMAT", "json", 1);
  Outcome t = run({"--format", "text", "multiplier", "--algebra", "heis3"});
  unsetenv("SUPERSCHUR_FORMAT");
  EXPECT_EQ(t.out.rfind("algebra heis3", 0), 0u) << t.out;
}

TEST_F(Cli, Deterministic) {
  for (auto args : std::vector<std::vector<std::string>>{{"--format", "json", "bounds"}, {"verify"}, {"catalog"},
                                                          {"--format", "csv", "invariants"}}) {
    Outcome a = run(args), b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST_F(Cli, ShippedCatalogFileMatchesBuiltIn) {
  std::ifstream f(SUPERSCHUR_CATALOG_FILE);
  ASSERT_TRUE(f);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(parse_catalog(ss.str()), standard_catalog());
  Outcome o = run({"catalog"});
  EXPECT_EQ(parse_catalog(o.out), standard_catalog());
  EXPECT_NE(ss.str().find(o.out), std::string::npos);
  EXPECT_EQ(run({"check", SUPERSCHUR_CATALOG_FILE}).code, 0);
}

TEST_F(Cli, MethodDisagreementType) {
  MethodDisagreement d("x", {1, 0}, {0, 0});
  EXPECT_NE(std::string(d.what()).find("x"), std::string::npos);
}

}  // namespace
