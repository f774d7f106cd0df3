/*
 * Copyright 2026 The Growth Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "growth/cli.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace growth::cli {
namespace {

using nlohmann::json;

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "growth");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

Outcome invoke_binary(const std::string& args) {
  const std::string command = std::string(GROWTH_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  std::string out;
  std::array<char, 4096> buffer{};
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), n);
  const int raw = pclose(pipe);
  return {WEXITSTATUS(raw), out, ""};
}

TEST(Rank1, CsvGolden) {
  const Outcome r = invoke({"rank1", "--n", "10", "--csv"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out,
            "k,c_k,C_k\n1,1,1\n2,2,3\n3,2,5\n4,2,7\n5,2,9\n6,4,13\n7,2,15\n8,2,17\n9,2,19\n10,4,23\n");
}

TEST(Rank1, Json) {
  const Outcome r = invoke({"rank1", "--n", "6", "--json"});
  ASSERT_EQ(r.status, kExitOk);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["n"], 6);
  EXPECT_EQ(doc["c"], json({1, 2, 2, 2, 2, 4}));
  EXPECT_EQ(doc["C"].back(), 13);
}

TEST(Rank1, DomainErrors) {
  EXPECT_EQ(invoke({"rank1", "--n", "0"}).status, kExitDomainError);
  EXPECT_EQ(invoke({"rank1", "--n", "abc"}).status, kExitDomainError);
  EXPECT_EQ(invoke({"rank1", "--n", "5", "--json", "--csv"}).status, kExitDomainError);
  EXPECT_EQ(invoke({"rank1"}).status, kExitDomainError);
  EXPECT_EQ(invoke({"rank1", "--n", "5", "--bogus"}).status, kExitDomainError);
}

TEST(Order, Examples) {
  const Outcome r = invoke({"order", "--type", "A1", "--p", "2", "--k", "2"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "48\n");
  const Outcome brute = invoke({"order", "--type", "C2", "--p", "2", "--brute-force", "--json"});
  ASSERT_EQ(brute.status, kExitOk);
  const json doc = json::parse(brute.out);
  EXPECT_EQ(doc["order"], "720");
  EXPECT_EQ(doc["brute_force"], "720");
  EXPECT_EQ(doc["label"], "C2");
}

TEST(Order, BigIntegersAreDecimalStrings) {
  const Outcome r = invoke({"order", "--type", "E8", "--p", "3", "--json"});
  ASSERT_EQ(r.status, kExitOk);
  const json doc = json::parse(r.out);
  ASSERT_TRUE(doc["order"].is_string());
  EXPECT_GT(doc["order"].get<std::string>().size(), 20U);
}

TEST(Order, Errors) {
  EXPECT_EQ(invoke({"order", "--type", "A1", "--p", "4"}).status, kExitDomainError);
  EXPECT_EQ(invoke({"order", "--type", "Q7", "--p", "2"}).status, kExitDomainError);
  EXPECT_EQ(invoke({"order", "--type", "G2", "--p", "2", "--brute-force"}).status, kExitDomainError);
  EXPECT_EQ(invoke({"order", "--type", "A2", "--p", "3", "--k", "2", "--brute-force"}).status, kExitResourceError);
}

TEST(Ball, Json) {
  const json cyclic = json::parse(invoke({"ball", "--family", "cyclic", "--n", "6", "--json"}).out);
  ASSERT_EQ(cyclic.size(), 13U);
  EXPECT_EQ(cyclic[0], (json{{"a", 1}, {"b", 1}}));
  const json plane = json::parse(invoke({"ball", "--family", "lattice", "--dim", "2", "--n", "2", "--json"}).out);
  ASSERT_EQ(plane.size(), 7U);
  EXPECT_EQ(plane[0], (json{{"denom", 1}, {"hnf", {{1, 0}, {0, 1}}}}));
}

TEST(Ball, Guards) {
  EXPECT_EQ(invoke({"ball", "--dim", "4", "--n", "2"}).status, kExitResourceError);
  EXPECT_EQ(invoke({"ball", "--dim", "2", "--n", "5000"}).status, kExitResourceError);
  EXPECT_EQ(invoke({"ball", "--family", "tree", "--n", "2"}).status, kExitDomainError);
}

TEST(RootSys, Json) {
  const Outcome r = invoke({"rootsys", "--type", "G2", "--json"});
  ASSERT_EQ(r.status, kExitOk);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["label"], "G2");
  EXPECT_EQ(doc["rank"], 2);
  EXPECT_EQ(doc["N"], 6);
  EXPECT_EQ(doc["d"], 14);
  EXPECT_EQ(doc["degrees"], json({2, 6}));
  EXPECT_EQ(doc["positive_roots"].size(), 6U);
}

TEST(Parahoric, Json) {
  const Outcome r = invoke({"parahoric", "--type", "C2", "--k", "2", "--p", "3", "--m", "12", "--json"});
  ASSERT_EQ(r.status, kExitOk);
  const json doc = json::parse(r.out);
  for (const char* key : {"exact", "box_bound", "lambda_bound", "per_prime", "m_bound"}) {
    ASSERT_TRUE(doc[key].is_string()) << key;
  }
  EXPECT_EQ(doc["box_bound"], "49");
  EXPECT_EQ(doc["lambda_bound"], "282475249");  // 7^10
  EXPECT_EQ(doc["per_prime"], "27960524111619");  // (d + 1) p^{(3+d)k} = 11 * 3^26
}

TEST(Parahoric, OptionalFieldsAreNull) {
  const json doc = json::parse(invoke({"parahoric", "--type", "E8", "--k", "1", "--json"}).out);
  EXPECT_TRUE(doc["exact"].is_null());
  EXPECT_TRUE(doc["per_prime"].is_null());
  EXPECT_TRUE(doc["m_bound"].is_null());
  EXPECT_EQ(invoke({"parahoric", "--type", "A1", "--k", "100"}).status, kExitResourceError);
}

TEST(Check, MetricSuiteExitsZeroAndIsDeterministic) {
  const Outcome a = invoke({"check", "metric", "--samples", "100", "--seed", "0"});
  EXPECT_EQ(a.status, kExitOk);
  EXPECT_EQ(a.out, invoke({"check", "metric", "--samples", "100", "--seed", "0"}).out);
  EXPECT_EQ(invoke({"check", "unknown"}).status, kExitDomainError);
}

TEST(RunConfig, UnknownKeysRejected) {
  RunConfig config;
  config.subcommand = Subcommand::Rank1;
  config.parameters = {{"n", "5"}, {"p", "3"}};
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(run(config, out, err), kExitDomainError);
  EXPECT_NE(err.str().find("unknown parameter"), std::string::npos);
}

TEST(Binary, VersionHelpAndStreams) {
  const Outcome version = invoke_binary("--version");
  EXPECT_EQ(version.status, 0);
  EXPECT_NE(version.out.find("growth"), std::string::npos);
  EXPECT_EQ(invoke_binary("--help").status, 0);
  const Outcome bad = invoke_binary("rank1 --n 0");
  EXPECT_EQ(bad.status, kExitDomainError);
  EXPECT_TRUE(bad.out.empty());  // diagnostics go to stderr only
  const Outcome csv = invoke_binary("rank1 --n 10 --csv");
  EXPECT_EQ(csv.status, 0);
  EXPECT_EQ(csv.out.substr(csv.out.size() - 8), "10,4,23\n");
  EXPECT_EQ(invoke_binary("ball --dim 4 --n 2").status, kExitResourceError);
}

}  // namespace
}  // namespace growth::cli
