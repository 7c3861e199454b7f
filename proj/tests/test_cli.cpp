// Runs the peakset executable and inspects its exit code and output.

#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

using json = nlohmann::ordered_json;

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(PEAKSET_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& args, int expect_code = 0) {
  const CliRun r = run(args);
  EXPECT_EQ(r.code, expect_code) << args;
  return json::parse(r.out);
}

}  // namespace

TEST(Cli, CountHattedCBoth) {
  const json j = run_json(R"(count --type C --hat --set "" --n 3 --method both)");
  EXPECT_EQ(j["formula"], 14);
  EXPECT_EQ(j["brute"], 14);
  EXPECT_EQ(j["match"], true);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "type", "hatted", "set", "n", "method", "formula", "brute",
                                            "match"}));
}

TEST(Cli, CountHatWithPeakAtN) {
  EXPECT_EQ(run_json(R"(count --type C --hat --set 3 --n 3 --method both)")["formula"], 18);
  EXPECT_EQ(run_json(R"(count --type D --hat --set 3 --n 3 --method both)")["brute"], 9);
}

TEST(Cli, CountTypeAEndings) {
  EXPECT_EQ(run_json("count --set 3 --n 5 --ending asc:3 --method both")["formula"], 6);
  EXPECT_EQ(run_json("count --set 3 --n 5 --ending desc:2 --method both")["brute"], 5);
  EXPECT_EQ(run_json("count --set 3 --n 5 --ending asc")["formula"], 25);
  EXPECT_EQ(run_json("count --set 3 --n 5 --ending desc")["formula"], 15);
  EXPECT_EQ(run_json("count --set 3 --n 5")["formula"], 40);
}

TEST(Cli, CountBigValuesAsStrings) {
  const json j = run_json("count --set 2 --n 80");
  EXPECT_TRUE(j["formula"].is_string());
  EXPECT_EQ(j["formula"], "23574053482485268906770432");
}

TEST(Cli, CountCsvAndText) {
  const CliRun csv = run(R"(count --type C --hat --set "" --n 3 --method both --format csv)");
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out, "type,hatted,set,n,method,formula,brute,match\r\nC,true,,3,both,14,14,true\r\n");
  const CliRun quoted = run(R"(count --set 2,4 --n 6 --format csv)");
  EXPECT_NE(quoted.out.find("\"2,4\""), std::string::npos);
  const CliRun text = run(R"(count --type C --hat --set "" --n 3 --format text)");
  EXPECT_NE(text.out.find("formula: 14"), std::string::npos);
}

TEST(Cli, Enumerate) {
  const json j = run_json("enumerate --set 3 --n 5 --ending desc:2");
  EXPECT_EQ(j["count"], 5);
  EXPECT_EQ(j["members"].front(), "13542");
  const json c = run_json("enumerate --type C --set 2 --n 3");
  EXPECT_EQ(c["count"], 16);
}

TEST(Cli, Poly) {
  const json j = run_json("poly --set 2,4 --alpha-k 6 --n 8");
  EXPECT_EQ(j["coefficients"], json::parse("[16,64,80,32]"));
  EXPECT_EQ(j["base_offset"], 6);
  EXPECT_EQ(j["valid_from"], 6);
  EXPECT_EQ(j["value"], 224);
  EXPECT_EQ(run_json("poly --set 2,4 --alpha-k 6 --type C")["base_offset"], 6);
  EXPECT_EQ(run_json(R"(poly --set "")")["coefficients"], json::parse("[1]"));
}

TEST(Cli, Bundle) {
  const json j = run_json("bundle --type D --base 213");
  EXPECT_EQ(j["size"], 4);
  EXPECT_EQ(j["members"], json::parse(R"(["213|465","415|263","426|153","536|142"])"));
}

TEST(Cli, Bijection) {
  EXPECT_EQ(run_json(R"(bijection --map f --input "13|24")")["image"], "0 -1 2");
  EXPECT_EQ(run_json(R"(bijection --map gf --input "13|24")")["image"], "0 1 -2");
  EXPECT_EQ(run_json(R"(bijection --map g --input "0 -2 1")")["image"], "0 2 -1");
  EXPECT_EQ(run_json(R"(bijection --map f-inverse --input "0 -1 2")")["image"], "13|24");
  EXPECT_EQ(run_json(R"(bijection --map delta --input "20 18 13 10 9 7 4 2 5 6 | 15 16 19 17 14 12 11 8 3 1")")["image"],
            "ACABCCBABB");
  EXPECT_EQ(run_json(R"(bijection --map theta --type D --input ABABCCBABA)")["image"],
            "20 18 13 11 9 7 4 2 5 6 | 15 16 19 17 14 12 10 8 3 1");
}

TEST(Cli, VerifyAllAtFive) {
  const json j = run_json("verify --suite all --max-n 5");
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["failures"], 0);
  EXPECT_EQ(j["suites"].size(), 6u);
}

TEST(Cli, ArgumentErrorsExitOne) {
  EXPECT_EQ(run("count --set x --n 3").code, 1);
  EXPECT_EQ(run("count --type A --hat --n 3").code, 1);
  EXPECT_EQ(run("count --type C --ending asc --n 3").code, 1);
  EXPECT_EQ(run("count --n 3 --ending asc:9").code, 1);
  EXPECT_EQ(run("count --set 7 --n 3").code, 1);
  EXPECT_EQ(run("count --type Q --n 3").code, 1);
  EXPECT_EQ(run("bogus").code, 1);
  EXPECT_EQ(run("verify --suite nope").code, 1);
  EXPECT_EQ(run("poly --set 2,3").code, 1);
  EXPECT_EQ(run("poly --set 2 --alpha-k 3 --delta").code, 1);
  EXPECT_EQ(run(R"(bijection --map delta --input "132|546")").code, 1);
  EXPECT_EQ(run("bundle --type C --base 1223").code, 1);
}

TEST(Cli, CapsAreReported) {
  const std::string cmd = std::string(PEAKSET_CLI) + " count --n 11 --method brute 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::array<char, 512> buf{};
  std::string out;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  EXPECT_EQ(WEXITSTATUS(status), 1);
  EXPECT_NE(out.find("cap 10"), std::string::npos) << out;
  EXPECT_EQ(run("count --n 13 --method brute --max-enum-n 13").code, 1);
  EXPECT_EQ(run("count --type C --n 10 --method brute --max-enum-n 10").code, 1);
  EXPECT_EQ(run("count --n 3 --method brute --max-enum-n 3").code, 0);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run("--help").code, 0); }
