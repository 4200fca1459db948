#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "garside/experiment.hpp"
#include "test_util.hpp"

#ifndef GARSIDE_CLI
#error "GARSIDE_CLI must be defined"
#endif

namespace garside {
namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GARSIDE_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    return r;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

TEST(Cli, NormalFormOfDelta) {
  const auto r = run("nf 'artin 3 / 1 2 1'");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("inf"), 1);
  EXPECT_EQ(j.at("len"), 0);
  EXPECT_EQ(j.at("sup"), 1);
  EXPECT_TRUE(j.at("factors").empty());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("nf 'artin 3 / 1 7'").code, 2);
  EXPECT_EQ(run("nf 'braid 3 / 1'").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("conj search 'artin 3 / 1 1' 'artin 3 / 1 1 1'").code, 3);
  EXPECT_EQ(run("conj decide 'artin 3 / 1' 'artin 4 / 1'").code, 3);
}

TEST(Cli, DecideWitnessRoundTrips) {
  const auto r = run("conj decide 'artin 3 / 1 1' 'artin 3 / 2 2'");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.at("conjugate").get<bool>());
  const auto w = parse_word(j.at("conjugator").get<std::string>());
  artin::Presentation p(3);
  EXPECT_EQ(conjugate(p, test::el(p, "1 1"), normalize(p, w.word)), test::el(p, "2 2"));
  const auto no = nlohmann::json::parse(run("conj decide 'artin 3 / 1 1' 'artin 3 / 1 1 1'").out);
  EXPECT_FALSE(no.at("conjugate").get<bool>());
}

TEST(Cli, SearchWitnessRoundTripsAndIsSeeded) {
  const std::string args = "conj search 'bkl 5 / 3.1 4.2 -5.1 2.1 5.4' 'bkl 5 / 5.4 3.1 4.2 -5.1 2.1' --seed 9";
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  bkl::Presentation p(5);
  const auto x = normalize(p, parse_word(j.at("x").get<std::string>()).word);
  const auto y = normalize(p, parse_word(j.at("y").get<std::string>()).word);
  const auto c = normalize(p, parse_word(j.at("conjugator").get<std::string>()).word);
  EXPECT_EQ(conjugate(p, x, c), y);
  const auto capped = nlohmann::json::parse(run(args + " --cap 0").out);
  EXPECT_EQ(capped.at("steps"), 0);
}

TEST(Cli, UltraSummitSummary) {
  const auto r = run("uss 'artin 3 / 1 1' --conjugators");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("size"), 2);
  EXPECT_EQ(j.at("n_u"), 2);
  artin::Presentation p(3);
  for (const auto& e : j.at("elements")) {
    const auto z = normalize(p, parse_word(e.at("element").get<std::string>()).word);
    const auto c = normalize(p, parse_word(e.at("conjugator").get<std::string>()).word);
    EXPECT_EQ(conjugate(p, test::el(p, "1 1"), c), z);
  }
}

TEST(Cli, ExperimentCsv) {
  const auto r = run("experiment table1 --n 3 --r 10 --samples 50 --seed 7");
  ASSERT_EQ(r.code, 0);
  const auto header_end = r.out.find('\n');
  EXPECT_EQ(r.out.substr(0, header_end), csv_header());
  const auto row = r.out.substr(header_end + 1);
  EXPECT_EQ(row.rfind("artin,3,10,50,7,", 0), 0u) << row;
  // uss_max is the seventh column.
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= row.size(); ++i) {
    if (i == row.size() || row[i] == ',' || row[i] == '\n') {
      fields.push_back(row.substr(start, i - start));
      start = i + 1;
    }
  }
  EXPECT_EQ(fields.at(6), "20");
  const auto multi = run("experiment table3 --n 3,4 --r 2,5 --samples 20 --seed 1");
  ASSERT_EQ(multi.code, 0);
  EXPECT_EQ(std::count(multi.out.begin(), multi.out.end(), '\n'), 5);
}

TEST(Cli, OracleCheck) {
  const auto r = run("oracle check --max-artin 3 --max-bkl 3 --samples 10");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

}  // namespace
}  // namespace garside
