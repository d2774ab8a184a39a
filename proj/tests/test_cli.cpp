#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "patternsort/bijections.hpp"
#include "patternsort/cli.hpp"
#include "patternsort/machine.hpp"
#include "patternsort/sequences.hpp"

using namespace patternsort;

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}
}  // namespace

TEST_CASE("simulate matches the library") {
  const auto r = run({"simulate", "--perm", "2413"});
  CHECK(r.code == kExitOk);
  const Permutation out = sigma_stack_output(Permutation{2, 4, 1, 3}, Permutation{1, 3, 2});
  CHECK(r.out == "s_sigma = " + to_string(out) + "\nsortable = true\n");
  const auto j = nlohmann::json::parse(run({"simulate", "--perm", "2413", "--format", "json", "--trace"}).out);
  CHECK(j["schema"] == 1);
  CHECK(j["sortable"] == true);
  CHECK(j.contains("events"));
}

TEST_CASE("sortable prints a boolean") {
  CHECK(run({"sortable", "--perm", "2413"}).out == "true\n");
  CHECK(run({"sortable", "--perm", "2314"}).out ==
        (is_sigma_sortable(Permutation{2, 3, 1, 4}, Permutation{1, 3, 2}) ? "true\n" : "false\n"));
}

TEST_CASE("enumerate agrees with the library") {
  const auto r = run({"enumerate", "sortable", "--n", "5"});
  CHECK(r.code == kExitOk);
  const auto expected = enumerate_sortable(5, Permutation{1, 3, 2});
  const auto got = lines(r.out);
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == to_string(expected[i]));
  CHECK(run({"enumerate", "generated", "--n", "5", "--count-only"}).out == "51\n");
  CHECK(run({"enumerate", "avoiders", "--n", "6", "--pattern", "1221", "--count-only"}).out == "132\n");
  const auto csv = lines(run({"enumerate", "dyck", "--n", "3", "--format", "csv"}).out);
  REQUIRE(csv.size() == 6);
  CHECK(csv[0] == "index,item");
  const auto j = nlohmann::json::parse(run({"enumerate", "motzkin", "--n", "4", "--format", "json"}).out);
  CHECK(j["schema"] == 1);
  CHECK(j["count"] == 9);
  CHECK(j["items"].size() == 9);
}

TEST_CASE("map verbs") {
  CHECK(run({"map", "phi", "--perm", "13 14 15 10 12 6 7 8 11 9 3 1 4 5 2"}).out == "111223332345445\n");
  CHECK(run({"map", "psi", "--rgf", "12"}).out == "UUDD\n");
  CHECK(run({"map", "beta", "--path", "H0 H1 U U D H2 H0 D H0 H0"}).out == "12134435367\n");
  CHECK(run({"map", "av321", "--rgf", "121314234"}).out == "3 5 1 7 2 9 4 6 8\n");
  CHECK(run({"map", "gamma", "--rgf", "12321"}).out == "12231\n");
  CHECK(run({"map", "partition", "--rgf", "12121"}).out == "135-24\n");
  const auto j = nlohmann::json::parse(
      run({"map", "gamma", "--rgf", "12321", "--format", "json", "--steps"}).out);
  CHECK(j["schema"] == 1);
  CHECK(j["map"] == "gamma");
  CHECK(j["output"] == "12231");
  CHECK(j["steps"].size() == 1);
  CHECK(j["statistics"]["max"] == 3);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  const auto bad = run({"map", "phi", "--perm", "1 3 2"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.rfind("error: ", 0) == 0);
  CHECK(run({"map", "phi-inverse", "--rgf", "1022"}).code == kExitUsage);
  CHECK(run({"enumerate", "rgfs", "--n", "13"}).code == kExitUsage);
  CHECK(run({"enumerate", "rgfs", "--n", "4", "--cap", "3"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
  const auto v = run({"verify", "--scope", "rgf", "--nmax", "5"});
  CHECK(v.code == kExitOk);
  CHECK(v.out.find("FAIL") == std::string::npos);
  CHECK(run({"verify", "--nmax", "40"}).code == kExitUsage);
}

TEST_CASE("cap from the environment") {
  ::setenv("PATTERNSORT_CAP", "3", 1);
  CHECK(run({"enumerate", "dyck", "--n", "4", "--count-only"}).code == kExitUsage);
  CHECK(run({"enumerate", "dyck", "--n", "4", "--count-only", "--cap", "4"}).out == "14\n");
  ::setenv("PATTERNSORT_CAP", "many", 1);
  CHECK(run({"enumerate", "dyck", "--n", "2"}).code == kExitUsage);
  ::unsetenv("PATTERNSORT_CAP");
  CHECK(run({"enumerate", "dyck", "--n", "4", "--count-only"}).out == "14\n");
}

TEST_CASE("tables and exports") {
  const auto t = run({"table", "narayana", "--n", "4"});
  CHECK(t.code == kExitOk);
  CHECK(lines(t.out) == std::vector<std::string>{"k,count,formula", "1,1,1", "2,6,6", "3,6,6", "4,1,1"});
  const auto minima = lines(run({"table", "sortable-by-minima", "--n", "4"}).out);
  REQUIRE(minima.size() == 5);
  CHECK(minima[1] == "1,1," + max_distribution_formula(3, 0).str());
  const auto b = lines(run({"export", "bfile", "--sequence", "a007317", "--n", "5"}).out);
  CHECK(b == std::vector<std::string>{"1 1", "2 2", "3 5", "4 15", "5 51"});
  const auto trace = nlohmann::json::parse(run({"export", "trace", "--perm", "2413"}).out);
  CHECK(trace["schema"] == 1);
}

TEST_CASE("--out writes a file") {
  const auto path = std::filesystem::temp_directory_path() / "patternsort_cli_out.txt";
  std::filesystem::remove(path);
  const auto r = run({"map", "psi", "--rgf", "11", "--out", path.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == "UDUD\n");
  std::filesystem::remove(path);
}
