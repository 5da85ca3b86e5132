#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qsh/cli.hpp"

namespace {
struct Result {
  int code;
  std::string out, err;
};
Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qsh::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}
std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/qsh_test_" + name;
  std::ofstream(path) << content;
  return path;
}
}  // namespace

TEST_CASE("documented commands") {
  CHECK(run({"dims", "--name", "A2", "--weight", "2,1"}).out == "3\n");
  CHECK(run({"rank", "--name", "A2", "--weight", "2,1"}).out == "2\n");
  const Result serre = run({"serre-check", "--name", "G2"});
  CHECK(serre.code == 0);
  CHECK(serre.out.substr(serre.out.size() - 5) == "pass\n");
  CHECK(run({"pair", "--name", "A2", "--x", "w[1,2]", "--y", "w[2,1]"}).out == "(v^3)/(v^4 - 2*v^2 + 1)\n");
  CHECK(run({"ybe", "--name", "A1", "--truncate", "1"}).code == 0);
  CHECK(run({"check", "--criterion", "1"}).code == 0);
}

TEST_CASE("datum files") {
  CHECK(run({"dims", "--datum", temp_file("b2.json", R"({"name":"B2"})"), "--weight", "1,1"}).code == 0);
  const std::string g2 = temp_file("g2.json", R"({"cartan":[[2,-3],[-1,2]],"d":[1,3]})");
  const std::string g2_bare = temp_file("g2b.json", R"({"cartan":[[2,-3],[-1,2]]})");
  const Result a = run({"gram", "--datum", g2, "--weight", "1,1"});
  CHECK(a.code == 0);
  CHECK(a.out == run({"gram", "--name", "G2", "--weight", "1,1"}).out);
  CHECK(a.out == run({"gram", "--datum", g2_bare, "--weight", "1,1"}).out);
  const Result bad = run({"dims", "--datum", temp_file("bad.json", R"({"cartan":[[2,1],[1,2]]})"), "--weight", "1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("positive off-diagonal") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"dims", "--weight", "1"}).code == 2);
  CHECK(run({"dims", "--name", "A2", "--weight", "1,x"}).code == 2);
  CHECK(run({"parse-eval", "--name", "A2", "--expr", "F(1"}).code == 2);
  const Result big = run({"dims", "--name", "A2", "--weight", "5,5"});
  CHECK(big.code == 3);
  CHECK(big.err.find("252 words") != std::string::npos);
  CHECK(run({"dims", "--name", "A2", "--weight", "5,5", "--max-weight", "10"}).code == 0);
  CHECK(run({"rmatrix", "--name", "A1", "--truncate", "6"}).code == 3);
}

TEST_CASE("output is deterministic and json parses") {
  const std::vector<std::string> args = {"iota", "--name", "B2", "--expr", "F(1)*F(2)*F(2)", "--format", "json"};
  const Result a = run(args), b = run(args);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["slots"][0] == "v");
  CHECK(j["terms"].size() == 3);
  const Result t = run({"rmatrix", "--name", "A1", "--truncate", "1", "--format", "json"});
  CHECK(t.code == 0);
  CHECK(nlohmann::json::parse(t.out)["pass"] == true);
}
