#include "doctest.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "laurent/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = laurent::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("verify") {
  auto r = run({"verify", "--A", "0", "--B", "1", "--C", "1", "--n", "1", "--x", "3", "--y", "8",
                "--z", "2"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["verified"] == true);

  r = run({"verify", "--A", "1", "--B", "0", "--C", "-1", "--n", "2", "--x", "18/13", "--y",
           "1/14", "--z", "4"});
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verified"] == false);
  CHECK(j["proposed_x"] == nlohmann::json::array({"-13/8", "8/13"}));
  CHECK(r.err.find("not a solution") != std::string::npos);

  r = run({"verify", "--A", "1", "--B", "0", "--C", "-1", "--n", "3", "--x", "1", "--y", "2",
           "--z", "3"});
  CHECK(r.code == 2);
  r = run({"verify", "--A", "1", "--B", "0", "--C", "0", "--n", "1", "--x", "1", "--y", "2",
           "--z", "3"});
  CHECK(r.code == 2);
  r = run({"verify", "--A", "1", "--B", "0", "--C", "1", "--n", "1", "--x", "0", "--y", "2",
           "--z", "3"});
  CHECK(r.code == 2);
}

TEST_CASE("verify from JSON lines") {
  const std::string good =
      R"({"A":0,"B":1,"C":1,"n":1,"x":"3","y":"8","z":"2"})" "\n"
      R"({"A":1,"B":0,"C":-1,"n":2,"x":"8/13","y":"1/14","z":"4"})" "\n";
  auto r = run({"verify", "--jsonl", "-"}, good);
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 2);
  r = run({"verify", "--jsonl", "-"}, good + R"({"A":0,"B":1,"C":1,"n":1,"x":"1","y":"2","z":"3"})" "\n");
  CHECK(r.code == 1);
}

TEST_CASE("family") {
  auto r = run({"family", "example1", "--A", "1", "--B", "1", "--C", "1", "--param", "T=1"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 2);
  r = run({"family", "padoa", "--param", "z=2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"A,B,C,n,x,y,z", "0,1,1,1,3,8,2", "0,1,1,1,4,5,2",
                                                 "0,1,1,1,5,4,2", "0,1,1,1,8,3,2"});
  r = run({"family", "--list"});
  CHECK(r.code == 0);
  CHECK(r.out.find("remark11_int_kl") != std::string::npos);
  CHECK(run({"family", "unknown"}).code == 2);
  CHECK(run({"family", "example1", "--A", "1", "--B", "1", "--C", "1"}).code == 2);
  CHECK(run({"family", "example1", "--A", "1", "--B", "0", "--C", "1", "--param", "T=1"}).code == 2);
  r = run({"family", "degenerate_e12", "--A", "1", "--B", "2", "--C", "1", "--param", "t=1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("t-1") != std::string::npos);
}

TEST_CASE("generate") {
  auto r = run({"generate", "--preset", "example2", "--max-multiple", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1,0,1,1,4/3,3/5,9/2") != std::string::npos);
  r = run({"generate", "--A", "1", "--B", "1", "--C", "2", "--n", "2", "--max-multiple", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("x":"-1/8","y":"-2","z":"1/2")") != std::string::npos);
  r = run({"generate", "--A", "1", "--B", "0", "--C", "1", "--n", "1", "--T", "4/3", "--from-point",
           "8712,702000", "--scaled", "V=81X,U=729Y", "--max-multiple", "1", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("4/3,3/5,9/2") != std::string::npos);
  r = run({"generate", "--A", "1", "--B", "0", "--C", "-1", "--n", "2", "--z", "4", "--from-point",
           "112352/49,79764000/343", "--max-multiple", "1", "--positive", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("8/13,1/14,4") != std::string::npos);
  CHECK(run({"generate", "--preset", "example2", "--A", "1"}).code == 2);
  CHECK(run({"generate", "--preset", "nope"}).code == 2);
  CHECK(run({"generate", "--A", "1", "--B", "2", "--C", "1", "--n", "1"}).code == 2);
  CHECK(run({"generate", "--A", "1", "--B", "1", "--C", "1", "--n", "1", "--from-point", "1,1"})
            .code == 2);
}

TEST_CASE("search") {
  auto r = run({"search", "--A", "1", "--B", "1", "--C", "1", "--n", "1", "--box", "-10:10:-10:10",
                "--format", "csv", "--threads", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1,1,1,1,-3,-2,2") != std::string::npos);
  r = run({"search", "--A", "1", "--B", "1", "--C-range", "1:3", "--n", "1", "--box",
           "-20:20:-20:20", "--format", "csv", "--stats"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1,1,3,1,-2,2,-12") != std::string::npos);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"search", "--A", "0", "--B", "1", "--C", "1", "--n", "1", "--box", "5:1:1:2"}).code == 2);
  CHECK(run({"search", "--A", "0", "--B", "1", "--C", "1", "--n", "1", "--box", "nonsense"}).code == 2);
}

TEST_CASE("padoa and curve-info") {
  auto r = run({"padoa", "--z", "2", "--format", "table"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 5);
  CHECK(run({"padoa", "--z", "0"}).code == 2);
  r = run({"curve-info", "--curve", "product-no-constant", "--A", "1", "--B", "0", "--C", "1",
           "--T", "4/3", "--scale", "9", "--point", "8712,702000"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["scaled_curve"]["a2"] == "-2212");
  CHECK(j["query"]["on_curve"] == true);
  CHECK(j["query"]["torsion"] == "infinite_order");
  r = run({"curve-info", "--a2", "0", "--a4", "0", "--a6", "1", "--point", "2,3"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["query"]["torsion"] == "torsion(6)");
  CHECK(run({"curve-info", "--a2", "0", "--a4", "0", "--a6", "0"}).code == 2);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("search") != std::string::npos);
}
