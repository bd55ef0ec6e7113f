#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "liebranch/cli.hpp"
#include "liebranch/io.hpp"
#include "support.hpp"

using namespace liebranch;
using test_support::lie;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "liebranch");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

long long line_count(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST_CASE("weight parsing") {
  CHECK(parse_weight("1,0,-2") == IntVec{1, 0, -2});
  CHECK(parse_weight(" 3 , 4 ") == IntVec{3, 4});
  CHECK(parse_weights("1,0;0,1") == std::vector<IntVec>{{1, 0}, {0, 1}});
  CHECK_THROWS_AS(parse_weight("1,,2"), UsageError);
  CHECK_THROWS_AS(parse_weight("a"), UsageError);
  CHECK(parse_weight("[]").empty());
}

TEST_CASE("LiE text rendering") {
  const LieType b3 = LieType::parse("B3");
  Decomposition d{b3, {{Weight(IntVec{2, 0, 0}), 1}, {Weight(IntVec{0, 1, 0}), 1}}};
  CHECK(to_lie_text(d) == "1X[0,1,0] +1X[2,0,0]");
  CHECK(parse_lie_text(to_lie_text(d), b3) == d);
  CHECK(to_lie_text(Decomposition{b3, {}}) == "0");

  const LieType a1t1 = LieType::parse("A1T1");
  Decomposition c{a1t1, {{Weight(IntVec{1}, {Rational(-3, 2)}), 2}}};
  CHECK(to_lie_text(c) == "2X[1,-3/2]");
  CHECK(parse_lie_text("2X[1,-3/2]", a1t1) == c);
  CHECK_THROWS_AS(parse_lie_text("2X[1", a1t1), UsageError);
}

TEST_CASE("JSON round trip for golden cases") {
  struct Golden {
    std::string name;
    std::vector<int> params;
    IntVec weight;
  };
  const std::vector<Golden> cases = {
      {"A_B", {3}, {1, 0, 0, 0, 0, 1}},
      {"A_D", {8}, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
      {"A_D", {5}, {1, 2, 0, 0, 0, 0, 0, 0, 0}},
      {"A_D", {1}, {3}},
      {"E6_F4", {}, {0, 1, 0, 0, 0, 0}},
      {"E6_C4", {}, {0, 1, 0, 0, 0, 0}},
      {"D4_A2", {}, {0, 1, 0, 0}},
  };
  for (const auto& g : cases) {
    CAPTURE(g.name);
    const RestrictionSpec s = catalog_spec(CaseId::make(g.name, g.params));
    const Decomposition d = branch(s, Weight(g.weight));
    const JsonResult back = parse_json(to_json(d, s.g, g.weight));
    CHECK(back.g == s.g);
    CHECK(back.weight == g.weight);
    CHECK(back.decomposition == d);
  }
  const Decomposition be = levi_branch(LieType::parse("F4").simple(), SimpleSubset({3}, 4), Weight(IntVec{1, 0, 0, 0}));
  CHECK(parse_json(to_json(be, LieType::parse("F4"), {1, 0, 0, 0})).decomposition == be);
}

TEST_CASE("case verb") {
  Run r = run({"case", "A_D", "--m", "8", "--weight", "1,1,0,0,0,0,0,0,0,0,0,0,0,0,0"});
  CHECK(r.code == 0);
  CHECK(lie(trim(r.out), LieType::parse("D8")) == lie("1X[1,0,0,0,0,0,0,0] +1X[1,1,0,0,0,0,0,0]", LieType::parse("D8")));

  r = run({"case", "G2_A1A1", "--weight", "0,0"});
  CHECK(r.code == 0);
  CHECK(trim(r.out) == "1X[0,0]");

  r = run({"case", "E6_F4", "--weight", "1,0,0,0,0,0"});
  CHECK(r.code == 0);
  CHECK(lie(trim(r.out), LieType::parse("F4")) == lie("1X[0,0,0,0] +1X[0,0,0,1]", LieType::parse("F4")));

  r = run({"case", "D_BB", "--p", "2", "--q", "1", "--weight", "1,0,0,0"});
  CHECK(r.code == 0);

  r = run({"--format", "json", "case", "A_B", "--m", "3", "--weight", "1,0,0,0,0,1"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("k") == "B3");
  CHECK(j.at("components").size() == 2);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"case", "E8_E6A2", "--weight", "0,0,0,0,0,0,0,1"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("levi verb") {
  Run r = run({"levi", "--type", "F4", "--cross", "3", "--weight", "1,0,0,0", "--be"});
  CHECK(r.code == 0);
  CHECK(lie(trim(r.out), LieType::parse("F4")) ==
        lie("1X[0,0,-1,1] +1X[0,0,-1,2] +1X[0,0,0,0] +1X[0,0,0,1] +1X[0,1,-2,0] +1X[0,1,-2,1] "
            "+1X[0,1,-2,2] +1X[1,0,-2,2] +1X[1,0,-1,1] +1X[1,0,0,0] +1X[1,1,-2,0]",
            LieType::parse("F4")));

  r = run({"levi", "--type", "A2", "--cross", "1", "--cross", "2", "--weight", "0,0"});
  CHECK(r.code == 0);
  CHECK(trim(r.out) == "1X[0,0]");

  r = run({"levi", "--type", "E8", "--cross", "8", "--cross", "6", "--cross", "4", "--weight", "1,0,0,0,0,0,0,1"});
  CHECK(r.code == 0);
  r = run({"levi", "--type", "E7", "--cross", "7,1", "--weight", "0,0,0,0,0,0,1"});
  CHECK(r.code == 0);
}

TEST_CASE("resmat verb") {
  Run r = run({"resmat", "A_B", "--m", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[1,0,0]") != std::string::npos);
  CHECK(r.out.find("[0,0,2]") != std::string::npos);

  r = run({"resmat", "--type", "F4", "--cross", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[0,0,1,3]") != std::string::npos);
  CHECK(r.out.find("central") != std::string::npos);

  r = run({"resmat", "--type", "F4"});
  CHECK(r.code == 2);
}

TEST_CASE("tensor, diag and dim verbs") {
  CHECK(trim(run({"tensor", "--type", "A1", "--weights", "1;1"}).out) == "1X[0] +1X[2]");
  CHECK(trim(run({"diag", "--type", "A2", "--weights", "1,0"}).out) == "1X[1,0]");
  CHECK(trim(run({"diag", "--type", "A1", "--weights", "1;1;1"}).out) == "2X[1] +1X[3]");
  CHECK(trim(run({"dim", "--type", "F4", "--weight", "1,0,0,0"}).out) == "52");
  CHECK(trim(run({"dim", "--type", "A1", "--weight", "0"}).out) == "1");
  CHECK(trim(run({"dim", "--type", "E6", "--weight", "1,0,0,0,0,0"}).out) == "27");
}

TEST_CASE("--out writes the result to a file") {
  const std::string path = "cli_out_test.json";
  Run r = run({"--format", "json", "--out", path, "dim", "--type", "A2", "--weight", "1,1"});
  CHECK(r.code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("8") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit 2 with one diagnostic line") {
  const std::vector<std::vector<std::string>> bad = {
      {"case", "NOPE", "--weight", "1"},
      {"case", "A_D", "--weight", "1,0,0"},
      {"case", "A_D", "--m", "0", "--weight", "1"},
      {"case", "A_D", "--m", "2", "--weight", "1,0"},
      {"case", "A_D", "--m", "2", "--weight", "1,-1,0"},
      {"case", "G2_A2", "--weight", "x,1"},
      {"levi", "--type", "F4", "--weight", "1,0,0,0"},
      {"levi", "--type", "F4", "--cross", "5", "--weight", "1,0,0,0"},
      {"levi", "--type", "Q4", "--cross", "1", "--weight", "1,0,0,0"},
      {"tensor", "--type", "A2", "--weights", "1,0"},
      {"tensor", "--type", "A2", "--weights", "1,0;1"},
      {"diag", "--type", "A2", "--weights", "1"},
      {"dim", "--type", "A2", "--weight", "1,-1"},
      {"dim", "--type", "A2"},
      {"frobnicate"},
      {},
  };
  for (const auto& args : bad) {
    CAPTURE(args.size() ? args[0] : std::string("<none>"));
    const Run r = run(args);
    CHECK(r.code == 2);
    CHECK(line_count(r.err) == 1);
    CHECK(r.out.empty());
  }
}
