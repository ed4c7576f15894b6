#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "curvature/cayley.hpp"
#include "curvature/dehn.hpp"
#include "curvature/oracle.hpp"

using namespace curv;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DATA_DIR) + "/" + name; }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("curvature_cli_" + name)).string();
}

}  // namespace

TEST_CASE("equal") {
  Run r = run({"equal", "--pres", data("zz.grp"), "aaabb", "ababa"});
  CHECK(r.code == 0);
  CHECK(r.out == "EQUAL\n");
  r = run({"equal", "--pres", data("zz.grp"), "a", "b"});
  CHECK(r.code == 1);
  CHECK(r.out == "NOT-EQUAL\n");
  r = run({"equal", "--pres", data("zz.grp"), "aabbAABB", "1", "--max-area", "1"});
  CHECK(r.code == 2);
  CHECK(r.out == "UNKNOWN\n");
  r = run({"equal", "--pres", "@zz", "aabbAABB", "1"});
  CHECK(r.code == 0);
}

TEST_CASE("reduce") {
  Run r = run({"reduce", "--pres", data("surface2.grp"), "abABcdCD"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "1");
  CHECK(r.out.find("steps: 1") != std::string::npos);
  r = run({"reduce", "--pres", "@surface:2", "abABc"});
  CHECK(first_line(r.out) == "dcD");
}

TEST_CASE("subcommands are thin adapters over the library") {
  const auto s2 = standard_presentation(Family::surface, 2);
  const auto zz = standard_presentation(Family::zz);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    std::string s, u, v;
    for (int i = 0; i < 12; ++i) s.push_back("aAbBcCdD"[rng() % 8]);
    for (int i = 0; i < 6; ++i) u.push_back("aAbB"[rng() % 4]), v.push_back("aAbB"[rng() % 4]);
    CHECK(first_line(run({"reduce", "--pres", "@surface:2", s}).out) == to_string(dehn_reduce(s2, parse_word(s, 4)).word));
    const Run e = run({"equal", "--pres", "@zz", u, v});
    CHECK(first_line(e.out) == to_string(words_equal(zz, parse_word(u, 2), parse_word(v, 2))));
    CHECK(first_line(run({"normal-form", "--pres", "@zz", u}).out) == to_string(canonical_form(zz, parse_word(u, 2))));
  }
}

TEST_CASE("verify-dehn") {
  Run r = run({"verify-dehn", "--pres", "@zz", "--insertions", "4", "--max-len", "8"});
  CHECK(r.code == 1);
  CHECK(r.out == "FAIL counterexample: aabbAABB\n");
  r = run({"verify-dehn", "--pres", data("surface2.grp"), "--insertions", "2", "--max-len", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS", 0) == 0);
}

TEST_CASE("ball JSON") {
  const Run r = run({"ball", "--pres", "@zz", "--radius", "3", "--out", "-"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.dump() + "\n" == r.out);
  CHECK(j.at("radius") == 3);
  CHECK(j.at("vertices").size() == 25);
  CHECK(j.at("vertices")[0] == "1");
  CHECK(j.at("dist").size() == 25);
  for (const auto& e : j.at("edges")) {
    REQUIRE(e.size() == 3);
    CHECK(e[0].is_number_integer());
    CHECK(e[1].is_string());
    CHECK(e[2].is_number_integer());
  }
  const CayleyBall b = build_ball(standard_presentation(Family::zz), 3);
  CHECK(j.at("edges").size() == b.edges().size());

  const std::string path = temp_path("ball.json");
  const Run f = run({"ball", "--pres", "@zz", "--radius", "3", "--out", path});
  CHECK(f.code == 0);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == r.out);
  std::remove(path.c_str());
}

TEST_CASE("delta") {
  Run r = run({"delta", "--pres", "@zz", "--radius", "4"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "delta 2");
  r = run({"delta", "--pres", "@zz", "--radius", "4", "--sample", "40", "--seed", "2", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.dump() + "\n" == r.out);
  CHECK(j.at("triangles_examined") == 40);
  CHECK(j.at("witness").at("distance") == j.at("delta"));
  CHECK(j.at("policy").at("seed") == 2);
  r = run({"delta", "--pres", "@zz", "--radius", "4", "--sample", "40"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("area, dehn-function and fit") {
  Run r = run({"area", "--pres", "@zz", "aabbAABB"});
  CHECK(r.code == 0);
  CHECK(r.out == "4\n");
  r = run({"area", "--pres", "@zz", "aab"});
  CHECK(r.code == 1);
  r = run({"area", "--pres", "@zz", "aabbAABB", "--max-area", "2"});
  CHECK(r.code == 2);

  r = run({"dehn-function", "--pres", "@zz", "--n", "10"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,maxArea,argmax\n2,0,1\n4,1,abAB\n6,2,aabAAB\n8,4,aabbAABB\n10,6,aaabbAAABB\n");

  const std::string path = temp_path("table.csv");
  {
    std::ofstream f(path);
    f << r.out;
  }
  r = run({"fit", path});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "quadratic");

  {
    std::ofstream f(path);
    f << "n,maxArea,argmax\n";
  }
  r = run({"fit", path});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  std::remove(path.c_str());
}

TEST_CASE("qi, hplane and bench") {
  Run r = run({"qi", "--pres", "@zz", "--gens-b", "a,b,ab", "--radius", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == "lambda 2\nc 0\nelements 85\nviolations 0\n");

  r = run({"hplane", "verify", "--triangles", "20", "--seed", "5", "--diameter", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(run({"hplane", "verify", "--triangles", "20"}).code == 2);

  r = run({"bench", "--pres", "@zz", "--solver", "zz-nf", "--sizes", "4,8,12", "--source", "worst"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "n,steps,wallNanos,trials");
  CHECK(rows[1].rfind("4,1,", 0) == 0);
  CHECK(rows[3].rfind("12,9,", 0) == 0);
  CHECK(run({"bench", "--pres", "@zz", "--solver", "zz-nf", "--sizes", "4", "--source", "random"}).code == 2);
  CHECK(run({"bench", "--pres", "@surface:2", "--solver", "zz-nf", "--sizes", "4"}).code == 2);
}

TEST_CASE("errors and usage") {
  Run r = run({"equal", "--pres", data("zz.grp"), "abx", "a"});
  CHECK(r.code == 2);
  CHECK(r.err.find("column 3") != std::string::npos);

  const std::string path = temp_path("bad.grp");
  {
    std::ofstream f(path);
    f << "gens: a b\nrels: ab#\n";
  }
  r = run({"equal", "--pres", path, "a", "b"});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2, column 9") != std::string::npos);
  std::remove(path.c_str());

  r = run({"equal", "--pres", "/nonexistent/file.grp", "a", "b"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"equal", "--pres", "@zz", "a"}).code == 2);
  CHECK(run({"equal", "--pres", "@klein", "a", "b"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
