#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "extsq/serialize.hpp"

using namespace extsq;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = "cli_test_" + name + ".json";
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("gen is deterministic") {
    const auto a = run({"gen", "--n", "4", "--seed", "11"});
    const auto b = run({"gen", "--n", "4", "--seed", "11"});
    const auto c = run({"gen", "--n", "4", "--seed", "12"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    const auto many = run({"gen", "--n", "4", "--seed", "11", "--trials", "3"});
    CHECK(parse_json(many.out).size() == 3);
  }

  TEST_CASE("member") {
    const auto g = run({"gen", "--n", "4", "--seed", "1"});
    const auto m = run({"member"}, g.out);
    CHECK(m.code == 0);
    const Json report = parse_json(m.out);
    CHECK(report.at("member") == true);
    CHECK(report.at("note") == "criterion (n=4 caveat noted)");
    const auto five = run({"gen", "--n", "5", "--seed", "1"});
    CHECK_FALSE(parse_json(run({"member"}, five.out).out).contains("note"));

    Json tampered = parse_json(g.out);
    const int entry = std::stoi(tampered["fwd"]["rows"][0][1].get<std::string>());
    tampered["fwd"]["rows"][0][1] = std::to_string((entry + 1) % 97);
    CHECK(run({"member"}, tampered["fwd"].dump()).code == 1);
  }

  TEST_CASE("decompose and verify") {
    const auto g = run({"gen", "--n", "4", "--seed", "2"});
    const std::string gpath = temp_file("g", g.out);
    const auto d = run({"decompose", "--I", "1,2", "--J", "3,4"}, g.out);
    REQUIRE(d.code == 0);
    const Json result = parse_json(d.out);
    CHECK(result.at("case") == "h0-entry");
    CHECK(result.at("word").at("terms").size() == 16);

    const auto v = run({"verify", "--g", gpath}, d.out);
    CHECK(v.code == 0);
    CHECK(parse_json(v.out).at("verified") == true);

    Json bad = result;
    bad["word"]["terms"][0]["eps"] = -bad["word"]["terms"][0]["eps"].get<int>();
    const auto t = run({"verify", "--g", gpath}, bad.dump());
    CHECK(t.code == 1);
    CHECK(parse_json(t.out).at("verified") == false);

    const auto bare = run({"verify", "--g", gpath, "--xi", result.at("param").dump()}, result.at("word").dump());
    CHECK(bare.code == 0);
    std::remove(gpath.c_str());
  }

  TEST_CASE("decompose --all") {
    const auto g = run({"gen", "--n", "4", "--seed", "3"});
    const auto d = run({"decompose", "--all", "--k", "1", "--l", "4"}, g.out);
    REQUIRE(d.code == 0);
    CHECK(parse_json(d.out).size() == 35);
  }

  TEST_CASE("level") {
    const auto g = run({"gen", "--n", "4", "--seed", "4"});
    const auto l = run({"level"}, g.out);
    CHECK(l.code == 0);
    CHECK(parse_json(l.out).size() == 35);
  }

  TEST_CASE("stabilize") {
    const std::string w = R"({"n":4,"entries":[1,2,3,4,5,6]})";
    const auto s = run({"stabilize", "--j", "2"}, w);
    CHECK(s.code == 0);
    CHECK(parse_json(s.out).at("fixed") == true);
    CHECK(run({"stabilize", "--i", "3"}, w).code == 0);
    CHECK(run({"stabilize", "--j", "2", "--i", "3"}, w).code == 2);
    CHECK(run({"stabilize", "--t1"}, w).code == 2);
  }

  TEST_CASE("identities") {
    const auto small = run({"identities", "--max-n", "3"});
    CHECK(small.code == 0);
    CHECK(small.out.find("SKIP") != std::string::npos);
    CHECK(small.out.find("FAIL") == std::string::npos);
    const auto fault = run({"identities", "--max-n", "3", "--inject-fault", "expansion"});
    CHECK(fault.code == 1);
    CHECK(fault.out.find("FAIL") != std::string::npos);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"gen", "--n", "two"}).code == 2);
    CHECK(run({"gen", "--n", "2"}).code == 2);
    CHECK(run({"member"}, "{oops").code == 2);
    CHECK(run({"decompose", "--I", "1;2"}, run({"gen", "--seed", "5"}).out).code == 2);
    CHECK(run({"verify"}).code == 2);
    const auto bad_ring = run({"gen", "--ring", "field:7"});
    CHECK(bad_ring.code == 2);
    CHECK(bad_ring.err.find("error") != std::string::npos);
  }
}
