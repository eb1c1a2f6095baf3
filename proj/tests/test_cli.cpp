#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dcup/cli.hpp"

using namespace dcup;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "dcup");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  std::string path = std::string(P_tmpdir) + "/dcup_test_" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("enumerate") {
    auto r = call({"enumerate", "--k", "3", "--cups", "max"});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
    CHECK(r.out.rfind("3: c(1,2);r(3)\n", 0) == 0);
    auto j = nlohmann::json::parse(call({"enumerate", "--k", "4", "--format", "json"}).out);
    CHECK(j["count"] == 6);
    CHECK(call({"enumerate", "--k", "4", "--cups", "2", "--parity", "even"}).code == 0);
    CHECK(call({"enumerate", "--k", "4", "--cups", "lots"}).code == 1);
    CHECK(call({"enumerate", "--k", "4", "--parity", "blue"}).code == 1);
  }

  TEST_CASE("unknown flags and verbs are rejected") {
    CHECK(call({"enumerate", "--k", "3", "--bogus"}).code == 1);
    CHECK(call({"frobnicate"}).code == 1);
    CHECK(call({}).code == 1);
  }

  TEST_CASE("help and version exit cleanly") {
    auto v = call({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out.find(kVersion) != std::string::npos);
    CHECK(call({"--help"}).code == 0);
    CHECK(call({"render", "--help"}).code == 0);
  }

  TEST_CASE("render") {
    auto r = call({"render", "--diagram", "2: c*(1,2)", "--format", "ascii"});
    CHECK(r.code == 0);
    CHECK(r.out == "( )\n *\n");
    CHECK(call({"render", "--diagram", "2: c*(1,2)", "--format", "tikz"}).out.find("tikzpicture") != std::string::npos);
    auto j = nlohmann::json::parse(call({"render", "--diagram", "2: c*(1,2)", "--format", "json"}).out);
    CHECK(j["cups"][0]["dotted"] == true);
    auto bad = call({"render", "--diagram", "2: c(1,3)"});
    CHECK(bad.code == 1);
    CHECK(!bad.err.empty());
  }

  TEST_CASE("movegraph, distance and orient") {
    auto g = call({"movegraph", "--k", "4", "--parity", "even", "--dot"});
    CHECK(g.code == 0);
    CHECK(g.out.rfind("digraph", 0) == 0);
    CHECK(g.out == call({"movegraph", "--k", "4", "--parity", "even", "--dot"}).out);
    auto j = nlohmann::json::parse(call({"movegraph", "--k", "6", "--parity", "even", "--format", "json"}).out);
    CHECK(j["nodes"].size() == 10);
    CHECK(call({"distance", "--a", "4: c*(1,2);c(3,4)", "--b", "4: c(1,2);c*(3,4)"}).out == "2\n");
    CHECK(call({"distance", "--a", "4: c*(1,2);c(3,4)", "--b", "4: c(1,2);c(3,4)"}).out == "inf\n");
    CHECK(call({"distance", "--a", "3: c(1,2);r(3)", "--b", "3: r(1);r(2);r(3)"}).code == 1);
    auto o = call({"orient", "--cup", "4: c*(1,2);c(3,4)"});
    CHECK(o.code == 0);
    CHECK(std::count(o.out.begin(), o.out.end(), '\n') == 4);
    auto oc = nlohmann::json::parse(call({"orient", "--cup", "4: c*(1,4);c(2,3)", "--cap", "4: c*(1,2);c(3,4)", "--format", "json"}).out);
    CHECK(oc.size() == 2);
  }

  TEST_CASE("cohomology") {
    auto c = nlohmann::json::parse(call({"cohomology", "centre", "--k", "5", "--format", "json"}).out);
    CHECK(c["total"] == 32);
    auto s = nlohmann::json::parse(call({"cohomology", "springer", "--k", "4", "--t", "2", "--format", "json"}).out);
    CHECK(s["total"] == 8);
    CHECK(s["specialization_dim"] == 8);
    CHECK(call({"cohomology", "springer", "--k", "4", "--t", "one"}).code == 1);
    CHECK(call({"cohomology", "other", "--k", "4"}).code == 1);
  }

  TEST_CASE("intersect") {
    auto r = call({"intersect", "--k", "4", "--parity", "odd", "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["diagrams"].size() == 3);
    CHECK(call({"intersect", "--k", "4", "--parity", "odd", "--shape", "5,3"}).code == 1);
    CHECK(call({"intersect", "--k", "4", "--parity", "odd", "--shape", "4,4"}).code == 0);
  }

  TEST_CASE("bijection") {
    auto cup = temp_file("cup.txt", "4: c*(1,2);c(3,4)");
    auto b = call({"bijection", "--from", "cup", "--to", "bitab", "--input", cup});
    CHECK(b.code == 0);
    CHECK(nlohmann::json::parse(b.out).dump() == "[[2,3],[1,4]]");
    auto bt = temp_file("bitab.json", "[[2,3],[1,4]]");
    CHECK(call({"bijection", "--from", "bitab", "--to", "cup", "--input", bt}).out == "4: c*(1,2);c(3,4)\n");
    auto adt = call({"bijection", "--from", "cup", "--to", "adt", "--input", cup});
    auto adt_file = temp_file("adt.json", adt.out);
    CHECK(call({"bijection", "--from", "adt", "--to", "cup", "--input", adt_file}).out == "4: c*(1,2);c(3,4)\n");
    auto dt = call({"bijection", "--from", "cup", "--to", "dt", "--input", cup});
    auto dt_file = temp_file("dt.json", dt.out);
    CHECK(call({"bijection", "--from", "dt", "--to", "cup", "--input", dt_file}).out == "4: c*(1,2);c(3,4)\n");
    auto st = call({"bijection", "--from", "cup", "--to", "stable", "--input", cup});
    CHECK(st.code == 0);
    auto st_file = temp_file("st.json", st.out);
    CHECK(call({"bijection", "--from", "stable", "--to", "cup", "--input", st_file}).out == "4: c*(1,2);c(3,4)\n");
    auto odd = temp_file("odd.json", "[[1,3,4],[2]]");
    CHECK(call({"bijection", "--from", "bitab", "--to", "cup", "--input", odd}).code == 1);
    CHECK(call({"bijection", "--from", "bitab", "--to", "cup", "--input", odd, "--parity", "odd"}).out == "4: c(1,2);r*(3);r(4)\n");
    CHECK(call({"bijection", "--from", "cup", "--to", "adt", "--input", "/nonexistent/file"}).code == 1);
    auto garbage = temp_file("garbage.json", "{not json");
    CHECK(call({"bijection", "--from", "adt", "--to", "cup", "--input", garbage}).code == 1);
  }

  TEST_CASE("selftest") {
    auto r = call({"selftest", "--k-max", "3", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["passed"] == true);
    CHECK(call({"selftest", "--k-max", "1"}).code == 1);
    CHECK(call({"--jobs", "2", "selftest", "--k-max", "2"}).code == 0);
  }

  TEST_CASE("output is identical across runs") {
    auto a = call({"intersect", "--k", "5", "--parity", "even", "--format", "json", "--jobs", "3"});
    auto b = call({"intersect", "--k", "5", "--parity", "even", "--format", "json"});
    CHECK(a.out == b.out);
  }
}
