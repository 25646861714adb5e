#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "rainbow/cli.hpp"

using namespace rainbow;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("rainbow_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string path(const std::string& name) { return (scratch() / name).string(); }

void write_text(const std::string& name, const std::string& text) {
  std::ofstream(path(name)) << text;
}

std::string read_text(const std::string& name) {
  std::ifstream in(path(name));
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

// Documented layout of a coloring document.
void check_schema(const Json& j) {
  REQUIRE(j.is_object());
  REQUIRE(j.at("n").is_number_integer());
  REQUIRE(j.at("k").is_number_integer());
  REQUIRE(j.at("scheme").is_string());
  REQUIRE(j.at("params").is_object());
  const auto n = j.at("n").get<int>();
  REQUIRE(j.at("edges").is_array());
  REQUIRE(j.at("edges").size() == Dim(n).edge_count());
  for (const auto& rec : j.at("edges")) {
    REQUIRE(rec.at("b").is_string());
    const Mask b = parse_hex_mask(rec.at("b").get<std::string>());
    const int dir = rec.at("dir").get<int>();
    REQUIRE(dir >= 1);
    REQUIRE(dir <= n);
    REQUIRE((b >> n) == 0);
    REQUIRE_FALSE(Vertex{b}.has(dir));
    REQUIRE(rec.at("color").is_array());
    REQUIRE(rec.at("color").size() == 2);
  }
}

}  // namespace

TEST_CASE("construct and verify construction 2") {
  auto r = run({"construct", "--n", "5", "--k", "6", "--scheme", "c2", "--eps", "1.0", "--out", path("c2.json")});
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "colors: "));
  CHECK(contains(r.out, "bound 6N"));
  const Json doc = read_json_file(path("c2.json"));
  check_schema(doc);
  CHECK(doc.at("scheme") == "c2");

  auto v = run({"verify", "--coloring", path("c2.json")});
  CHECK(v.code == 0);
  CHECK(contains(v.out, "rainbow"));
}

TEST_CASE("construct and verify construction 1") {
  auto r = run({"construct", "--n", "4", "--k", "8", "--scheme", "c1", "--sidon", "greedy", "--out", path("c1.json")});
  REQUIRE(r.code == 0);
  check_schema(read_json_file(path("c1.json")));
  CHECK(run({"verify", "--coloring", path("c1.json")}).code == 0);

  auto bc = run({"construct", "--n", "5", "--k", "12", "--scheme", "c1", "--sidon", "bose-chowla", "--out",
                 path("c1b.json")});
  REQUIRE(bc.code == 0);
  CHECK(run({"verify", "--coloring", path("c1b.json")}).code == 0);
}

TEST_CASE("construction round trip is lossless") {
  REQUIRE(run({"construct", "--n", "6", "--k", "6", "--scheme", "c2", "--eps", "1", "--out", path("rt.json")}).code == 0);
  const Json first = read_json_file(path("rt.json"));
  const EdgeColoring c = coloring_from_json(first);
  CHECK(recompute(c).colors() == c.colors());
  CHECK(coloring_to_json(c) == first);
  write_json_file(path("rt2.json"), coloring_to_json(c));
  CHECK(read_text("rt.json") == read_text("rt2.json"));
}

TEST_CASE("invalid construction requests") {
  CHECK(run({"construct", "--n", "4", "--k", "6", "--scheme", "c1"}).code == 2);
  CHECK(run({"construct", "--n", "4", "--k", "8", "--scheme", "c3"}).code == 2);
  CHECK(run({"construct", "--n", "4", "--k", "8", "--scheme", "c2"}).code == 2);
  CHECK(run({"construct", "--n", "4", "--k", "8", "--scheme", "c1", "--sidon", "random"}).code == 2);
  CHECK(run({"construct", "--n", "0", "--k", "8", "--scheme", "c1"}).code == 2);
  auto infeasible = run({"construct", "--n", "16", "--k", "6", "--scheme", "c2", "--eps", "0.25"});
  CHECK(infeasible.code == 2);
  CHECK(contains(infeasible.err, "eps"));
  CHECK(run({"construct", "--n", "25", "--k", "8", "--scheme", "c1"}).code == 3);
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
}

TEST_CASE("verify reports a forced clash") {
  REQUIRE(run({"construct", "--n", "4", "--k", "6", "--scheme", "c2", "--eps", "1", "--out", path("clash.json")}).code ==
          0);
  Json doc = read_json_file(path("clash.json"));
  // (0, dir 1) and (1, dir 2) are consecutive on a C_6 inside the first Q_3.
  Json* e1 = nullptr;
  Json* e2 = nullptr;
  for (auto& rec : doc["edges"]) {
    if (rec["b"] == "0" && rec["dir"] == 1) e1 = &rec;
    if (rec["b"] == "1" && rec["dir"] == 2) e2 = &rec;
  }
  REQUIRE(e1);
  REQUIRE(e2);
  (*e2)["color"] = (*e1)["color"];
  doc["scheme"] = "explicit";
  doc["params"] = Json::object();
  write_json_file(path("clash.json"), doc);

  auto v = run({"verify", "--coloring", path("clash.json")});
  CHECK(v.code == 1);
  CHECK(contains(v.out, "violation: cycle"));
  CHECK(contains(v.out, "share color"));
}

TEST_CASE("malformed coloring documents") {
  REQUIRE(run({"construct", "--n", "4", "--k", "6", "--scheme", "c2", "--eps", "1", "--out", path("ok.json")}).code ==
          0);
  const std::string text = read_text("ok.json");
  write_text("truncated.json", text.substr(0, text.size() / 2));
  CHECK(run({"verify", "--coloring", path("truncated.json")}).code == 2);
  CHECK(run({"verify", "--coloring", path("missing.json")}).code == 2);

  Json doc = read_json_file(path("ok.json"));
  auto mutate = [&](const std::string& name, auto&& fn) {
    Json copy = doc;
    fn(copy);
    write_json_file(path(name), copy);
    return run({"verify", "--coloring", path(name)});
  };
  CHECK(mutate("dropped.json", [](Json& j) { j["edges"].erase(j["edges"].begin()); }).code == 2);
  CHECK(mutate("dup.json", [](Json& j) { j["edges"][1] = j["edges"][0]; }).code == 2);
  CHECK(mutate("hexbits.json", [](Json& j) { j["edges"][0]["b"] = "10"; }).code == 2);
  CHECK(mutate("dirbit.json", [](Json& j) { j["edges"][0]["b"] = "1"; j["edges"][0]["dir"] = 1; }).code == 2);
  CHECK(mutate("badhex.json", [](Json& j) { j["edges"][0]["b"] = "zz"; }).code == 2);
  CHECK(mutate("nocolor.json", [](Json& j) { j["edges"][0].erase("color"); }).code == 2);
  CHECK(mutate("scheme.json", [](Json& j) { j["scheme"] = "c9"; }).code == 2);
  CHECK(mutate("params.json", [](Json& j) { j["params"]["N"] = 6; }).code == 2);
  CHECK(mutate("big.json", [](Json& j) { j["n"] = 40; }).code == 2);
  CHECK(mutate("oddk.json", [](Json& j) { j["k"] = 7; }).code == 2);
}

TEST_CASE("exact command") {
  auto r44 = run({"exact", "--n", "4", "--k", "4"});
  CHECK(r44.code == 0);
  CHECK(contains(r44.out, "f(4,4) = 4"));

  auto r36 = run({"exact", "--n", "3", "--k", "6", "--out", path("exact.json")});
  CHECK(r36.code == 0);
  CHECK(contains(r36.out, "f(3,6) = 12"));
  check_schema(read_json_file(path("exact.json")));
  CHECK(run({"verify", "--coloring", path("exact.json")}).code == 0);

  auto slow = run({"exact", "--n", "10", "--k", "12", "--timeout", "1"});
  CHECK(slow.code == 3);
  CHECK(contains(slow.out, "<= f(10,12) <="));

  CHECK(run({"exact", "--n", "11", "--k", "4"}).code == 2);
  CHECK(run({"exact", "--n", "3", "--k", "5"}).code == 2);
}

TEST_CASE("sets command") {
  auto bt = run({"sets", "--kind", "bt", "--t", "2", "--q", "5"});
  CHECK(bt.code == 0);
  CHECK(contains(bt.out, "size: 5"));
  CHECK(contains(bt.out, "B_2: true"));

  auto greedy = run({"sets", "--kind", "bt", "--t", "2", "--size", "5"});
  CHECK(greedy.code == 0);
  CHECK(contains(greedy.out, "set: [1,2,4,8,13]"));

  auto behrend = run({"sets", "--kind", "behrend", "--N", "14"});
  CHECK(behrend.code == 0);
  CHECK(contains(behrend.out, "size: 8"));
  CHECK(contains(behrend.out, "3-AP-free: true"));

  write_text("bad.json", "[1, 2, 3]");
  auto bad = run({"sets", "--kind", "bt", "--t", "2", "--verify-only", path("bad.json")});
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "witness: [1,3] and [2,2]"));
  auto bad_ap = run({"sets", "--kind", "behrend", "--verify-only", path("bad.json")});
  CHECK(bad_ap.code == 1);
  CHECK(contains(bad_ap.out, "witness: 1, 2, 3"));

  write_text("good.json", "{\"set\": [1, 2, 4, 8]}");
  CHECK(run({"sets", "--kind", "bt", "--t", "2", "--verify-only", path("good.json")}).code == 0);

  CHECK(run({"sets", "--kind", "bt", "--t", "2", "--q", "4"}).code == 2);
  CHECK(run({"sets", "--kind", "behrend"}).code == 2);
  CHECK(run({"sets", "--kind", "primes", "--N", "5"}).code == 2);
  write_text("junk.json", "{\"set\": [1, \"x\"]}");
  CHECK(run({"sets", "--kind", "bt", "--t", "2", "--verify-only", path("junk.json")}).code == 2);
}

TEST_CASE("genus command") {
  auto c10 = run({"genus", "--conjecture", "10"});
  CHECK(c10.code == 0);
  CHECK(contains(c10.out, "x1 + x2 = x3 + x4  genus 2"));
  CHECK(contains(c10.out, "x1 + x2 + x3 = x4 + 2x5  genus 2"));
  CHECK(contains(c10.out, "x1 + 2x2 = x3 + 2x4  genus 2"));

  write_text("one.json", "{\"equations\": [[1, -1]]}");
  auto one = run({"genus", "--eqs", path("one.json")});
  CHECK(one.code == 0);
  CHECK(contains(one.out, "genus 1"));

  auto free = run({"genus", "--conjecture", "10", "--freeset", "20", "--mode", "exhaustive"});
  CHECK(free.code == 0);
  CHECK(contains(free.out, "free set: [1,2,5,14]"));
  CHECK(contains(free.out, "optimal: true"));

  auto budget = run({"genus", "--conjecture", "10", "--freeset", "40", "--mode", "exhaustive", "--budget", "1000"});
  CHECK(budget.code == 3);
  CHECK(contains(budget.out, "best so far"));

  write_text("broken.json", "{\"equations\": [[1, 0]]}");
  CHECK(run({"genus", "--eqs", path("broken.json")}).code == 2);
  write_text("notjson.json", "{equations");
  CHECK(run({"genus", "--eqs", path("notjson.json")}).code == 2);
  CHECK(run({"genus", "--conjecture", "8"}).code == 2);
  CHECK(run({"genus"}).code == 2);
}
