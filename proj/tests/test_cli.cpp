#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <set>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

const std::string kCli = LIFTLAT_CLI;
const std::string kFixtures = LIFTLAT_FIXTURES;

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + "'" + kCli + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json run_json(const std::string& args, int expected_code) {
  const Run r = run(args + " --format json");
  CHECK(r.code == expected_code);
  const json j = json::parse(r.out);
  CHECK(j["exit_code"] == expected_code);
  CHECK(j["passed"] == (expected_code == 0));
  CHECK(j["tool"] == "liftlat");
  CHECK(j.contains("version"));
  CHECK(j["timing_ms"].is_number());
  // Round trip.
  CHECK(json::parse(j.dump()) == j);
  return j;
}

std::string fixture(const char* name) { return "'" + kFixtures + "/" + name + "'"; }

}  // namespace

TEST_CASE("check-lattice") {
  CHECK(run_json("check-lattice " + fixture("l6.json"), 0)["results"]["verdict"]["pass"] == true);
  CHECK(run_json("check-lattice " + fixture("two.json"), 0)["results"]["verdict"]["pass"] == true);
  const json broken = run_json("check-lattice " + fixture("l6_broken.json"), 1);
  CHECK(broken["results"]["verdict"]["pass"] == false);
  CHECK_FALSE(broken["results"]["verdict"]["violations"].empty());
  CHECK(run("check-lattice " + fixture("l6.json")).out.find("PASS") != std::string::npos);
}

TEST_CASE("load and usage errors exit 2") {
  const json missing = run_json("check-lattice " + fixture("no_such_file.json"), 2);
  CHECK(missing.contains("error"));
  run_json("check-lattice " + fixture("missing_product.json"), 2);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("quad --d -5 sideways").code == 2);
  CHECK(run("corpus --max-n 9").code == 2);
  run_json("quad --d -4 norms", 2);
  run_json("lift " + fixture("l6.json") + " --wire 0,zz", 2);
  CHECK(run("lift " + fixture("l6.json") + " --wire 0,1 --all-wires").code == 2);
}

TEST_CASE("lift the L6 example wire") {
  const json j = run_json("lift " + fixture("l6.json") + " --wire 0,a,b,c,1", 0);
  const json& w = j["results"]["wires"][0];
  CHECK(w["is_wire"] == true);
  CHECK(w["is_m_wire"] == false);
  CHECK(w["weak_ideal_system"] == true);
  CHECK(w["ideal_system"] == false);
  CHECK(w["lift"]["ideal_count"] == 6);
  CHECK(w["lift"]["certified"] == true);
  std::set<std::set<std::string>> ideals;
  for (const auto& ideal : w["lift"]["ideals"]) ideals.insert(ideal.get<std::set<std::string>>());
  const std::set<std::set<std::string>> expected{{"0"},           {"0", "a"},
                                                 {"0", "a", "b"}, {"0", "a", "c"},
                                                 {"0", "a", "b", "c"}, {"0", "a", "b", "c", "1"}};
  CHECK(ideals == expected);
  CHECK(w["ideal_violation"].is_object());
}

TEST_CASE("lift listings") {
  const json none = run_json("lift " + fixture("l6.json") + " --m-wires-only", 0);
  CHECK(none["results"]["wire_count"] == 0);
  CHECK(none["results"]["message"] == "no M-wires");
  CHECK(run("lift " + fixture("l6.json") + " --m-wires-only").out.find("no M-wires") !=
        std::string::npos);

  const json two = run_json("lift " + fixture("two.json") + " --all-wires", 0);
  CHECK(two["results"]["wire_count"] == 1);
  CHECK(two["results"]["wires"][0]["ideal_system"] == true);

  const json notwire = run_json("lift " + fixture("l6.json") + " --wire 0,a,1", 1);
  CHECK(notwire["results"]["wires"][0]["is_wire"] == false);

  CHECK(run_json("lift " + fixture("l6_broken.json"), 1)["results"].contains("lattice"));
}

TEST_CASE("corpus sweeps") {
  const json three = run_json("corpus --max-n 3", 0);
  CHECK(three["results"]["violation_count"] == 0);
  CHECK(three["results"]["lattices"] == 4);
  const json four = run_json("corpus --max-n 4 --limit 500", 0);
  CHECK(four["results"]["violation_count"] == 0);
  CHECK(four["results"]["lattices"] == 11);
  CHECK(run_json("corpus --max-n 2", 0)["results"]["violation_count"] == 0);
}

TEST_CASE("corpus output does not depend on the thread count") {
  auto body = [](const char* env) {
    json j = json::parse(run("corpus --max-n 5 --format json", env).out);
    j.erase("timing_ms");
    j["results"].erase("threads");
    return j;
  };
  CHECK(body("LIFTLAT_THREADS=1 ") == body("LIFTLAT_THREADS=4 "));
  CHECK(run("corpus --max-n 2", "LIFTLAT_THREADS=zero ").code == 2);
}

TEST_CASE("quad subcommands") {
  const json dc = run_json("quad --d -17 --bound 50 division-closure", 1);
  const json& res = dc["results"];
  CHECK(res["division_closure"]["closed"] == false);
  bool listed = false;
  for (const auto& c : res["counterexamples"])
    if (c["divisor"] == 21 && c["multiple"] == 42 && c["quotient"] == 2) listed = true;
  CHECK(listed);

  const json v = run_json("quad --d -5 --bound 10000 verdict", 0);
  CHECK(v["results"]["m_wire"]["verdict"] == "CONSISTENT-WITH-M-WIRE-UP-TO-BOUND");
  const json v17 = run_json("quad --d -17 --bound 50 verdict", 1);
  CHECK(v17["results"]["m_wire"]["verdict"] == "NOT-M-WIRE");

  const json s = run_json("quad --d -5 --prime-bound 200 s-wire", 0);
  CHECK(s["results"]["s_wire"]["unresolved"] == 0);
  CHECK(s["results"]["s_wire"]["primes"].size() == 46);

  const json n = run_json("quad --d -17 --bound 50 norms", 0);
  bool has42 = false, has2 = false;
  for (const auto& e : n["results"]["norms"]) {
    has42 = has42 || e["n"] == 42;
    has2 = has2 || e["n"] == 2;
  }
  CHECK(has42);
  CHECK_FALSE(has2);
}
