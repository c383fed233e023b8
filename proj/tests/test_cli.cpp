#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

// Run the CLI binary (sibling of the test executable) and capture stdout.
RunResult run(const std::string& args) {
  std::string cmd = "./trkr " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

}  // namespace

TEST_CASE("homology json output round-trips") {
  RunResult r = run("homology --braid \"b=1;\" -N 2 --format json --kmax 9");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["braid"] == "b=1;");
  CHECK(j["N"] == 2);
  CHECK(j["sl"] == -1);
  REQUIRE(j.contains("components"));
  CHECK(!j["components"].empty());
  REQUIRE(j.contains("audits"));
  for (const auto& [name, ok] : j["audits"].items()) {
    CAPTURE(name);
    CHECK(ok == true);
  }
  // free part of the unknot at N=2: two Q[a] generators at k = -1, 1
  int free_gens = 0;
  for (const auto& comp : j["components"])
    free_gens += static_cast<int>(comp["free"].size());
  CHECK(free_gens == 2);
}

TEST_CASE("sln output lists positive dims") {
  RunResult r = run("sln --braid \"b=1;\" -N 2 --format json --kmax 9");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["sln"].size() == 2);  // Q[x]/(x^2) in degrees -1, 1
  for (const auto& e : j["sln"]) CHECK(e["dim"] == 1);
}

TEST_CASE("compare: positive stabilization EQUAL, negative DIFFERENT") {
  RunResult eq = run("compare --braid-a \"b=1;\" --braid-b \"b=2; 1\" -N 1");
  CHECK(eq.exit_code == 0);
  CHECK(eq.out.find("EQUAL") == 0);
  RunResult ne = run("compare --braid-a \"b=1;\" --braid-b \"b=2; -1\" -N 1");
  CHECK(ne.exit_code == 0);
  CHECK(ne.out.find("DIFFERENT") == 0);
}

TEST_CASE("oracle subcommand prints generators and a trace") {
  RunResult r = run("oracle --word \"b=2; t1\" -N 1 --format json --trace");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(!j["generators"].empty());
  CHECK(!j["trace"].empty());
}

TEST_CASE("unknot-check passes for small cases") {
  CHECK(run("unknot-check -m 0 -N 1").exit_code == 0);
  CHECK(run("unknot-check -m 1 -N 2").exit_code == 0);
}

TEST_CASE("moves subcommand applies stabilizations") {
  RunResult r = run("moves --braid \"b=2; 1\" --kind stab-neg");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == "b=3; 1 -2\n");
}

TEST_CASE("usage and input errors exit with code 1") {
  CHECK(run("no-such-subcommand").exit_code == 1);
  CHECK(run("homology").exit_code == 1);                          // missing --braid
  CHECK(run("homology --braid \"b=2; 5\" -N 1").exit_code == 1);  // letter out of range
  CHECK(run("--help").exit_code == 0);
}
