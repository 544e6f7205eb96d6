#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(VERONALT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("cli exit codes") {
  struct Case {
    const char* args;
    int code;
  };
  const Case cases[] = {
      {"check --variety alt \"assoc((r*x),s,x) - x*assoc(r,s,x)\"", 0},
      {"check --variety alt \"assoc(x,y,z)\"", 1},
      {"check --variety assoc \"assoc(x,y,z)\"", 0},
      {"check --variety alt \"assoc(x,y\"", 2},
      {"check --variety jordan \"x\"", 2},
      {"check --variety alt \"lpow(x,9)\"", 2},
      {"check --variety alt \"lpow(x,9) - x*lpow(x,8)\" --cap 9", 0},
      {"dims --variety assoc --rank 2 --max-degree 4", 0},
      {"dims --rank 3 --max-degree 7", 2},
      {"dims --format xml", 2},
      {"nf --variety alt \"assoc(x,y,x)\"", 0},
      {"split-check \"assoc(x,x,y)\"", 0},
      {"split-check \"assoc(x,y,z)\"", 1},
      {"split-check \"assoc(a,b,c)*d\"", 2},
      {"pigeonhole -n 3 1 2 1 2 1", 0},
      {"pigeonhole -n 3 1 5", 2},
      {"veronese --variety assoc -n 2 --max-degree 4", 0},
      {"invariants --variety assoc --swap --max-degree 3", 0},
      {"invariants --variety assoc --max-degree 3", 2},
      {"nucleus --variety alt --rank 2 --cutoff 4", 0},
      {"center --variety alt --rank 2 --cutoff 4 --degree 1", 0},
      {"dchain --variety alt --rank 3 --max-degree 4", 0},
      {"", 2},
      {"frobnicate", 2},
  };
  for (const auto& c : cases) {
    INFO(std::string(c.args));
    CHECK(run(c.args).code == c.code);
  }
}

TEST_CASE("cli json output is deterministic and well formed") {
  const std::string args = "veronese --variety ralt --rank 2 -n 2 --max-degree 6 --format json --basis";
  const Run a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["command"] == "veronese");
  CHECK(doc["config"]["n"] == 2);
  CHECK(doc["timings"].empty());
  CHECK(doc["results"][1]["new_count"] == 12);
  CHECK(doc["results"][1]["new_generators"].size() == 12);
  const auto ordered = nlohmann::ordered_json::parse(a.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : ordered.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "config", "results", "timings"});
}

TEST_CASE("cli dims and rationals") {
  const Run dims = run("dims --variety assoc --rank 2 --max-degree 4 --format csv");
  CHECK(dims.out == "degree,dimension,monomials\n1,2,2\n2,4,4\n3,8,16\n4,16,80\n");
  const Run nf = run("nf --variety alt \"1/2 (x*y)*x - 1/3 x*(y*x)\" --format json");
  REQUIRE(nf.code == 0);
  const auto doc = nlohmann::json::parse(nf.out);
  const auto& coords = doc["results"]["components"][0]["coordinates"];
  REQUIRE(coords.size() == 1);
  CHECK(coords[0][1] == "1/6");
}

TEST_CASE("cli group files") {
  const auto path = std::filesystem::temp_directory_path() / "veronalt-group-test.txt";
  {
    std::ofstream f(path);
    f << "scalar 3\n";
  }
  const Run r = run("invariants --variety alt --rank 2 --max-degree 6 --format csv --group " + path.string());
  CHECK(r.code == 0);
  CHECK(r.out == "degree,target_dim,generated_dim,new_count\n1,0,0,0\n2,0,0,0\n3,8,0,8\n4,0,0,0\n5,0,0,0\n6,64,64,0\n");
  std::filesystem::remove(path);
}
