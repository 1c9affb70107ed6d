#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Outcome {
  int status = -1;
  std::string out;
};

Outcome run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + GAMELAB_CLI + " " + args + " 2>/dev/null";
  Outcome o;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) o.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  o.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST_CASE("run writes a trace that replays to the same verdict") {
  const std::string path = "cli_test_trace.json";
  const Outcome o = run("run --game totalcond --n 2 --adversary greedy --seed 7 --output " + path);
  CHECK(o.status == 0);
  const nlohmann::json summary = nlohmann::json::parse(o.out);
  const nlohmann::json trace = nlohmann::json::parse(slurp(path));
  CHECK(trace["game_id"] == "totalcond");
  CHECK(trace["seed"] == 7);
  CHECK(trace["params"]["n"] == 2);
  CHECK(summary["verdict"] == trace["verdict"]);

  const Outcome r = run("replay " + path);
  CHECK(r.status == 0);
  CHECK(r.out.find("replayed AliceWins") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("identical arguments give identical output") {
  const Outcome a = run("run --game permgame --set k=2 --adversary random --seed 3");
  const Outcome b = run("run --game permgame --set k=2 --adversary random --seed 3");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("GAMELAB_SEED sets the default seed") {
  const Outcome o = run("run --game totalcond --n 1", "GAMELAB_SEED=19");
  CHECK(o.status == 0);
  CHECK(nlohmann::json::parse(o.out)["seed"] == 19);
  CHECK(run("run --game totalcond", "GAMELAB_SEED=abc").status == 2);
}

TEST_CASE("coin-tree oracle prints the exact value") {
  const Outcome o = run("oracle --coin-tree depth=2 eps=0.5,0.5 scale=1 t=1");
  CHECK(o.status == 0);
  CHECK(o.out == "1/4\n");
  CHECK(run("oracle --coin-tree depth=2 grid=1/2,1/4 scale=1 t=1").status == 0);
  CHECK(run("oracle --coin-tree depth=3 eps=0.5,0.5").status == 2);
}

TEST_CASE("totalcond tree oracle") {
  const Outcome o = run("oracle --totalcond-tree --n 1 --max-rounds 8");
  CHECK(o.status == 0);
  const nlohmann::json j = nlohmann::json::parse(o.out);
  CHECK(j["leaves"] == j["alice_wins"]);
}

TEST_CASE("verify exits 0 on a passing suite") {
  const Outcome o = run("verify --suite permgame-small");
  CHECK(o.status == 0);
  CHECK(o.out.find("[FAIL]") == std::string::npos);
  CHECK(o.out.find("[PASS] 3") != std::string::npos);
}

TEST_CASE("sweep prints one line per cell in order") {
  const Outcome o = run("sweep --game totalcond --grid n=1,2,3 --trials 5 --adversary random");
  CHECK(o.status == 0);
  std::istringstream lines(o.out);
  std::string line;
  std::vector<std::string> ns;
  while (std::getline(lines, line)) ns.push_back(nlohmann::json::parse(line)["params"]["n"]);
  CHECK(ns == std::vector<std::string>{"1", "2", "3"});
}

TEST_CASE("bad arguments exit 2") {
  CHECK(run("").status == 2);
  CHECK(run("run").status == 2);
  CHECK(run("run --game chess").status == 2);
  CHECK(run("run --game totalcond --n").status == 2);
  CHECK(run("verify --suite nonsense").status == 2);
  CHECK(run("replay does-not-exist.json").status == 2);
}

}  // namespace
