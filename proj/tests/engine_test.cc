#include <set>

#include "doctest.h"
#include "gamelab/engine.h"
#include "gamelab/totalcond.h"

namespace gamelab {
namespace {

// Counter game: each non-pass move adds its value. Alice wins iff the total
// ends even.
struct CounterMove {
  int add = 0;
  bool is_pass() const { return add == 0; }
};

class CounterGame {
 public:
  using Move = CounterMove;
  std::string game_id() const { return "counter"; }
  Json params() const { return Json::object(); }
  Actor first_mover() const { return Actor::kAlice; }
  Actor adversary() const { return Actor::kBob; }
  void apply(Actor, const Move& m) { total_ += m.add; }
  Verdict verdict() const { return total_ % 2 == 0 ? Verdict::kAliceWins : Verdict::kBobWins; }
  Json state_json() const { return Json{{"total", total_}}; }
  Json encode(const Move& m) const { return m.is_pass() ? pass_payload() : Json{{"add", m.add}}; }
  Move decode(Actor, const Json& j) const { return is_pass_payload(j) ? Move{} : Move{j.at("add").get<int>()}; }
  int total() const { return total_; }

 private:
  int total_ = 0;
};

struct Passer : Strategy<CounterGame> {
  CounterMove next_move(const CounterGame&, Rng&) override { return {}; }
};

// Adds a random value for its first `turns` turns.
struct Adder : Strategy<CounterGame> {
  explicit Adder(int turns) : left(turns) {}
  CounterMove next_move(const CounterGame&, Rng& rng) override {
    if (left <= 0) return {};
    --left;
    return {1 + static_cast<int>(rng.below(5))};
  }
  int left;
};

TEST_CASE("both players passing gives a two-move trace") {
  CounterGame g;
  Passer a, b;
  const GameTrace t = run_game(g, a, b, Budget{10, 0}, 1);
  REQUIRE(t.moves.size() == 2);
  CHECK(t.moves[0].actor == Actor::kAlice);
  CHECK(t.moves[1].actor == Actor::kBob);
  CHECK(is_pass_payload(t.moves[0].payload));
  CHECK(t.verdict == Verdict::kAliceWins);
}

TEST_CASE("same seed gives byte-identical traces") {
  auto play = [](std::uint64_t seed) {
    CounterGame g;
    Adder a(4), b(6);
    return to_json(run_game(g, a, b, Budget{20, 0}, seed)).dump();
  };
  CHECK(play(42) == play(42));
  CHECK(play(42) != play(43));
}

TEST_CASE("grace rounds keep the game going after the adversary idles") {
  CounterGame g;
  Passer a;
  Adder b(2);
  const GameTrace t = run_game(g, a, b, Budget{100, 3}, 5);
  // Two active Bob rounds, then three idle ones.
  CHECK(t.moves.size() == 10);
  CHECK(check_quiescence(t, 3));
  CHECK_FALSE(check_quiescence(t, 4));
}

TEST_CASE("max_rounds caps the game") {
  CounterGame g;
  Adder a(100), b(100);
  const GameTrace t = run_game(g, a, b, Budget{7, 0}, 5);
  CHECK(t.moves.size() == 14);
  CHECK_THROWS_AS(run_game(g, a, b, Budget{0, 0}, 5), std::invalid_argument);
}

TEST_CASE("players draw from separate streams") {
  CHECK(derive_seed(9, 0) != derive_seed(9, 1));
  CHECK(derive_seed(9, 0) == derive_seed(9, 0));
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(3, i));
  CHECK(seen.size() == 1000);
}

TEST_CASE("trace json keeps its field order and round-trips") {
  CounterGame g;
  Adder a(3), b(1);
  const GameTrace t = run_game(g, a, b, Budget{20, 0}, 11);
  const Json j = to_json(t);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"game_id", "params", "seed", "moves", "verdict"});
  CHECK(trace_from_json(Json::parse(j.dump())) == t);
}

TEST_CASE("replay reproduces the final state and verdict") {
  CounterGame g;
  Adder a(3), b(4);
  const GameTrace t = run_game(g, a, b, Budget{20, 0}, 17);
  CounterGame fresh;
  CHECK(replay_trace(fresh, t) == t.verdict);
  CHECK(fresh.total() == g.total());

  GameTrace broken = t;
  broken.moves.erase(broken.moves.begin() + 1);
  CounterGame other_game;
  CHECK_THROWS_AS(replay_trace(other_game, broken), std::invalid_argument);
}

TEST_CASE("check_quiescence windows") {
  GameTrace t;
  t.game_id = "totalcond";
  t.moves = {{0, Actor::kAlice, pass_payload()}, {0, Actor::kBob, pass_payload()}};
  CHECK(check_quiescence(t, 1));
  t.moves.push_back({1, Actor::kAlice, pass_payload()});
  t.moves.push_back({1, Actor::kBob, Json{{"list", Json::array()}}});
  CHECK_FALSE(check_quiescence(t, 1));
  CHECK_THROWS_AS(check_quiescence(t, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_quiescence(t, 3), std::invalid_argument);
}

TEST_CASE("designated adversaries") {
  CHECK(designated_adversary("friedberg") == Actor::kAlice);
  CHECK(designated_adversary("epslev") == Actor::kAlice);
  CHECK(designated_adversary("totalcond") == Actor::kBob);
  CHECK(designated_adversary("permgame") == Actor::kBob);
  CHECK(designated_adversary("infodist") == Actor::kBob);
}

TEST_CASE("golden trace: totalcond n=1, reference Alice against greedy Bob") {
  // Frozen from one reference run. Alice opens (0,0); Bob covers it with the
  // function 0->0, 1->0; Alice moves to (1,1), which Bob may no longer cover
  // because its list is full at 2^1-1 = 1 function.
  const char* golden =
      R"({"game_id":"totalcond","params":{"n":1},"seed":7,"moves":[)"
      R"({"round":0,"actor":"Alice","payload":{"define":[["0","0"]]}},)"
      R"({"round":0,"actor":"Bob","payload":{"list":[["0","0"]]}},)"
      R"({"round":1,"actor":"Alice","payload":{"define":[["1","1"]]}},)"
      R"({"round":1,"actor":"Bob","payload":{"pass":true}},)"
      R"({"round":2,"actor":"Alice","payload":{"pass":true}},)"
      R"({"round":2,"actor":"Bob","payload":{"pass":true}},)"
      R"({"round":3,"actor":"Alice","payload":{"pass":true}},)"
      R"({"round":3,"actor":"Bob","payload":{"pass":true}}],"verdict":"AliceWins"})";
  totalcond::TotalCondGame g(1);
  totalcond::ReferenceAlice alice;
  auto bob = totalcond::make_bob_adversary(totalcond::BobKind::kGreedy, 1);
  const GameTrace t = run_game(g, alice, *bob, Budget{2 * 2 + 8, 3}, 7);
  CHECK(to_json(t).dump() == golden);
  CHECK(t.moves.size() == 8);
}

}  // namespace
}  // namespace gamelab
