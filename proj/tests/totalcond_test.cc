#include "doctest.h"
#include "gamelab/totalcond.h"

namespace gamelab::totalcond {
namespace {

TEST_CASE("word encoding") {
  CHECK(word_to_bits(5, 4) == "0101");
  CHECK(bits_to_word("0101") == 5);
  CHECK(word_to_bits(0, 1) == "0");
}

TEST_CASE("Alice opens at (0,0) on an empty board") {
  GnState s(1);
  const Move m = alice_strategy_step(s);
  REQUIRE(m.define.size() == 1);
  CHECK(m.define[0] == Challenge{0, 0});
}

TEST_CASE("Alice answers a covered challenge with y=1, x=1-f(1)") {
  for (Word f1 : {0u, 1u}) {
    GnState s(1);
    s.a_func[0] = 0;
    s.alice_current = Challenge{0, 0};
    s.bob_list.push_back({0, f1});
    const Move m = alice_strategy_step(s);
    REQUIRE(m.define.size() == 1);
    CHECK(m.define[0] == Challenge{1, 1 - f1});
  }
}

TEST_CASE("Alice passes while her challenge is uncovered") {
  GnState s(2);
  s.a_func[0] = 3;
  s.alice_current = Challenge{0, 3};
  s.bob_list.push_back({0, 0, 0, 0});
  CHECK(alice_strategy_step(s).is_pass());
}

TEST_CASE("win predicate") {
  GnState s(1);
  CHECK(check_alice_win(s) == Verdict::kBobWins);
  s.bob_list.push_back({0, 1});  // identity
  s.a_func[0] = 1;
  CHECK(check_alice_win(s) == Verdict::kAliceWins);
  s.a_func[0] = 0;
  CHECK(check_alice_win(s) == Verdict::kBobWins);
}

TEST_CASE("greedy Bob covers (0,1) with the lexicographic completion") {
  TotalCondGame g(1);
  g.apply(Actor::kAlice, Move{{Challenge{0, 1}}, {}});
  GreedyBob bob;
  Rng rng(1);
  const Move m = bob.next_move(g, rng);
  REQUIRE(m.list.size() == 1);
  CHECK(m.list[0] == TotalFunction{1, 0});
}

TEST_CASE("random Bob with no budget always passes") {
  TotalCondGame g(2);
  g.apply(Actor::kAlice, Move{{Challenge{0, 1}}, {}});
  RandomBob bob(0);
  Rng rng(3);
  for (int i = 0; i < 50; ++i) CHECK(bob.next_move(g, rng).is_pass());
}

TEST_CASE("rules reject oversize lists and redefinitions") {
  TotalCondGame g(1);
  g.apply(Actor::kAlice, Move{{Challenge{0, 1}}, {}});
  CHECK_THROWS_AS(g.apply(Actor::kAlice, Move{{Challenge{0, 0}}, {}}), IllegalMove);
  CHECK_THROWS_AS(g.apply(Actor::kBob, Move{{}, {{0, 0}, {1, 1}}}), IllegalMove);
  CHECK_THROWS_AS(g.apply(Actor::kBob, Move{{}, {{0}}}), IllegalMove);
}

TEST_CASE("total functions enumerate lexicographically") {
  CHECK(nth_total_function(1, 0) == TotalFunction{0, 0});
  CHECK(nth_total_function(1, 1) == TotalFunction{0, 1});
  CHECK(nth_total_function(1, 2) == TotalFunction{1, 0});
  CHECK(nth_total_function(1, 3) == TotalFunction{1, 1});
}

TEST_CASE("exhaustive tree at n=1") {
  const TreeSearchResult r = search_game_tree(1, 8);
  CHECK(r.alice_wins_everywhere());
  CHECK(r.max_list_length <= 1);
  // Pass plus the 4 total functions on one bit.
  CHECK(r.max_arity == 5);
  CHECK_THROWS_AS(make_bob_adversary(BobKind::kExhaustiveNode, 2), UnsupportedSize);
}

TEST_CASE("encode and decode round-trip") {
  TotalCondGame g(2);
  const Move m{{}, {{1, 2, 3, 0}}};
  const Json j = g.encode(m);
  CHECK(j.dump() == R"({"list":[["01","10","11","00"]]})");
  CHECK(g.decode(Actor::kBob, j).list == m.list);
  CHECK(g.decode(Actor::kAlice, pass_payload()).is_pass());
}

}  // namespace
}  // namespace gamelab::totalcond
