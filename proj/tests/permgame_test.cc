#include <algorithm>
#include <set>

#include "doctest.h"
#include "gamelab/permgame.h"

namespace gamelab::permgame {
namespace {

StringMap identity(int n) {
  StringMap m;
  for (const auto& s : strings_up_to(n)) m[s] = s;
  return m;
}

TEST_CASE("strings in shortlex order") {
  CHECK(strings_up_to(0) == std::vector<std::string>{""});
  CHECK(strings_up_to(2) == std::vector<std::string>{"", "0", "1", "00", "01", "10", "11"});
}

TEST_CASE("identity programs merge to the identity") {
  for (int n = 0; n <= 3; ++n) CHECK(merge_total_programs(identity(n), identity(n), n) == identity(n));
}

TEST_CASE("a swap that both programs agree on is kept") {
  const StringMap swap{{"", ""}, {"0", "1"}, {"1", "0"}};
  CHECK(merge_total_programs(swap, swap, 1) == swap);
}

TEST_CASE("constant program: only (0,0) is matched, the rest is completed in order") {
  const StringMap p{{"", "0"}, {"0", "0"}, {"1", "0"}};
  const StringMap q{{"", "1"}, {"0", "0"}, {"1", "1"}};
  const StringMap pi = merge_total_programs(p, q, 1);
  CHECK(pi.at("0") == "0");
  CHECK(pi.at("") == "");
  CHECK(pi.at("1") == "1");
}

TEST_CASE("partial programs and long outputs are rejected") {
  StringMap p = identity(1);
  p.erase("1");
  CHECK_THROWS_AS(merge_total_programs(p, identity(1), 1), NotTotal);
  StringMap long_out = identity(1);
  long_out["0"] = "00";
  CHECK_THROWS_AS(merge_total_programs(long_out, identity(1), 1), std::invalid_argument);
}

TEST_CASE("empty board: Alice marks x0 and then y0") {
  MarkingState s(1, 3, 1);
  Move m = alice_strategy_step(s);
  REQUIRE(m.mark);
  CHECK(m.mark->side == Side::kX);
  CHECK(m.mark->vertex == 0);
  s.marked_x.push_back(0);
  m = alice_strategy_step(s);
  REQUIRE(m.mark);
  CHECK(m.mark->side == Side::kY);
  CHECK(m.mark->vertex == 0);
}

TEST_CASE("after (x0,y0) is covered Alice marks an x not joined to y0") {
  PermGame g(1, 3, 1);
  g.apply(Actor::kAlice, Move{Mark{Side::kX, 0}, {}});
  g.apply(Actor::kBob, Move{});
  g.apply(Actor::kAlice, Move{Mark{Side::kY, 0}, {}});
  Bijection b(8);
  for (std::uint32_t i = 0; i < 8; ++i) b[i] = i;
  g.apply(Actor::kBob, Move{std::nullopt, {b}});
  const Move m = alice_strategy_step(g.state());
  REQUIRE(m.mark);
  CHECK(m.mark->side == Side::kX);
  CHECK(m.mark->vertex != 0);
  CHECK_FALSE(g.state().covered(m.mark->vertex, 0));
}

TEST_CASE("Alice passes with an uncovered pair or a full mark budget") {
  MarkingState s(1, 3, 1);
  s.marked_x = {0};
  s.marked_y = {0};
  CHECK(alice_strategy_step(s).is_pass());
  s.marked_x = {0, 1};
  s.marked_y = {0, 1};
  Bijection id(8);
  for (std::uint32_t i = 0; i < 8; ++i) id[i] = i;
  Bijection swap = id;
  std::swap(swap[0], swap[1]);
  s.bijections = {id, swap};
  CHECK(alice_strategy_step(s).is_pass());
}

TEST_CASE("no marks means Bob wins") {
  MarkingState s(1, 3, 1);
  CHECK(check_bob_win(s) == Verdict::kBobWins);
}

TEST_CASE("rules") {
  CHECK_THROWS_AS(PermGame(1, 2, 1), std::invalid_argument);
  PermGame g(1, 3, 1);
  CHECK_THROWS_AS(g.apply(Actor::kAlice, Move{Mark{Side::kX, 8}, {}}), IllegalMove);
  Bijection not_bijective(8, 0);
  CHECK_THROWS_AS(g.apply(Actor::kBob, Move{std::nullopt, {not_bijective}}), IllegalMove);
  Bijection id(8);
  for (std::uint32_t i = 0; i < 8; ++i) id[i] = i;
  CHECK_THROWS_AS(g.apply(Actor::kBob, Move{std::nullopt, {id, id}}), IllegalMove);
}

GameTrace play(int k, BobKind kind, std::uint64_t seed, PermGame& g) {
  ReferenceAlice alice;
  auto bob = make_bob(kind);
  return run_game(g, alice, *bob, default_budget(k), seed);
}

TEST_CASE("k=1, n=3, one bijection: Alice wins") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    PermGame g(1, 3, 1);
    CHECK(play(1, BobKind::kGreedy, seed, g).verdict == Verdict::kAliceWins);
  }
}

TEST_CASE("budget 2^(2k): pair-covering Bob wins") {
  for (int k : {1, 2}) {
    PermGame g(k, 2 * k + 1, std::size_t{1} << (2 * k));
    CHECK(play(k, BobKind::kPairCovering, 3, g).verdict == Verdict::kBobWins);
  }
}

TEST_CASE("Alice's picks stay within a quarter of the opposite marks") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    PermGame g(2, 5, 4);
    play(2, BobKind::kGreedy, seed, g);
    for (const Pick& p : g.state().picks) CHECK(4 * p.connections <= p.opposite_marked);
  }
}

TEST_CASE("summary counts pairs") {
  PermGame g(1, 3, std::nullopt);
  play(1, BobKind::kGreedy, 9, g);
  const PermSummary s = summarize(g);
  CHECK(s.pairs_total == 4);
  CHECK(s.pairs_covered == 4);
  CHECK(s.distinct_bijections >= 2);
  CHECK(s.verdict == Verdict::kBobWins);
}

}  // namespace
}  // namespace gamelab::permgame
