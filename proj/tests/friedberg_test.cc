#include <set>

#include "doctest.h"
#include "gamelab/friedberg.h"

namespace gamelab::friedberg {
namespace {

FriedbergConfig small_config(Mode mode, int rows_a = 4, int alphabet = 2) {
  FriedbergConfig c;
  c.rows_a = rows_a;
  c.cols = 3;
  c.alphabet = alphabet;
  c.mode = mode;
  c.max_rounds = 61;
  return c;
}

TEST_CASE("odd rows count filled cells") {
  PartialTable t(3, 4, 2);
  CHECK_FALSE(is_odd_row(t, 0));
  t.set(0, 0, 1);
  t.set(0, 2, 0);
  CHECK_FALSE(is_odd_row(t, 0));
  t.set(0, 3, 1);
  CHECK(is_odd_row(t, 0));
  CHECK_THROWS(t.set(0, 0, 0));
  CHECK_THROWS(t.set(1, 0, 2));
}

TEST_CASE("Bob's view holds back a lone new cell") {
  PartialTable a(2, 3, 2);
  PartialTable view(2, 3, 2);
  view = filter_alice_view(a, view);
  CHECK(view == PartialTable(2, 3, 2));

  a.set(0, 1, 1);
  view = filter_alice_view(a, view);
  CHECK(view.row_count(0) == 0);

  a.set(0, 2, 0);
  view = filter_alice_view(a, view);
  CHECK(view.row_count(0) == 2);
  CHECK(view.at(0, 1) == 1);
  CHECK(view.at(0, 2) == 0);

  const PartialTable again = filter_alice_view(a, view);
  CHECK(again == view);
}

TEST_CASE("kill condition with an empty prefix matches any earlier row") {
  PartialTable view(2, 3, 2);
  CHECK_FALSE(kill_condition(view, 0, 0));
  CHECK(kill_condition(view, 1, 0));
  view.set(0, 0, 1);
  view.set(0, 1, 1);
  view.set(1, 0, 0);
  view.set(1, 1, 1);
  CHECK_FALSE(kill_condition(view, 1, 1));
}

TEST_CASE("odd grid rows in canonical order") {
  CHECK(odd_row_count(3, 2) == 14);
  CHECK(nth_odd_row(3, 2, 0) == Row{0, kEmpty, kEmpty});
  CHECK(nth_odd_row(3, 2, 1) == Row{1, kEmpty, kEmpty});
  CHECK(nth_odd_row(3, 2, 2) == Row{kEmpty, 0, kEmpty});
  CHECK(nth_odd_row(3, 2, 6) == Row{0, 0, 0});
  CHECK(nth_odd_row(3, 2, 13) == Row{1, 1, 1});
  std::set<Row> all;
  for (std::uint64_t i = 0; i < 14; ++i) {
    const Row r = nth_odd_row(3, 2, i);
    CHECK(is_odd(r));
    all.insert(r);
  }
  CHECK(all.size() == 14);
}

TEST_CASE("odd extensions avoid rows already present") {
  RowSet present;
  present.insert(Row{0, 1, 0, kEmpty});
  const Row ext = fresh_odd_extension(Row{0, 1, kEmpty, kEmpty}, 2, present);
  CHECK(is_odd(ext));
  CHECK(ext[0] == 0);
  CHECK(ext[1] == 1);
  CHECK_FALSE(present.contains(ext));
  RowSet full;
  full.insert(Row{0, 1, 0});
  full.insert(Row{0, 1, 1});
  CHECK_THROWS_AS(fresh_odd_extension(Row{0, 1, kEmpty}, 2, full), OutOfColumns);
}

TEST_CASE("a fresh assistant copies its A row") {
  FriedbergGame g(small_config(Mode::kKilling, 1, 8));
  g.apply(Actor::kAlice, Move{{{0, 0, 5}, {0, 1, 7}}, {}, {}, {}});
  const Move m = bob_strategy_step(g.state());
  REQUIRE(m.reserves.size() == 1);
  const int row = m.reserves[0].second;
  CHECK(m.kills.empty());
  std::vector<Cell> expected{{row, 0, 5}, {row, 1, 7}};
  CHECK(m.writes == expected);
  g.apply(Actor::kBob, m);
  CHECK(g.state().b_table.row(row) == Row{5, 7, kEmpty});
}

TEST_CASE("assistant 1 kills at once on the empty prefix") {
  FriedbergGame g(small_config(Mode::kKilling, 2));
  g.apply(Actor::kAlice, Move{{{0, 0, 1}, {0, 1, 1}, {1, 0, 0}, {1, 1, 0}}, {}, {}, {}});
  g.apply(Actor::kBob, bob_strategy_step(g.state()));
  g.apply(Actor::kAlice, Move{});
  const Move m = bob_strategy_step(g.state());
  REQUIRE(m.kills.size() == 1);
  g.apply(Actor::kBob, m);
  CHECK(g.state().assistants[1].kill_counter == 1);
  CHECK(g.state().killed_rows[static_cast<std::size_t>(m.kills[0])]);
}

TEST_CASE("empty A in odd-rows mode: only the extra assistant writes") {
  FriedbergGame g(small_config(Mode::kOddRows));
  g.apply(Actor::kAlice, Move{});
  const Move m = bob_strategy_step(g.state());
  REQUIRE_FALSE(m.writes.empty());
  int extra_row = -1;
  for (const auto& [a, row] : m.reserves) {
    if (a == FriedbergState::kExtraAssistant) extra_row = row;
  }
  REQUIRE(extra_row >= 0);
  for (const Cell& c : m.writes) CHECK(c.row == extra_row);
}

TEST_CASE("win check on hand-built tables") {
  FriedbergState s(small_config(Mode::kKilling, 1));
  s.a_table.set(0, 0, 1);
  s.a_table.set(0, 1, 0);
  s.a_view = s.a_table;
  s.b_table.set(0, 0, 1);
  s.b_table.set(0, 1, 0);
  s.assistants[0].reserved_row = 0;
  s.row_owner[0] = 0;
  CHECK(check_win(s) == Verdict::kBobWins);

}

TEST_CASE("two identical valid rows in B lose for Bob") {
  FriedbergState s(small_config(Mode::kKilling, 2));
  for (PartialTable* t : {&s.a_table, &s.a_view}) {
    t->set(0, 0, 1);
    t->set(0, 1, 0);
    t->set(1, 0, 0);
    t->set(1, 1, 1);
  }
  for (int r : {0, 1}) {
    s.b_table.set(r, 0, 1);
    s.b_table.set(r, 1, 0);
    s.assistants[static_cast<std::size_t>(r)].reserved_row = r;
    s.row_owner[static_cast<std::size_t>(r)] = r;
  }
  // Rows 0 and 1 of A differ in column 0, so assistant 1's row stays valid.
  s.assistants[1].kill_counter = 1;
  CHECK(check_win(s) == Verdict::kAliceWins);
}

TEST_CASE("reference Bob beats random quiescing Alices") {
  for (Mode mode : {Mode::kKilling, Mode::kOddRows}) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const FriedbergConfig cfg = small_config(mode);
      FriedbergGame g(cfg);
      RandomQuiescingAlice alice(20);
      ReferenceBob bob;
      const GameTrace t = run_game(g, alice, bob, Budget{cfg.max_rounds, 40}, seed);
      CHECK(t.verdict == Verdict::kBobWins);
      CHECK(check_quiescence(t, 40));
      FriedbergGame fresh(cfg);
      CHECK(replay_trace(fresh, t) == t.verdict);
      CHECK(fresh.state().b_table == g.state().b_table);
    }
  }
}

TEST_CASE("Bob may not write outside his reserved rows") {
  FriedbergGame g(small_config(Mode::kKilling));
  g.apply(Actor::kAlice, Move{});
  CHECK_THROWS_AS(g.apply(Actor::kBob, Move{{}, {{0, 0, 1}}, {}, {}}), IllegalMove);
}

}  // namespace
}  // namespace gamelab::friedberg
