#include <cmath>

#include "doctest.h"
#include "gamelab/epslev.h"

namespace gamelab::epslev {
namespace {

ELConfig one_edge(int k, double c) {
  ELConfig cfg;
  cfg.l_size = 1;
  cfg.r_size = 1;
  cfg.edges = {{0, 0}};
  cfg.p = {Rational(1)};
  cfg.k = k;
  cfg.delta = Rational(1, 2);
  cfg.c = c;
  cfg.l = 1;
  cfg.m_min = 8;
  return cfg;
}

TEST_CASE("compute_params arithmetic") {
  const BobParams a = compute_params(0, Rational(1, 2));
  CHECK(a.c == doctest::Approx(std::log(4.0)));
  CHECK(a.l == static_cast<int>(std::ceil(4 * std::log(4.0))));
  CHECK(a.l == 6);
  const BobParams b = compute_params(2, Rational(1, 4));
  CHECK(b.c == doctest::Approx(std::log(8.0)));
  CHECK(b.l == 34);
  // Close to 1, ln(2/delta) falls under ln 4 and the floor takes over.
  for (int k = 0; k <= 3; ++k) {
    const BobParams f = compute_params(k, Rational(99, 100));
    CHECK(f.c == doctest::Approx(std::log(4.0)));
    CHECK(f.l >= std::ldexp(std::log(4.0), k + 2));
  }
  CHECK_THROWS_AS(compute_params(1, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(compute_params(1, Rational(1)), std::invalid_argument);
}

TEST_CASE("circulant edges wrap around") {
  const auto e = circulant_edges(4, 2, 3);
  const std::vector<std::pair<int, int>> expected{{0, 0}, {1, 0}, {2, 0}, {1, 1}, {2, 1}, {3, 1}};
  CHECK(e == expected);
}

TEST_CASE("config from parameters") {
  ParamMap p;
  p.set("L", "4");
  p.set("R", "2");
  p.set("graph", "explicit");
  p.set("edges", "0-0,3-1");
  p.set("P", "1/4,3/4");
  p.set("k", "1");
  p.set("delta", "1/4");
  const ELConfig cfg = config_from_params(p);
  CHECK(cfg.edges.size() == 2);
  CHECK(cfg.p[1] == Rational(3, 4));
  CHECK(cfg.l == compute_params(1, Rational(1, 4)).l);
  p.set("P", "1/2,1/4");
  CHECK_THROWS_AS(config_from_params(p), std::invalid_argument);
}

TEST_CASE("an increment of 2^-k or more is marked for sure") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    EpsLevGame g(one_edge(1, compute_params(1, Rational(1, 2)).c));
    g.apply(Actor::kAlice, Move{Event{0, 1}, {}, {}});
    Rng rng(seed);
    const Move m = bob_step(g, rng);
    CHECK(m.mark_l == std::vector<int>{0});
  }
}

TEST_CASE("coin probability c 2^k eps = 1/2 against the draw") {
  // c = 1, k = 1, eps = 1/4.
  int marked = 0, unmarked = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    EpsLevGame g(one_edge(1, 1.0));
    g.apply(Actor::kAlice, Move{Event{0, 2}, {}, {}});
    Rng predict(seed);
    const double draw = predict.uniform01();
    Rng rng(seed);
    const Move m = bob_step(g, rng);
    const bool hit = !m.mark_l.empty();
    CHECK(hit == (draw < 0.5));
    (hit ? marked : unmarked) += 1;
  }
  CHECK(marked > 0);
  CHECK(unmarked > 0);
}

TEST_CASE("R vertex at threshold with an unmarked neighbor gets marked") {
  // Two raises of 1/4 with k = 1 reach 2^-1; find a seed where both coins fail.
  const double c = 1.0;
  bool found = false;
  for (std::uint64_t seed = 0; seed < 1000 && !found; ++seed) {
    Rng predict(seed);
    const double d1 = predict.uniform01();
    const double d2 = predict.uniform01();
    if (d1 < 0.5 || d2 < 0.5) continue;
    found = true;
    EpsLevGame g(one_edge(1, c));
    Rng rng(seed);
    g.apply(Actor::kAlice, Move{Event{0, 2}, {}, {}});
    Move m = bob_step(g, rng);
    CHECK(m.is_pass());
    g.apply(Actor::kBob, m);
    g.apply(Actor::kAlice, Move{Event{0, 2}, {}, {}});
    m = bob_step(g, rng);
    CHECK(m.mark_l.empty());
    CHECK(m.mark_r == std::vector<int>{0});
    g.apply(Actor::kBob, m);
    CHECK(check_bob_outcome(g).coverage);
    CHECK(g.state().coverage_lapses == 0);
  }
  CHECK(found);
}

TEST_CASE("outcome checks") {
  EpsLevGame quiet(one_edge(1, 2.0));
  CHECK(check_bob_outcome(quiet).verdict() == Verdict::kBobWins);

  ELConfig cfg = one_edge(1, 2.0);
  cfg.l_size = 3;
  cfg.l = 1;
  EpsLevGame g(cfg);
  g.apply(Actor::kAlice, Move{});
  g.apply(Actor::kBob, Move{std::nullopt, {1, 2}, {}});
  const Outcome o = check_bob_outcome(g);
  CHECK(o.coverage);
  CHECK_FALSE(o.l_within);
  CHECK(o.verdict() == Verdict::kAliceWins);
}

TEST_CASE("rules reject illegal moves") {
  EpsLevGame g(one_edge(1, 2.0));
  CHECK_THROWS_AS(g.apply(Actor::kAlice, Move{Event{0, 9}, {}, {}}), IllegalMove);
  CHECK_THROWS_AS(g.apply(Actor::kAlice, Move{Event{1, 1}, {}, {}}), IllegalMove);
  g.apply(Actor::kAlice, Move{Event{0, 0}, {}, {}});
  g.apply(Actor::kAlice, Move{Event{0, 0}, {}, {}});
  // Total weight 2 is the cap.
  CHECK_THROWS_AS(g.apply(Actor::kAlice, Move{Event{0, 8}, {}, {}}), IllegalMove);
  CHECK_THROWS_AS(g.apply(Actor::kBob, Move{std::nullopt, {0, 0}, {}}), IllegalMove);
}

TEST_CASE("coin oracle examples") {
  CHECK(no_success_probability(*chain_tree({Rational(1, 2), Rational(1, 2)}), Rational(1), Rational(1)) ==
        Rational(1, 4));
  CHECK(no_success_probability(*chain_tree({Rational(1)}), Rational(1), Rational(1)) == 0);
  CHECK(no_success_probability(*chain_tree({Rational(1, 2)}), Rational(1), Rational(0)) == 1);
  // The sum never reaches t.
  CHECK(no_success_probability(*chain_tree({Rational(1, 4)}), Rational(1), Rational(1)) == 0);
  CHECK_THROWS_AS(no_success_probability(*grid_tree({Rational(1, 8)}, 5), Rational(1), Rational(2), 3),
                  DepthExceeded);
}

TEST_CASE("coin oracle stays under e^-t on a grid") {
  const std::vector<Rational> grid{Rational(1, 8), Rational(1, 4), Rational(1, 2), Rational(1)};
  for (int depth = 1; depth <= 4; ++depth) {
    const auto tree = grid_tree(grid, depth);
    for (int i = 1; i <= 16; ++i) {
      const Rational t(i, 8);
      CHECK(to_double(no_success_probability(*tree, Rational(1), t)) < std::exp(-to_double(t)));
    }
  }
}

TEST_CASE("win-rate estimates") {
  ParamMap p;
  p.set("k", "1");
  p.set("delta", "1/4");
  const ELConfig cfg = config_from_params(p);
  const WinRate one = estimate_win_rate(cfg, AliceKind::kSpread, 1, 3);
  CHECK((one.win_rate == 0.0 || one.win_rate == 1.0));
  CHECK((one.l_breach_rate == 0.0 || one.l_breach_rate == 1.0));
  const WinRate many = estimate_win_rate(cfg, AliceKind::kConcentrated, 200, 5);
  CHECK(many.win_rate > 0.0);
  CHECK(many.coverage_lapses == 0);
  const WinRate again = estimate_win_rate(cfg, AliceKind::kConcentrated, 200, 5);
  CHECK(to_json(again).dump() == to_json(many).dump());
}

}  // namespace
}  // namespace gamelab::epslev
