#include "doctest.h"
#include "gamelab/infodist.h"

namespace gamelab::infodist {
namespace {

int free_count(const AgencyState& s) {
  int n = 0;
  for (const auto& [key, pool] : s.free_pool) n += static_cast<int>(pool.size());
  return n;
}

int index_entry(const AgencyState& s, Vertex v, int p, int q) {
  return s.indices[static_cast<std::size_t>(v)].at(s.config().parts(), p, q);
}

TEST_CASE("budget formulas") {
  const InfoConfig c{1, 1, 64, true};
  CHECK(c.alice_degree_limit() == 4);
  CHECK(c.mark_limit() == 16);
  CHECK(c.per_index_mark_limit() == 4);
  CHECK(c.bob_degree_limit() == 2);
  const InfoConfig d{2, 2, 8, true};
  CHECK(d.alice_degree_limit() == 2 * 3 * 4);
  CHECK(d.mark_limit() == 2 * (std::int64_t{1} << (2 + 1 + 2 * 2 * 3)));
  CHECK(d.per_index_mark_limit() == 16);
}

TEST_CASE("initial cliques") {
  const AgencyState a = init_agency(InfoConfig{1, 1, 4, true});
  CHECK(a.cliques.size() == 4);
  CHECK(a.board.alice_edges.size() == 4);
  CHECK(free_count(a) == 0);
  for (int m = 1; m <= 3; ++m) {
    const AgencyState b = init_agency(InfoConfig{m, 1, 3, true});
    CHECK(b.cliques.size() == 3);
    CHECK(b.board.alice_edges.size() == static_cast<std::size_t>(3 * (m + 1) * m / 2));
  }
}

TEST_CASE("a complaint inside a pair dissolves it and bumps both indices") {
  const int N = 4;
  AgencyState s = init_agency(InfoConfig{1, 2, N, true});
  AgencyOutput out;
  handle_bob_edge(s, {0, N}, out);
  CHECK(index_entry(s, 0, 0, 1) == 1);
  CHECK(index_entry(s, N, 0, 1) == 1);
  CHECK(index_entry(s, 0, 1, 0) == 0);
  CHECK(s.clique_of[N] == -1);
  // The only vertex of 0's new index is its old partner, so 0 is marked.
  CHECK(out.marks == std::vector<Vertex>{0});
  CHECK(s.board.marked[0]);
  CHECK(free_pools_symmetric(s));
}

TEST_CASE("an edge across cliques only waits") {
  const int N = 4;
  AgencyState s = init_agency(InfoConfig{1, 2, N, true});
  AgencyOutput out;
  handle_bob_edge(s, {1, N + 2}, out);
  CHECK(out.edges.empty());
  CHECK(out.marks.empty());
  CHECK(s.clique_of[1] == 1);
  CHECK(s.clique_of[N + 2] == 2);
  CHECK(index_entry(s, 1, 0, 1) == 0);
  CHECK(s.board.has_bob_edge(1, N + 2));
}

TEST_CASE("a free partner with the same index forms a new pair") {
  const int N = 4;
  AgencyState s = init_agency(InfoConfig{1, 2, N, true});
  AgencyOutput out;
  handle_bob_edge(s, {0, N}, out);
  handle_bob_edge(s, {1, N + 1}, out);
  // 1 and N now share index (0,1)=1 and never complained about each other.
  CHECK(s.clique_of[1] >= 0);
  CHECK(s.clique_of[1] == s.clique_of[N]);
  CHECK(s.board.has_alice_edge(1, N));
  CHECK(s.memberships[1] == 2);
  CHECK(check_alice_outcome(s) == Verdict::kAliceWins);
}

TEST_CASE("a waiting edge fires as soon as its ends share a clique") {
  const int N = 4;
  AgencyState s = init_agency(InfoConfig{1, 2, N, true});
  AgencyOutput out;
  handle_bob_edge(s, {1, N}, out);  // waits
  handle_bob_edge(s, {0, N}, out);  // 0 marked, N free at index 1
  handle_bob_edge(s, {1, N + 1}, out);
  // 1 would pair with N, but the waiting edge 1->N fires at once.
  CHECK(s.stats.delayed_fired == 1);
  CHECK(index_entry(s, 1, 0, 1) == 2);
  CHECK(index_entry(s, N, 0, 1) == 2);
  CHECK(s.clique_of[1] == -1);
  CHECK(s.board.marked[1]);
  CHECK(free_pools_symmetric(s));
}

TEST_CASE("the spoiling rule follows the toggle") {
  const int N = 4;
  Board strict(InfoConfig{1, 2, N, true});
  Board lenient(InfoConfig{1, 2, N, false});
  for (Board* b : {&strict, &lenient}) b->add_bob_edge(0, N);
  CHECK(strict.spoiled(0, N));
  CHECK(strict.spoiled(N, 0));
  CHECK_FALSE(lenient.spoiled(0, N));
  lenient.add_bob_edge(N, 0);
  CHECK(lenient.spoiled(0, N));
}

TEST_CASE("Bob's out-degree limit is enforced") {
  const int N = 4;
  Board b(InfoConfig{1, 1, N, true});
  b.add_bob_edge(0, N);
  CHECK_THROWS_AS(b.add_bob_edge(0, N + 1), IllegalMove);
  CHECK_THROWS_AS(b.add_bob_edge(0, 1), IllegalMove);
}

GameTrace play(const InfoConfig& cfg, BobKind kind, std::uint64_t seed, InfoSummary* summary = nullptr) {
  InfoDistGame g(cfg);
  CliqueAgency alice(cfg);
  auto bob = make_bob(kind, alice);
  GameTrace t = run_game(g, alice, *bob, default_budget(cfg), seed);
  CHECK(check_alice_outcome(alice.state()) == t.verdict);
  CHECK(referee_verdict(g.board()) == t.verdict);
  if (summary) *summary = summarize(g, alice);
  return t;
}

TEST_CASE("a silent Bob leaves the initial cliques standing") {
  const InfoConfig cfg{2, 1, 5, true};
  InfoDistGame g(cfg);
  CliqueAgency alice(cfg);
  struct Silent : Strategy<InfoDistGame> {
    Move next_move(const InfoDistGame&, Rng&) override { return {}; }
  } bob;
  const GameTrace t = run_game(g, alice, bob, default_budget(cfg), 1);
  CHECK(t.verdict == Verdict::kAliceWins);
  CHECK(g.board().marked_count == 0);
  CHECK(g.board().alice_edges.size() == 15);
}

TEST_CASE("greedy Bob spending its whole budget at m=1, n=1, N=64") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    InfoSummary s;
    CHECK(play(InfoConfig{1, 1, 64, true}, BobKind::kGreedyDissolver, seed, &s).verdict == Verdict::kAliceWins);
    CHECK(s.marked_count <= 16);
    CHECK(s.max_bob_out_degree == 1);
  }
}

TEST_CASE("all adversaries lose and replay agrees") {
  for (BobKind kind : {BobKind::kGreedyDissolver, BobKind::kRandom, BobKind::kComplaintFocuser}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const InfoConfig cfg{2, 2, 32, true};
      const GameTrace t = play(cfg, kind, seed);
      CHECK(t.verdict == Verdict::kAliceWins);
      InfoDistGame fresh(cfg);
      CHECK(replay_trace(fresh, t) == t.verdict);
    }
  }
}

}  // namespace
}  // namespace gamelab::infodist
