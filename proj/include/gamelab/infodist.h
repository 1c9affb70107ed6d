#pragma once

// (m+1)-partite clique game. Alice draws undirected edges between parts and
// may mark vertices of part 0; Bob draws directed edges. Alice wins if every
// unmarked part-0 vertex sits in a clique of Alice edges, one vertex per
// part, with no Bob edge inside. Alice's strategy runs a clique agency that
// re-forms cliques only among vertices with equal experience indices.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gamelab/engine.h"

namespace gamelab::infodist {

using Vertex = int;
// Directed Bob edge or undirected Alice edge, as (from, to).
using Edge = std::pair<Vertex, Vertex>;

struct InfoConfig {
  int m = 1;
  int n = 1;
  // Vertices per part.
  int N = 64;
  // When true a Bob edge in one direction already spoils a clique pair;
  // when false both directions are needed.
  bool one_way_spoils = true;

  void validate() const;
  int parts() const { return m + 1; }
  int vertices() const { return parts() * N; }
  int part_of(Vertex v) const { return v / N; }
  // Bob's out-degree per (vertex, part) must stay below this.
  std::int64_t bob_degree_limit() const { return std::int64_t{1} << n; }
  // m(m+1) 2^n
  std::int64_t alice_degree_limit() const;
  // m 2^(n+1+nm(m+1))
  std::int64_t mark_limit() const;
  // 2m 2^n
  std::int64_t per_index_mark_limit() const;
};

// Complaint counts I[p][q] for ordered part pairs, flattened row-major.
struct ExperienceIndex {
  std::vector<int> counts;

  ExperienceIndex() = default;
  explicit ExperienceIndex(int parts) : counts(static_cast<std::size_t>(parts * parts), 0) {}
  int at(int parts, int p, int q) const { return counts[static_cast<std::size_t>(p * parts + q)]; }
  void bump(int parts, int p, int q) { ++counts[static_cast<std::size_t>(p * parts + q)]; }
  auto operator<=>(const ExperienceIndex&) const = default;
};

std::uint64_t pair_key(Vertex a, Vertex b);
std::uint64_t directed_key(Vertex from, Vertex to);

// Edge sets and degree counters shared by the referee and the agency.
struct Board {
  InfoConfig config;
  std::unordered_set<std::uint64_t> alice_edges;
  // Directed edge -> order in which Bob drew it.
  std::unordered_map<std::uint64_t, std::uint64_t> bob_edges;
  std::vector<Edge> bob_log;
  // [vertex * parts + part]
  std::vector<int> alice_degree;
  std::vector<int> bob_out_degree;
  std::vector<bool> marked;
  int marked_count = 0;
  // Alice neighbors of each vertex.
  std::vector<std::vector<Vertex>> alice_adj;

  explicit Board(const InfoConfig& cfg);
  bool has_alice_edge(Vertex a, Vertex b) const { return alice_edges.contains(pair_key(a, b)); }
  bool has_bob_edge(Vertex from, Vertex to) const { return bob_edges.contains(directed_key(from, to)); }
  // Whether Bob edges between a and b spoil them as clique partners.
  bool spoiled(Vertex a, Vertex b) const;
  int alice_deg(Vertex v, int part) const;
  int bob_deg(Vertex v, int part) const;
  void add_alice_edge(Vertex a, Vertex b);
  void add_bob_edge(Vertex from, Vertex to);
};

struct Move {
  std::vector<Edge> edges;      // Alice (undirected) or Bob (directed)
  std::vector<Vertex> marks;    // Alice
  bool is_pass() const { return edges.empty() && marks.empty(); }
};

class InfoDistGame {
 public:
  using Move = infodist::Move;

  explicit InfoDistGame(const InfoConfig& config);

  std::string game_id() const { return "infodist"; }
  Json params() const;
  Actor first_mover() const { return Actor::kAlice; }
  Actor adversary() const { return Actor::kBob; }
  void apply(Actor actor, const Move& move);
  Verdict verdict() const;
  Json state_json() const;
  Json encode(const Move& move) const;
  Move decode(Actor actor, const Json& payload) const;

  const InfoConfig& config() const { return board_.config; }
  const Board& board() const { return board_; }

 private:
  Board board_;
};

// Referee check: every unmarked part-0 vertex has a clique of Alice edges
// with no spoiling Bob edge, and every budget holds.
Verdict referee_verdict(const Board& board);

struct Clique {
  std::vector<Vertex> members;  // one per part, in part order
  bool active = true;
};

struct AgencyStats {
  int max_marked_per_index = 0;
  // Cliques joined by the busiest vertex.
  int max_memberships = 0;
  int max_index_entry = 0;
  std::uint64_t complaints = 0;
  std::uint64_t delayed_fired = 0;
};

// Alice's bookkeeping: her own copy of the board plus cliques, indices and
// free pools. Part-0 vertices outside every clique are exactly the marked
// ones.
struct AgencyState {
  Board board;
  std::vector<ExperienceIndex> indices;
  std::vector<int> clique_of;
  std::vector<Clique> cliques;
  std::vector<int> memberships;
  // Unordered pairs whose Bob edge already fired as a complaint.
  std::unordered_set<std::uint64_t> fired;
  // (part, index) -> free vertices of that part with that index.
  std::map<std::pair<int, ExperienceIndex>, std::set<Vertex>> free_pool;
  std::map<ExperienceIndex, int> marked_per_index;
  AgencyStats stats;

  explicit AgencyState(const InfoConfig& config);
  const InfoConfig& config() const { return board.config; }
};

// Vertex i of every part forms clique i; all indices start at zero. The
// clique edges are recorded in the agency's board.
AgencyState init_agency(const InfoConfig& config);

// Output produced while the agency reacts to Bob: new Alice edges and marks.
struct AgencyOutput {
  std::vector<Edge> edges;
  std::vector<Vertex> marks;
};

// Records Bob's edge. Inside an active clique it is a complaint: every
// member bumps index entry (part(u), part(v)), the clique dissolves, the
// other members go back to the free pool and the part-0 member looks for a
// new clique. Elsewhere it waits and fires once a clique holds both ends.
// Throws IllegalMove if Bob's out-degree budget is broken.
void handle_bob_edge(AgencyState& state, Edge edge, AgencyOutput& out);

enum class FormResult { kFormed, kMarked };

// Picks, for parts 1..m in order, the least free vertex with x0's index and
// no fired complaint with any vertex picked so far. On success the clique
// and its edges are added; a waiting Bob edge inside it then fires. On
// failure x0 is marked and everything else stays free.
FormResult try_form_clique(AgencyState& state, Vertex x0, AgencyOutput& out);

// Agency-side outcome: every unmarked part-0 vertex in an active clique that
// is pairwise Alice-joined and unspoiled by Bob, and all budgets hold.
Verdict check_alice_outcome(const AgencyState& state);

// For every index value, all parts hold equally many vertices outside
// cliques (marked part-0 vertices count as outside).
bool free_pools_symmetric(const AgencyState& state);

class CliqueAgency : public Strategy<InfoDistGame> {
 public:
  explicit CliqueAgency(const InfoConfig& config) : state_(init_agency(config)) {}
  Move next_move(const InfoDistGame& game, Rng& rng) override;
  const AgencyState& state() const { return state_; }

 private:
  AgencyState state_;
  bool announced_ = false;
  std::size_t bob_cursor_ = 0;
};

enum class BobKind { kGreedyDissolver, kRandom, kComplaintFocuser };
BobKind bob_kind_from_string(std::string_view name);
std::string_view to_string(BobKind kind);

// Complains inside every active clique it still can, one edge per clique
// per move. Watches the agency, as an adversary that knows Alice's
// strategy would.
class GreedyDissolverBob : public Strategy<InfoDistGame> {
 public:
  explicit GreedyDissolverBob(const CliqueAgency& agency) : agency_(agency) {}
  Move next_move(const InfoDistGame& game, Rng& rng) override;

 private:
  const CliqueAgency& agency_;
};

// Draws random legal edges, half of them inside active cliques, for a
// random number of moves up to `max_active_moves`, then passes.
class RandomBob : public Strategy<InfoDistGame> {
 public:
  RandomBob(const CliqueAgency& agency, int max_active_moves)
      : agency_(agency), max_active_moves_(max_active_moves) {}
  Move next_move(const InfoDistGame& game, Rng& rng) override;

 private:
  const CliqueAgency& agency_;
  int max_active_moves_;
  int active_moves_ = -1;
  int played_ = 0;
};

// Drives cliques of one index class: dissolves them with part-0 -> part-1
// complaints and plants waiting edges from free part-1 vertices of the
// class they land in, so re-formed cliques fire at once.
class ComplaintFocuserBob : public Strategy<InfoDistGame> {
 public:
  explicit ComplaintFocuserBob(const CliqueAgency& agency) : agency_(agency) {}
  Move next_move(const InfoDistGame& game, Rng& rng) override;

 private:
  const CliqueAgency& agency_;
};

std::unique_ptr<Strategy<InfoDistGame>> make_bob(BobKind kind, const CliqueAgency& agency);

Budget default_budget(const InfoConfig& config);

struct InfoSummary {
  int marked_count = 0;
  int max_marked_per_index = 0;
  int max_alice_degree = 0;
  int max_bob_out_degree = 0;
  int max_memberships = 0;
  Verdict verdict = Verdict::kUndecided;
};
InfoSummary summarize(const InfoDistGame& game, const CliqueAgency& agency);
Json to_json(const InfoSummary& summary);

}  // namespace gamelab::infodist
