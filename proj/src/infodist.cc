#include "gamelab/infodist.h"

#include <algorithm>

namespace gamelab::infodist {
namespace {

Json edges_json(const std::vector<Edge>& edges) {
  Json j = Json::array();
  for (const auto& [a, b] : edges) j.push_back(Json::array({a, b}));
  return j;
}

std::vector<Edge> edges_from_json(const Json& j) {
  std::vector<Edge> edges;
  for (const Json& e : j) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
  return edges;
}

void update_max(int& slot, int value) { slot = std::max(slot, value); }

// Legal-looking edge between two parts, checked against the board plus the
// edges already queued in this move.
class PendingBobEdges {
 public:
  explicit PendingBobEdges(const Board& board) : board_(board) {}

  bool can_add(Vertex from, Vertex to) const {
    const InfoConfig& c = board_.config;
    if (from == to || c.part_of(from) == c.part_of(to)) return false;
    if (board_.has_bob_edge(from, to) || keys_.contains(directed_key(from, to))) return false;
    const auto slot = static_cast<std::size_t>(from * c.parts() + c.part_of(to));
    auto it = extra_.find(slot);
    const int extra = it == extra_.end() ? 0 : it->second;
    return board_.bob_deg(from, c.part_of(to)) + extra + 1 < c.bob_degree_limit();
  }

  bool add(Vertex from, Vertex to) {
    if (!can_add(from, to)) return false;
    const InfoConfig& c = board_.config;
    keys_.insert(directed_key(from, to));
    ++extra_[static_cast<std::size_t>(from * c.parts() + c.part_of(to))];
    edges_.emplace_back(from, to);
    return true;
  }

  std::vector<Edge> take() { return std::move(edges_); }

 private:
  const Board& board_;
  std::unordered_set<std::uint64_t> keys_;
  std::unordered_map<std::size_t, int> extra_;
  std::vector<Edge> edges_;
};

// First ordered member pair of a clique that Bob may still join, trying
// `preferred` first when given.
std::optional<Edge> dissolvable_pair(const Clique& clique, const PendingBobEdges& pending,
                                     std::optional<Edge> preferred_parts = std::nullopt) {
  if (preferred_parts) {
    const Vertex a = clique.members[static_cast<std::size_t>(preferred_parts->first)];
    const Vertex b = clique.members[static_cast<std::size_t>(preferred_parts->second)];
    if (pending.can_add(a, b)) return Edge{a, b};
  }
  for (Vertex a : clique.members) {
    for (Vertex b : clique.members) {
      if (a != b && pending.can_add(a, b)) return Edge{a, b};
    }
  }
  return std::nullopt;
}

std::vector<int> active_cliques(const AgencyState& state) {
  std::vector<int> ids;
  for (std::size_t i = 0; i < state.cliques.size(); ++i) {
    if (state.cliques[i].active) ids.push_back(static_cast<int>(i));
  }
  return ids;
}

void complain(AgencyState& state, Edge edge, AgencyOutput& out);

}  // namespace

void InfoConfig::validate() const {
  if (m < 1 || n < 1 || N < 1) throw std::invalid_argument("m, n and N must be positive");
  if (n * m * (m + 1) + n + 1 > 60) throw std::invalid_argument("m and n too large");
  if (static_cast<std::int64_t>(parts()) * N > (std::int64_t{1} << 30)) {
    throw std::invalid_argument("too many vertices");
  }
}

std::int64_t InfoConfig::alice_degree_limit() const {
  return static_cast<std::int64_t>(m) * (m + 1) * (std::int64_t{1} << n);
}

std::int64_t InfoConfig::mark_limit() const {
  return static_cast<std::int64_t>(m) << (n + 1 + n * m * (m + 1));
}

std::int64_t InfoConfig::per_index_mark_limit() const {
  return static_cast<std::int64_t>(2 * m) << n;
}

std::uint64_t pair_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return directed_key(a, b);
}

std::uint64_t directed_key(Vertex from, Vertex to) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(from)) << 32) |
         static_cast<std::uint32_t>(to);
}

Board::Board(const InfoConfig& cfg) : config(cfg) {
  config.validate();
  const auto cells = static_cast<std::size_t>(config.vertices() * config.parts());
  alice_degree.assign(cells, 0);
  bob_out_degree.assign(cells, 0);
  marked.assign(static_cast<std::size_t>(config.N), false);
  alice_adj.resize(static_cast<std::size_t>(config.vertices()));
}

bool Board::spoiled(Vertex a, Vertex b) const {
  return config.one_way_spoils ? has_bob_edge(a, b) || has_bob_edge(b, a)
                               : has_bob_edge(a, b) && has_bob_edge(b, a);
}

int Board::alice_deg(Vertex v, int part) const {
  return alice_degree[static_cast<std::size_t>(v * config.parts() + part)];
}

int Board::bob_deg(Vertex v, int part) const {
  return bob_out_degree[static_cast<std::size_t>(v * config.parts() + part)];
}

void Board::add_alice_edge(Vertex a, Vertex b) {
  if (!alice_edges.insert(pair_key(a, b)).second) return;
  ++alice_degree[static_cast<std::size_t>(a * config.parts() + config.part_of(b))];
  ++alice_degree[static_cast<std::size_t>(b * config.parts() + config.part_of(a))];
  alice_adj[static_cast<std::size_t>(a)].push_back(b);
  alice_adj[static_cast<std::size_t>(b)].push_back(a);
}

void Board::add_bob_edge(Vertex from, Vertex to) {
  if (from < 0 || to < 0 || from >= config.vertices() || to >= config.vertices()) {
    throw IllegalMove(Actor::kBob, "edge endpoint out of range");
  }
  if (config.part_of(from) == config.part_of(to)) throw IllegalMove(Actor::kBob, "edge inside one part");
  if (has_bob_edge(from, to)) throw IllegalMove(Actor::kBob, "edge already drawn");
  int& deg = bob_out_degree[static_cast<std::size_t>(from * config.parts() + config.part_of(to))];
  if (deg + 1 >= config.bob_degree_limit()) {
    throw IllegalMove(Actor::kBob, "out-degree of " + std::to_string(from) + " would reach 2^n");
  }
  ++deg;
  bob_edges.emplace(directed_key(from, to), bob_log.size());
  bob_log.emplace_back(from, to);
}

InfoDistGame::InfoDistGame(const InfoConfig& config) : board_(config) {}

Json InfoDistGame::params() const {
  const InfoConfig& c = board_.config;
  return Json{{"m", c.m}, {"n", c.n}, {"N", c.N}, {"one_way_spoils", c.one_way_spoils}};
}

void InfoDistGame::apply(Actor actor, const Move& move) {
  const InfoConfig& c = board_.config;
  if (actor == Actor::kBob) {
    if (!move.marks.empty()) throw IllegalMove(actor, "Bob may not mark vertices");
    for (const auto& [from, to] : move.edges) board_.add_bob_edge(from, to);
    return;
  }
  for (const auto& [a, b] : move.edges) {
    if (a < 0 || b < 0 || a >= c.vertices() || b >= c.vertices()) throw IllegalMove(actor, "edge endpoint out of range");
    if (c.part_of(a) == c.part_of(b)) throw IllegalMove(actor, "edge inside one part");
    if (board_.has_alice_edge(a, b)) throw IllegalMove(actor, "edge already drawn");
    board_.add_alice_edge(a, b);
    if (board_.alice_deg(a, c.part_of(b)) > c.alice_degree_limit() ||
        board_.alice_deg(b, c.part_of(a)) > c.alice_degree_limit()) {
      throw IllegalMove(actor, "Alice degree limit exceeded");
    }
  }
  for (Vertex v : move.marks) {
    if (v < 0 || v >= c.N) throw IllegalMove(actor, "only part-0 vertices can be marked");
    if (board_.marked[static_cast<std::size_t>(v)]) throw IllegalMove(actor, "vertex already marked");
    if (board_.marked_count + 1 > c.mark_limit()) throw IllegalMove(actor, "mark limit exceeded");
    board_.marked[static_cast<std::size_t>(v)] = true;
    ++board_.marked_count;
  }
}

Verdict InfoDistGame::verdict() const { return referee_verdict(board_); }

Json InfoDistGame::state_json() const {
  Json marked = Json::array();
  for (int v = 0; v < board_.config.N; ++v) {
    if (board_.marked[static_cast<std::size_t>(v)]) marked.push_back(v);
  }
  return Json{{"alice_edges", board_.alice_edges.size()},
              {"bob_edges", edges_json(board_.bob_log)},
              {"marked", std::move(marked)}};
}

Json InfoDistGame::encode(const Move& move) const {
  if (move.is_pass()) return pass_payload();
  Json j{{"edges", edges_json(move.edges)}};
  if (!move.marks.empty()) j["marks"] = move.marks;
  return j;
}

Move InfoDistGame::decode(Actor actor, const Json& payload) const {
  Move move;
  if (is_pass_payload(payload)) return move;
  move.edges = edges_from_json(payload.at("edges"));
  if (actor == Actor::kAlice && payload.contains("marks")) move.marks = payload.at("marks").get<std::vector<Vertex>>();
  return move;
}

namespace {

bool budgets_hold(const Board& board) {
  const InfoConfig& c = board.config;
  if (board.marked_count > c.mark_limit()) return false;
  for (int d : board.alice_degree) {
    if (d > c.alice_degree_limit()) return false;
  }
  for (int d : board.bob_out_degree) {
    if (d >= c.bob_degree_limit()) return false;
  }
  return true;
}

bool extend_clique(const Board& board, std::vector<Vertex>& picked) {
  const InfoConfig& c = board.config;
  const int part = static_cast<int>(picked.size());
  if (part == c.parts()) return true;
  for (Vertex w : board.alice_adj[static_cast<std::size_t>(picked.front())]) {
    if (c.part_of(w) != part) continue;
    bool ok = true;
    for (Vertex s : picked) {
      if (!board.has_alice_edge(s, w) || board.spoiled(s, w)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    picked.push_back(w);
    if (extend_clique(board, picked)) return true;
    picked.pop_back();
  }
  return false;
}

}  // namespace

Verdict referee_verdict(const Board& board) {
  if (!budgets_hold(board)) return Verdict::kBobWins;
  for (Vertex x0 = 0; x0 < board.config.N; ++x0) {
    if (board.marked[static_cast<std::size_t>(x0)]) continue;
    std::vector<Vertex> picked{x0};
    if (!extend_clique(board, picked)) return Verdict::kBobWins;
  }
  return Verdict::kAliceWins;
}

AgencyState::AgencyState(const InfoConfig& config)
    : board(config),
      indices(static_cast<std::size_t>(board.config.vertices()), ExperienceIndex(board.config.parts())),
      clique_of(static_cast<std::size_t>(board.config.vertices()), -1),
      memberships(static_cast<std::size_t>(board.config.vertices()), 0) {}

AgencyState init_agency(const InfoConfig& config) {
  AgencyState state(config);
  const InfoConfig& c = state.config();
  for (int i = 0; i < c.N; ++i) {
    Clique clique;
    for (int p = 0; p < c.parts(); ++p) clique.members.push_back(p * c.N + i);
    for (std::size_t a = 0; a < clique.members.size(); ++a) {
      const Vertex v = clique.members[a];
      state.clique_of[static_cast<std::size_t>(v)] = i;
      state.memberships[static_cast<std::size_t>(v)] = 1;
      for (std::size_t b = a + 1; b < clique.members.size(); ++b) state.board.add_alice_edge(v, clique.members[b]);
    }
    state.cliques.push_back(std::move(clique));
  }
  state.stats.max_memberships = 1;
  return state;
}

namespace {

void complain(AgencyState& state, Edge edge, AgencyOutput& out) {
  const InfoConfig& c = state.config();
  const auto [u, v] = edge;
  const int id = state.clique_of[static_cast<std::size_t>(u)];
  Clique& clique = state.cliques[static_cast<std::size_t>(id)];
  state.fired.insert(pair_key(u, v));
  ++state.stats.complaints;
  const int pu = c.part_of(u);
  const int pv = c.part_of(v);
  for (Vertex w : clique.members) {
    ExperienceIndex& idx = state.indices[static_cast<std::size_t>(w)];
    idx.bump(c.parts(), pu, pv);
    update_max(state.stats.max_index_entry, idx.at(c.parts(), pu, pv));
    state.clique_of[static_cast<std::size_t>(w)] = -1;
  }
  clique.active = false;
  const std::vector<Vertex> members = clique.members;
  for (std::size_t p = 1; p < members.size(); ++p) {
    const Vertex w = members[p];
    state.free_pool[{static_cast<int>(p), state.indices[static_cast<std::size_t>(w)]}].insert(w);
  }
  try_form_clique(state, members.front(), out);
}

}  // namespace

void handle_bob_edge(AgencyState& state, Edge edge, AgencyOutput& out) {
  state.board.add_bob_edge(edge.first, edge.second);
  const int cu = state.clique_of[static_cast<std::size_t>(edge.first)];
  if (cu >= 0 && cu == state.clique_of[static_cast<std::size_t>(edge.second)]) complain(state, edge, out);
}

FormResult try_form_clique(AgencyState& state, Vertex x0, AgencyOutput& out) {
  const InfoConfig& c = state.config();
  const ExperienceIndex idx = state.indices[static_cast<std::size_t>(x0)];
  std::vector<Vertex> picked{x0};
  for (int p = 1; p < c.parts(); ++p) {
    std::optional<Vertex> choice;
    auto pool = state.free_pool.find({p, idx});
    if (pool != state.free_pool.end()) {
      for (Vertex w : pool->second) {
        const bool clean = std::none_of(picked.begin(), picked.end(),
                                        [&](Vertex s) { return state.fired.contains(pair_key(s, w)); });
        if (clean) {
          choice = w;
          break;
        }
      }
    }
    if (!choice) {
      state.board.marked[static_cast<std::size_t>(x0)] = true;
      ++state.board.marked_count;
      update_max(state.stats.max_marked_per_index, ++state.marked_per_index[idx]);
      out.marks.push_back(x0);
      return FormResult::kMarked;
    }
    picked.push_back(*choice);
  }

  const int id = static_cast<int>(state.cliques.size());
  for (std::size_t p = 0; p < picked.size(); ++p) {
    const Vertex w = picked[p];
    if (p > 0) state.free_pool[{static_cast<int>(p), idx}].erase(w);
    state.clique_of[static_cast<std::size_t>(w)] = id;
    update_max(state.stats.max_memberships, ++state.memberships[static_cast<std::size_t>(w)]);
    for (std::size_t q = p + 1; q < picked.size(); ++q) {
      if (!state.board.has_alice_edge(w, picked[q])) {
        state.board.add_alice_edge(w, picked[q]);
        out.edges.emplace_back(w, picked[q]);
      }
    }
  }
  state.cliques.push_back(Clique{picked, true});

  std::optional<Edge> waiting;
  std::uint64_t earliest = 0;
  for (Vertex a : picked) {
    for (Vertex b : picked) {
      if (a == b) continue;
      auto it = state.board.bob_edges.find(directed_key(a, b));
      if (it == state.board.bob_edges.end() || state.fired.contains(pair_key(a, b))) continue;
      if (!waiting || it->second < earliest) {
        waiting = Edge{a, b};
        earliest = it->second;
      }
    }
  }
  if (waiting) {
    ++state.stats.delayed_fired;
    complain(state, *waiting, out);
  }
  return FormResult::kFormed;
}

Verdict check_alice_outcome(const AgencyState& state) {
  const Board& board = state.board;
  if (!budgets_hold(board)) return Verdict::kBobWins;
  for (Vertex x0 = 0; x0 < state.config().N; ++x0) {
    if (board.marked[static_cast<std::size_t>(x0)]) continue;
    const int id = state.clique_of[static_cast<std::size_t>(x0)];
    if (id < 0) return Verdict::kBobWins;
    const Clique& clique = state.cliques[static_cast<std::size_t>(id)];
    for (std::size_t a = 0; a < clique.members.size(); ++a) {
      for (std::size_t b = a + 1; b < clique.members.size(); ++b) {
        const Vertex x = clique.members[a];
        const Vertex y = clique.members[b];
        if (!board.has_alice_edge(x, y) || board.spoiled(x, y)) return Verdict::kBobWins;
      }
    }
  }
  return Verdict::kAliceWins;
}

bool free_pools_symmetric(const AgencyState& state) {
  const InfoConfig& c = state.config();
  std::map<ExperienceIndex, std::vector<int>> outside;
  for (Vertex v = 0; v < c.vertices(); ++v) {
    if (state.clique_of[static_cast<std::size_t>(v)] >= 0) continue;
    auto& counts = outside[state.indices[static_cast<std::size_t>(v)]];
    counts.resize(static_cast<std::size_t>(c.parts()), 0);
    ++counts[static_cast<std::size_t>(c.part_of(v))];
  }
  for (const auto& [idx, counts] : outside) {
    if (std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) != counts.end()) return false;
  }
  return true;
}

Move CliqueAgency::next_move(const InfoDistGame& game, Rng&) {
  Move move;
  if (!announced_) {
    announced_ = true;
    for (const Clique& clique : state_.cliques) {
      for (std::size_t a = 0; a < clique.members.size(); ++a) {
        for (std::size_t b = a + 1; b < clique.members.size(); ++b) {
          move.edges.emplace_back(clique.members[a], clique.members[b]);
        }
      }
    }
  }
  AgencyOutput out;
  const std::vector<Edge>& log = game.board().bob_log;
  for (; bob_cursor_ < log.size(); ++bob_cursor_) handle_bob_edge(state_, log[bob_cursor_], out);
  move.edges.insert(move.edges.end(), out.edges.begin(), out.edges.end());
  move.marks = std::move(out.marks);
  return move;
}

BobKind bob_kind_from_string(std::string_view name) {
  if (name == "greedy-dissolver" || name == "greedy") return BobKind::kGreedyDissolver;
  if (name == "random") return BobKind::kRandom;
  if (name == "complaint-focuser" || name == "focuser") return BobKind::kComplaintFocuser;
  throw std::invalid_argument("unknown infodist adversary '" + std::string(name) + "'");
}

std::string_view to_string(BobKind kind) {
  switch (kind) {
    case BobKind::kGreedyDissolver: return "greedy-dissolver";
    case BobKind::kRandom: return "random";
    case BobKind::kComplaintFocuser: return "complaint-focuser";
  }
  return "?";
}

Move GreedyDissolverBob::next_move(const InfoDistGame& game, Rng&) {
  const AgencyState& s = agency_.state();
  PendingBobEdges pending(game.board());
  for (int id : active_cliques(s)) {
    if (auto e = dissolvable_pair(s.cliques[static_cast<std::size_t>(id)], pending)) pending.add(e->first, e->second);
  }
  return Move{pending.take(), {}};
}

Move RandomBob::next_move(const InfoDistGame& game, Rng& rng) {
  Move move;
  if (active_moves_ < 0) active_moves_ = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_active_moves_)));
  if (played_ >= active_moves_) return move;
  ++played_;
  const AgencyState& s = agency_.state();
  const InfoConfig& c = game.config();
  const std::vector<int> active = active_cliques(s);
  PendingBobEdges pending(game.board());
  const int wanted = std::max(1, c.N / 8);
  int added = 0;
  for (int attempt = 0; attempt < 8 * wanted && added < wanted; ++attempt) {
    Vertex a = 0, b = 0;
    if (!active.empty() && rng.bernoulli(0.5)) {
      const Clique& clique = s.cliques[static_cast<std::size_t>(active[rng.below(active.size())])];
      a = clique.members[rng.below(clique.members.size())];
      b = clique.members[rng.below(clique.members.size())];
    } else {
      a = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(c.vertices())));
      const int offset = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(c.m)));
      const int part = (c.part_of(a) + offset) % c.parts();
      b = part * c.N + static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(c.N)));
    }
    if (pending.add(a, b)) ++added;
  }
  move.edges = pending.take();
  return move;
}

Move ComplaintFocuserBob::next_move(const InfoDistGame& game, Rng&) {
  const AgencyState& s = agency_.state();
  const InfoConfig& c = game.config();
  PendingBobEdges pending(game.board());
  std::optional<ExperienceIndex> focus;
  for (int id : active_cliques(s)) {
    const Clique& clique = s.cliques[static_cast<std::size_t>(id)];
    if (!dissolvable_pair(clique, pending)) continue;
    const ExperienceIndex& idx = s.indices[static_cast<std::size_t>(clique.members.front())];
    if (!focus || idx < *focus) focus = idx;
  }
  if (!focus) return Move{};

  std::vector<Vertex> targets;
  for (int id : active_cliques(s)) {
    const Clique& clique = s.cliques[static_cast<std::size_t>(id)];
    if (s.indices[static_cast<std::size_t>(clique.members.front())] != *focus) continue;
    if (auto e = dissolvable_pair(clique, pending, Edge{0, 1})) {
      pending.add(e->first, e->second);
      targets.push_back(clique.members.front());
    }
  }
  ExperienceIndex landing = *focus;
  landing.bump(c.parts(), 0, 1);
  auto pool = s.free_pool.find({1, landing});
  if (pool != s.free_pool.end() && !targets.empty()) {
    std::size_t next = 0;
    for (Vertex w : pool->second) {
      for (std::size_t tries = 0; tries < targets.size(); ++tries) {
        const Vertex x0 = targets[next++ % targets.size()];
        if (pending.add(w, x0)) break;
      }
    }
  }
  return Move{pending.take(), {}};
}

std::unique_ptr<Strategy<InfoDistGame>> make_bob(BobKind kind, const CliqueAgency& agency) {
  switch (kind) {
    case BobKind::kGreedyDissolver: return std::make_unique<GreedyDissolverBob>(agency);
    case BobKind::kRandom: return std::make_unique<RandomBob>(agency, 48);
    case BobKind::kComplaintFocuser: return std::make_unique<ComplaintFocuserBob>(agency);
  }
  throw std::invalid_argument("unknown infodist adversary");
}

Budget default_budget(const InfoConfig& config) {
  const auto bound = config.alice_degree_limit() * config.parts() * 4 + 64;
  return Budget{.max_rounds = static_cast<int>(std::min<std::int64_t>(bound, 1 << 20)), .grace_rounds = 2};
}

InfoSummary summarize(const InfoDistGame& game, const CliqueAgency& agency) {
  InfoSummary out;
  const Board& board = game.board();
  out.marked_count = board.marked_count;
  out.max_marked_per_index = agency.state().stats.max_marked_per_index;
  out.max_alice_degree = board.alice_degree.empty() ? 0 : *std::max_element(board.alice_degree.begin(), board.alice_degree.end());
  out.max_bob_out_degree = board.bob_out_degree.empty() ? 0 : *std::max_element(board.bob_out_degree.begin(), board.bob_out_degree.end());
  out.max_memberships = agency.state().stats.max_memberships;
  out.verdict = game.verdict();
  return out;
}

Json to_json(const InfoSummary& summary) {
  return Json{{"marked_count", summary.marked_count},
              {"max_marked_per_index", summary.max_marked_per_index},
              {"max_alice_degree", summary.max_alice_degree},
              {"max_bob_out_degree", summary.max_bob_out_degree},
              {"max_memberships", summary.max_memberships},
              {"verdict", to_string(summary.verdict)}};
}

}  // namespace gamelab::infodist
