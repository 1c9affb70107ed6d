#include "gamelab/permgame.h"

#include <algorithm>
#include <set>

namespace gamelab::permgame {
namespace {

bool valid_string(const std::string& s, int n) {
  return static_cast<int>(s.size()) <= n &&
         std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

bool is_permutation_of_size(const Bijection& b, std::size_t size) {
  if (b.size() != size) return false;
  std::vector<bool> seen(size, false);
  for (std::uint32_t y : b) {
    if (y >= size || seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

// Joins the unassigned x's to the unused y's in a uniformly random way.
void random_completion(Bijection& b, Rng& rng) {
  const std::uint32_t unset = static_cast<std::uint32_t>(b.size());
  std::vector<bool> used(b.size(), false);
  for (std::uint32_t y : b) {
    if (y != unset) used[y] = true;
  }
  std::vector<std::uint32_t> free_y;
  for (std::uint32_t y = 0; y < b.size(); ++y) {
    if (!used[y]) free_y.push_back(y);
  }
  for (std::size_t i = free_y.size(); i > 1; --i) {
    std::swap(free_y[i - 1], free_y[rng.below(i)]);
  }
  std::size_t next = 0;
  for (std::uint32_t& y : b) {
    if (y == unset) y = free_y[next++];
  }
}

Bijection empty_bijection(std::size_t size) {
  return Bijection(size, static_cast<std::uint32_t>(size));
}

bool covered_with(const MarkingState& s, const std::vector<Bijection>& extra,
                  std::uint32_t x, std::uint32_t y) {
  if (s.covered(x, y)) return true;
  return std::any_of(extra.begin(), extra.end(), [&](const Bijection& b) { return b[x] == y; });
}

bool budget_left(const MarkingState& s, std::size_t pending) {
  return !s.bob_budget || s.bijections.size() + pending < *s.bob_budget;
}

Json vertices_json(const std::vector<std::uint32_t>& v) {
  Json j = Json::array();
  for (std::uint32_t x : v) j.push_back(x);
  return j;
}

Json bijection_json(const Bijection& b) {
  Json j = Json::array();
  for (std::uint32_t y : b) j.push_back(y);
  return j;
}

}  // namespace

std::vector<std::string> strings_up_to(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("string length bound out of range");
  std::vector<std::string> out{""};
  for (int len = 1; len <= n; ++len) {
    for (std::uint32_t w = 0; w < (1u << len); ++w) {
      std::string s(static_cast<std::size_t>(len), '0');
      for (int i = 0; i < len; ++i) {
        if ((w >> (len - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

StringMap merge_total_programs(const StringMap& p, const StringMap& q, int n) {
  const std::vector<std::string> all = strings_up_to(n);
  for (const StringMap* m : {&p, &q}) {
    for (const std::string& u : all) {
      auto it = m->find(u);
      if (it == m->end()) throw NotTotal("program undefined on '" + u + "'");
      if (!valid_string(it->second, n)) {
        throw std::invalid_argument("program output '" + it->second + "' is out of range");
      }
    }
  }
  StringMap pi;
  std::set<std::string> used;
  for (const std::string& u : all) {
    const std::string& v = p.at(u);
    if (q.at(v) == u) {
      pi[u] = v;
      used.insert(v);
    }
  }
  auto next_free = all.begin();
  for (const std::string& u : all) {
    if (pi.contains(u)) continue;
    while (used.contains(*next_free)) ++next_free;
    pi[u] = *next_free++;
  }
  return pi;
}

std::string_view to_string(Side side) { return side == Side::kX ? "X" : "Y"; }

MarkingState::MarkingState(int k_, int n_, std::optional<std::size_t> budget)
    : k(k_), n(n_), bob_budget(budget) {
  if (k < 1 || n <= 2 * k || n > 20) {
    throw std::invalid_argument("marking game needs k >= 1 and 2k < n <= 20");
  }
}

bool MarkingState::is_marked(Side side, std::uint32_t v) const {
  const auto& marks = side == Side::kX ? marked_x : marked_y;
  return std::find(marks.begin(), marks.end(), v) != marks.end();
}

bool MarkingState::covered(std::uint32_t x, std::uint32_t y) const {
  return std::any_of(bijections.begin(), bijections.end(), [&](const Bijection& b) { return b[x] == y; });
}

std::size_t MarkingState::covered_pairs() const {
  std::size_t count = 0;
  for (std::uint32_t x : marked_x) {
    for (std::uint32_t y : marked_y) count += covered(x, y) ? 1 : 0;
  }
  return count;
}

std::size_t MarkingState::uncovered_pairs() const {
  return marked_x.size() * marked_y.size() - covered_pairs();
}

std::size_t MarkingState::distinct_bijections() const {
  return std::set<Bijection>(bijections.begin(), bijections.end()).size();
}

std::size_t MarkingState::connections(Side side, std::uint32_t v) const {
  const auto& opposite = side == Side::kX ? marked_y : marked_x;
  std::size_t count = 0;
  for (std::uint32_t w : opposite) {
    const bool joined = side == Side::kX ? covered(v, w) : covered(w, v);
    count += joined ? 1 : 0;
  }
  return count;
}

PermGame::PermGame(int k, int n, std::optional<std::size_t> bob_budget)
    : state_(k, n, bob_budget) {}

Json PermGame::params() const {
  return Json{{"k", state_.k},
              {"n", state_.n},
              {"bob_budget", state_.bob_budget ? Json(*state_.bob_budget) : Json(nullptr)}};
}

void PermGame::apply(Actor actor, const Move& move) {
  MarkingState& s = state_;
  if (actor == Actor::kAlice) {
    if (!move.list.empty()) throw IllegalMove(actor, "Alice may not list bijections");
    if (!move.mark) return;
    const Mark& m = *move.mark;
    auto& marks = m.side == Side::kX ? s.marked_x : s.marked_y;
    if (m.vertex >= s.size()) throw IllegalMove(actor, "vertex out of range");
    if (s.is_marked(m.side, m.vertex)) throw IllegalMove(actor, "vertex already marked");
    if (marks.size() >= s.mark_limit()) throw IllegalMove(actor, "mark limit reached");
    s.picks.push_back({m.side, m.vertex, s.connections(m.side, m.vertex),
                       m.side == Side::kX ? s.marked_y.size() : s.marked_x.size()});
    marks.push_back(m.vertex);
    return;
  }
  if (move.mark) throw IllegalMove(actor, "Bob may not mark vertices");
  if (s.bob_budget && s.bijections.size() + move.list.size() > *s.bob_budget) {
    throw IllegalMove(actor, "bijection budget exceeded");
  }
  for (const Bijection& b : move.list) {
    if (!is_permutation_of_size(b, s.size())) throw IllegalMove(actor, "listed map is not a bijection");
  }
  s.bijections.insert(s.bijections.end(), move.list.begin(), move.list.end());
}

Verdict PermGame::verdict() const { return check_bob_win(state_); }

Json PermGame::state_json() const {
  Json list = Json::array();
  for (const Bijection& b : state_.bijections) list.push_back(bijection_json(b));
  return Json{{"marked_x", vertices_json(state_.marked_x)},
              {"marked_y", vertices_json(state_.marked_y)},
              {"bijections", std::move(list)}};
}

Json PermGame::encode(const Move& move) const {
  if (move.is_pass()) return pass_payload();
  if (move.mark) return Json{{"mark", Json{{"side", to_string(move.mark->side)}, {"vertex", move.mark->vertex}}}};
  Json list = Json::array();
  for (const Bijection& b : move.list) list.push_back(bijection_json(b));
  return Json{{"list", std::move(list)}};
}

Move PermGame::decode(Actor actor, const Json& payload) const {
  Move move;
  if (is_pass_payload(payload)) return move;
  if (actor == Actor::kAlice) {
    const Json& m = payload.at("mark");
    const std::string side = m.at("side").get<std::string>();
    if (side != "X" && side != "Y") throw std::invalid_argument("unknown side '" + side + "'");
    move.mark = Mark{side == "X" ? Side::kX : Side::kY, m.at("vertex").get<std::uint32_t>()};
    return move;
  }
  for (const Json& b : payload.at("list")) move.list.push_back(b.get<Bijection>());
  return move;
}

Move alice_strategy_step(const MarkingState& s) {
  Move move;
  if (s.uncovered_pairs() > 0) return move;
  const std::size_t limit = s.mark_limit();
  Side side = s.marked_x.size() <= s.marked_y.size() ? Side::kX : Side::kY;
  const auto count = [&](Side which) { return which == Side::kX ? s.marked_x.size() : s.marked_y.size(); };
  if (count(side) >= limit) side = side == Side::kX ? Side::kY : Side::kX;
  if (count(side) >= limit) return move;

  std::optional<std::uint32_t> best;
  std::size_t best_connections = 0;
  for (std::uint32_t v = 0; v < s.size(); ++v) {
    if (s.is_marked(side, v)) continue;
    const std::size_t c = s.connections(side, v);
    if (!best || c < best_connections) {
      best = v;
      best_connections = c;
      if (c == 0) break;
    }
  }
  move.mark = Mark{side, *best};
  return move;
}

Verdict check_bob_win(const MarkingState& state) {
  return state.uncovered_pairs() == 0 ? Verdict::kBobWins : Verdict::kAliceWins;
}

Move ReferenceAlice::next_move(const PermGame& game, Rng&) {
  return alice_strategy_step(game.state());
}

BobKind bob_kind_from_string(std::string_view name) {
  if (name == "greedy") return BobKind::kGreedy;
  if (name == "pair-covering" || name == "pair") return BobKind::kPairCovering;
  if (name == "random") return BobKind::kRandom;
  throw std::invalid_argument("unknown permgame adversary '" + std::string(name) + "'");
}

std::string_view to_string(BobKind kind) {
  switch (kind) {
    case BobKind::kGreedy: return "greedy";
    case BobKind::kPairCovering: return "pair-covering";
    case BobKind::kRandom: return "random";
  }
  return "?";
}

Move GreedyBob::next_move(const PermGame& game, Rng& rng) {
  const MarkingState& s = game.state();
  Move move;
  while (budget_left(s, move.list.size())) {
    Bijection b = empty_bijection(s.size());
    std::vector<bool> y_used(s.size(), false);
    bool any = false;
    for (std::uint32_t x : s.marked_x) {
      for (std::uint32_t y : s.marked_y) {
        if (y_used[y] || covered_with(s, move.list, x, y)) continue;
        b[x] = y;
        y_used[y] = true;
        any = true;
        break;
      }
    }
    if (!any) break;
    random_completion(b, rng);
    move.list.push_back(std::move(b));
  }
  return move;
}

Move PairCoveringBob::next_move(const PermGame& game, Rng& rng) {
  const MarkingState& s = game.state();
  Move move;
  for (std::uint32_t x : s.marked_x) {
    for (std::uint32_t y : s.marked_y) {
      if (!budget_left(s, move.list.size())) return move;
      if (covered_with(s, move.list, x, y)) continue;
      Bijection b = empty_bijection(s.size());
      b[x] = y;
      random_completion(b, rng);
      move.list.push_back(std::move(b));
    }
  }
  return move;
}

Move RandomBob::next_move(const PermGame& game, Rng& rng) {
  const MarkingState& s = game.state();
  Move move;
  if (budget_left(s, 0) && rng.bernoulli(0.5)) {
    Bijection b = empty_bijection(s.size());
    random_completion(b, rng);
    move.list.push_back(std::move(b));
  }
  return move;
}

std::unique_ptr<Strategy<PermGame>> make_bob(BobKind kind) {
  switch (kind) {
    case BobKind::kGreedy: return std::make_unique<GreedyBob>();
    case BobKind::kPairCovering: return std::make_unique<PairCoveringBob>();
    case BobKind::kRandom: return std::make_unique<RandomBob>();
  }
  throw std::invalid_argument("unknown permgame adversary");
}

Budget default_budget(int k) {
  return Budget{.max_rounds = 8 * (1 << k) + 16, .grace_rounds = 3};
}

PermSummary summarize(const PermGame& game) {
  const MarkingState& s = game.state();
  PermSummary out;
  out.bijections_listed = s.bijections.size();
  out.distinct_bijections = s.distinct_bijections();
  out.pairs_covered = s.covered_pairs();
  out.pairs_total = s.marked_x.size() * s.marked_y.size();
  out.verdict = check_bob_win(s);
  return out;
}

Json to_json(const PermSummary& summary) {
  return Json{{"bijections_listed", summary.bijections_listed},
              {"distinct_bijections", summary.distinct_bijections},
              {"pairs_covered", summary.pairs_covered},
              {"pairs_total", summary.pairs_total},
              {"verdict", to_string(summary.verdict)}};
}

}  // namespace gamelab::permgame
