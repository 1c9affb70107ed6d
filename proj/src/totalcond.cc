#include "gamelab/totalcond.h"

#include <algorithm>

namespace gamelab::totalcond {

GnState::GnState(int n_bits) : n(n_bits) {
  if (n < 1 || n > 16) throw std::invalid_argument("n must be in [1, 16]");
  a_func.assign(domain_size(), std::nullopt);
}

bool GnState::covered(const Challenge& c) const {
  return std::any_of(bob_list.begin(), bob_list.end(),
                     [&](const TotalFunction& f) { return f[c.y] == c.x; });
}

std::string word_to_bits(Word w, int n) {
  std::string bits(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((w >> (n - 1 - i)) & 1u) bits[static_cast<std::size_t>(i)] = '1';
  }
  return bits;
}

Word bits_to_word(std::string_view bits) {
  if (bits.empty() || bits.size() > 31) {
    throw std::invalid_argument("bit string length out of range");
  }
  Word w = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("not a bit string");
    w = (w << 1) | static_cast<Word>(c - '0');
  }
  return w;
}

TotalCondGame::TotalCondGame(int n) : state_(n) {}

Json TotalCondGame::params() const { return Json{{"n", state_.n}}; }

void TotalCondGame::apply(Actor actor, const Move& move) {
  const std::size_t size = state_.domain_size();
  if (actor == Actor::kAlice) {
    if (!move.list.empty()) throw IllegalMove(actor, "Alice cannot list functions");
    for (const Challenge& c : move.define) {
      if (c.y >= size || c.x >= size) throw IllegalMove(actor, "word out of range");
      if (state_.a_func[c.y]) {
        throw IllegalMove(actor, "A(" + word_to_bits(c.y, state_.n) +
                                     ") is already defined");
      }
      state_.a_func[c.y] = c.x;
      state_.alice_current = c;
    }
    if (!move.define.empty()) ++alice_moves_;
    return;
  }
  if (!move.define.empty()) throw IllegalMove(actor, "Bob cannot define A");
  if (state_.bob_list.size() + move.list.size() > state_.bob_capacity()) {
    throw IllegalMove(actor, "list would reach 2^n functions");
  }
  for (const TotalFunction& f : move.list) {
    if (f.size() != size) throw IllegalMove(actor, "function is not total");
    for (Word v : f) {
      if (v >= size) throw IllegalMove(actor, "function value out of range");
    }
  }
  state_.bob_list.insert(state_.bob_list.end(), move.list.begin(),
                         move.list.end());
}

Verdict TotalCondGame::verdict() const { return check_alice_win(state_); }

Json TotalCondGame::state_json() const {
  Json a = Json::array();
  for (const auto& v : state_.a_func) {
    a.push_back(v ? Json(word_to_bits(*v, state_.n)) : Json(nullptr));
  }
  Json list = Json::array();
  for (const TotalFunction& f : state_.bob_list) {
    Json jf = Json::array();
    for (Word v : f) jf.push_back(word_to_bits(v, state_.n));
    list.push_back(std::move(jf));
  }
  return Json{{"n", state_.n}, {"a_func", std::move(a)}, {"bob_list", std::move(list)}};
}

Json TotalCondGame::encode(const Move& move) const {
  if (move.is_pass()) return pass_payload();
  Json j = Json::object();
  if (!move.define.empty()) {
    Json d = Json::array();
    for (const Challenge& c : move.define) {
      d.push_back(Json::array({word_to_bits(c.y, state_.n), word_to_bits(c.x, state_.n)}));
    }
    j["define"] = std::move(d);
  }
  if (!move.list.empty()) {
    Json l = Json::array();
    for (const TotalFunction& f : move.list) {
      Json jf = Json::array();
      for (Word v : f) jf.push_back(word_to_bits(v, state_.n));
      l.push_back(std::move(jf));
    }
    j["list"] = std::move(l);
  }
  return j;
}

Move TotalCondGame::decode(Actor, const Json& payload) const {
  Move move;
  if (is_pass_payload(payload)) return move;
  auto word = [&](const Json& s) {
    auto text = s.get<std::string>();
    if (text.size() != static_cast<std::size_t>(state_.n)) {
      throw std::invalid_argument("word '" + text + "' has the wrong length");
    }
    return bits_to_word(text);
  };
  if (payload.contains("define")) {
    for (const Json& p : payload.at("define")) {
      move.define.push_back({word(p.at(0)), word(p.at(1))});
    }
  }
  if (payload.contains("list")) {
    for (const Json& jf : payload.at("list")) {
      TotalFunction f;
      for (const Json& v : jf) f.push_back(word(v));
      move.list.push_back(std::move(f));
    }
  }
  return move;
}

Move alice_strategy_step(const GnState& state) {
  Move move;
  if (state.alice_current && !state.covered(*state.alice_current)) return move;
  const std::size_t size = state.domain_size();
  auto fresh = std::find(state.a_func.begin(), state.a_func.end(), std::nullopt);
  if (fresh == state.a_func.end()) throw Exhausted("no fresh y left");
  const Word y = static_cast<Word>(fresh - state.a_func.begin());
  std::vector<bool> taken(size, false);
  for (const TotalFunction& f : state.bob_list) taken[f[y]] = true;
  auto free_x = std::find(taken.begin(), taken.end(), false);
  if (free_x == taken.end()) throw Exhausted("every x is produced at y");
  move.define.push_back({y, static_cast<Word>(free_x - taken.begin())});
  return move;
}

Verdict check_alice_win(const GnState& state) {
  for (std::size_t y = 0; y < state.a_func.size(); ++y) {
    if (!state.a_func[y]) continue;
    Challenge c{static_cast<Word>(y), *state.a_func[y]};
    if (!state.covered(c)) return Verdict::kAliceWins;
  }
  return Verdict::kBobWins;
}

Move ReferenceAlice::next_move(const TotalCondGame& game, Rng&) {
  return alice_strategy_step(game.state());
}

BobKind bob_kind_from_string(std::string_view name) {
  if (name == "greedy") return BobKind::kGreedy;
  if (name == "random") return BobKind::kRandom;
  if (name == "exhaustive-node" || name == "exhaustive") return BobKind::kExhaustiveNode;
  throw std::invalid_argument("unknown totalcond adversary '" + std::string(name) + "'");
}

Move GreedyBob::next_move(const TotalCondGame& game, Rng&) {
  const GnState& s = game.state();
  Move move;
  if (!s.alice_current || s.covered(*s.alice_current)) return move;
  if (s.bob_list.size() >= s.bob_capacity()) return move;
  TotalFunction f(s.domain_size(), 0);
  f[s.alice_current->y] = s.alice_current->x;
  move.list.push_back(std::move(f));
  return move;
}

Move RandomBob::next_move(const TotalCondGame& game, Rng& rng) {
  const GnState& s = game.state();
  Move move;
  const std::size_t cap = std::min(max_list_, s.bob_capacity());
  if (s.bob_list.size() >= cap || rng.bernoulli(0.25)) return move;
  TotalFunction f(s.domain_size());
  for (Word& v : f) v = static_cast<Word>(rng.below(s.domain_size()));
  if (rng.bernoulli(0.5) && s.alice_current) {
    f[s.alice_current->y] = s.alice_current->x;
  }
  move.list.push_back(std::move(f));
  return move;
}

TotalFunction nth_total_function(int n, std::uint64_t index) {
  const std::size_t size = std::size_t{1} << n;
  TotalFunction f(size);
  for (std::size_t i = size; i-- > 0;) {
    f[i] = static_cast<Word>(index % size);
    index /= size;
  }
  return f;
}

Move ScriptedBob::next_move(const TotalCondGame& game, Rng&) {
  const GnState& s = game.state();
  Move move;
  std::size_t arity = 1;
  if (s.bob_list.size() < s.bob_capacity()) {
    arity += std::size_t{1} << (s.n * static_cast<int>(s.domain_size()));
  }
  const std::size_t turn = taken_.size();
  const std::size_t choice = turn < script_.size() ? script_[turn] : 0;
  if (choice >= arity) throw std::out_of_range("script choice exceeds arity");
  taken_.push_back(choice);
  arities_.push_back(arity);
  if (choice > 0) move.list.push_back(nth_total_function(s.n, choice - 1));
  return move;
}

std::unique_ptr<Strategy<TotalCondGame>> make_bob_adversary(BobKind kind, int n) {
  switch (kind) {
    case BobKind::kGreedy: return std::make_unique<GreedyBob>();
    case BobKind::kRandom: return std::make_unique<RandomBob>((std::size_t{1} << n) - 1);
    case BobKind::kExhaustiveNode:
      if (n != 1) throw UnsupportedSize("exhaustive search supports n = 1 only");
      return std::make_unique<ScriptedBob>(std::vector<std::size_t>{});
  }
  throw std::invalid_argument("unknown adversary");
}

TreeSearchResult search_game_tree(int n, int max_rounds) {
  if (n != 1) throw UnsupportedSize("exhaustive search supports n = 1 only");
  TreeSearchResult result;
  std::vector<std::size_t> script;
  const Budget budget{max_rounds, 3};
  while (true) {
    TotalCondGame game(n);
    ReferenceAlice alice;
    ScriptedBob bob(script);
    GameTrace trace = run_game(game, alice, bob, budget, 0, {false});
    ++result.leaves;
    if (trace.verdict == Verdict::kAliceWins) ++result.alice_wins;
    result.max_list_length = std::max(result.max_list_length, game.state().bob_list.size());
    for (std::size_t a : bob.arities()) result.max_arity = std::max(result.max_arity, a);

    // Odometer step: bump the deepest choice that still has siblings.
    std::vector<std::size_t> next = bob.taken();
    const auto& arities = bob.arities();
    std::size_t depth = next.size();
    while (depth > 0 && next[depth - 1] + 1 >= arities[depth - 1]) --depth;
    if (depth == 0) break;
    next.resize(depth);
    ++next[depth - 1];
    script = std::move(next);
  }
  return result;
}

}  // namespace gamelab::totalcond
