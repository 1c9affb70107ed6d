#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gamelab/rational.h"
#include "gamelab/rng.h"

namespace gamelab {

enum class Actor : std::uint8_t { kAlice, kBob };
enum class Verdict : std::uint8_t { kAliceWins, kBobWins, kUndecided };

constexpr Actor other(Actor a) {
  return a == Actor::kAlice ? Actor::kBob : Actor::kAlice;
}

std::string_view to_string(Actor actor);
std::string_view to_string(Verdict verdict);
Actor actor_from_string(std::string_view text);
Verdict verdict_from_string(std::string_view text);

struct MoveRecord {
  std::uint64_t round = 0;
  Actor actor = Actor::kAlice;
  Json payload;

  bool operator==(const MoveRecord&) const = default;
};

// Ordered, replayable log of one game. Serialized field order is fixed:
// game_id, params, seed, moves, verdict.
struct GameTrace {
  std::string game_id;
  Json params = Json::object();
  std::uint64_t seed = 0;
  std::vector<MoveRecord> moves;
  Verdict verdict = Verdict::kUndecided;

  bool operator==(const GameTrace&) const = default;
};

Json to_json(const GameTrace& trace);
GameTrace trace_from_json(const Json& j);

struct Budget {
  int max_rounds = 1;
  // Rounds the strategy player keeps moving after the adversary goes quiet.
  int grace_rounds = 0;
};

// A move that breaks the game's shape or budget rules. This means the
// strategy that produced it is wrong, not that its owner lost.
class IllegalMove : public std::runtime_error {
 public:
  IllegalMove(Actor actor, const std::string& reason)
      : std::runtime_error(std::string(to_string(actor)) + ": " + reason),
        actor_(actor),
        reason_(reason) {}

  Actor actor() const { return actor_; }
  const std::string& reason() const { return reason_; }

 private:
  Actor actor_;
  std::string reason_;
};

// Every game encodes a pass as exactly this payload.
Json pass_payload();
bool is_pass_payload(const Json& payload);

// Player whose quiescence ends a game of the given id (Alice for friedberg
// and epslev, Bob otherwise).
Actor designated_adversary(std::string_view game_id);

// True iff the last `window` rounds contain only passes by `adversary`.
// Throws std::invalid_argument if window is zero or exceeds recorded rounds.
bool check_quiescence(const GameTrace& trace, int window, Actor adversary);
bool check_quiescence(const GameTrace& trace, int window);

template <typename G>
concept GameRules = requires(G game, const G cgame, Actor actor,
                             const typename G::Move& move, const Json& j) {
  { cgame.game_id() } -> std::convertible_to<std::string>;
  { cgame.params() } -> std::convertible_to<Json>;
  { cgame.first_mover() } -> std::same_as<Actor>;
  { cgame.adversary() } -> std::same_as<Actor>;
  game.apply(actor, move);
  { cgame.verdict() } -> std::same_as<Verdict>;
  { cgame.state_json() } -> std::convertible_to<Json>;
  { move.is_pass() } -> std::convertible_to<bool>;
  { cgame.encode(move) } -> std::convertible_to<Json>;
  { cgame.decode(actor, j) } -> std::same_as<typename G::Move>;
};

template <typename Game>
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual typename Game::Move next_move(const Game& game, Rng& rng) = 0;
};

struct RunOptions {
  // When false the trace keeps only its header and verdict. Monte Carlo
  // sweeps use this; the game itself plays identically.
  bool record_moves = true;
};

// Referee loop. Alice draws from stream 0 of `seed`, Bob from stream 1.
// With grace_rounds == 0 the game stops after a round in which both players
// passed; otherwise it stops once the adversary has passed grace_rounds
// rounds in a row, so an adversary may idle briefly without ending the game.
// max_rounds always caps the length. IllegalMove from the rules propagates
// unchanged.
template <GameRules Game>
GameTrace run_game(Game& game, Strategy<Game>& alice, Strategy<Game>& bob,
                   const Budget& budget, std::uint64_t seed,
                   RunOptions options = {}) {
  if (budget.max_rounds < 1) {
    throw std::invalid_argument("max_rounds must be at least 1");
  }
  if (budget.grace_rounds < 0) {
    throw std::invalid_argument("grace_rounds must be nonnegative");
  }
  GameTrace trace;
  trace.game_id = game.game_id();
  trace.params = game.params();
  trace.seed = seed;

  Rng alice_rng(derive_seed(seed, 0));
  Rng bob_rng(derive_seed(seed, 1));
  const Actor first = game.first_mover();
  const Actor adversary = game.adversary();
  int adversary_idle = 0;

  for (int round = 0; round < budget.max_rounds; ++round) {
    bool all_passed = true;
    for (Actor actor : {first, other(first)}) {
      const bool is_alice = actor == Actor::kAlice;
      Strategy<Game>& player = is_alice ? alice : bob;
      Rng& rng = is_alice ? alice_rng : bob_rng;
      typename Game::Move move = player.next_move(game, rng);
      game.apply(actor, move);
      const bool passed = move.is_pass();
      if (options.record_moves) {
        trace.moves.push_back(
            {static_cast<std::uint64_t>(round), actor, game.encode(move)});
      }
      all_passed = all_passed && passed;
      if (actor == adversary) adversary_idle = passed ? adversary_idle + 1 : 0;
    }
    if (budget.grace_rounds == 0 ? all_passed
                                 : adversary_idle >= budget.grace_rounds) {
      break;
    }
  }
  trace.verdict = game.verdict();
  return trace;
}

// Re-applies every recorded move to `game` (freshly constructed from the
// trace params) and returns the verdict. Throws std::invalid_argument if the
// trace breaks alternation or round ordering, IllegalMove if the rules reject
// a recorded move.
template <GameRules Game>
Verdict replay_trace(Game& game, const GameTrace& trace) {
  std::optional<MoveRecord> previous;
  for (const MoveRecord& record : trace.moves) {
    if (previous) {
      if (record.actor == previous->actor) {
        throw std::invalid_argument("trace has two consecutive moves by " +
                                    std::string(to_string(record.actor)));
      }
      if (record.round < previous->round) {
        throw std::invalid_argument("trace rounds decrease");
      }
    } else if (record.actor != game.first_mover()) {
      throw std::invalid_argument("trace does not start with the first mover");
    }
    game.apply(record.actor, game.decode(record.actor, record.payload));
    previous = record;
  }
  return game.verdict();
}

}  // namespace gamelab
