#pragma once

// Game G_n: Alice builds a partial function on n-bit strings, Bob lists fewer
// than 2^n total functions. Alice wins if some defined point escapes every
// listed function.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gamelab/engine.h"

namespace gamelab::totalcond {

// An n-bit string stored as its binary value; numeric order is lexicographic.
using Word = std::uint32_t;
// Outputs indexed by input word.
using TotalFunction = std::vector<Word>;

struct Challenge {
  Word y = 0;
  Word x = 0;
  bool operator==(const Challenge&) const = default;
};

struct GnState {
  int n = 1;
  std::vector<std::optional<Word>> a_func;
  std::vector<TotalFunction> bob_list;
  // Most recent point Alice defined.
  std::optional<Challenge> alice_current;

  explicit GnState(int n_bits);
  std::size_t domain_size() const { return std::size_t{1} << n; }
  // Bob's list must stay strictly below 2^n.
  std::size_t bob_capacity() const { return domain_size() - 1; }
  bool covered(const Challenge& c) const;
};

struct Move {
  std::vector<Challenge> define;    // Alice only
  std::vector<TotalFunction> list;  // Bob only
  bool is_pass() const { return define.empty() && list.empty(); }
};

// Raised when Alice has no fresh string left. The budget makes this
// unreachable; seeing it means the rules or the strategy are broken.
class Exhausted : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class UnsupportedSize : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string word_to_bits(Word w, int n);
Word bits_to_word(std::string_view bits);

class TotalCondGame {
 public:
  using Move = gamelab::totalcond::Move;

  explicit TotalCondGame(int n);

  std::string game_id() const { return "totalcond"; }
  Json params() const;
  Actor first_mover() const { return Actor::kAlice; }
  Actor adversary() const { return Actor::kBob; }
  void apply(Actor actor, const Move& move);
  Verdict verdict() const;
  Json state_json() const;
  Json encode(const Move& move) const;
  Move decode(Actor actor, const Json& payload) const;

  const GnState& state() const { return state_; }
  int alice_nontrivial_moves() const { return alice_moves_; }

 private:
  GnState state_;
  int alice_moves_ = 0;
};

// Reference strategy: keep one challenge (y, x) open; once a listed function
// covers it, open a new one on the least fresh y with the least x that no
// listed function produces at y.
Move alice_strategy_step(const GnState& state);

// AliceWins iff some defined y has a_func(y) outside {B_i(y)}.
Verdict check_alice_win(const GnState& state);

class ReferenceAlice : public Strategy<TotalCondGame> {
 public:
  Move next_move(const TotalCondGame& game, Rng& rng) override;
};

enum class BobKind { kGreedy, kRandom, kExhaustiveNode };
BobKind bob_kind_from_string(std::string_view name);

// Covers an uncovered challenge with the function mapping y to x and every
// other input to the all-zero string.
class GreedyBob : public Strategy<TotalCondGame> {
 public:
  Move next_move(const TotalCondGame& game, Rng& rng) override;
};

// Passes a quarter of its turns at random; otherwise lists one uniformly
// random total function until `max_list` functions are out. Half of them are
// patched to cover the open challenge.
class RandomBob : public Strategy<TotalCondGame> {
 public:
  explicit RandomBob(std::size_t max_list) : max_list_(max_list) {}
  Move next_move(const TotalCondGame& game, Rng& rng) override;

 private:
  std::size_t max_list_;
};

// Follows a fixed script of option indices, one per turn: 0 passes, i > 0
// lists the (i-1)-th total function in lexicographic order. Turns beyond the
// script pass. Each turn's arity is recorded so a caller can enumerate every
// script (the game-tree walk in search_game_tree).
class ScriptedBob : public Strategy<TotalCondGame> {
 public:
  explicit ScriptedBob(std::vector<std::size_t> script)
      : script_(std::move(script)) {}
  Move next_move(const TotalCondGame& game, Rng& rng) override;

  const std::vector<std::size_t>& taken() const { return taken_; }
  const std::vector<std::size_t>& arities() const { return arities_; }

 private:
  std::vector<std::size_t> script_;
  std::vector<std::size_t> taken_;
  std::vector<std::size_t> arities_;
};

// The i-th total function {0,1}^n -> {0,1}^n in lexicographic order of the
// output vector.
TotalFunction nth_total_function(int n, std::uint64_t index);

// Greedy and random Bobs for any n; the exhaustive node only for n == 1
// (UnsupportedSize otherwise). Randomness comes from the engine's Bob stream.
std::unique_ptr<Strategy<TotalCondGame>> make_bob_adversary(BobKind kind,
                                                            int n);

struct TreeSearchResult {
  std::uint64_t leaves = 0;
  std::uint64_t alice_wins = 0;
  std::size_t max_list_length = 0;
  std::size_t max_arity = 0;
  bool alice_wins_everywhere() const { return leaves > 0 && leaves == alice_wins; }
};

// Plays reference Alice against every Bob behaviour in the game tree (every
// pass/list choice at every Bob turn) within `max_rounds` rounds.
TreeSearchResult search_game_tree(int n, int max_rounds);

}  // namespace gamelab::totalcond
