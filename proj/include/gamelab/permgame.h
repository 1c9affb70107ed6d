#pragma once

// Bijection marking game. Alice marks up to 2^k vertices in each of X and Y
// (both of size 2^n); Bob lists bijections X -> Y. Bob wins if every marked
// pair (x, y) is joined by some listed bijection. Also holds the merge of two
// mutually inverse-on-matches total programs into one permutation.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gamelab/engine.h"

namespace gamelab::permgame {

// Maps strings of length <= n to strings of length <= n.
using StringMap = std::map<std::string, std::string>;

class NotTotal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Every binary string of length <= n, shorter strings first and equal
// lengths in lexicographic order.
std::vector<std::string> strings_up_to(int n);

// Permutation pi of strings of length <= n with pi(u) = v whenever p(u) = v
// and q(v) = u. Unmatched inputs, in canonical order, go to unmatched
// outputs in canonical order. Throws NotTotal if p or q misses an input and
// std::invalid_argument if an output has length > n.
StringMap merge_total_programs(const StringMap& p, const StringMap& q, int n);

// bijection[x] = y.
using Bijection = std::vector<std::uint32_t>;

enum class Side { kX, kY };
std::string_view to_string(Side side);

struct Pick {
  Side side = Side::kX;
  std::uint32_t vertex = 0;
  // Marked opposite vertices the pick was already connected to, and how many
  // opposite vertices were marked at that time.
  std::size_t connections = 0;
  std::size_t opposite_marked = 0;
};

struct MarkingState {
  int k = 1;
  int n = 3;
  // nullopt means Bob may list any number of bijections.
  std::optional<std::size_t> bob_budget;
  std::vector<std::uint32_t> marked_x;
  std::vector<std::uint32_t> marked_y;
  std::vector<Bijection> bijections;
  std::vector<Pick> picks;

  MarkingState(int k_, int n_, std::optional<std::size_t> budget);
  std::size_t size() const { return std::size_t{1} << n; }
  std::size_t mark_limit() const { return std::size_t{1} << k; }
  bool is_marked(Side side, std::uint32_t v) const;
  bool covered(std::uint32_t x, std::uint32_t y) const;
  std::size_t uncovered_pairs() const;
  std::size_t covered_pairs() const;
  std::size_t distinct_bijections() const;
  // Marked vertices on the other side that some listed bijection joins to v.
  std::size_t connections(Side side, std::uint32_t v) const;
};

struct Mark {
  Side side = Side::kX;
  std::uint32_t vertex = 0;
};

struct Move {
  std::optional<Mark> mark;       // Alice
  std::vector<Bijection> list;    // Bob
  bool is_pass() const { return !mark && list.empty(); }
};

class PermGame {
 public:
  using Move = gamelab::permgame::Move;

  // Requires n > 2k.
  PermGame(int k, int n, std::optional<std::size_t> bob_budget);

  std::string game_id() const { return "permgame"; }
  Json params() const;
  Actor first_mover() const { return Actor::kAlice; }
  Actor adversary() const { return Actor::kBob; }
  void apply(Actor actor, const Move& move);
  Verdict verdict() const;
  Json state_json() const;
  Json encode(const Move& move) const;
  Move decode(Actor actor, const Json& payload) const;

  const MarkingState& state() const { return state_; }

 private:
  MarkingState state_;
};

// Reference Alice: pass while a marked pair is uncovered; otherwise mark on
// the next side of the X, Y, X, Y, ... schedule the unmarked vertex with the
// fewest connections to marked opposite vertices (least index on ties).
Move alice_strategy_step(const MarkingState& state);

// BobWins iff every marked pair is joined by a listed bijection.
Verdict check_bob_win(const MarkingState& state);

class ReferenceAlice : public Strategy<PermGame> {
 public:
  Move next_move(const PermGame& game, Rng& rng) override;
};

enum class BobKind { kGreedy, kPairCovering, kRandom };
BobKind bob_kind_from_string(std::string_view name);
std::string_view to_string(BobKind kind);

// Lists bijections until no marked pair is uncovered or the budget runs out.
// Each bijection covers a greedy matching of uncovered pairs; the remaining
// vertices are joined by a random completion.
class GreedyBob : public Strategy<PermGame> {
 public:
  Move next_move(const PermGame& game, Rng& rng) override;
};

// One bijection per uncovered pair, otherwise random.
class PairCoveringBob : public Strategy<PermGame> {
 public:
  Move next_move(const PermGame& game, Rng& rng) override;
};

// Lists one uniformly random bijection with probability 1/2 per turn while
// budget remains.
class RandomBob : public Strategy<PermGame> {
 public:
  Move next_move(const PermGame& game, Rng& rng) override;
};

std::unique_ptr<Strategy<PermGame>> make_bob(BobKind kind);

// Rounds enough for Alice to place every mark with Bob answering each one.
Budget default_budget(int k);

struct PermSummary {
  std::size_t bijections_listed = 0;
  std::size_t distinct_bijections = 0;
  std::size_t pairs_covered = 0;
  std::size_t pairs_total = 0;
  Verdict verdict = Verdict::kUndecided;
};
PermSummary summarize(const PermGame& game);
Json to_json(const PermSummary& summary);

}  // namespace gamelab::permgame
