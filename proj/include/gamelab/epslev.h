#pragma once

// Weighted marking game on a bipartite graph E within L x R. Alice raises
// dyadic weights on L; Bob marks L vertices by coin toss and R vertices that
// reach weight 2^-k without a marked neighbor. Bob must keep at most l marks
// on L and P-measure at most delta on R. Also holds the exact coin-toss
// oracle used to bound Bob's failure probability.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gamelab/engine.h"
#include "gamelab/params.h"

namespace gamelab::epslev {

struct BobParams {
  double c = 0.0;
  int l = 0;
};

// c = max(ln(2/delta), ln 4) and l = ceil(c * 2^(k+2)). Requires 0 < delta < 1.
BobParams compute_params(int k, const Rational& delta);

struct ELConfig {
  int l_size = 0;
  int r_size = 0;
  // (left, right) pairs.
  std::vector<std::pair<int, int>> edges;
  // Short description of how the edges were built, e.g. "circulant:4".
  std::string graph = "explicit";
  std::vector<Rational> p;
  std::string p_desc = "explicit";
  int k = 0;
  Rational delta{1, 2};
  double c = 0.0;
  int l = 0;
  // Weight increments are 2^-e with 0 <= e <= m_min.
  int m_min = 8;

  // Throws std::invalid_argument on inconsistent fields.
  void validate() const;
};

// R vertex j is joined to L vertices j, j+1, ..., j+d-1 (mod |L|).
std::vector<std::pair<int, int>> circulant_edges(int l_size, int r_size, int degree);

// Keys: L, R, graph (circulant:d | complete | explicit), edges ("x-y,x-y,..."
// when explicit), P (uniform | comma separated rationals), k, delta, m_min,
// and optionally c and l to override compute_params.
ELConfig config_from_params(const ParamMap& params);

struct Event {
  int vertex = 0;
  // The increment is 2^-exponent.
  int exponent = 0;
  bool operator==(const Event&) const = default;
};

struct ELState {
  // Weights in units of 2^-m_min.
  std::vector<std::uint64_t> weights;
  std::uint64_t total_weight = 0;
  std::vector<bool> marked_l;
  std::vector<bool> marked_r;
  int marked_l_count = 0;
  Rational r_measure{0};
  // Sum of neighbor weights per R vertex, in units.
  std::vector<std::uint64_t> neighbor_weight;
  // Marked neighbors per R vertex.
  std::vector<int> marked_neighbors;
  std::vector<Event> event_log;
  std::optional<Event> pending;
  // Bob moves after which some R vertex at threshold was left uncovered.
  int coverage_lapses = 0;

  explicit ELState(const ELConfig& config);
};

struct Move {
  std::optional<Event> raise;  // Alice
  std::vector<int> mark_l;     // Bob
  std::vector<int> mark_r;     // Bob
  bool is_pass() const { return !raise && mark_l.empty() && mark_r.empty(); }
};

class EpsLevGame {
 public:
  using Move = epslev::Move;

  explicit EpsLevGame(ELConfig config);

  std::string game_id() const { return "epslev"; }
  Json params() const;
  Actor first_mover() const { return Actor::kAlice; }
  Actor adversary() const { return Actor::kAlice; }
  void apply(Actor actor, const Move& move);
  Verdict verdict() const;
  Json state_json() const;
  Json encode(const Move& move) const;
  Move decode(Actor actor, const Json& payload) const;

  const ELConfig& config() const { return config_; }
  const ELState& state() const { return state_; }
  // Neighbor lists.
  const std::vector<std::vector<int>>& r_neighbors() const { return r_adj_; }
  const std::vector<std::vector<int>>& l_neighbors() const { return l_adj_; }
  std::uint64_t threshold_units() const { return std::uint64_t{1} << (config_.m_min - config_.k); }
  std::uint64_t cap_units() const { return std::uint64_t{2} << config_.m_min; }

 private:
  ELConfig config_;
  ELState state_;
  std::vector<std::vector<int>> r_adj_;
  std::vector<std::vector<int>> l_adj_;
};

// Bob's answer to the pending event: one uniform draw marks the raised
// vertex with probability min(1, c 2^k eps); then every unmarked R vertex
// with neighbor weight >= 2^-k and no marked neighbor is marked.
Move bob_step(const EpsLevGame& game, Rng& rng);

struct Outcome {
  bool coverage = true;
  bool l_within = true;
  bool r_within = true;
  Verdict verdict() const {
    return coverage && l_within && r_within ? Verdict::kBobWins : Verdict::kAliceWins;
  }
};

// Coverage: every R vertex whose neighbor weight exceeds 2^-k is marked or
// has a marked neighbor. Budgets: at most l marks on L, P-measure of marked
// R at most delta.
Outcome check_bob_outcome(const EpsLevGame& game);

class ReferenceBob : public Strategy<EpsLevGame> {
 public:
  Move next_move(const EpsLevGame& game, Rng& rng) override;
};

enum class AliceKind { kConcentrated, kSpread, kAntiCoin };
AliceKind alice_kind_from_string(std::string_view name);
std::string_view to_string(AliceKind kind);

// Raises 2^-k once on each L vertex in order while the weight cap allows.
class ConcentratedAlice : public Strategy<EpsLevGame> {
 public:
  Move next_move(const EpsLevGame& game, Rng& rng) override;
};

// Takes R vertices in order and raises their neighbors round-robin by the
// smallest increment until each reaches 2^-k.
class SpreadAlice : public Strategy<EpsLevGame> {
 public:
  Move next_move(const EpsLevGame& game, Rng& rng) override;

 private:
  int target_ = 0;
  std::size_t turn_ = 0;
};

// Raises, by the smallest increment, the lightest unmarked neighbor of the
// first R vertex that is still below 2^-k and has no marked neighbor.
class AntiCoinAlice : public Strategy<EpsLevGame> {
 public:
  Move next_move(const EpsLevGame& game, Rng& rng) override;
};

std::unique_ptr<Strategy<EpsLevGame>> make_alice(AliceKind kind);

// Rounds for Alice to spend the whole weight cap one increment at a time.
Budget default_budget(const ELConfig& config);

struct WinRate {
  int trials = 0;
  double win_rate = 0.0;
  double l_breach_rate = 0.0;
  double r_breach_rate = 0.0;
  double coverage_fail_rate = 0.0;
  int coverage_lapses = 0;
  double mean_marked_l = 0.0;
  double mean_r_measure = 0.0;
};
Json to_json(const WinRate& rate);

// Trial i plays with root seed derive_seed(seed, i).
WinRate estimate_win_rate(const ELConfig& config, AliceKind alice, int trials,
                          std::uint64_t seed);

// Exact oracle for adaptive coin tossing. At each node the opponent picks
// one option; its epsilon is added to the running sum and a coin succeeds
// with probability min(1, scale * epsilon). After a failure play moves to
// the option's child (none means the opponent stops).
struct CoinNode;
struct CoinOption {
  Rational epsilon;
  std::shared_ptr<const CoinNode> child;
};
struct CoinNode {
  std::vector<CoinOption> options;
};

class DepthExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Largest probability, over the opponent's choices, that the running sum
// reaches t while every coin so far has failed. Throws DepthExceeded when a
// path is longer than max_depth.
Rational no_success_probability(const CoinNode& root, const Rational& scale,
                                const Rational& t, int max_depth = 32);

// Single path offering exactly the given epsilons in order.
std::shared_ptr<const CoinNode> chain_tree(const std::vector<Rational>& epsilons);
// Every node down to `depth` offers every value of `grid`.
std::shared_ptr<const CoinNode> grid_tree(const std::vector<Rational>& grid, int depth);

}  // namespace gamelab::epslev
