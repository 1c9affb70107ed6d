#include "gamelab/epslev.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace gamelab::epslev {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double mark_probability(const ELConfig& config, int exponent) {
  return std::min(1.0, config.c * std::ldexp(1.0, config.k - exponent));
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

const ELConfig& checked(const ELConfig& config) {
  config.validate();
  return config;
}

}  // namespace

BobParams compute_params(int k, const Rational& delta) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (delta <= 0 || delta >= 1) throw std::invalid_argument("delta must lie in (0, 1)");
  BobParams out;
  out.c = std::max(std::log(2.0 / to_double(delta)), std::log(4.0));
  out.l = static_cast<int>(std::ceil(out.c * std::ldexp(1.0, k + 2)));
  return out;
}

void ELConfig::validate() const {
  if (l_size < 1 || r_size < 1) throw std::invalid_argument("L and R must be nonempty");
  if (k < 0 || m_min < k || m_min > 40) throw std::invalid_argument("need 0 <= k <= m_min <= 40");
  if (delta <= 0 || delta >= 1) throw std::invalid_argument("delta must lie in (0, 1)");
  if (c <= 0) throw std::invalid_argument("c must be positive");
  if (l < 0) throw std::invalid_argument("l must be nonnegative");
  for (const auto& [x, y] : edges) {
    if (x < 0 || x >= l_size || y < 0 || y >= r_size) throw std::invalid_argument("edge out of range");
  }
  if (static_cast<int>(p.size()) != r_size) throw std::invalid_argument("P needs one value per R vertex");
  Rational sum = 0;
  for (const Rational& v : p) {
    if (v < 0) throw std::invalid_argument("P values must be nonnegative");
    sum += v;
  }
  if (sum != 1) throw std::invalid_argument("P must sum to 1");
}

std::vector<std::pair<int, int>> circulant_edges(int l_size, int r_size, int degree) {
  if (degree < 1 || degree > l_size) throw std::invalid_argument("circulant degree out of range");
  std::vector<std::pair<int, int>> edges;
  for (int y = 0; y < r_size; ++y) {
    for (int i = 0; i < degree; ++i) edges.emplace_back((y + i) % l_size, y);
  }
  return edges;
}

ELConfig config_from_params(const ParamMap& params) {
  ELConfig config;
  config.l_size = static_cast<int>(params.get_int("L", 32));
  config.r_size = static_cast<int>(params.get_int("R", 32));
  config.k = static_cast<int>(params.get_int("k", 1));
  config.delta = params.get_rational("delta", Rational(1, 4));
  config.m_min = static_cast<int>(params.get_int("m_min", 8));

  config.graph = params.get_string("graph", "circulant:4");
  if (config.graph.starts_with("circulant:")) {
    config.edges = circulant_edges(config.l_size, config.r_size, std::stoi(config.graph.substr(10)));
  } else if (config.graph == "complete") {
    for (int y = 0; y < config.r_size; ++y) {
      for (int x = 0; x < config.l_size; ++x) config.edges.emplace_back(x, y);
    }
  } else if (config.graph == "explicit") {
    for (const std::string& e : split(params.get_string("edges", ""), ',')) {
      const auto dash = e.find('-');
      if (dash == std::string::npos) throw std::invalid_argument("edge must look like x-y, got '" + e + "'");
      config.edges.emplace_back(std::stoi(e.substr(0, dash)), std::stoi(e.substr(dash + 1)));
    }
  } else {
    throw std::invalid_argument("unknown graph '" + config.graph + "'");
  }

  config.p_desc = params.get_string("P", "uniform");
  if (config.p_desc == "uniform") {
    config.p.assign(static_cast<std::size_t>(config.r_size), Rational(1, config.r_size));
  } else {
    for (const std::string& v : split(config.p_desc, ',')) config.p.push_back(parse_rational(v));
    config.p_desc = "explicit";
  }

  const BobParams derived = compute_params(config.k, config.delta);
  config.c = params.has("c") ? to_double(params.get_rational("c", 0)) : derived.c;
  config.l = static_cast<int>(params.get_int("l", derived.l));
  config.validate();
  return config;
}

ELState::ELState(const ELConfig& config)
    : weights(static_cast<std::size_t>(config.l_size), 0),
      marked_l(static_cast<std::size_t>(config.l_size), false),
      marked_r(static_cast<std::size_t>(config.r_size), false),
      neighbor_weight(static_cast<std::size_t>(config.r_size), 0),
      marked_neighbors(static_cast<std::size_t>(config.r_size), 0) {}

EpsLevGame::EpsLevGame(ELConfig config) : config_(std::move(config)), state_(checked(config_)) {
  r_adj_.resize(static_cast<std::size_t>(config_.r_size));
  l_adj_.resize(static_cast<std::size_t>(config_.l_size));
  std::set<std::pair<int, int>> seen(config_.edges.begin(), config_.edges.end());
  for (const auto& [x, y] : seen) {
    r_adj_[static_cast<std::size_t>(y)].push_back(x);
    l_adj_[static_cast<std::size_t>(x)].push_back(y);
  }
}

Json EpsLevGame::params() const {
  Json j{{"L", config_.l_size}, {"R", config_.r_size}, {"graph", config_.graph}};
  if (config_.graph == "explicit") {
    Json edges = Json::array();
    for (const auto& [x, y] : config_.edges) edges.push_back(Json::array({x, y}));
    j["edges"] = std::move(edges);
  }
  if (config_.p_desc == "uniform") {
    j["P"] = "uniform";
  } else {
    Json p = Json::array();
    for (const Rational& v : config_.p) p.push_back(rational_to_json(v));
    j["P"] = std::move(p);
  }
  j["k"] = config_.k;
  j["delta"] = rational_to_json(config_.delta);
  j["c"] = config_.c;
  j["l"] = config_.l;
  j["m_min"] = config_.m_min;
  return j;
}

void EpsLevGame::apply(Actor actor, const Move& move) {
  ELState& s = state_;
  if (actor == Actor::kAlice) {
    if (!move.mark_l.empty() || !move.mark_r.empty()) throw IllegalMove(actor, "Alice may not mark vertices");
    s.pending.reset();
    if (!move.raise) return;
    const Event e = *move.raise;
    if (e.vertex < 0 || e.vertex >= config_.l_size) throw IllegalMove(actor, "vertex out of range");
    if (e.exponent < 0 || e.exponent > config_.m_min) throw IllegalMove(actor, "increment is not an allowed power of two");
    const std::uint64_t units = std::uint64_t{1} << (config_.m_min - e.exponent);
    if (s.total_weight + units > cap_units()) throw IllegalMove(actor, "total weight would exceed 2");
    s.weights[static_cast<std::size_t>(e.vertex)] += units;
    s.total_weight += units;
    for (int y : l_adj_[static_cast<std::size_t>(e.vertex)]) s.neighbor_weight[static_cast<std::size_t>(y)] += units;
    s.event_log.push_back(e);
    s.pending = e;
    return;
  }
  if (move.raise) throw IllegalMove(actor, "Bob may not raise weights");
  if (sorted_unique(move.mark_l).size() != move.mark_l.size() || sorted_unique(move.mark_r).size() != move.mark_r.size()) {
    throw IllegalMove(actor, "vertex marked twice in one move");
  }
  for (int x : move.mark_l) {
    if (x < 0 || x >= config_.l_size || s.marked_l[static_cast<std::size_t>(x)]) {
      throw IllegalMove(actor, "bad L mark " + std::to_string(x));
    }
    s.marked_l[static_cast<std::size_t>(x)] = true;
    ++s.marked_l_count;
    for (int y : l_adj_[static_cast<std::size_t>(x)]) ++s.marked_neighbors[static_cast<std::size_t>(y)];
  }
  for (int y : move.mark_r) {
    if (y < 0 || y >= config_.r_size || s.marked_r[static_cast<std::size_t>(y)]) {
      throw IllegalMove(actor, "bad R mark " + std::to_string(y));
    }
    s.marked_r[static_cast<std::size_t>(y)] = true;
    s.r_measure += config_.p[static_cast<std::size_t>(y)];
  }
  s.pending.reset();
  for (int y = 0; y < config_.r_size; ++y) {
    const auto i = static_cast<std::size_t>(y);
    if (!s.marked_r[i] && s.marked_neighbors[i] == 0 && s.neighbor_weight[i] >= threshold_units()) {
      ++s.coverage_lapses;
      break;
    }
  }
}

Verdict EpsLevGame::verdict() const { return check_bob_outcome(*this).verdict(); }

Json EpsLevGame::state_json() const {
  Json weights = Json::array();
  for (std::uint64_t w : state_.weights) {
    weights.push_back(rational_to_json(Rational(w) * pow2_inverse(config_.m_min)));
  }
  Json ml = Json::array();
  for (int x = 0; x < config_.l_size; ++x) {
    if (state_.marked_l[static_cast<std::size_t>(x)]) ml.push_back(x);
  }
  Json mr = Json::array();
  for (int y = 0; y < config_.r_size; ++y) {
    if (state_.marked_r[static_cast<std::size_t>(y)]) mr.push_back(y);
  }
  return Json{{"weights", std::move(weights)},
              {"marked_l", std::move(ml)},
              {"marked_r", std::move(mr)},
              {"r_measure", rational_to_json(state_.r_measure)}};
}

Json EpsLevGame::encode(const Move& move) const {
  if (move.is_pass()) return pass_payload();
  if (move.raise) return Json{{"raise", Json{{"vertex", move.raise->vertex}, {"exponent", move.raise->exponent}}}};
  return Json{{"mark_l", move.mark_l}, {"mark_r", move.mark_r}};
}

Move EpsLevGame::decode(Actor actor, const Json& payload) const {
  Move move;
  if (is_pass_payload(payload)) return move;
  if (actor == Actor::kAlice) {
    const Json& r = payload.at("raise");
    move.raise = Event{r.at("vertex").get<int>(), r.at("exponent").get<int>()};
    return move;
  }
  move.mark_l = payload.at("mark_l").get<std::vector<int>>();
  move.mark_r = payload.at("mark_r").get<std::vector<int>>();
  return move;
}

Move bob_step(const EpsLevGame& game, Rng& rng) {
  const ELConfig& config = game.config();
  const ELState& s = game.state();
  Move move;
  std::optional<int> newly_marked;
  if (s.pending) {
    const double draw = rng.uniform01();
    const int x = s.pending->vertex;
    if (draw < mark_probability(config, s.pending->exponent) && !s.marked_l[static_cast<std::size_t>(x)]) {
      move.mark_l.push_back(x);
      newly_marked = x;
    }
  }
  for (int y = 0; y < config.r_size; ++y) {
    const auto i = static_cast<std::size_t>(y);
    if (s.marked_r[i] || s.neighbor_weight[i] < game.threshold_units()) continue;
    int marked = s.marked_neighbors[i];
    if (newly_marked) {
      const auto& adj = game.r_neighbors()[i];
      if (std::find(adj.begin(), adj.end(), *newly_marked) != adj.end()) ++marked;
    }
    if (marked == 0) move.mark_r.push_back(y);
  }
  return move;
}

Outcome check_bob_outcome(const EpsLevGame& game) {
  const ELConfig& config = game.config();
  const ELState& s = game.state();
  Outcome out;
  for (int y = 0; y < config.r_size; ++y) {
    const auto i = static_cast<std::size_t>(y);
    if (s.neighbor_weight[i] > game.threshold_units() && !s.marked_r[i] && s.marked_neighbors[i] == 0) {
      out.coverage = false;
    }
  }
  out.l_within = s.marked_l_count <= config.l;
  out.r_within = s.r_measure <= config.delta;
  return out;
}

Move ReferenceBob::next_move(const EpsLevGame& game, Rng& rng) { return bob_step(game, rng); }

AliceKind alice_kind_from_string(std::string_view name) {
  if (name == "concentrated") return AliceKind::kConcentrated;
  if (name == "spread") return AliceKind::kSpread;
  if (name == "anti-coin" || name == "anticoin") return AliceKind::kAntiCoin;
  throw std::invalid_argument("unknown epslev adversary '" + std::string(name) + "'");
}

std::string_view to_string(AliceKind kind) {
  switch (kind) {
    case AliceKind::kConcentrated: return "concentrated";
    case AliceKind::kSpread: return "spread";
    case AliceKind::kAntiCoin: return "anti-coin";
  }
  return "?";
}

Move ConcentratedAlice::next_move(const EpsLevGame& game, Rng&) {
  const ELState& s = game.state();
  const int k = game.config().k;
  const std::uint64_t units = game.threshold_units();
  Move move;
  for (int x = 0; x < game.config().l_size; ++x) {
    if (s.weights[static_cast<std::size_t>(x)] == 0) {
      if (s.total_weight + units <= game.cap_units()) move.raise = Event{x, k};
      break;
    }
  }
  return move;
}

Move SpreadAlice::next_move(const EpsLevGame& game, Rng&) {
  const ELConfig& config = game.config();
  const ELState& s = game.state();
  Move move;
  if (s.total_weight + 1 > game.cap_units()) return move;
  while (target_ < config.r_size) {
    const auto& adj = game.r_neighbors()[static_cast<std::size_t>(target_)];
    if (!adj.empty() && s.neighbor_weight[static_cast<std::size_t>(target_)] < game.threshold_units()) {
      move.raise = Event{adj[turn_++ % adj.size()], config.m_min};
      return move;
    }
    ++target_;
    turn_ = 0;
  }
  return move;
}

Move AntiCoinAlice::next_move(const EpsLevGame& game, Rng&) {
  const ELConfig& config = game.config();
  const ELState& s = game.state();
  Move move;
  if (s.total_weight + 1 > game.cap_units()) return move;
  for (int y = 0; y < config.r_size; ++y) {
    const auto i = static_cast<std::size_t>(y);
    if (s.marked_r[i] || s.marked_neighbors[i] > 0 || s.neighbor_weight[i] >= game.threshold_units()) continue;
    std::optional<int> best;
    for (int x : game.r_neighbors()[i]) {
      if (!best || s.weights[static_cast<std::size_t>(x)] < s.weights[static_cast<std::size_t>(*best)]) best = x;
    }
    if (best) {
      move.raise = Event{*best, config.m_min};
      return move;
    }
  }
  return move;
}

std::unique_ptr<Strategy<EpsLevGame>> make_alice(AliceKind kind) {
  switch (kind) {
    case AliceKind::kConcentrated: return std::make_unique<ConcentratedAlice>();
    case AliceKind::kSpread: return std::make_unique<SpreadAlice>();
    case AliceKind::kAntiCoin: return std::make_unique<AntiCoinAlice>();
  }
  throw std::invalid_argument("unknown epslev adversary");
}

Budget default_budget(const ELConfig& config) {
  return Budget{.max_rounds = (2 << config.m_min) + 4, .grace_rounds = 1};
}

Json to_json(const WinRate& rate) {
  return Json{{"trials", rate.trials},
              {"win_rate", rate.win_rate},
              {"l_breach_rate", rate.l_breach_rate},
              {"r_breach_rate", rate.r_breach_rate},
              {"coverage_fail_rate", rate.coverage_fail_rate},
              {"coverage_lapses", rate.coverage_lapses},
              {"mean_marked_l", rate.mean_marked_l},
              {"mean_r_measure", rate.mean_r_measure}};
}

WinRate estimate_win_rate(const ELConfig& config, AliceKind alice_kind, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  WinRate out;
  out.trials = trials;
  int wins = 0, l_breach = 0, r_breach = 0, coverage_fail = 0;
  double marked_l = 0.0, r_measure = 0.0;
  const Budget budget = default_budget(config);
  for (int i = 0; i < trials; ++i) {
    EpsLevGame game(config);
    auto alice = make_alice(alice_kind);
    ReferenceBob bob;
    run_game(game, *alice, bob, budget, derive_seed(seed, static_cast<std::uint64_t>(i)), RunOptions{.record_moves = false});
    const Outcome o = check_bob_outcome(game);
    wins += o.verdict() == Verdict::kBobWins ? 1 : 0;
    l_breach += o.l_within ? 0 : 1;
    r_breach += o.r_within ? 0 : 1;
    coverage_fail += o.coverage ? 0 : 1;
    out.coverage_lapses += game.state().coverage_lapses;
    marked_l += game.state().marked_l_count;
    r_measure += to_double(game.state().r_measure);
  }
  const double n = trials;
  out.win_rate = wins / n;
  out.l_breach_rate = l_breach / n;
  out.r_breach_rate = r_breach / n;
  out.coverage_fail_rate = coverage_fail / n;
  out.mean_marked_l = marked_l / n;
  out.mean_r_measure = r_measure / n;
  return out;
}

namespace {

Rational no_success_from(const CoinNode& node, const Rational& scale, const Rational& t,
                         const Rational& sum, int depth, int max_depth) {
  if (depth > max_depth) throw DepthExceeded("coin tree deeper than " + std::to_string(max_depth));
  Rational best = 0;
  for (const CoinOption& option : node.options) {
    if (option.epsilon < 0 || option.epsilon > 1) throw std::invalid_argument("epsilon outside [0, 1]");
    Rational p = scale * option.epsilon;
    if (p > 1) p = 1;
    const Rational next = sum + option.epsilon;
    Rational tail = 0;
    if (next >= t) {
      tail = 1;
    } else if (option.child) {
      tail = no_success_from(*option.child, scale, t, next, depth + 1, max_depth);
    }
    Rational value = (1 - p) * tail;
    if (value > best) best = value;
  }
  return best;
}

}  // namespace

Rational no_success_probability(const CoinNode& root, const Rational& scale, const Rational& t, int max_depth) {
  if (scale < 0) throw std::invalid_argument("scale must be nonnegative");
  if (t <= 0) return 1;
  return no_success_from(root, scale, t, 0, 1, max_depth);
}

std::shared_ptr<const CoinNode> chain_tree(const std::vector<Rational>& epsilons) {
  std::shared_ptr<const CoinNode> node;
  for (auto it = epsilons.rbegin(); it != epsilons.rend(); ++it) {
    auto parent = std::make_shared<CoinNode>();
    parent->options.push_back({*it, node});
    node = std::move(parent);
  }
  return node ? node : std::make_shared<const CoinNode>();
}

std::shared_ptr<const CoinNode> grid_tree(const std::vector<Rational>& grid, int depth) {
  std::shared_ptr<const CoinNode> node;
  for (int level = 0; level < depth; ++level) {
    auto parent = std::make_shared<CoinNode>();
    for (const Rational& e : grid) parent->options.push_back({e, node});
    node = std::move(parent);
  }
  return node ? node : std::make_shared<const CoinNode>();
}

}  // namespace gamelab::epslev
