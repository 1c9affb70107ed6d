#include "gamelab/runner.h"

#include <algorithm>
#include <map>

#include "gamelab/epslev.h"
#include "gamelab/friedberg.h"
#include "gamelab/infodist.h"
#include "gamelab/permgame.h"
#include "gamelab/totalcond.h"

namespace gamelab {
namespace {

void require_known(const std::string& game) {
  const auto& names = game_names();
  if (std::find(names.begin(), names.end(), game) == names.end()) {
    throw std::invalid_argument("unknown game '" + game + "'");
  }
}

std::string resolve_adversary(const std::string& game, const std::string& adversary) {
  const std::string kind = adversary.empty() ? default_adversary(game) : adversary;
  const auto& kinds = adversary_kinds(game);
  if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) {
    throw std::invalid_argument("unknown " + game + " adversary '" + kind + "'");
  }
  return kind;
}

int int_param(const ParamMap& p, const std::string& key, std::int64_t fallback) {
  return static_cast<int>(p.get_int(key, fallback));
}

// --- totalcond

totalcond::TotalCondGame make_totalcond(const ParamMap& p) {
  const int n = int_param(p, "n", 2);
  if (n < 1 || n > 4) throw std::invalid_argument("totalcond needs 1 <= n <= 4");
  return totalcond::TotalCondGame(n);
}

Budget totalcond_budget(const ParamMap& p, int n) {
  return Budget{int_param(p, "max_rounds", (2 << n) + 8), int_param(p, "grace", 3)};
}

RunResult run_totalcond(const ParamMap& p, const std::string& adversary, std::uint64_t seed, RunOptions opts) {
  totalcond::TotalCondGame game = make_totalcond(p);
  const int n = game.state().n;
  totalcond::ReferenceAlice alice;
  auto bob = totalcond::make_bob_adversary(totalcond::bob_kind_from_string(adversary), n);
  RunResult r;
  r.trace = run_game(game, alice, *bob, totalcond_budget(p, n), seed, opts);
  std::size_t defined = 0;
  for (const auto& v : game.state().a_func) defined += v ? 1 : 0;
  r.summary = Json{{"points_defined", defined},
                   {"functions_listed", game.state().bob_list.size()},
                   {"verdict", to_string(r.trace.verdict)}};
  return r;
}

// --- friedberg

friedberg::FriedbergConfig friedberg_config(const ParamMap& p) {
  friedberg::FriedbergConfig c;
  c.rows_a = int_param(p, "rows_a", c.rows_a);
  c.cols = int_param(p, "cols", c.cols);
  c.alphabet = int_param(p, "alphabet", c.alphabet);
  c.mode = friedberg::mode_from_string(p.get_string("mode", "killing"));
  const int active = int_param(p, "active", 20);
  const int grace = int_param(p, "grace", 40);
  c.max_rounds = int_param(p, "max_rounds", active + grace + 1);
  c.pad_cols = int_param(p, "pad_cols", c.pad_cols);
  c.rows_b = int_param(p, "rows_b", 0);
  return c;
}

RunResult run_friedberg(const ParamMap& p, const std::string&, std::uint64_t seed, RunOptions opts) {
  const friedberg::FriedbergConfig config = friedberg_config(p);
  friedberg::FriedbergGame game(config);
  friedberg::RandomQuiescingAlice alice(int_param(p, "active", 20));
  friedberg::ReferenceBob bob;
  RunResult r;
  r.trace = run_game(game, alice, bob, Budget{config.max_rounds, int_param(p, "grace", 40)}, seed, opts);
  const auto& s = game.state();
  int used = 0, retired = 0;
  for (int row = 0; row < s.b_table.rows(); ++row) {
    if (s.row_owner[static_cast<std::size_t>(row)] != friedberg::FriedbergState::kUnowned) ++used;
    if (s.killed_rows[static_cast<std::size_t>(row)]) ++retired;
  }
  r.summary = Json{{"b_rows_used", used}, {"b_rows_retired", retired}, {"bob_moves", s.bob_moves},
                   {"verdict", to_string(r.trace.verdict)}};
  return r;
}

// --- permgame

permgame::PermGame make_permgame(const ParamMap& p) {
  const int k = int_param(p, "k", 1);
  if (k < 1 || k > 4) throw std::invalid_argument("permgame needs 1 <= k <= 4");
  const int n = int_param(p, "n", 2 * k + 1);
  std::optional<std::size_t> budget = std::size_t{1} << (2 * k - 2);
  const std::string b = p.get_string("bob_budget", "");
  if (b == "unlimited" || b == "none") {
    budget.reset();
  } else if (!b.empty()) {
    const std::int64_t v = p.get_int("bob_budget", 0);
    if (v < 0) throw std::invalid_argument("bob_budget must be nonnegative");
    budget = static_cast<std::size_t>(v);
  }
  return permgame::PermGame(k, n, budget);
}

RunResult run_permgame(const ParamMap& p, const std::string& adversary, std::uint64_t seed, RunOptions opts) {
  permgame::PermGame game = make_permgame(p);
  permgame::ReferenceAlice alice;
  auto bob = permgame::make_bob(permgame::bob_kind_from_string(adversary));
  RunResult r;
  r.trace = run_game(game, alice, *bob, permgame::default_budget(game.state().k), seed, opts);
  r.summary = permgame::to_json(permgame::summarize(game));
  return r;
}

// --- epslev

RunResult run_epslev(const ParamMap& p, const std::string& adversary, std::uint64_t seed, RunOptions opts) {
  epslev::EpsLevGame game(epslev::config_from_params(p));
  auto alice = epslev::make_alice(epslev::alice_kind_from_string(adversary));
  epslev::ReferenceBob bob;
  RunResult r;
  r.trace = run_game(game, *alice, bob, epslev::default_budget(game.config()), seed, opts);
  const epslev::Outcome o = epslev::check_bob_outcome(game);
  r.summary = Json{{"marked_l", game.state().marked_l_count},
                   {"r_measure", rational_to_json(game.state().r_measure)},
                   {"coverage", o.coverage},
                   {"l_within", o.l_within},
                   {"r_within", o.r_within},
                   {"verdict", to_string(r.trace.verdict)}};
  return r;
}

// --- infodist

infodist::InfoConfig infodist_config(const ParamMap& p) {
  infodist::InfoConfig c;
  c.m = int_param(p, "m", c.m);
  c.n = int_param(p, "n", c.n);
  c.N = int_param(p, "N", c.N);
  c.one_way_spoils = p.get_bool("one_way_spoils", true);
  c.validate();
  return c;
}

RunResult run_infodist(const ParamMap& p, const std::string& adversary, std::uint64_t seed, RunOptions opts) {
  const infodist::InfoConfig config = infodist_config(p);
  infodist::InfoDistGame game(config);
  infodist::CliqueAgency alice(config);
  auto bob = infodist::make_bob(infodist::bob_kind_from_string(adversary), alice);
  Budget budget = infodist::default_budget(config);
  budget.grace_rounds = int_param(p, "grace", budget.grace_rounds);
  RunResult r;
  r.trace = run_game(game, alice, *bob, budget, seed, opts);
  r.summary = infodist::to_json(infodist::summarize(game, alice));
  return r;
}

template <typename Game>
Verdict replay_with(Game game, const GameTrace& trace) {
  return replay_trace(game, trace);
}

}  // namespace

const std::vector<std::string>& game_names() {
  static const std::vector<std::string> names{"friedberg", "totalcond", "permgame", "epslev", "infodist"};
  return names;
}

const std::vector<std::string>& adversary_kinds(const std::string& game) {
  static const std::map<std::string, std::vector<std::string>> kinds{
      {"friedberg", {"random-quiescing"}},
      {"totalcond", {"greedy", "random", "exhaustive-node"}},
      {"permgame", {"greedy", "pair-covering", "random"}},
      {"epslev", {"concentrated", "spread", "anti-coin"}},
      {"infodist", {"greedy-dissolver", "random", "complaint-focuser"}}};
  require_known(game);
  return kinds.at(game);
}

std::string default_adversary(const std::string& game) { return adversary_kinds(game).front(); }

RunResult run_single(const std::string& game, const ParamMap& params, const std::string& adversary,
                     std::uint64_t seed, bool record_moves) {
  require_known(game);
  const std::string kind = resolve_adversary(game, adversary);
  const RunOptions opts{.record_moves = record_moves};
  if (game == "totalcond") return run_totalcond(params, kind, seed, opts);
  if (game == "friedberg") return run_friedberg(params, kind, seed, opts);
  if (game == "permgame") return run_permgame(params, kind, seed, opts);
  if (game == "epslev") return run_epslev(params, kind, seed, opts);
  return run_infodist(params, kind, seed, opts);
}

ParamMap params_from_json(const Json& params) {
  ParamMap out;
  const auto flatten = [](const Json& v, const auto& self) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "unlimited";
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_object() && v.contains("num") && v.contains("den")) return format_rational(rational_from_json(v));
    if (v.is_array()) {
      std::string joined;
      for (const Json& item : v) {
        if (!joined.empty()) joined += ',';
        if (item.is_array()) {
          std::string pair;
          for (const Json& part : item) pair += (pair.empty() ? "" : "-") + self(part, self);
          joined += pair;
        } else {
          joined += self(item, self);
        }
      }
      return joined;
    }
    return v.dump();
  };
  for (const auto& [key, value] : params.items()) out.set(key, flatten(value, flatten));
  return out;
}

Verdict replay(const GameTrace& trace) {
  require_known(trace.game_id);
  const ParamMap p = params_from_json(trace.params);
  if (trace.game_id == "totalcond") return replay_with(make_totalcond(p), trace);
  if (trace.game_id == "friedberg") {
    friedberg::FriedbergConfig config = friedberg_config(p);
    config.max_rounds = int_param(p, "max_rounds", config.max_rounds);
    return replay_with(friedberg::FriedbergGame(config), trace);
  }
  if (trace.game_id == "permgame") return replay_with(make_permgame(p), trace);
  if (trace.game_id == "epslev") return replay_with(epslev::EpsLevGame(epslev::config_from_params(p)), trace);
  return replay_with(infodist::InfoDistGame(infodist_config(p)), trace);
}

}  // namespace gamelab
