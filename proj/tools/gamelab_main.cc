// gamelab: play the games, run acceptance suites, sweep parameter grids and
// evaluate the exact oracles from the command line.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gamelab/epslev.h"
#include "gamelab/runner.h"
#include "gamelab/suites.h"
#include "gamelab/totalcond.h"

namespace {

using gamelab::Json;
using gamelab::ParamMap;

// Bad command lines exit 2; everything that parsed but misbehaved is
// reported through this.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("GAMELAB_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw UsageError(std::string("GAMELAB_SEED is not an integer: ") + env);
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, sep)) out.push_back(piece);
  return out;
}

// Leftover "--key value" and "--key=value" tokens become game parameters.
void absorb_extras(const std::vector<std::string>& extras, ParamMap& params) {
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string& token = extras[i];
    if (token.rfind("--", 0) != 0 || token.size() < 3) throw UsageError("unexpected argument '" + token + "'");
    const std::string body = token.substr(2);
    if (const auto eq = body.find('='); eq != std::string::npos) {
      params.set(body.substr(0, eq), body.substr(eq + 1));
    } else if (i + 1 < extras.size() && extras[i + 1].rfind("--", 0) != 0) {
      params.set(body, extras[++i]);
    } else {
      throw UsageError("parameter --" + body + " needs a value");
    }
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text << "\n";
}

struct RunArgs {
  std::string game;
  std::string adversary;
  std::string config;
  std::vector<std::string> sets;
  int trials = 1;
  std::uint64_t seed = 0;
  std::string output;
};

int do_run(const RunArgs& args, const std::vector<std::string>& extras) {
  gamelab::RunSpec spec;
  spec.game = args.game;
  spec.adversary = args.adversary;
  spec.trials = args.trials;
  spec.seed = args.seed;
  spec.output_path = args.output;
  if (!args.config.empty()) spec.params.merge_file(args.config);
  for (const std::string& s : args.sets) spec.params.set(s);
  absorb_extras(extras, spec.params);
  if (spec.trials < 1) throw UsageError("--trials must be positive");

  if (spec.trials == 1) {
    const gamelab::RunResult r = gamelab::run_single(spec.game, spec.params, spec.adversary, spec.seed);
    write_text(spec.output_path, gamelab::to_json(r.trace).dump(2));
    // The summary goes to stderr when the trace itself is on stdout.
    std::ostream& side = spec.output_path.empty() || spec.output_path == "-" ? std::cerr : std::cout;
    side << r.summary.dump() << "\n";
    return 0;
  }
  std::ostringstream lines;
  for (int i = 0; i < spec.trials; ++i) {
    const std::uint64_t seed = spec.seed + static_cast<std::uint64_t>(i);
    const gamelab::RunResult r = gamelab::run_single(spec.game, spec.params, spec.adversary, seed, false);
    Json line{{"seed", seed}};
    line["summary"] = r.summary;
    lines << line.dump() << (i + 1 < spec.trials ? "\n" : "");
  }
  write_text(spec.output_path, lines.str());
  return 0;
}

int do_verify(const std::string& suite) {
  std::vector<int> ids;
  try {
    ids = gamelab::suite_criteria(suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool all = true;
  for (const gamelab::CriterionResult& r : gamelab::run_criteria(ids)) {
    std::cout << gamelab::format_result(r) << std::endl;
    all = all && r.passed;
  }
  return all ? 0 : 1;
}

struct SweepArgs {
  std::string game;
  std::string adversary;
  std::string config;
  std::vector<std::string> sets;
  std::vector<std::string> grid;
  int trials = 10;
  std::uint64_t seed = 0;
  std::string output;
};

int do_sweep(const SweepArgs& args, const std::vector<std::string>& extras) {
  ParamMap base;
  if (!args.config.empty()) base.merge_file(args.config);
  for (const std::string& s : args.sets) base.set(s);
  absorb_extras(extras, base);
  if (args.trials < 1) throw UsageError("--trials must be positive");

  // Cartesian product of "key=v1,v2,..." axes, first axis slowest.
  std::vector<ParamMap> cells{base};
  for (const std::string& axis : args.grid) {
    const auto eq = axis.find('=');
    if (eq == std::string::npos) throw UsageError("--grid expects key=v1,v2,...: '" + axis + "'");
    const std::string key = axis.substr(0, eq);
    std::vector<ParamMap> next;
    for (const ParamMap& cell : cells) {
      for (const std::string& v : split(axis.substr(eq + 1), ',')) {
        ParamMap p = cell;
        p.set(key, v);
        next.push_back(std::move(p));
      }
    }
    cells = std::move(next);
  }

  auto run_cell = [&](const ParamMap& p) {
    Json verdicts = Json::object();
    for (int i = 0; i < args.trials; ++i) {
      const auto r = gamelab::run_single(args.game, p, args.adversary, args.seed + static_cast<std::uint64_t>(i), false);
      const std::string v = r.summary.value("verdict", "unknown");
      verdicts[v] = verdicts.value(v, 0) + 1;
    }
    Json line{{"game", args.game}, {"params", Json(p.values())}, {"trials", args.trials}};
    line["verdicts"] = verdicts;
    return line.dump();
  };
  std::vector<std::future<std::string>> futures;
  for (const ParamMap& cell : cells) futures.push_back(std::async(std::launch::async, run_cell, cell));
  std::ostringstream lines;
  for (std::size_t i = 0; i < futures.size(); ++i) lines << futures[i].get() << (i + 1 < futures.size() ? "\n" : "");
  write_text(args.output, lines.str());
  return 0;
}

// "--coin-tree depth=2 eps=0.5,0.5 scale=1 t=1": eps is a fixed chain,
// grid lets the opponent pick from the values at every level.
int do_coin_tree(const std::vector<std::string>& terms) {
  ParamMap p;
  for (const std::string& t : terms) {
    if (t.find('=') == std::string::npos) throw UsageError("coin-tree terms are key=value: '" + t + "'");
    p.set(t);
  }
  for (const auto& [key, value] : p.values()) {
    if (key != "depth" && key != "eps" && key != "grid" && key != "scale" && key != "t") {
      throw UsageError("unknown coin-tree key '" + key + "'");
    }
  }
  if (p.has("eps") == p.has("grid")) throw UsageError("give exactly one of eps= or grid=");
  std::vector<gamelab::Rational> values;
  for (const std::string& v : split(p.get_string(p.has("eps") ? "eps" : "grid", ""), ',')) {
    values.push_back(gamelab::parse_rational(v));
  }
  const gamelab::Rational scale = p.get_rational("scale", gamelab::Rational(1));
  const gamelab::Rational t = p.get_rational("t", gamelab::Rational(1));
  std::shared_ptr<const gamelab::epslev::CoinNode> tree;
  if (p.has("eps")) {
    const auto depth = p.get_int("depth", static_cast<std::int64_t>(values.size()));
    if (depth != static_cast<std::int64_t>(values.size())) throw UsageError("depth must equal the number of eps values");
    tree = gamelab::epslev::chain_tree(values);
  } else {
    if (!p.has("depth")) throw UsageError("grid= needs depth=");
    tree = gamelab::epslev::grid_tree(values, static_cast<int>(p.get_int("depth", 0)));
  }
  std::cout << gamelab::format_rational(gamelab::epslev::no_success_probability(*tree, scale, t)) << "\n";
  return 0;
}

int do_totalcond_tree(int n, int max_rounds) {
  const auto r = gamelab::totalcond::search_game_tree(n, max_rounds);
  std::cout << Json{{"n", n},
                    {"max_rounds", max_rounds},
                    {"leaves", r.leaves},
                    {"alice_wins", r.alice_wins},
                    {"max_list_length", r.max_list_length},
                    {"max_arity", r.max_arity}}
                   .dump()
            << "\n";
  return r.alice_wins_everywhere() ? 0 : 1;
}

int do_replay(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  const gamelab::GameTrace trace = gamelab::trace_from_json(Json::parse(in));
  const gamelab::Verdict v = gamelab::replay(trace);
  std::cout << "recorded " << gamelab::to_string(trace.verdict) << ", replayed " << gamelab::to_string(v) << "\n";
  return v == trace.verdict ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulate and check two-player computability games"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  try {
    seed = default_seed();
  } catch (const UsageError& e) {
    std::cerr << "gamelab: " << e.what() << "\n";
    return 2;
  }

  RunArgs run_args;
  run_args.seed = seed;
  CLI::App* run = app.add_subcommand("run", "Play one game and write its trace");
  run->allow_extras();
  run->add_option("--game", run_args.game, "friedberg, totalcond, permgame, epslev or infodist")->required();
  run->add_option("--adversary", run_args.adversary, "Adversary kind; game default when omitted");
  run->add_option("--config", run_args.config, "key=value parameter file");
  run->add_option("--set", run_args.sets, "Parameter override key=value");
  run->add_option("--trials", run_args.trials, "Number of consecutive seeds");
  run->add_option("--seed", run_args.seed, "Seed (default GAMELAB_SEED or 0)");
  run->add_option("--output,-o", run_args.output, "Trace file; stdout when omitted");

  std::string suite;
  CLI::App* verify = app.add_subcommand("verify", "Run an acceptance suite");
  verify->add_option("--suite", suite, "Suite name")->required();

  SweepArgs sweep_args;
  sweep_args.seed = seed;
  CLI::App* sweep = app.add_subcommand("sweep", "Play a parameter grid, one summary line per cell");
  sweep->allow_extras();
  sweep->add_option("--game", sweep_args.game, "Game")->required();
  sweep->add_option("--adversary", sweep_args.adversary, "Adversary kind");
  sweep->add_option("--config", sweep_args.config, "key=value parameter file");
  sweep->add_option("--set", sweep_args.sets, "Parameter override key=value");
  sweep->add_option("--grid", sweep_args.grid, "Axis key=v1,v2,...")->required();
  sweep->add_option("--trials", sweep_args.trials, "Seeds per cell");
  sweep->add_option("--seed", sweep_args.seed, "First seed");
  sweep->add_option("--output,-o", sweep_args.output, "Output file; stdout when omitted");

  std::vector<std::string> coin_terms;
  int tc_n = 1, tc_rounds = 8;
  CLI::App* oracle = app.add_subcommand("oracle", "Evaluate an exact oracle");
  auto* coin_opt = oracle->add_option("--coin-tree", coin_terms, "depth=D eps=e1,e2,... | grid=g1,... scale=S t=T")
                       ->expected(1, -1);
  auto* tc_opt = oracle->add_flag("--totalcond-tree", "Exhaustive totalcond game-tree search");
  oracle->add_option("--n", tc_n, "Word length for --totalcond-tree");
  oracle->add_option("--max-rounds", tc_rounds, "Round limit for --totalcond-tree");
  coin_opt->excludes(tc_opt);

  std::string trace_path;
  CLI::App* replay = app.add_subcommand("replay", "Replay a trace and compare verdicts");
  replay->add_option("trace", trace_path, "Trace JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run) return do_run(run_args, run->remaining());
    if (*verify) return do_verify(suite);
    if (*sweep) return do_sweep(sweep_args, sweep->remaining());
    if (*oracle) {
      if (*coin_opt) return do_coin_tree(coin_terms);
      if (*tc_opt) return do_totalcond_tree(tc_n, tc_rounds);
      throw UsageError("oracle needs --coin-tree or --totalcond-tree");
    }
    if (*replay) return do_replay(trace_path);
  } catch (const UsageError& e) {
    std::cerr << "gamelab: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "gamelab: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "gamelab: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
