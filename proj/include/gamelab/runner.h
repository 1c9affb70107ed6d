#pragma once

// Builds any of the five games from string parameters, plays it against a
// named adversary, and replays recorded traces.

#include <cstdint>
#include <string>
#include <vector>

#include "gamelab/engine.h"
#include "gamelab/params.h"

namespace gamelab {

struct RunSpec {
  std::string game;
  ParamMap params;
  // Empty picks the game's default adversary.
  std::string adversary;
  int trials = 1;
  std::uint64_t seed = 0;
  std::string output_path;
};

const std::vector<std::string>& game_names();
const std::vector<std::string>& adversary_kinds(const std::string& game);
std::string default_adversary(const std::string& game);

struct RunResult {
  GameTrace trace;
  // Game-specific numbers plus the verdict.
  Json summary;
};

// Throws std::invalid_argument on an unknown game, adversary or parameter.
RunResult run_single(const std::string& game, const ParamMap& params,
                     const std::string& adversary, std::uint64_t seed,
                     bool record_moves = true);

// Rebuilds the game from the trace header and re-applies every move.
Verdict replay(const GameTrace& trace);

// Trace parameters as strings that run_single accepts again.
ParamMap params_from_json(const Json& params);

}  // namespace gamelab
