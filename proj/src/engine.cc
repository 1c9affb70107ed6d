#include "gamelab/engine.h"

namespace gamelab {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
  return splitmix64(splitmix64(root) ^ index);
}

std::string_view to_string(Actor actor) {
  return actor == Actor::kAlice ? "Alice" : "Bob";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kAliceWins: return "AliceWins";
    case Verdict::kBobWins: return "BobWins";
    case Verdict::kUndecided: return "Undecided";
  }
  return "Undecided";
}

Actor actor_from_string(std::string_view text) {
  if (text == "Alice") return Actor::kAlice;
  if (text == "Bob") return Actor::kBob;
  throw std::invalid_argument("unknown actor '" + std::string(text) + "'");
}

Verdict verdict_from_string(std::string_view text) {
  if (text == "AliceWins") return Verdict::kAliceWins;
  if (text == "BobWins") return Verdict::kBobWins;
  if (text == "Undecided") return Verdict::kUndecided;
  throw std::invalid_argument("unknown verdict '" + std::string(text) + "'");
}

Json pass_payload() { return Json{{"pass", true}}; }

bool is_pass_payload(const Json& payload) { return payload == pass_payload(); }

Json to_json(const GameTrace& trace) {
  Json j = Json::object();
  j["game_id"] = trace.game_id;
  j["params"] = trace.params;
  j["seed"] = trace.seed;
  Json moves = Json::array();
  for (const MoveRecord& m : trace.moves) {
    Json jm = Json::object();
    jm["round"] = m.round;
    jm["actor"] = to_string(m.actor);
    jm["payload"] = m.payload;
    moves.push_back(std::move(jm));
  }
  j["moves"] = std::move(moves);
  j["verdict"] = to_string(trace.verdict);
  return j;
}

GameTrace trace_from_json(const Json& j) {
  GameTrace trace;
  trace.game_id = j.at("game_id").get<std::string>();
  trace.params = j.at("params");
  trace.seed = j.at("seed").get<std::uint64_t>();
  for (const Json& jm : j.at("moves")) {
    trace.moves.push_back({jm.at("round").get<std::uint64_t>(),
                           actor_from_string(jm.at("actor").get<std::string>()),
                           jm.at("payload")});
  }
  trace.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  return trace;
}

Actor designated_adversary(std::string_view game_id) {
  if (game_id == "friedberg" || game_id == "epslev") return Actor::kAlice;
  return Actor::kBob;
}

bool check_quiescence(const GameTrace& trace, int window, Actor adversary) {
  if (window < 1) throw std::invalid_argument("window must be positive");
  if (trace.moves.empty()) {
    throw std::invalid_argument("window exceeds recorded rounds");
  }
  const std::uint64_t last_round = trace.moves.back().round;
  if (static_cast<std::uint64_t>(window) > last_round + 1) {
    throw std::invalid_argument("window exceeds recorded rounds");
  }
  const std::uint64_t first_round = last_round + 1 - window;
  for (auto it = trace.moves.rbegin();
       it != trace.moves.rend() && it->round >= first_round; ++it) {
    if (it->actor == adversary && !is_pass_payload(it->payload)) return false;
  }
  return true;
}

bool check_quiescence(const GameTrace& trace, int window) {
  return check_quiescence(trace, window, designated_adversary(trace.game_id));
}

}  // namespace gamelab
