#include "gamelab/suites.h"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "gamelab/epslev.h"
#include "gamelab/friedberg.h"
#include "gamelab/infodist.h"
#include "gamelab/permgame.h"
#include "gamelab/runner.h"
#include "gamelab/totalcond.h"

namespace gamelab {
namespace {

struct Check {
  bool ok = true;
  std::string first_failure;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

std::string seed_note(std::uint64_t seed) { return " (seed " + std::to_string(seed) + ")"; }

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

// --- 1: totalcond exhaustive tree

CriterionResult totalcond_exhaustive() {
  CriterionResult r{1, "totalcond exhaustive n=1", false, "", 0, 1.0, {}};
  const totalcond::TreeSearchResult t = totalcond::search_game_tree(1, 8);
  Check c;
  c.expect(t.leaves > 0, "no leaves searched");
  c.expect(t.alice_wins == t.leaves, "Bob won " + std::to_string(t.leaves - t.alice_wins) + " leaves");
  c.expect(t.max_list_length <= 1, "Bob listed more than one function");
  c.expect(t.max_arity == 5, "Bob's turns did not offer pass plus all 4 functions");
  r.passed = c.ok;
  r.detail = std::to_string(t.alice_wins) + "/" + std::to_string(t.leaves) + " leaves won by Alice";
  if (!c.ok) r.detail += "; " + c.first_failure;
  r.data = Json{{"leaves", t.leaves}, {"alice_wins", t.alice_wins}, {"max_list_length", t.max_list_length},
                {"max_arity", t.max_arity}};
  return r;
}

// --- 2: totalcond randomized

// Reads the trace on its own: Alice wins iff some defined point escapes
// every listed function.
bool alice_escapes(const GameTrace& trace) {
  std::map<std::string, std::string> defined;
  std::vector<std::vector<std::string>> listed;
  for (const MoveRecord& m : trace.moves) {
    if (m.payload.contains("define")) {
      for (const Json& p : m.payload["define"]) defined[p[0].get<std::string>()] = p[1].get<std::string>();
    }
    if (m.payload.contains("list")) {
      for (const Json& f : m.payload["list"]) listed.push_back(f.get<std::vector<std::string>>());
    }
  }
  for (const auto& [y, x] : defined) {
    const auto input = static_cast<std::size_t>(std::stoul(y, nullptr, 2));
    bool hit = false;
    for (const auto& f : listed) hit = hit || f.at(input) == x;
    if (!hit) return true;
  }
  return false;
}

CriterionResult totalcond_random() {
  CriterionResult r{2, "totalcond randomized n in {2,3}", false, "", 0, 30.0, Json::array()};
  Check c;
  int games = 0, wins = 0;
  for (int n : {2, 3}) {
    for (const std::string bob : {"greedy", "random"}) {
      ParamMap p;
      p.set("n", std::to_string(n));
      int cell_wins = 0;
      std::uint64_t digest = 0;
      for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        const RunResult run = run_single("totalcond", p, bob, seed);
        ++games;
        const bool won = run.trace.verdict == Verdict::kAliceWins;
        cell_wins += won ? 1 : 0;
        c.expect(won, "Alice lost n=" + std::to_string(n) + " vs " + bob + seed_note(seed));
        c.expect(alice_escapes(run.trace) == won, "trace re-check disagrees" + seed_note(seed));
        digest ^= fingerprint(to_json(run.trace).dump()) + seed;
      }
      wins += cell_wins;
      r.data.push_back(Json{{"n", n}, {"bob", bob}, {"alice_wins", cell_wins}, {"traces", digest}});
    }
  }
  r.passed = c.ok;
  r.detail = std::to_string(wins) + "/" + std::to_string(games) + " games won by Alice";
  if (!c.ok) r.detail += "; " + c.first_failure;
  return r;
}

// --- 3, 4: permgame

CriterionResult permgame_lower() {
  CriterionResult r{3, "permgame lower bound", false, "", 0, 60.0, Json::array()};
  Check c;
  std::vector<std::string> summary;
  for (int k : {1, 2}) {
    const int n = 2 * k + 1;
    const std::size_t budget = std::size_t{1} << (2 * k - 2);
    const std::size_t needed = std::size_t{1} << (2 * k - 1);
    int wins = 0;
    std::size_t min_distinct = SIZE_MAX;
    std::uint64_t digest = 0;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
      permgame::PermGame limited(k, n, budget);
      permgame::ReferenceAlice alice;
      permgame::GreedyBob bob;
      const GameTrace t = run_game(limited, alice, bob, permgame::default_budget(k), seed);
      wins += t.verdict == Verdict::kAliceWins ? 1 : 0;
      c.expect(t.verdict == Verdict::kAliceWins, "Alice lost k=" + std::to_string(k) + seed_note(seed));
      for (const permgame::Pick& pick : limited.state().picks) {
        c.expect(4 * pick.connections <= pick.opposite_marked, "pick above the quarter bound" + seed_note(seed));
      }
      digest ^= fingerprint(to_json(t).dump()) + seed;

      permgame::PermGame open(k, n, std::nullopt);
      permgame::ReferenceAlice alice2;
      permgame::GreedyBob bob2;
      const GameTrace u = run_game(open, alice2, bob2, permgame::default_budget(k), seed);
      const std::size_t distinct = open.state().distinct_bijections();
      min_distinct = std::min(min_distinct, distinct);
      c.expect(u.verdict == Verdict::kBobWins, "unlimited Bob failed to cover" + seed_note(seed));
      c.expect(distinct >= needed, "only " + std::to_string(distinct) + " bijections for k=" + std::to_string(k) + seed_note(seed));
      c.expect(open.state().marked_x.size() == open.state().mark_limit() &&
                   open.state().marked_y.size() == open.state().mark_limit(),
               "Alice stopped before placing every mark" + seed_note(seed));
      digest ^= fingerprint(to_json(u).dump()) * 3 + seed;
    }
    summary.push_back("k=" + std::to_string(k) + ": Alice " + std::to_string(wins) + "/1000, min distinct " +
                      std::to_string(min_distinct) + " >= " + std::to_string(needed));
    r.data.push_back(Json{{"k", k}, {"alice_wins", wins}, {"min_distinct", min_distinct}, {"traces", digest}});
  }
  r.passed = c.ok;
  if (!c.ok) summary.push_back(c.first_failure);
  r.detail = join(summary);
  return r;
}

CriterionResult permgame_upper() {
  CriterionResult r{4, "permgame upper bound", false, "", 0, 0.0, Json::array()};
  Check c;
  std::vector<std::string> summary;
  for (int k : {1, 2}) {
    const std::size_t budget = std::size_t{1} << (2 * k);
    int wins = 0;
    std::uint64_t digest = 0;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
      permgame::PermGame game(k, 2 * k + 1, budget);
      permgame::ReferenceAlice alice;
      permgame::PairCoveringBob bob;
      const GameTrace t = run_game(game, alice, bob, permgame::default_budget(k), seed);
      wins += t.verdict == Verdict::kBobWins ? 1 : 0;
      c.expect(t.verdict == Verdict::kBobWins, "Bob lost k=" + std::to_string(k) + seed_note(seed));
      digest ^= fingerprint(to_json(t).dump()) + seed;
    }
    summary.push_back("k=" + std::to_string(k) + ": Bob " + std::to_string(wins) + "/1000");
    r.data.push_back(Json{{"k", k}, {"bob_wins", wins}, {"traces", digest}});
  }
  r.passed = c.ok;
  if (!c.ok) summary.push_back(c.first_failure);
  r.detail = join(summary);
  return r;
}

// --- 5: merge_total_programs

CriterionResult merge_programs() {
  CriterionResult r{5, "merge_total_programs", false, "", 0, 0.0, {}};
  Check c;
  Rng rng(derive_seed(5, 0));
  std::uint64_t digest = 0;
  std::size_t matched_total = 0;
  for (int n = 0; n <= 4; ++n) {
    const auto all = permgame::strings_up_to(n);
    permgame::StringMap id;
    for (const auto& s : all) id[s] = s;
    c.expect(permgame::merge_total_programs(id, id, n) == id, "identity not fixed at n=" + std::to_string(n));
  }
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = static_cast<int>(rng.below(5));
    const auto all = permgame::strings_up_to(n);
    permgame::StringMap p, q;
    for (const auto& s : all) p[s] = all[rng.below(all.size())];
    for (const auto& s : all) q[s] = all[rng.below(all.size())];
    // Plant inverse answers so matched pairs are common.
    for (const auto& s : all) {
      if (rng.bernoulli(0.5)) q[p[s]] = s;
    }
    const permgame::StringMap pi = permgame::merge_total_programs(p, q, n);
    std::set<std::string> image;
    for (const auto& [u, v] : pi) image.insert(v);
    c.expect(pi.size() == all.size() && image.size() == all.size() &&
                 std::all_of(all.begin(), all.end(), [&](const std::string& s) { return pi.contains(s) && image.contains(s); }),
             "output is not a permutation (trial " + std::to_string(trial) + ")");
    for (const auto& u : all) {
      if (q.at(p.at(u)) == u) {
        ++matched_total;
        c.expect(pi.at(u) == p.at(u), "matched pair not fixed (trial " + std::to_string(trial) + ")");
      }
    }
    std::string flat;
    for (const auto& [u, v] : pi) flat += u + ">" + v + ";";
    digest = digest * 1099511628211ULL ^ fingerprint(flat);
  }
  r.passed = c.ok;
  r.detail = "10000 random pairs, " + std::to_string(matched_total) + " matched pairs fixed";
  if (!c.ok) r.detail += "; " + c.first_failure;
  r.data = Json{{"matched_pairs", matched_total}, {"outputs", digest}};
  return r;
}

// --- 6: coin-toss oracle

// Opponent's best fixed sequence from `grid` of length <= depth, found by
// walking every sequence; returns one value per threshold.
std::vector<Rational> best_sequences(const std::vector<Rational>& grid, int depth, const std::vector<Rational>& ts) {
  std::vector<Rational> best(ts.size(), Rational(0));
  std::function<void(int, const Rational&, const Rational&, std::vector<bool>&)> walk =
      [&](int left, const Rational& sum, const Rational& survive, std::vector<bool>& settled) {
        if (left == 0) return;
        for (const Rational& e : grid) {
          const Rational p = e > 1 ? Rational(1) : e;
          const Rational s = sum + e;
          const Rational v = survive * (1 - p);
          std::vector<bool> now = settled;
          for (std::size_t i = 0; i < ts.size(); ++i) {
            if (!now[i] && s >= ts[i]) {
              if (v > best[i]) best[i] = v;
              now[i] = true;
            }
          }
          walk(left - 1, s, v, now);
        }
      };
  std::vector<bool> settled(ts.size(), false);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i] <= 0) {
      best[i] = 1;
      settled[i] = true;
    }
  }
  walk(depth, Rational(0), Rational(1), settled);
  return best;
}

CriterionResult coin_oracle() {
  CriterionResult r{6, "epslev coin-toss oracle", false, "", 0, 60.0, {}};
  Check c;
  const std::vector<Rational> grid{Rational(1, 8), Rational(1, 4), Rational(1, 2), Rational(1)};
  std::vector<Rational> ts;
  for (int i = 0; i <= 16; ++i) ts.push_back(Rational(i, 8));
  ts.push_back(Rational(3));
  double min_gap = 1.0;
  int cases = 0;
  std::uint64_t digest = 0;
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<Rational> subset;
    for (unsigned b = 0; b < 4; ++b) {
      if (mask & (1u << b)) subset.push_back(grid[b]);
    }
    for (int depth = 1; depth <= 6; ++depth) {
      const auto tree = epslev::grid_tree(subset, depth);
      const std::vector<Rational> brute = best_sequences(subset, depth, ts);
      for (std::size_t i = 0; i < ts.size(); ++i) {
        const Rational exact = epslev::no_success_probability(*tree, Rational(1), ts[i]);
        ++cases;
        digest = digest * 1099511628211ULL ^ fingerprint(format_rational(exact));
        c.expect(exact == brute[i], "tree value differs from sequence search at t=" + format_rational(ts[i]));
        const double bound = std::exp(-to_double(ts[i]));
        const double gap = bound - to_double(exact);
        c.expect(gap >= 0, "value above e^-t at t=" + format_rational(ts[i]));
        if (ts[i] == 0) {
          c.expect(exact == 1, "t=0 must give probability 1");
        } else {
          c.expect(gap > 0, "no gap at t=" + format_rational(ts[i]));
          min_gap = std::min(min_gap, gap);
        }
      }
    }
  }
  r.passed = c.ok;
  std::ostringstream detail;
  detail << cases << " (grid subset, depth, t) cases, smallest gap below e^-t for t>0: " << min_gap;
  r.detail = detail.str() + (c.ok ? "" : "; " + c.first_failure);
  r.data = Json{{"cases", cases}, {"values", digest}};
  return r;
}

// --- 7: epslev Monte Carlo

CriterionResult epslev_monte_carlo() {
  CriterionResult r{7, "epslev Monte Carlo", false, "", 0, 300.0, Json::array()};
  Check c;
  const int trials = 2000;
  // 3 sigma of a binomial rate at the 1/2 boundary.
  const double margin = 3.0 * std::sqrt(0.25 / trials);
  double worst_l = 0, worst_r = 0;
  for (int k : {1, 2}) {
    for (const Rational& delta : {Rational(1, 4), Rational(1, 8)}) {
      ParamMap p;
      p.set("L", "32");
      p.set("R", "32");
      p.set("graph", "circulant:4");
      p.set("P", "uniform");
      p.set("k", std::to_string(k));
      p.set("delta", format_rational(delta));
      const epslev::ELConfig config = epslev::config_from_params(p);
      for (epslev::AliceKind kind : {epslev::AliceKind::kConcentrated, epslev::AliceKind::kSpread, epslev::AliceKind::kAntiCoin}) {
        const std::uint64_t seed = derive_seed(7, static_cast<std::uint64_t>(k * 100 + static_cast<int>(kind)) + (delta == Rational(1, 4) ? 0 : 1000));
        const epslev::WinRate w = epslev::estimate_win_rate(config, kind, trials, seed);
        const std::string cell = "k=" + std::to_string(k) + " delta=" + format_rational(delta) + " " + std::string(epslev::to_string(kind));
        c.expect(w.l_breach_rate <= 0.5 - margin, "l breach rate " + std::to_string(w.l_breach_rate) + " at " + cell);
        c.expect(w.r_breach_rate <= 0.5 - margin, "r breach rate " + std::to_string(w.r_breach_rate) + " at " + cell);
        c.expect(w.coverage_fail_rate == 0 && w.coverage_lapses == 0, "coverage violated at " + cell);
        worst_l = std::max(worst_l, w.l_breach_rate);
        worst_r = std::max(worst_r, w.r_breach_rate);
        Json cell_json = to_json(w);
        cell_json["k"] = k;
        cell_json["delta"] = format_rational(delta);
        cell_json["l"] = config.l;
        cell_json["alice"] = epslev::to_string(kind);
        r.data.push_back(std::move(cell_json));
      }
    }
  }
  r.passed = c.ok;
  std::ostringstream detail;
  detail << "12 cells x " << trials << " trials; worst l_breach " << worst_l << ", worst r_breach " << worst_r
         << ", threshold " << 0.5 - margin << ", coverage violations 0";
  r.detail = c.ok ? detail.str() : c.first_failure;
  return r;
}

// --- 8: infodist

CriterionResult infodist_sweep() {
  CriterionResult r{8, "infodist clique agency", false, "", 0, 300.0, Json::array()};
  Check c;
  int games = 0, wins = 0;
  for (int m : {1, 2}) {
    for (int n : {1, 2}) {
      for (int N : {64, 256}) {
        for (infodist::BobKind kind : {infodist::BobKind::kGreedyDissolver, infodist::BobKind::kRandom,
                                       infodist::BobKind::kComplaintFocuser}) {
          const infodist::InfoConfig config{m, n, N, true};
          const std::string cell = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " N=" + std::to_string(N) +
                                   " " + std::string(infodist::to_string(kind));
          int cell_wins = 0, max_marked = 0, max_per_index = 0, max_deg = 0, max_out = 0;
          std::uint64_t digest = 0;
          for (std::uint64_t seed = 1; seed <= 200; ++seed) {
            infodist::InfoDistGame game(config);
            infodist::CliqueAgency alice(config);
            auto bob = infodist::make_bob(kind, alice);
            GameTrace t;
            try {
              t = run_game(game, alice, *bob, infodist::default_budget(config), seed);
            } catch (const std::exception& e) {
              c.expect(false, std::string("game aborted: ") + e.what() + " at " + cell + seed_note(seed));
              continue;
            }
            ++games;
            const infodist::InfoSummary s = infodist::summarize(game, alice);
            const bool won = t.verdict == Verdict::kAliceWins;
            cell_wins += won ? 1 : 0;
            c.expect(won, "Alice lost at " + cell + seed_note(seed));
            c.expect(infodist::check_alice_outcome(alice.state()) == t.verdict, "agency and referee disagree at " + cell);
            c.expect(check_quiescence(t, 2), "Bob had not gone quiet at " + cell + seed_note(seed));
            c.expect(s.max_marked_per_index <= config.per_index_mark_limit(), "per-index marks over 2m2^n at " + cell);
            c.expect(s.marked_count <= config.mark_limit(), "total marks over the limit at " + cell);
            c.expect(s.max_alice_degree <= config.alice_degree_limit(), "Alice degree over m(m+1)2^n at " + cell);
            c.expect(s.max_bob_out_degree < config.bob_degree_limit(), "Bob out-degree reached 2^n at " + cell);
            c.expect(s.max_memberships <= config.alice_degree_limit(), "a vertex changed cliques too often at " + cell);
            c.expect(infodist::free_pools_symmetric(alice.state()), "free pools lost symmetry at " + cell);
            max_marked = std::max(max_marked, s.marked_count);
            max_per_index = std::max(max_per_index, s.max_marked_per_index);
            max_deg = std::max(max_deg, s.max_alice_degree);
            max_out = std::max(max_out, s.max_bob_out_degree);
            digest ^= fingerprint(to_json(t).dump()) + seed;
          }
          wins += cell_wins;
          r.data.push_back(Json{{"m", m}, {"n", n}, {"N", N}, {"bob", infodist::to_string(kind)},
                                {"alice_wins", cell_wins}, {"max_marked", max_marked},
                                {"max_marked_per_index", max_per_index}, {"max_alice_degree", max_deg},
                                {"max_bob_out_degree", max_out}, {"traces", digest}});
        }
      }
    }
  }
  r.passed = c.ok;
  r.detail = std::to_string(wins) + "/" + std::to_string(games) + " games won by Alice, all running bounds held";
  if (!c.ok) r.detail = c.first_failure;
  return r;
}

// --- 9: friedberg

CriterionResult friedberg_sweep() {
  CriterionResult r{9, "friedberg numbering", false, "", 0, 60.0, Json::array()};
  Check c;
  std::vector<std::string> summary;
  for (friedberg::Mode mode : {friedberg::Mode::kKilling, friedberg::Mode::kOddRows}) {
    friedberg::FriedbergConfig config;
    config.rows_a = 4;
    config.cols = 3;
    config.alphabet = 2;
    config.mode = mode;
    config.max_rounds = 61;
    const std::string name(friedberg::to_string(mode));
    int wins = 0;
    std::uint64_t digest = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      friedberg::FriedbergGame game(config);
      friedberg::RandomQuiescingAlice alice(20);
      friedberg::ReferenceBob bob;
      GameTrace t;
      try {
        t = run_game(game, alice, bob, Budget{config.max_rounds, 40}, seed);
      } catch (const std::exception& e) {
        c.expect(false, name + " game aborted: " + e.what() + seed_note(seed));
        continue;
      }
      wins += t.verdict == Verdict::kBobWins ? 1 : 0;
      c.expect(t.verdict == Verdict::kBobWins, name + ": Alice won" + seed_note(seed));
      c.expect(check_quiescence(t, 40), name + ": Alice was still active at the end" + seed_note(seed));
      if (mode == friedberg::Mode::kOddRows) {
        const auto& b = game.state().b_table;
        const std::uint64_t total = friedberg::odd_row_count(config.cols, config.alphabet);
        c.expect(total == 14, "expected 14 odd rows over a 3x2 grid");
        for (std::uint64_t i = 0; i < total; ++i) {
          friedberg::Row odd = friedberg::nth_odd_row(config.cols, config.alphabet, i);
          odd.resize(static_cast<std::size_t>(b.cols()), friedberg::kEmpty);
          int copies = 0;
          for (int row = 0; row < b.rows(); ++row) copies += b.row(row) == odd ? 1 : 0;
          c.expect(copies == 1, "odd row " + std::to_string(i) + " appears " + std::to_string(copies) + " times" + seed_note(seed));
        }
      }
      digest ^= fingerprint(to_json(t).dump()) + seed;
    }
    summary.push_back(name + ": Bob " + std::to_string(wins) + "/100");
    r.data.push_back(Json{{"mode", name}, {"bob_wins", wins}, {"traces", digest}});
  }
  r.passed = c.ok;
  summary.push_back(c.ok ? "every odd grid row present exactly once" : c.first_failure);
  r.detail = join(summary);
  return r;
}

CriterionResult run_basic(int id) {
  switch (id) {
    case 1: return totalcond_exhaustive();
    case 2: return totalcond_random();
    case 3: return permgame_lower();
    case 4: return permgame_upper();
    case 5: return merge_programs();
    case 6: return coin_oracle();
    case 7: return epslev_monte_carlo();
    case 8: return infodist_sweep();
    case 9: return friedberg_sweep();
    default: break;
  }
  throw std::invalid_argument("unknown criterion " + std::to_string(id));
}

CriterionResult timed(int id) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = run_basic(id);
  } catch (const std::exception& e) {
    r.id = id;
    r.name = "criterion " + std::to_string(id);
    r.passed = false;
    r.detail = std::string("threw: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.passed && r.time_limit > 0 && r.seconds > r.time_limit) {
    r.passed = false;
    r.detail += "; over the time limit";
  }
  return r;
}

CriterionResult determinism(const std::map<int, CriterionResult>& first) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r{10, "determinism", true, "", 0, 0.0, Json::array()};
  int compared = 0;
  for (int id = 1; id <= 9; ++id) {
    auto it = first.find(id);
    const CriterionResult a = it != first.end() ? it->second : timed(id);
    const CriterionResult b = timed(id);
    const bool same = a.data.dump() == b.data.dump();
    ++compared;
    if (!same && r.passed) {
      r.passed = false;
      r.detail = "criterion " + std::to_string(id) + " produced different output on rerun";
    }
    r.data.push_back(Json{{"criterion", id}, {"identical", same}, {"fingerprint", fingerprint(a.data.dump())}});
  }
  if (r.passed) r.detail = "criteria 1-9 re-run with the same seeds; all " + std::to_string(compared) + " outputs byte-identical";
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::uint64_t fingerprint(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

CriterionResult run_criterion(int id) {
  if (id == 10) return determinism({});
  return timed(id);
}

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids) {
  std::vector<CriterionResult> out;
  std::map<int, CriterionResult> done;
  for (int id : ids) {
    if (id == 10) {
      out.push_back(determinism(done));
    } else {
      out.push_back(timed(id));
      done[id] = out.back();
    }
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"acceptance", "totalcond", "permgame-small", "epslev",
                                              "infodist",   "friedberg", "determinism"};
  return names;
}

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "acceptance") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  if (suite == "totalcond") return {1, 2};
  if (suite == "permgame-small") return {3, 4, 5};
  if (suite == "epslev") return {6, 7};
  if (suite == "infodist") return {8};
  if (suite == "friedberg") return {9};
  if (suite == "determinism") return {10};
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::string format_result(const CriterionResult& result) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << (result.passed ? "[PASS] " : "[FAIL] ") << result.id << " " << result.name << ": " << result.detail << " ("
      << result.seconds << " s";
  if (result.time_limit > 0) out << ", limit " << result.time_limit << " s";
  out << ")";
  return out.str();
}

}  // namespace gamelab
