#include "gamelab/friedberg.h"

#include <algorithm>
#include <functional>
#include <numeric>

namespace gamelab::friedberg {
namespace {

// Calls fn on every k-subset of {0..n-1} in lexicographic order until fn
// returns true. Returns whether fn stopped the walk.
bool for_each_combination(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
  if (k > n || k < 0) return false;
  std::vector<int> combo(static_cast<std::size_t>(k));
  std::iota(combo.begin(), combo.end(), 0);
  while (true) {
    if (fn(combo)) return true;
    int i = k - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++combo[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Writes `code` as `len` base-`alphabet` digits, most significant first.
void decode_symbols(std::uint64_t code, int alphabet, std::vector<int>& out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<int>(code % static_cast<std::uint64_t>(alphabet));
    code /= static_cast<std::uint64_t>(alphabet);
  }
}

Json row_json(const Row& row) {
  Json j = Json::array();
  for (int v : row) j.push_back(v);
  return j;
}

Json cells_json(const std::vector<Cell>& cells) {
  Json j = Json::array();
  for (const Cell& c : cells) j.push_back(Json::array({c.row, c.col, c.symbol}));
  return j;
}

std::vector<Cell> cells_from_json(const Json& j) {
  std::vector<Cell> cells;
  for (const Json& c : j) {
    cells.push_back({c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<int>()});
  }
  return cells;
}

int count_filled(const Row& row) {
  return static_cast<int>(std::count_if(row.begin(), row.end(), [](int v) { return v != kEmpty; }));
}

}  // namespace

std::size_t RowHash::operator()(const Row& row) const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : row) {
    h ^= static_cast<std::size_t>(v + 2);
    h *= 0x100000001b3ULL;
  }
  return h;
}

PartialTable::PartialTable(int rows, int cols, int alphabet)
    : rows_(rows), cols_(cols), alphabet_(alphabet) {
  if (rows < 0 || cols < 0 || alphabet < 1) {
    throw std::invalid_argument("bad table dimensions");
  }
  const auto n = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  cells_.assign(n, kEmpty);
  stamps_.assign(n, 0);
  counts_.assign(static_cast<std::size_t>(rows), 0);
}

bool PartialTable::in_bounds(int row, int col) const {
  return row >= 0 && row < rows_ && col >= 0 && col < cols_;
}

void PartialTable::set(int row, int col, int symbol) {
  if (!in_bounds(row, col)) throw std::out_of_range("cell outside the table");
  if (symbol < 0 || symbol >= alphabet_) throw std::out_of_range("symbol outside the alphabet");
  const std::size_t i = index(row, col);
  if (cells_[i] != kEmpty) throw std::logic_error("cell is already filled");
  cells_[i] = symbol;
  stamps_[i] = next_stamp_++;
  ++counts_[static_cast<std::size_t>(row)];
}

Row PartialTable::row(int r) const { return row(r, cols_); }

Row PartialTable::row(int r, int width) const {
  Row out(static_cast<std::size_t>(std::max(width, cols_)), kEmpty);
  const auto begin = cells_.begin() + static_cast<std::ptrdiff_t>(index(r, 0));
  std::copy(begin, begin + cols_, out.begin());
  out.resize(static_cast<std::size_t>(width), kEmpty);
  return out;
}

bool is_odd_row(const PartialTable& table, int row) { return table.row_count(row) % 2 == 1; }

bool is_odd(const Row& row) { return count_filled(row) % 2 == 1; }

PartialTable filter_alice_view(const PartialTable& a_table, const PartialTable& previous_view) {
  if (previous_view.rows() != a_table.rows() || previous_view.cols() != a_table.cols()) {
    throw std::invalid_argument("view and table dimensions differ");
  }
  PartialTable view = previous_view;
  for (int r = 0; r < a_table.rows(); ++r) {
    std::vector<Cell> pending;
    for (int c = 0; c < a_table.cols(); ++c) {
      if (previous_view.filled(r, c)) {
        if (previous_view.at(r, c) != a_table.at(r, c)) {
          throw std::invalid_argument("previous view is not a sub-table of A");
        }
        continue;
      }
      if (a_table.filled(r, c)) pending.push_back({r, c, a_table.at(r, c)});
    }
    std::sort(pending.begin(), pending.end(), [&](const Cell& x, const Cell& y) {
      return a_table.stamp(x.row, x.col) < a_table.stamp(y.row, y.col);
    });
    if ((previous_view.row_count(r) + static_cast<int>(pending.size())) % 2 == 1) {
      pending.pop_back();
    }
    for (const Cell& cell : pending) view.set(cell.row, cell.col, cell.symbol);
  }
  return view;
}

std::string_view to_string(Mode mode) {
  return mode == Mode::kKilling ? "killing" : "odd-rows";
}

Mode mode_from_string(std::string_view name) {
  if (name == "killing") return Mode::kKilling;
  if (name == "odd-rows" || name == "oddrows" || name == "odd") return Mode::kOddRows;
  throw std::invalid_argument("unknown friedberg mode '" + std::string(name) + "'");
}

std::uint64_t odd_row_count(int cols, int alphabet) {
  std::uint64_t total = 0;
  for (int s = 1; s <= cols; s += 2) total += binomial(cols, s) * ipow(static_cast<std::uint64_t>(alphabet), s);
  return total;
}

Row nth_odd_row(int cols, int alphabet, std::uint64_t index) {
  for (int s = 1; s <= cols; s += 2) {
    const std::uint64_t per_set = ipow(static_cast<std::uint64_t>(alphabet), s);
    const std::uint64_t block = binomial(cols, s) * per_set;
    if (index >= block) {
      index -= block;
      continue;
    }
    std::uint64_t set_index = index / per_set;
    Row row(static_cast<std::size_t>(cols), kEmpty);
    std::vector<int> symbols(static_cast<std::size_t>(s));
    decode_symbols(index % per_set, alphabet, symbols);
    for_each_combination(cols, s, [&](const std::vector<int>& combo) {
      if (set_index-- > 0) return false;
      for (std::size_t i = 0; i < combo.size(); ++i) row[static_cast<std::size_t>(combo[i])] = symbols[i];
      return true;
    });
    return row;
  }
  throw std::out_of_range("odd row index out of range");
}

int FriedbergConfig::b_rows() const {
  if (rows_b > 0) return rows_b;
  return rows_a * (max_rounds + 1) + static_cast<int>(odd_row_count(cols, alphabet));
}

FriedbergState::FriedbergState(const FriedbergConfig& cfg)
    : config(cfg),
      a_table(cfg.rows_a, cfg.cols, cfg.alphabet),
      a_view(cfg.rows_a, cfg.cols, cfg.alphabet),
      b_table(cfg.b_rows(), cfg.b_cols(), cfg.alphabet) {
  if (cfg.rows_a < 1 || cfg.cols < 1 || cfg.alphabet < 1 || cfg.max_rounds < 1 || cfg.pad_cols < 0) {
    throw std::invalid_argument("bad friedberg configuration");
  }
  for (int i = 0; i < cfg.rows_a; ++i) assistants.push_back({i, std::nullopt, 0, cfg.mode});
  killed_rows.assign(static_cast<std::size_t>(b_table.rows()), false);
  row_owner.assign(static_cast<std::size_t>(b_table.rows()), kUnowned);
}

bool FriedbergState::fresh_row(int row) const {
  const auto r = static_cast<std::size_t>(row);
  return row_owner[r] == kUnowned && !killed_rows[r] && b_table.row_count(row) == 0;
}

bool kill_condition(const PartialTable& view, int row, int prefix) {
  const int width = std::min(prefix, view.cols());
  for (int earlier = 0; earlier < row; ++earlier) {
    bool same = true;
    for (int c = 0; c < width && same; ++c) same = view.at(row, c) == view.at(earlier, c);
    if (same) return true;
  }
  return false;
}

Row fresh_odd_extension(const Row& base, int alphabet, const RowSet& present) {
  std::vector<int> free_cols;
  for (std::size_t c = 0; c < base.size(); ++c) {
    if (base[c] == kEmpty) free_cols.push_back(static_cast<int>(c));
  }
  const int filled = static_cast<int>(base.size() - free_cols.size());
  const int n_free = static_cast<int>(free_cols.size());
  std::optional<Row> found;
  for (int s = filled % 2 == 1 ? 0 : 1; s <= n_free && !found; s += 2) {
    const std::uint64_t per_set = ipow(static_cast<std::uint64_t>(alphabet), s);
    std::vector<int> symbols(static_cast<std::size_t>(s));
    for_each_combination(n_free, s, [&](const std::vector<int>& combo) {
      for (std::uint64_t code = 0; code < per_set; ++code) {
        decode_symbols(code, alphabet, symbols);
        Row candidate = base;
        for (std::size_t i = 0; i < combo.size(); ++i) {
          candidate[static_cast<std::size_t>(free_cols[static_cast<std::size_t>(combo[i])])] = symbols[i];
        }
        if (!present.contains(candidate)) {
          found = std::move(candidate);
          return true;
        }
      }
      return false;
    });
  }
  if (!found) throw OutOfColumns("no fresh odd extension left; raise pad_cols");
  return *found;
}

FriedbergGame::FriedbergGame(const FriedbergConfig& config) : state_(config) {}

Json FriedbergGame::params() const {
  const FriedbergConfig& c = state_.config;
  return Json{{"rows_a", c.rows_a},       {"cols", c.cols},
              {"alphabet", c.alphabet},   {"mode", to_string(c.mode)},
              {"max_rounds", c.max_rounds}, {"pad_cols", c.pad_cols},
              {"rows_b", c.b_rows()}};
}

void FriedbergGame::apply(Actor actor, const Move& move) {
  if (actor == Actor::kAlice) {
    apply_alice(move);
  } else {
    apply_bob(move);
  }
}

void FriedbergGame::apply_alice(const Move& move) {
  if (!move.writes.empty() || !move.kills.empty() || !move.reserves.empty()) {
    throw IllegalMove(Actor::kAlice, "Alice may only set cells of A");
  }
  for (const Cell& cell : move.set_cells) {
    try {
      state_.a_table.set(cell.row, cell.col, cell.symbol);
    } catch (const std::exception& e) {
      throw IllegalMove(Actor::kAlice, std::string("A") + e.what());
    }
  }
  if (state_.config.mode == Mode::kOddRows) {
    state_.a_view = filter_alice_view(state_.a_table, state_.a_view);
  } else {
    state_.a_view = state_.a_table;
  }
}

void FriedbergGame::apply_bob(const Move& move) {
  const Actor bob = Actor::kBob;
  FriedbergState& s = state_;
  const bool odd_mode = s.config.mode == Mode::kOddRows;
  const int b_rows = s.b_table.rows();
  if (!move.set_cells.empty()) throw IllegalMove(bob, "Bob may not write to A");

  std::vector<int> displaced;
  std::vector<int> extra_rows;
  for (const auto& [assistant, row] : move.reserves) {
    if (row < 0 || row >= b_rows) throw IllegalMove(bob, "reserved row out of range");
    if (!s.fresh_row(row)) throw IllegalMove(bob, "row " + std::to_string(row) + " is not fresh");
    if (assistant == FriedbergState::kExtraAssistant) {
      if (!odd_mode) throw IllegalMove(bob, "extra assistant exists only in odd-rows mode");
      extra_rows.push_back(row);
    } else if (assistant >= 0 && assistant < s.config.rows_a) {
      AssistantState& as = s.assistants[static_cast<std::size_t>(assistant)];
      if (as.reserved_row) displaced.push_back(*as.reserved_row);
      as.reserved_row = row;
    } else {
      throw IllegalMove(bob, "unknown assistant " + std::to_string(assistant));
    }
    s.row_owner[static_cast<std::size_t>(row)] = assistant;
  }

  for (const Cell& cell : move.writes) {
    if (cell.row < 0 || cell.row >= b_rows) throw IllegalMove(bob, "write outside B");
    const auto r = static_cast<std::size_t>(cell.row);
    if (s.row_owner[r] == FriedbergState::kUnowned) throw IllegalMove(bob, "write to an unreserved row");
    if (s.killed_rows[r]) throw IllegalMove(bob, "write to a retired row");
    try {
      s.b_table.set(cell.row, cell.col, cell.symbol);
    } catch (const std::exception& e) {
      throw IllegalMove(bob, std::string("B") + e.what());
    }
  }

  for (int row : move.kills) {
    if (row < 0 || row >= b_rows) throw IllegalMove(bob, "kill outside B");
    const auto r = static_cast<std::size_t>(row);
    const int owner = s.row_owner[r];
    if (owner < 0) throw IllegalMove(bob, "only assistant rows can be retired");
    if (s.killed_rows[r]) throw IllegalMove(bob, "row is already retired");
    if (odd_mode && !is_odd_row(s.b_table, row)) {
      throw IllegalMove(bob, "converted row " + std::to_string(row) + " is not odd");
    }
    s.killed_rows[r] = true;
    ++s.assistants[static_cast<std::size_t>(owner)].kill_counter;
  }

  for (int row : displaced) {
    if (!s.killed_rows[static_cast<std::size_t>(row)]) {
      throw IllegalMove(bob, "row " + std::to_string(row) + " abandoned without retiring it");
    }
  }
  for (const AssistantState& as : s.assistants) {
    if (as.reserved_row && s.killed_rows[static_cast<std::size_t>(*as.reserved_row)]) {
      throw IllegalMove(bob, "assistant left without a live row");
    }
  }
  for (int row : extra_rows) {
    if (!is_odd_row(s.b_table, row)) throw IllegalMove(bob, "enumerated row is not odd");
  }

  if (odd_mode) {
    RowSet odd_rows;
    for (int r = 0; r < b_rows; ++r) {
      if (!is_odd_row(s.b_table, r)) continue;
      if (!odd_rows.insert(s.b_table.row(r)).second) {
        throw IllegalMove(bob, "odd row " + std::to_string(r) + " duplicates another odd row");
      }
    }
    const std::uint64_t total = odd_row_count(s.config.cols, s.config.alphabet);
    while (s.odd_enumerator_cursor < total) {
      Row next = nth_odd_row(s.config.cols, s.config.alphabet, s.odd_enumerator_cursor);
      next.resize(static_cast<std::size_t>(s.b_table.cols()), kEmpty);
      if (!odd_rows.contains(next)) break;
      ++s.odd_enumerator_cursor;
    }
  }
  ++s.bob_moves;
}

Verdict FriedbergGame::verdict() const { return check_win(state_); }

Json FriedbergGame::state_json() const {
  const FriedbergState& s = state_;
  Json a = Json::array();
  for (int r = 0; r < s.a_table.rows(); ++r) a.push_back(row_json(s.a_table.row(r)));
  Json b = Json::array();
  for (int r = 0; r < s.b_table.rows(); ++r) {
    if (s.row_owner[static_cast<std::size_t>(r)] == FriedbergState::kUnowned) continue;
    b.push_back(Json{{"row", r},
                     {"owner", s.row_owner[static_cast<std::size_t>(r)]},
                     {"retired", static_cast<bool>(s.killed_rows[static_cast<std::size_t>(r)])},
                     {"cells", row_json(s.b_table.row(r))}});
  }
  Json assistants = Json::array();
  for (const AssistantState& as : s.assistants) {
    assistants.push_back(Json{{"source_row", as.source_row},
                              {"reserved_row", as.reserved_row ? Json(*as.reserved_row) : Json(nullptr)},
                              {"kill_counter", as.kill_counter}});
  }
  return Json{{"a", std::move(a)},
              {"b", std::move(b)},
              {"assistants", std::move(assistants)},
              {"odd_enumerator_cursor", s.odd_enumerator_cursor},
              {"bob_moves", s.bob_moves}};
}

Json FriedbergGame::encode(const Move& move) const {
  if (move.is_pass()) return pass_payload();
  if (!move.set_cells.empty()) return Json{{"set_cells", cells_json(move.set_cells)}};
  Json kills = Json::array();
  for (int r : move.kills) kills.push_back(r);
  Json reserves = Json::array();
  for (const auto& [a, r] : move.reserves) reserves.push_back(Json::array({a, r}));
  return Json{{"writes", cells_json(move.writes)}, {"kills", std::move(kills)}, {"reserves", std::move(reserves)}};
}

Move FriedbergGame::decode(Actor actor, const Json& payload) const {
  Move move;
  if (is_pass_payload(payload)) return move;
  if (actor == Actor::kAlice) {
    move.set_cells = cells_from_json(payload.at("set_cells"));
    return move;
  }
  move.writes = cells_from_json(payload.at("writes"));
  for (const Json& r : payload.at("kills")) move.kills.push_back(r.get<int>());
  for (const Json& p : payload.at("reserves")) move.reserves.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  return move;
}

Move bob_strategy_step(const FriedbergState& s) {
  const FriedbergConfig& cfg = s.config;
  const bool odd_mode = cfg.mode == Mode::kOddRows;
  const int b_rows = s.b_table.rows();
  const int width = s.b_table.cols();
  Move move;

  RowSet present_odd;
  if (odd_mode) {
    for (int r = 0; r < b_rows; ++r) {
      if (is_odd_row(s.b_table, r)) present_odd.insert(s.b_table.row(r));
    }
  }
  int scan = 0;
  auto take_fresh = [&] {
    while (scan < b_rows && !s.fresh_row(scan)) ++scan;
    if (scan == b_rows) throw OutOfRows("B has no fresh row left");
    return scan++;
  };

  const int active = std::min(s.bob_moves + 1, cfg.rows_a);
  for (int a = 0; a < active; ++a) {
    const AssistantState& as = s.assistants[static_cast<std::size_t>(a)];
    int row = 0;
    Row content(static_cast<std::size_t>(width), kEmpty);
    if (as.reserved_row) {
      row = *as.reserved_row;
      content = s.b_table.row(row);
    } else {
      row = take_fresh();
      move.reserves.emplace_back(a, row);
    }
    if (kill_condition(s.a_view, a, as.kill_counter)) {
      if (odd_mode) {
        Row padded = fresh_odd_extension(content, cfg.alphabet, present_odd);
        for (int c = 0; c < width; ++c) {
          if (content[static_cast<std::size_t>(c)] == kEmpty && padded[static_cast<std::size_t>(c)] != kEmpty) {
            move.writes.push_back({row, c, padded[static_cast<std::size_t>(c)]});
          }
        }
        present_odd.insert(std::move(padded));
      }
      move.kills.push_back(row);
      move.reserves.emplace_back(a, take_fresh());
      continue;
    }
    for (int c = 0; c < cfg.cols; ++c) {
      const int v = s.a_view.at(a, c);
      if (v != kEmpty && content[static_cast<std::size_t>(c)] == kEmpty) move.writes.push_back({row, c, v});
    }
  }

  if (odd_mode) {
    const std::uint64_t total = odd_row_count(cfg.cols, cfg.alphabet);
    for (std::uint64_t i = s.odd_enumerator_cursor; i < total; ++i) {
      Row candidate = nth_odd_row(cfg.cols, cfg.alphabet, i);
      candidate.resize(static_cast<std::size_t>(width), kEmpty);
      if (present_odd.contains(candidate)) continue;
      const int row = take_fresh();
      move.reserves.emplace_back(FriedbergState::kExtraAssistant, row);
      for (int c = 0; c < width; ++c) {
        if (candidate[static_cast<std::size_t>(c)] != kEmpty) move.writes.push_back({row, c, candidate[static_cast<std::size_t>(c)]});
      }
      break;
    }
  }
  return move;
}

Verdict check_win(const FriedbergState& s) {
  const int width = s.b_table.cols();
  const int b_rows = s.b_table.rows();
  std::vector<Row> considered;
  std::vector<bool> skip(static_cast<std::size_t>(b_rows), false);
  for (std::size_t a = 0; a < s.assistants.size(); ++a) {
    const AssistantState& as = s.assistants[a];
    if (!as.reserved_row) continue;
    skip[static_cast<std::size_t>(*as.reserved_row)] = true;
    if (!kill_condition(s.a_view, static_cast<int>(a), as.kill_counter)) {
      considered.push_back(s.b_table.row(*as.reserved_row));
    }
  }
  if (s.config.mode == Mode::kOddRows) {
    for (int r = 0; r < b_rows; ++r) {
      if (!skip[static_cast<std::size_t>(r)] && s.b_table.row_count(r) > 0) considered.push_back(s.b_table.row(r));
    }
  }

  RowSet distinct(considered.begin(), considered.end());
  if (distinct.size() != considered.size()) return Verdict::kAliceWins;

  for (int r = 0; r < s.a_table.rows(); ++r) {
    if (s.config.mode == Mode::kOddRows && is_odd_row(s.a_table, r)) continue;
    if (!distinct.contains(s.a_table.row(r, width))) return Verdict::kAliceWins;
  }
  if (s.config.mode == Mode::kOddRows) {
    const std::uint64_t total = odd_row_count(s.config.cols, s.config.alphabet);
    for (std::uint64_t i = 0; i < total; ++i) {
      Row odd = nth_odd_row(s.config.cols, s.config.alphabet, i);
      odd.resize(static_cast<std::size_t>(width), kEmpty);
      if (!distinct.contains(odd)) return Verdict::kAliceWins;
    }
  }
  return Verdict::kBobWins;
}

Move ReferenceBob::next_move(const FriedbergGame& game, Rng&) {
  return bob_strategy_step(game.state());
}

Move RandomQuiescingAlice::next_move(const FriedbergGame& game, Rng& rng) {
  Move move;
  if (active_rounds_ < 0) {
    active_rounds_ = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_active_rounds_)));
  }
  if (played_ >= active_rounds_) return move;
  ++played_;
  const PartialTable& a = game.state().a_table;
  std::vector<std::pair<int, int>> empty;
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) {
      if (!a.filled(r, c)) empty.emplace_back(r, c);
    }
  }
  const int count = 1 + static_cast<int>(rng.below(2));
  for (int i = 0; i < count && !empty.empty(); ++i) {
    const auto pick = static_cast<std::ptrdiff_t>(rng.below(empty.size()));
    const auto [row, col] = empty[static_cast<std::size_t>(pick)];
    empty.erase(empty.begin() + pick);
    int symbol = static_cast<int>(rng.below(static_cast<std::uint64_t>(a.alphabet())));
    if (rng.bernoulli(0.5)) {
      const int other_row = static_cast<int>(rng.below(static_cast<std::uint64_t>(a.rows())));
      if (other_row != row && a.filled(other_row, col)) symbol = a.at(other_row, col);
    }
    move.set_cells.push_back({row, col, symbol});
  }
  return move;
}

Move ScriptedAlice::next_move(const FriedbergGame&, Rng&) {
  Move move;
  if (next_ < script_.size()) move.set_cells = script_[next_++];
  return move;
}

}  // namespace gamelab::friedberg
