#pragma once

// Two-table numbering game. Alice fills table A, Bob fills table B; Bob wins
// when every row of A reappears in B and B's rows are pairwise distinct. Bob's
// reference strategy hires one assistant per A row. In the killing variant an
// assistant may retire (kill) a B row; in the odd-rows variant retirement
// turns the row into a fresh odd row instead, and an extra assistant makes
// sure every odd row over the grid shows up exactly once.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "gamelab/engine.h"

namespace gamelab::friedberg {

inline constexpr int kEmpty = -1;
// Row contents, one entry per column, kEmpty for an unfilled cell.
using Row = std::vector<int>;

struct RowHash {
  std::size_t operator()(const Row& row) const;
};
using RowSet = std::unordered_set<Row, RowHash>;

struct Cell {
  int row = 0;
  int col = 0;
  int symbol = 0;
  bool operator==(const Cell&) const = default;
};

// Write-once table. Cells remember the order in which they were filled.
class PartialTable {
 public:
  PartialTable() = default;
  PartialTable(int rows, int cols, int alphabet);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int alphabet() const { return alphabet_; }

  bool in_bounds(int row, int col) const;
  int at(int row, int col) const { return cells_[index(row, col)]; }
  bool filled(int row, int col) const { return at(row, col) != kEmpty; }
  // Throws std::out_of_range / std::logic_error on bad index, bad symbol or
  // an already filled cell.
  void set(int row, int col, int symbol);

  int row_count(int row) const { return counts_[static_cast<std::size_t>(row)]; }
  std::uint64_t stamp(int row, int col) const { return stamps_[index(row, col)]; }
  Row row(int r) const;
  // Row padded with kEmpty up to `width` columns.
  Row row(int r, int width) const;

  bool operator==(const PartialTable& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && cells_ == other.cells_;
  }

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(col);
  }

  int rows_ = 0;
  int cols_ = 0;
  int alphabet_ = 1;
  std::uint64_t next_stamp_ = 1;
  std::vector<int> cells_;
  std::vector<std::uint64_t> stamps_;
  std::vector<int> counts_;
};

bool is_odd_row(const PartialTable& table, int row);
bool is_odd(const Row& row);

// Bob's view of A: per row, every cell except that the newest unviewed cell
// is held back while admitting it would make the viewed row odd. Held cells
// are admitted in pairs, so the view never has an odd row.
PartialTable filter_alice_view(const PartialTable& a_table,
                               const PartialTable& previous_view);

enum class Mode { kKilling, kOddRows };
std::string_view to_string(Mode mode);
Mode mode_from_string(std::string_view name);

struct AssistantState {
  int source_row = 0;
  std::optional<int> reserved_row;
  int kill_counter = 0;
  Mode mode = Mode::kKilling;
};

struct FriedbergConfig {
  int rows_a = 4;
  int cols = 3;
  int alphabet = 2;
  Mode mode = Mode::kKilling;
  // Rounds the game may last; sizes B.
  int max_rounds = 61;
  // Extra B columns used for odd padding once the grid's own odd rows are
  // used up (odd-rows mode only).
  int pad_cols = 8;
  // 0 picks rows_a * (max_rounds + 1) + number of odd grid rows.
  int rows_b = 0;

  int b_rows() const;
  int b_cols() const { return mode == Mode::kOddRows ? cols + pad_cols : cols; }
};

// Number of odd rows over a cols x alphabet grid.
std::uint64_t odd_row_count(int cols, int alphabet);
// The index-th odd grid row in canonical order: by number of filled columns,
// then the column set lexicographically, then symbols lexicographically.
Row nth_odd_row(int cols, int alphabet, std::uint64_t index);

struct FriedbergState {
  FriedbergConfig config;
  PartialTable a_table;
  PartialTable a_view;
  PartialTable b_table;
  std::vector<AssistantState> assistants;
  // Per B row: killed (killing mode) or converted to odd (odd-rows mode).
  std::vector<bool> killed_rows;
  // Per B row: owning assistant, kExtraAssistant, or kUnowned.
  std::vector<int> row_owner;
  // First grid odd row (canonical order) not yet present in B.
  std::uint64_t odd_enumerator_cursor = 0;
  int bob_moves = 0;

  explicit FriedbergState(const FriedbergConfig& cfg);

  static constexpr int kUnowned = -2;
  static constexpr int kExtraAssistant = -1;
  bool fresh_row(int row) const;
};

// True iff the first `prefix` columns of `row` in `view` match those of some
// earlier row (prefix 0 matches any earlier row).
bool kill_condition(const PartialTable& view, int row, int prefix);

struct Move {
  std::vector<Cell> set_cells;  // Alice
  std::vector<Cell> writes;     // Bob
  std::vector<int> kills;       // Bob
  std::vector<std::pair<int, int>> reserves;  // Bob: (assistant, row)
  bool is_pass() const {
    return set_cells.empty() && writes.empty() && kills.empty() && reserves.empty();
  }
};

class OutOfRows : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutOfColumns : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FriedbergGame {
 public:
  using Move = gamelab::friedberg::Move;

  explicit FriedbergGame(const FriedbergConfig& config);

  std::string game_id() const { return "friedberg"; }
  Json params() const;
  Actor first_mover() const { return Actor::kAlice; }
  Actor adversary() const { return Actor::kAlice; }
  void apply(Actor actor, const Move& move);
  Verdict verdict() const;
  Json state_json() const;
  Json encode(const Move& move) const;
  Move decode(Actor actor, const Json& payload) const;

  const FriedbergState& state() const { return state_; }

 private:
  void apply_alice(const Move& move);
  void apply_bob(const Move& move);

  FriedbergState state_;
};

// One Bob move of the reference strategy. Assistant i starts on Bob's i-th
// move; assistants act in ascending index order. Throws OutOfRows when B has
// no fresh row left.
Move bob_strategy_step(const FriedbergState& state);

// Win predicate at the end of a trace. A reserved row whose assistant's kill
// condition still holds is treated as already retired.
Verdict check_win(const FriedbergState& state);

// Smallest odd extension of `base` (canonical order over the free columns)
// that is not in `present`. Throws OutOfColumns if none exists.
Row fresh_odd_extension(const Row& base, int alphabet, const RowSet& present);

class ReferenceBob : public Strategy<FriedbergGame> {
 public:
  Move next_move(const FriedbergGame& game, Rng& rng) override;
};

// Fills one or two random empty cells per round for a random number of
// rounds in [1, max_active_rounds], then passes forever. Half of the symbols
// copy the same column of another row to provoke duplicate rows.
class RandomQuiescingAlice : public Strategy<FriedbergGame> {
 public:
  explicit RandomQuiescingAlice(int max_active_rounds)
      : max_active_rounds_(max_active_rounds) {}
  Move next_move(const FriedbergGame& game, Rng& rng) override;

 private:
  int max_active_rounds_;
  int active_rounds_ = -1;
  int played_ = 0;
};

// Plays a fixed list of cell batches, then passes.
class ScriptedAlice : public Strategy<FriedbergGame> {
 public:
  explicit ScriptedAlice(std::vector<std::vector<Cell>> script)
      : script_(std::move(script)) {}
  Move next_move(const FriedbergGame& game, Rng& rng) override;

 private:
  std::vector<std::vector<Cell>> script_;
  std::size_t next_ = 0;
};

}  // namespace gamelab::friedberg
