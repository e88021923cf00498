// Copyright 2026 The Descent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DESCENT_GAME_GAME_H_
#define DESCENT_GAME_GAME_H_

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace descent {

// Raised when an operation is called outside its domain (e.g. legal actions
// of a finished game, or the gain of a running one).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised when a move is not legal in the given position.
class IllegalAction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a heuristic or feature is requested from a game that has no
// meaning for it (e.g. a score on Hex). Surfaced at configuration time.
class UnsupportedFeature : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Player : int8_t { kFirst = 0, kSecond = 1 };

inline constexpr Player Opponent(Player p) {
  return p == Player::kFirst ? Player::kSecond : Player::kFirst;
}

// +1 for the first player, -1 for the second. Values are always expressed
// from the first player's point of view, so this is the "maximizing" sign.
inline constexpr int Sign(Player p) { return p == Player::kFirst ? 1 : -1; }

inline constexpr int Index(Player p) { return static_cast<int>(p); }

using Action = int32_t;
using StateKey = uint64_t;

// Cell contents shared by every game.
inline constexpr int8_t kEmpty = 0;
inline constexpr int8_t kFirstStone = 1;
inline constexpr int8_t kSecondStone = 2;

inline constexpr int8_t StoneOf(Player p) {
  return p == Player::kFirst ? kFirstStone : kSecondStone;
}

// Sentinel for GameState::outcome while the game is running.
inline constexpr int8_t kOngoing = 2;

// A position. Plain value type; games never mutate a state they were given.
struct GameState {
  std::vector<int8_t> cells;   // row-major, row 0 first
  std::vector<int16_t> links;  // game-specific connectivity (Hex union-find)
  int ply = 0;                 // actions played since the initial state
  Player to_move = Player::kFirst;
  int8_t outcome = kOngoing;   // gain once terminal, kOngoing before
  StateKey key = 0;

  bool terminal() const { return outcome != kOngoing; }

  friend bool operator==(const GameState& a, const GameState& b) {
    return a.cells == b.cells && a.to_move == b.to_move && a.ply == b.ply &&
           a.outcome == b.outcome;
  }
};

enum class GameKind { kTicTacToe, kHex, kOthello, kBreakthrough, kClobber };

std::string_view GameKindName(GameKind kind);
GameKind ParseGameKind(std::string_view name);

struct GameConfig {
  GameKind kind = GameKind::kTicTacToe;
  int size = 3;
  bool swap = false;  // Hex only
};

struct PlaneShape {
  int planes = 0;
  int height = 0;
  int width = 0;
  int size() const { return planes * height * width; }
  friend bool operator==(const PlaneShape&, const PlaneShape&) = default;
};

// Rules of one game at one board size. Stateless after construction, so a
// single instance is shared freely between threads.
class Game {
 public:
  virtual ~Game() = default;

  Game(const Game&) = delete;
  Game& operator=(const Game&) = delete;

  const GameConfig& config() const { return config_; }
  GameKind kind() const { return config_.kind; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int num_cells() const { return rows_ * cols_; }
  std::string Describe() const;

  GameState InitialState() const;

  // Legal actions in canonical order (row-major by origin cell, special
  // actions such as swap or pass last). Throws ContractViolation when the
  // state is terminal.
  std::vector<Action> LegalActions(const GameState& state) const;

  // Successor state. Throws IllegalAction naming the action and state key.
  GameState Apply(const GameState& state, Action action) const;

  // Same as Apply without the legality check; for search code that only
  // plays actions it got from LegalActions.
  GameState ApplyUnchecked(const GameState& state, Action action) const;

  bool IsTerminal(const GameState& state) const { return state.terminal(); }

  // +1 first player won, -1 second player won, 0 draw.
  int Gain(const GameState& state) const;

  int PieceCount(const GameState& state, Player player) const;

  // First-player pieces minus second-player pieces at a terminal state.
  // Only games with score semantics support it.
  int Score(const GameState& state) const;
  virtual bool HasScore() const { return false; }
  virtual bool HasPieces() const { return false; }

  // Maximum number of playable actions in one game (exact for Hex and
  // TicTacToe, an empirical approximation elsewhere).
  virtual double MaxActions() const = 0;
  virtual bool MaxActionsExact() const { return false; }

  virtual PlaneShape EncodingShape() const;
  // Writes EncodingShape().size() floats, plane-major.
  virtual void EncodePlanes(const GameState& state, std::span<float> out) const;
  std::vector<float> EncodePlanes(const GameState& state) const;

  // The state and its images under the game's symmetry group, identity
  // first, duplicates removed.
  std::vector<GameState> Symmetries(const GameState& state) const;
  // Number of cell permutations in the symmetry group (identity included).
  int SymmetryCount() const { return static_cast<int>(symmetries_.size()); }
  GameState Transform(const GameState& state, int symmetry) const;

  virtual std::string ActionToString(Action action) const;
  // Parses move notation against a position. Throws IllegalAction on
  // malformed or illegal input.
  Action ParseAction(const GameState& state, std::string_view text) const;

  // One-line position string: "<game> <size> <rows joined by '/'> <to-move>
  // <ply>". Round-trips exactly.
  std::string Serialize(const GameState& state) const;
  GameState Deserialize(std::string_view text) const;

  virtual std::string ToAscii(const GameState& state) const;

  // Full recomputation of the Zobrist key; Apply maintains it incrementally.
  StateKey ComputeKey(const GameState& state) const;

 protected:
  Game(GameConfig config, int rows, int cols);

  int CellIndex(int row, int col) const { return row * cols_ + col; }
  int RowOf(int cell) const { return cell / cols_; }
  int ColOf(int cell) const { return cell % cols_; }
  bool OnBoard(int row, int col) const {
    return row >= 0 && row < rows_ && col >= 0 && col < cols_;
  }
  std::string CellName(int cell) const;
  // Parses "c4" style coordinates; returns -1 on failure.
  int ParseCell(std::string_view text) const;

  StateKey CellKey(int cell, int8_t stone) const {
    return zobrist_[static_cast<size_t>(cell) * 2 + (stone - 1)];
  }
  StateKey side_key() const { return side_key_; }
  StateKey extra_key() const { return extra_key_; }

  // Sets up cells of the initial position.
  virtual void SetupInitial(GameState& state) const = 0;
  virtual void GenerateActions(const GameState& state,
                               std::vector<Action>& out) const = 0;
  // Mutates cells (and links), keeping key's cell part in sync. The base
  // class handles ply, side to move, extras and outcome.
  virtual void PlayAction(GameState& state, Action action) const = 0;
  // Outcome of a state whose cells, ply and side to move are final.
  virtual int8_t ComputeOutcome(const GameState& state) const = 0;
  // Recomputes auxiliary structures (links) from cells.
  virtual void RebuildLinks(GameState& /*state*/) const {}
  // Extra key material beyond cells and side (e.g. swap availability).
  virtual bool ExtraKeyActive(const GameState& /*state*/) const { return false; }
  virtual char StoneChar(int8_t stone) const;

  // Cell permutations forming the symmetry group; perm[i] is the image of
  // cell i. The identity must come first.
  void SetSymmetries(std::vector<std::vector<int>> perms);
  static std::vector<std::vector<int>> SquareGroup(int n);

  // Rebuilds links, key and outcome after a bulk cell change.
  void Finalize(GameState& state) const;

  static int8_t OutcomeFromDifference(int diff) {
    return static_cast<int8_t>(diff > 0 ? 1 : (diff < 0 ? -1 : 0));
  }

 private:
  GameConfig config_;
  int rows_;
  int cols_;
  std::vector<StateKey> zobrist_;
  StateKey side_key_ = 0;
  StateKey extra_key_ = 0;
  std::vector<std::vector<int>> symmetries_;
};

std::unique_ptr<Game> MakeGame(const GameConfig& config);

// Mean number of plies over random playouts; used to pick the approximate
// maximum game length of games without a natural bound.
double EstimateMeanGameLength(const Game& game, int games, uint64_t seed);

}  // namespace descent

#endif  // DESCENT_GAME_GAME_H_
