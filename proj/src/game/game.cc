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

#include "descent/game/game.h"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>

#include "descent/game/breakthrough.h"
#include "descent/game/clobber.h"
#include "descent/game/hex.h"
#include "descent/game/othello.h"
#include "descent/game/tictactoe.h"

namespace descent {
namespace {

uint64_t SplitMix64(uint64_t& x) {
  uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::string_view GameKindName(GameKind kind) {
  switch (kind) {
    case GameKind::kTicTacToe: return "tictactoe";
    case GameKind::kHex: return "hex";
    case GameKind::kOthello: return "othello";
    case GameKind::kBreakthrough: return "breakthrough";
    case GameKind::kClobber: return "clobber";
  }
  return "?";
}

GameKind ParseGameKind(std::string_view name) {
  for (GameKind k : {GameKind::kTicTacToe, GameKind::kHex, GameKind::kOthello,
                     GameKind::kBreakthrough, GameKind::kClobber}) {
    if (GameKindName(k) == name) return k;
  }
  throw std::invalid_argument("unknown game: " + std::string(name));
}

Game::Game(GameConfig config, int rows, int cols)
    : config_(config), rows_(rows), cols_(cols) {
  uint64_t seed = 0x5EED0000ULL ^ (static_cast<uint64_t>(config.kind) << 32) ^
                  static_cast<uint64_t>(rows * 131 + cols);
  zobrist_.resize(static_cast<size_t>(rows * cols) * 2);
  for (auto& z : zobrist_) z = SplitMix64(seed);
  side_key_ = SplitMix64(seed);
  extra_key_ = SplitMix64(seed);
}

std::string Game::Describe() const {
  std::string out(GameKindName(kind()));
  out += " " + std::to_string(config_.size);
  if (config_.swap) out += " swap";
  return out;
}

GameState Game::InitialState() const {
  GameState state;
  state.cells.assign(static_cast<size_t>(num_cells()), kEmpty);
  SetupInitial(state);
  Finalize(state);
  return state;
}

void Game::Finalize(GameState& state) const {
  RebuildLinks(state);
  state.key = ComputeKey(state);
  state.outcome = ComputeOutcome(state);
}

StateKey Game::ComputeKey(const GameState& state) const {
  StateKey key = 0;
  for (int i = 0; i < num_cells(); ++i) {
    if (state.cells[i] != kEmpty) key ^= CellKey(i, state.cells[i]);
  }
  if (state.to_move == Player::kSecond) key ^= side_key_;
  if (ExtraKeyActive(state)) key ^= extra_key_;
  return key;
}

std::vector<Action> Game::LegalActions(const GameState& state) const {
  if (state.terminal()) {
    throw ContractViolation("legal actions requested on terminal state " +
                            Serialize(state));
  }
  std::vector<Action> actions;
  GenerateActions(state, actions);
  return actions;
}

GameState Game::Apply(const GameState& state, Action action) const {
  if (state.terminal()) {
    throw IllegalAction("action " + ActionToString(action) +
                        " played on terminal state key " +
                        std::to_string(state.key));
  }
  std::vector<Action> legal;
  GenerateActions(state, legal);
  if (std::find(legal.begin(), legal.end(), action) == legal.end()) {
    throw IllegalAction("illegal action " + ActionToString(action) +
                        " in state key " + std::to_string(state.key) + " (" +
                        Serialize(state) + ")");
  }
  return ApplyUnchecked(state, action);
}

GameState Game::ApplyUnchecked(const GameState& state, Action action) const {
  GameState next = state;
  if (ExtraKeyActive(next)) next.key ^= extra_key_;
  PlayAction(next, action);
  next.ply += 1;
  next.to_move = Opponent(next.to_move);
  next.key ^= side_key_;
  if (ExtraKeyActive(next)) next.key ^= extra_key_;
  next.outcome = ComputeOutcome(next);
  return next;
}

int Game::Gain(const GameState& state) const {
  if (!state.terminal()) {
    throw ContractViolation("gain requested on non-terminal state " +
                            Serialize(state));
  }
  return state.outcome;
}

int Game::PieceCount(const GameState& state, Player player) const {
  return static_cast<int>(
      std::count(state.cells.begin(), state.cells.end(), StoneOf(player)));
}

int Game::Score(const GameState& state) const {
  if (!HasScore()) {
    throw UnsupportedFeature("game " + Describe() + " has no score");
  }
  if (!state.terminal()) {
    throw ContractViolation("score requested on non-terminal state");
  }
  return PieceCount(state, Player::kFirst) - PieceCount(state, Player::kSecond);
}

PlaneShape Game::EncodingShape() const { return {3, rows_, cols_}; }

// Default plane order: 0 first-player stones, 1 second-player stones,
// 2 all ones when the first player is to move.
void Game::EncodePlanes(const GameState& state, std::span<float> out) const {
  const int area = rows_ * cols_;
  std::fill(out.begin(), out.end(), 0.0f);
  for (int i = 0; i < area; ++i) {
    if (state.cells[i] == kFirstStone) out[i] = 1.0f;
    if (state.cells[i] == kSecondStone) out[area + i] = 1.0f;
  }
  if (state.to_move == Player::kFirst) {
    std::fill(out.begin() + 2 * area, out.begin() + 3 * area, 1.0f);
  }
}

std::vector<float> Game::EncodePlanes(const GameState& state) const {
  std::vector<float> out(static_cast<size_t>(EncodingShape().size()));
  EncodePlanes(state, out);
  return out;
}

void Game::SetSymmetries(std::vector<std::vector<int>> perms) {
  symmetries_ = std::move(perms);
}

std::vector<std::vector<int>> Game::SquareGroup(int n) {
  std::vector<std::vector<int>> group;
  for (int t = 0; t < 8; ++t) {
    std::vector<int> perm(static_cast<size_t>(n * n));
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        int rr = r, cc = c;
        if (t & 4) std::swap(rr, cc);   // transpose
        if (t & 1) rr = n - 1 - rr;     // vertical flip
        if (t & 2) cc = n - 1 - cc;     // horizontal flip
        perm[r * n + c] = rr * n + cc;
      }
    }
    group.push_back(std::move(perm));
  }
  return group;
}

GameState Game::Transform(const GameState& state, int symmetry) const {
  const auto& perm = symmetries_.at(static_cast<size_t>(symmetry));
  GameState out;
  out.cells.assign(state.cells.size(), kEmpty);
  for (size_t i = 0; i < perm.size(); ++i) out.cells[perm[i]] = state.cells[i];
  out.ply = state.ply;
  out.to_move = state.to_move;
  Finalize(out);
  return out;
}

std::vector<GameState> Game::Symmetries(const GameState& state) const {
  std::vector<GameState> out;
  std::unordered_set<StateKey> seen;
  out.push_back(state);
  seen.insert(state.key);
  for (int s = 1; s < SymmetryCount(); ++s) {
    GameState image = Transform(state, s);
    if (seen.insert(image.key).second) out.push_back(std::move(image));
  }
  return out;
}

std::string Game::CellName(int cell) const {
  std::string name(1, static_cast<char>('a' + ColOf(cell)));
  name += std::to_string(RowOf(cell) + 1);
  return name;
}

int Game::ParseCell(std::string_view text) const {
  if (text.size() < 2 || text[0] < 'a' || text[0] > 'z') return -1;
  int col = text[0] - 'a';
  int row = 0;
  for (char ch : text.substr(1)) {
    if (ch < '0' || ch > '9') return -1;
    row = row * 10 + (ch - '0');
  }
  row -= 1;
  if (!OnBoard(row, col)) return -1;
  return CellIndex(row, col);
}

std::string Game::ActionToString(Action action) const {
  if (action >= 0 && action < num_cells()) return CellName(action);
  return "#" + std::to_string(action);
}

Action Game::ParseAction(const GameState& state, std::string_view text) const {
  if (state.terminal()) throw IllegalAction("game is over");
  std::vector<Action> legal;
  GenerateActions(state, legal);
  for (Action a : legal) {
    if (ActionToString(a) == text) return a;
  }
  throw IllegalAction("not a legal move here: '" + std::string(text) + "'");
}

char Game::StoneChar(int8_t stone) const {
  return stone == kFirstStone ? 'x' : (stone == kSecondStone ? 'o' : '.');
}

std::string Game::Serialize(const GameState& state) const {
  std::string out(GameKindName(kind()));
  out += ' ';
  out += std::to_string(config_.size);
  out += ' ';
  for (int r = 0; r < rows_; ++r) {
    if (r > 0) out += '/';
    for (int c = 0; c < cols_; ++c) out += StoneChar(state.cells[CellIndex(r, c)]);
  }
  out += state.to_move == Player::kFirst ? " 1 " : " 2 ";
  out += std::to_string(state.ply);
  return out;
}

GameState Game::Deserialize(std::string_view text) const {
  std::istringstream in{std::string(text)};
  std::string name, board;
  int size = 0, mover = 0, ply = -1;
  if (!(in >> name >> size >> board >> mover >> ply)) {
    throw std::invalid_argument("malformed position: " + std::string(text));
  }
  if (name != GameKindName(kind()) || size != config_.size) {
    throw std::invalid_argument("position is for a different game: " + name +
                                " " + std::to_string(size));
  }
  if ((mover != 1 && mover != 2) || ply < 0) {
    throw std::invalid_argument("bad side to move or ply in: " +
                                std::string(text));
  }
  GameState state;
  state.cells.assign(static_cast<size_t>(num_cells()), kEmpty);
  int r = 0, c = 0;
  for (char ch : board) {
    if (ch == '/') {
      if (c != cols_) throw std::invalid_argument("bad row length");
      ++r;
      c = 0;
      continue;
    }
    if (r >= rows_ || c >= cols_) throw std::invalid_argument("board too large");
    int8_t stone = kEmpty;
    if (ch == StoneChar(kFirstStone)) {
      stone = kFirstStone;
    } else if (ch == StoneChar(kSecondStone)) {
      stone = kSecondStone;
    } else if (ch != '.') {
      throw std::invalid_argument(std::string("bad cell character: ") + ch);
    }
    state.cells[CellIndex(r, c++)] = stone;
  }
  if (r != rows_ - 1 || c != cols_) throw std::invalid_argument("board too small");
  state.to_move = mover == 1 ? Player::kFirst : Player::kSecond;
  state.ply = ply;
  Finalize(state);
  return state;
}

std::string Game::ToAscii(const GameState& state) const {
  std::string out = "  ";
  for (int c = 0; c < cols_; ++c) out += static_cast<char>('a' + c);
  out += '\n';
  for (int r = rows_ - 1; r >= 0; --r) {
    std::string label = std::to_string(r + 1);
    if (label.size() < 2) label = " " + label;
    out += label;
    for (int c = 0; c < cols_; ++c) out += StoneChar(state.cells[CellIndex(r, c)]);
    out += '\n';
  }
  return out;
}

std::unique_ptr<Game> MakeGame(const GameConfig& config) {
  auto check = [&](int lo, int hi, bool even) {
    if (config.size < lo || config.size > hi || (even && config.size % 2)) {
      throw std::invalid_argument("unsupported board size " +
                                  std::to_string(config.size) + " for " +
                                  std::string(GameKindName(config.kind)));
    }
  };
  if (config.swap && config.kind != GameKind::kHex) {
    throw std::invalid_argument("swap rule only exists for hex");
  }
  switch (config.kind) {
    case GameKind::kTicTacToe:
      check(3, 3, false);
      return std::make_unique<TicTacToe>();
    case GameKind::kHex:
      check(3, 13, false);
      return std::make_unique<Hex>(config.size, config.swap);
    case GameKind::kOthello:
      check(4, 8, true);
      return std::make_unique<Othello>(config.size);
    case GameKind::kBreakthrough:
      check(5, 8, false);
      return std::make_unique<Breakthrough>(config.size);
    case GameKind::kClobber:
      check(4, 8, false);
      return std::make_unique<Clobber>(config.size);
  }
  throw std::invalid_argument("unknown game kind");
}

double EstimateMeanGameLength(const Game& game, int games, uint64_t seed) {
  std::mt19937_64 rng(seed);
  double total = 0;
  for (int g = 0; g < games; ++g) {
    GameState state = game.InitialState();
    while (!state.terminal()) {
      auto actions = game.LegalActions(state);
      std::uniform_int_distribution<size_t> pick(0, actions.size() - 1);
      state = game.ApplyUnchecked(state, actions[pick(rng)]);
    }
    total += state.ply;
  }
  return games > 0 ? total / games : 0.0;
}

}  // namespace descent
