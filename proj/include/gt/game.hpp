// Copyright 2026 The gt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GT_GAME_HPP
#define GT_GAME_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gt {

/// Dense index with a tag so that player, node and outcome ids do not mix.
template <typename Tag>
struct Index {
  std::size_t value = 0;

  friend constexpr auto operator<=>(Index, Index) = default;
};

using PlayerId = Index<struct PlayerTag>;
using NodeId = Index<struct NodeTag>;
/// Depth-first, left-to-right leaf index.
using OutcomeId = Index<struct OutcomeTag>;

/// Ordinal payoff. Only comparisons are defined on purpose.
struct Payoff {
  std::int64_t value = 0;

  friend constexpr auto operator<=>(Payoff, Payoff) = default;
};

struct Move;

/// Recursive tree value used to build games. ExtensiveGame flattens it.
class GameNode {
 public:
  static GameNode leaf(std::vector<Payoff> payoffs);
  static GameNode leaf(std::initializer_list<std::int64_t> payoffs);
  static GameNode decision(PlayerId owner, std::vector<Move> moves);

  bool is_leaf() const noexcept { return !owner_.has_value(); }
  PlayerId owner() const { return *owner_; }
  const std::vector<Move>& moves() const noexcept { return moves_; }
  const std::vector<Payoff>& payoffs() const noexcept { return payoffs_; }

  friend bool operator==(const GameNode&, const GameNode&);

 private:
  std::optional<PlayerId> owner_;
  std::vector<Move> moves_;
  std::vector<Payoff> payoffs_;
};

struct Move {
  std::string label;
  GameNode child;

  friend bool operator==(const Move&, const Move&) = default;
};

struct PathStep {
  NodeId node;
  std::size_t move = 0;
  std::string label;

  friend bool operator==(const PathStep&, const PathStep&) = default;
};

/// Root-to-leaf sequence of decisions.
struct Path {
  std::vector<PathStep> steps;
  OutcomeId outcome;

  std::vector<std::string> labels() const;
  friend bool operator==(const Path&, const Path&) = default;
};

/// Per player, one move index for each of that player's decision nodes, in
/// the order given by ExtensiveGame::decision_nodes(player).
struct StrategyProfile {
  std::vector<std::vector<std::size_t>> moves;

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
};

/// Finite perfect-information game tree stored as a pre-order arena.
///
/// Construction never throws on structural problems; run validate() (or
/// require_valid()) before handing a game to a solver. Node 0 is the root.
/// Every subtree owns a contiguous range of OutcomeIds.
class ExtensiveGame {
 public:
  struct Edge {
    std::string label;
    NodeId child;
  };

  struct Node {
    std::optional<PlayerId> owner;  // empty for leaves
    std::vector<Edge> moves;
    std::optional<NodeId> parent;
    std::size_t parent_move = 0;
    std::size_t depth = 0;
    std::vector<Payoff> payoffs;  // leaves only
    OutcomeId first_outcome;
    OutcomeId end_outcome;

    bool is_leaf() const noexcept { return !owner.has_value(); }
  };

  ExtensiveGame(std::vector<std::string> players, const GameNode& root);

  std::span<const std::string> players() const noexcept { return players_; }
  std::size_t num_players() const noexcept { return players_.size(); }
  const std::string& player_name(PlayerId p) const { return players_.at(p.value); }

  NodeId root() const noexcept { return NodeId{0}; }
  std::size_t num_nodes() const noexcept { return nodes_.size(); }
  const Node& node(NodeId id) const { return nodes_.at(id.value); }
  NodeId child(NodeId id, std::size_t move) const { return node(id).moves.at(move).child; }

  std::size_t num_outcomes() const noexcept { return leaves_.size(); }
  NodeId leaf(OutcomeId o) const { return leaves_.at(o.value); }
  std::span<const Payoff> payoffs(OutcomeId o) const { return node(leaf(o)).payoffs; }
  Payoff payoff(OutcomeId o, PlayerId p) const { return payoffs(o)[p.value]; }

  /// Half-open OutcomeId range of the leaves below `id`.
  std::pair<OutcomeId, OutcomeId> outcome_range(NodeId id) const {
    const auto& n = node(id);
    return {n.first_outcome, n.end_outcome};
  }
  bool contains(NodeId id, OutcomeId o) const {
    const auto& n = node(id);
    return n.first_outcome <= o && o < n.end_outcome;
  }
  /// Index of the move at `id` whose subtree holds `o`.
  std::size_t move_toward(NodeId id, OutcomeId o) const;

  /// Decision nodes of one player in pre-order.
  std::span<const NodeId> decision_nodes(PlayerId p) const { return decision_nodes_.at(p.value); }
  /// Position of an internal node within its owner's decision_nodes().
  std::size_t decision_index(NodeId id) const { return decision_index_.at(id.value); }

  Path path_to(OutcomeId o) const;
  /// Follow move indices from the root; nullopt if any index is out of range
  /// or the walk does not end on a leaf.
  std::optional<Path> follow(std::span<const std::size_t> moves) const;
  Path replay(const StrategyProfile& profile) const;

  GameNode to_tree() const;

  friend bool operator==(const ExtensiveGame& a, const ExtensiveGame& b) {
    return a.players_ == b.players_ && a.to_tree() == b.to_tree();
  }

 private:
  NodeId flatten(const GameNode& src, std::optional<NodeId> parent, std::size_t parent_move,
                 std::size_t depth);
  GameNode subtree(NodeId id) const;

  std::vector<std::string> players_;
  std::vector<Node> nodes_;
  std::vector<NodeId> leaves_;
  std::vector<std::vector<NodeId>> decision_nodes_;
  std::vector<std::size_t> decision_index_;
};

struct Diagnostic {
  std::string code;     // e.g. "payoff arity", "unknown player"
  std::string where;    // move-label path from the root, "/" for the root
  std::string message;
};

std::vector<Diagnostic> validate(const ExtensiveGame& game);

/// Throws InvalidGame listing every diagnostic if validate() is not empty.
void require_valid(const ExtensiveGame& game);

struct StrictnessViolation {
  PlayerId player;
  OutcomeId first;
  OutcomeId second;
};

/// One entry per pair of outcomes that give some player the same payoff.
std::vector<StrictnessViolation> check_strict_preferences(const ExtensiveGame& game);

/// Throws StrictnessRequired naming the first tie.
void require_strict(const ExtensiveGame& game);

struct OutcomeInfo {
  OutcomeId id;
  std::vector<Payoff> payoffs;
  Path path;
};

std::vector<OutcomeInfo> outcomes(const ExtensiveGame& game);

/// True if `a` gives every player at least what `b` gives and someone more.
bool pareto_dominates(std::span<const Payoff> a, std::span<const Payoff> b);

/// Outcomes not Pareto-dominated by any other outcome, ascending.
std::vector<OutcomeId> pareto_optimal_outcomes(const ExtensiveGame& game);

/// Human-readable "give/pay" style location of a node; "/" for the root.
std::string node_location(const ExtensiveGame& game, NodeId id);

/// Two-player game in matrix form. Cells are stored row-major.
class NormalFormGame {
 public:
  using Cell = std::array<Payoff, 2>;

  /// Throws InvalidGame if the matrix is empty, ragged, or labels repeat.
  NormalFormGame(std::array<std::string, 2> players, std::vector<std::string> row_labels,
                 std::vector<std::string> col_labels, std::vector<std::vector<Cell>> rows);

  const std::array<std::string, 2>& players() const noexcept { return players_; }
  std::size_t num_rows() const noexcept { return row_labels_.size(); }
  std::size_t num_cols() const noexcept { return col_labels_.size(); }
  std::span<const std::string> row_labels() const noexcept { return row_labels_; }
  std::span<const std::string> col_labels() const noexcept { return col_labels_; }
  const Cell& cell(std::size_t row, std::size_t col) const {
    return cells_.at(row * num_cols() + col);
  }

  friend bool operator==(const NormalFormGame&, const NormalFormGame&) = default;

 private:
  std::array<std::string, 2> players_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<Cell> cells_;
};

}  // namespace gt

#endif  // GT_GAME_HPP
