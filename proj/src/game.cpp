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

#include "gt/game.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gt/errors.hpp"

namespace gt {

GameNode GameNode::leaf(std::vector<Payoff> payoffs) {
  GameNode n;
  n.payoffs_ = std::move(payoffs);
  return n;
}

GameNode GameNode::leaf(std::initializer_list<std::int64_t> payoffs) {
  std::vector<Payoff> v;
  v.reserve(payoffs.size());
  for (auto p : payoffs) v.push_back(Payoff{p});
  return leaf(std::move(v));
}

GameNode GameNode::decision(PlayerId owner, std::vector<Move> moves) {
  GameNode n;
  n.owner_ = owner;
  n.moves_ = std::move(moves);
  return n;
}

bool operator==(const GameNode& a, const GameNode& b) {
  return a.owner_ == b.owner_ && a.payoffs_ == b.payoffs_ && a.moves_ == b.moves_;
}

std::vector<std::string> Path::labels() const {
  std::vector<std::string> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.label);
  return out;
}

ExtensiveGame::ExtensiveGame(std::vector<std::string> players, const GameNode& root)
    : players_(std::move(players)), decision_nodes_(players_.size()) {
  flatten(root, std::nullopt, 0, 0);
  decision_index_.assign(nodes_.size(), 0);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& n = nodes_[i];
    if (n.is_leaf() || n.owner->value >= decision_nodes_.size()) continue;
    auto& list = decision_nodes_[n.owner->value];
    decision_index_[i] = list.size();
    list.push_back(NodeId{i});
  }
}

NodeId ExtensiveGame::flatten(const GameNode& src, std::optional<NodeId> parent,
                              std::size_t parent_move, std::size_t depth) {
  const NodeId id{nodes_.size()};
  nodes_.emplace_back();
  {
    auto& n = nodes_.back();
    n.parent = parent;
    n.parent_move = parent_move;
    n.depth = depth;
    n.first_outcome = OutcomeId{leaves_.size()};
  }
  if (src.is_leaf()) {
    nodes_[id.value].payoffs = src.payoffs();
    leaves_.push_back(id);
  } else {
    nodes_[id.value].owner = src.owner();
    for (std::size_t m = 0; m < src.moves().size(); ++m) {
      const auto& mv = src.moves()[m];
      const NodeId child = flatten(mv.child, id, m, depth + 1);
      // nodes_ may have reallocated.
      nodes_[id.value].moves.push_back(Edge{mv.label, child});
    }
  }
  nodes_[id.value].end_outcome = OutcomeId{leaves_.size()};
  return id;
}

std::size_t ExtensiveGame::move_toward(NodeId id, OutcomeId o) const {
  const auto& moves = node(id).moves;
  // Children's outcome ranges are consecutive, so the last child whose range
  // starts at or before `o` is the one.
  auto it = std::upper_bound(moves.begin(), moves.end(), o, [&](OutcomeId v, const Edge& e) {
    return v < node(e.child).first_outcome;
  });
  if (it == moves.begin() || !contains(id, o)) {
    throw InternalError("outcome " + std::to_string(o.value) + " is not below node " +
                        std::to_string(id.value));
  }
  return static_cast<std::size_t>(std::distance(moves.begin(), it)) - 1;
}

Path ExtensiveGame::path_to(OutcomeId o) const {
  Path path;
  path.outcome = o;
  NodeId cur = root();
  while (!node(cur).is_leaf()) {
    const std::size_t m = move_toward(cur, o);
    path.steps.push_back(PathStep{cur, m, node(cur).moves[m].label});
    cur = node(cur).moves[m].child;
  }
  return path;
}

std::optional<Path> ExtensiveGame::follow(std::span<const std::size_t> moves) const {
  Path path;
  NodeId cur = root();
  for (const std::size_t m : moves) {
    const auto& n = node(cur);
    if (n.is_leaf() || m >= n.moves.size()) return std::nullopt;
    path.steps.push_back(PathStep{cur, m, n.moves[m].label});
    cur = n.moves[m].child;
  }
  if (!node(cur).is_leaf()) return std::nullopt;
  path.outcome = node(cur).first_outcome;
  return path;
}

Path ExtensiveGame::replay(const StrategyProfile& profile) const {
  Path path;
  NodeId cur = root();
  while (!node(cur).is_leaf()) {
    const auto& n = node(cur);
    const std::size_t m = profile.moves.at(n.owner->value).at(decision_index(cur));
    path.steps.push_back(PathStep{cur, m, n.moves.at(m).label});
    cur = n.moves[m].child;
  }
  path.outcome = node(cur).first_outcome;
  return path;
}

GameNode ExtensiveGame::subtree(NodeId id) const {
  const auto& n = node(id);
  if (n.is_leaf()) return GameNode::leaf(n.payoffs);
  std::vector<Move> moves;
  moves.reserve(n.moves.size());
  for (const auto& e : n.moves) moves.push_back(Move{e.label, subtree(e.child)});
  return GameNode::decision(*n.owner, std::move(moves));
}

GameNode ExtensiveGame::to_tree() const { return subtree(root()); }

std::string node_location(const ExtensiveGame& game, NodeId id) {
  std::vector<std::string> labels;
  for (NodeId cur = id; game.node(cur).parent;) {
    const auto& n = game.node(cur);
    const NodeId parent = *n.parent;
    labels.push_back(game.node(parent).moves[n.parent_move].label);
    cur = parent;
  }
  if (labels.empty()) return "/";
  std::string out;
  for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
    out += '/';
    out += *it;
  }
  return out;
}

std::vector<Diagnostic> validate(const ExtensiveGame& game) {
  std::vector<Diagnostic> out;
  if (game.num_players() == 0) {
    out.push_back({"no players", "/", "a game needs at least one player"});
  }
  {
    std::set<std::string> names;
    for (const auto& p : game.players()) {
      if (p.empty()) out.push_back({"empty player name", "/", "player names must be non-empty"});
      if (!names.insert(p).second) {
        out.push_back({"duplicate player", "/", "player '" + p + "' is declared twice"});
      }
    }
  }
  for (std::size_t i = 0; i < game.num_nodes(); ++i) {
    const NodeId id{i};
    const auto& n = game.node(id);
    const auto where = node_location(game, id);
    if (n.is_leaf()) {
      if (n.payoffs.size() != game.num_players()) {
        out.push_back({"payoff arity", where,
                       "leaf has " + std::to_string(n.payoffs.size()) + " payoffs, expected " +
                           std::to_string(game.num_players())});
      }
      continue;
    }
    if (n.owner->value >= game.num_players()) {
      out.push_back({"unknown player", where,
                     "owner index " + std::to_string(n.owner->value) + " but the game has " +
                         std::to_string(game.num_players()) + " players"});
    }
    if (n.moves.empty()) {
      out.push_back({"no moves", where, "decision node has no moves"});
    }
    std::set<std::string> labels;
    for (const auto& e : n.moves) {
      if (e.label.empty()) {
        out.push_back({"empty label", where, "move label must be non-empty"});
      } else if (!labels.insert(e.label).second) {
        out.push_back({"duplicate move label", where, "move '" + e.label + "' appears twice"});
      }
    }
  }
  return out;
}

void require_valid(const ExtensiveGame& game) {
  const auto diags = validate(game);
  if (diags.empty()) return;
  std::ostringstream msg;
  msg << "invalid game:";
  for (const auto& d : diags) msg << "\n  " << d.code << " at " << d.where << ": " << d.message;
  throw InvalidGame(msg.str());
}

std::vector<StrictnessViolation> check_strict_preferences(const ExtensiveGame& game) {
  std::vector<StrictnessViolation> out;
  const std::size_t n = game.num_outcomes();
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    const PlayerId player{p};
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (game.payoff(OutcomeId{a}, player) == game.payoff(OutcomeId{b}, player)) {
          out.push_back({player, OutcomeId{a}, OutcomeId{b}});
        }
      }
    }
  }
  return out;
}

void require_strict(const ExtensiveGame& game) {
  const auto ties = check_strict_preferences(game);
  if (ties.empty()) return;
  const auto& t = ties.front();
  throw StrictnessRequired("strict preferences required: player " +
                           game.player_name(t.player) + " gets the same payoff at outcomes " +
                           std::to_string(t.first.value) + " and " +
                           std::to_string(t.second.value) + " (" + std::to_string(ties.size()) +
                           " tie(s) in total)");
}

std::vector<OutcomeInfo> outcomes(const ExtensiveGame& game) {
  std::vector<OutcomeInfo> out;
  out.reserve(game.num_outcomes());
  for (std::size_t i = 0; i < game.num_outcomes(); ++i) {
    const OutcomeId o{i};
    const auto pay = game.payoffs(o);
    out.push_back(OutcomeInfo{o, {pay.begin(), pay.end()}, game.path_to(o)});
  }
  return out;
}

bool pareto_dominates(std::span<const Payoff> a, std::span<const Payoff> b) {
  bool strictly = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
    if (b[i] < a[i]) strictly = true;
  }
  return strictly;
}

std::vector<OutcomeId> pareto_optimal_outcomes(const ExtensiveGame& game) {
  std::vector<OutcomeId> out;
  const std::size_t n = game.num_outcomes();
  for (std::size_t i = 0; i < n; ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < n && !dominated; ++j) {
      dominated = j != i && pareto_dominates(game.payoffs(OutcomeId{j}), game.payoffs(OutcomeId{i}));
    }
    if (!dominated) out.push_back(OutcomeId{i});
  }
  return out;
}

NormalFormGame::NormalFormGame(std::array<std::string, 2> players,
                               std::vector<std::string> row_labels,
                               std::vector<std::string> col_labels,
                               std::vector<std::vector<Cell>> rows)
    : players_(std::move(players)),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {
  if (row_labels_.empty() || col_labels_.empty()) {
    throw InvalidGame("normal-form game needs at least one row and one column");
  }
  if (rows.size() != row_labels_.size()) {
    throw InvalidGame("expected " + std::to_string(row_labels_.size()) + " rows, got " +
                      std::to_string(rows.size()));
  }
  auto check_unique = [](const std::vector<std::string>& labels, const char* what) {
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (l.empty()) throw InvalidGame(std::string("empty ") + what + " label");
      if (!seen.insert(l).second) {
        throw InvalidGame(std::string("duplicate ") + what + " label '" + l + "'");
      }
    }
  };
  check_unique(row_labels_, "row");
  check_unique(col_labels_, "column");
  if (players_[0] == players_[1]) throw InvalidGame("duplicate player '" + players_[0] + "'");
  cells_.reserve(row_labels_.size() * col_labels_.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != col_labels_.size()) {
      throw InvalidGame("ragged row '" + row_labels_[r] + "': " + std::to_string(rows[r].size()) +
                        " cells for " + std::to_string(col_labels_.size()) + " columns");
    }
    cells_.insert(cells_.end(), rows[r].begin(), rows[r].end());
  }
}

}  // namespace gt
