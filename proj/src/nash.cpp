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

#include "gt/nash.hpp"

#include <limits>
#include <set>

#include "gt/errors.hpp"

namespace gt {

SpeReport backward_induction(const ExtensiveGame& game) {
  require_valid(game);
  require_strict(game);

  SpeReport report;
  report.continuation.resize(game.num_nodes());
  report.profile.moves.resize(game.num_players());
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    report.profile.moves[p].resize(game.decision_nodes(PlayerId{p}).size());
  }

  // Pre-order puts every child after its parent, so a reverse sweep sees
  // children first.
  for (std::size_t i = game.num_nodes(); i-- > 0;) {
    const NodeId id{i};
    const auto& n = game.node(id);
    if (n.is_leaf()) {
      report.continuation[i] = n.first_outcome;
      continue;
    }
    std::size_t best = 0;
    for (std::size_t m = 1; m < n.moves.size(); ++m) {
      const OutcomeId cand = report.continuation[n.moves[m].child.value];
      const OutcomeId incumbent = report.continuation[n.moves[best].child.value];
      if (game.payoff(incumbent, *n.owner) < game.payoff(cand, *n.owner)) best = m;
    }
    report.continuation[i] = report.continuation[n.moves[best].child.value];
    report.profile.moves[n.owner->value][game.decision_index(id)] = best;
  }
  report.path = game.replay(report.profile);
  report.outcome = report.path.outcome;
  return report;
}

std::size_t strategy_count(const ExtensiveGame& game, PlayerId player) {
  std::size_t count = 1;
  for (const NodeId id : game.decision_nodes(player)) {
    const std::size_t b = game.node(id).moves.size();
    if (b != 0 && count > std::numeric_limits<std::size_t>::max() / b) {
      return std::numeric_limits<std::size_t>::max();
    }
    count *= b;
  }
  return count;
}

std::size_t strategy_index(const ExtensiveGame& game, PlayerId player,
                           const std::vector<std::size_t>& moves) {
  const auto nodes = game.decision_nodes(player);
  std::size_t index = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    index = index * game.node(nodes[i]).moves.size() + moves.at(i);
  }
  return index;
}

namespace {

StrategySet enumerate(const ExtensiveGame& game, PlayerId player, std::size_t count) {
  const auto nodes = game.decision_nodes(player);
  StrategySet set;
  set.assignments.reserve(count);
  std::vector<std::size_t> digits(nodes.size(), 0);
  for (std::size_t k = 0; k < count; ++k) {
    set.assignments.push_back(digits);
    for (std::size_t i = nodes.size(); i-- > 0;) {
      if (++digits[i] < game.node(nodes[i]).moves.size()) break;
      digits[i] = 0;
    }
  }

  std::set<std::string> seen;
  bool unique = true;
  for (const auto& a : set.assignments) {
    std::string label;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) label += '_';
      label += game.node(nodes[i]).moves[a[i]].label;
    }
    if (label.empty()) label = "none";
    unique = unique && seen.insert(label).second;
    set.labels.push_back(std::move(label));
  }
  if (!unique) {
    // Joined move labels can collide ("a_b" + "c" vs "a" + "b_c").
    for (std::size_t k = 0; k < set.labels.size(); ++k) set.labels[k] = "s" + std::to_string(k);
  }
  return set;
}

}  // namespace

NormalFormConversion to_normal_form(const ExtensiveGame& game, std::size_t max_strategies) {
  require_valid(game);
  if (game.num_players() != 2) {
    throw WrongPlayerCount("normal-form conversion needs exactly 2 players, game has " +
                           std::to_string(game.num_players()));
  }
  std::array<std::size_t, 2> counts{};
  for (std::size_t p = 0; p < 2; ++p) {
    counts[p] = strategy_count(game, PlayerId{p});
    if (counts[p] > max_strategies) {
      throw SizeGuardExceeded("player " + game.player_name(PlayerId{p}) + " has " +
                              (counts[p] == std::numeric_limits<std::size_t>::max()
                                   ? std::string("too many")
                                   : std::to_string(counts[p])) +
                              " strategies, limit is " + std::to_string(max_strategies));
    }
  }

  std::array<StrategySet, 2> sets{enumerate(game, PlayerId{0}, counts[0]),
                                  enumerate(game, PlayerId{1}, counts[1])};
  StrategyProfile profile;
  profile.moves.resize(2);
  std::vector<std::vector<NormalFormGame::Cell>> rows(counts[0]);
  for (std::size_t r = 0; r < counts[0]; ++r) {
    profile.moves[0] = sets[0].assignments[r];
    rows[r].reserve(counts[1]);
    for (std::size_t c = 0; c < counts[1]; ++c) {
      profile.moves[1] = sets[1].assignments[c];
      const OutcomeId o = game.replay(profile).outcome;
      rows[r].push_back({game.payoff(o, PlayerId{0}), game.payoff(o, PlayerId{1})});
    }
  }
  NormalFormGame normal({game.player_name(PlayerId{0}), game.player_name(PlayerId{1})},
                        sets[0].labels, sets[1].labels, std::move(rows));
  return NormalFormConversion{std::move(normal), std::move(sets)};
}

std::vector<NashCell> pure_nash(const NormalFormGame& game) {
  const std::size_t rows = game.num_rows();
  const std::size_t cols = game.num_cols();
  std::vector<Payoff> col_best(cols);  // row player's best in each column
  std::vector<Payoff> row_best(rows);  // column player's best in each row
  for (std::size_t c = 0; c < cols; ++c) {
    col_best[c] = game.cell(0, c)[0];
    for (std::size_t r = 1; r < rows; ++r) col_best[c] = std::max(col_best[c], game.cell(r, c)[0]);
  }
  for (std::size_t r = 0; r < rows; ++r) {
    row_best[r] = game.cell(r, 0)[1];
    for (std::size_t c = 1; c < cols; ++c) row_best[r] = std::max(row_best[r], game.cell(r, c)[1]);
  }
  std::vector<NashCell> out;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& cell = game.cell(r, c);
      if (cell[0] == col_best[c] && cell[1] == row_best[r]) out.push_back({r, c, cell});
    }
  }
  return out;
}

SuperrationalSolution superrational(const NormalFormGame& game) {
  const std::size_t n = game.num_rows();
  if (n != game.num_cols()) {
    throw NotSymmetric(0, 0,
                       "game is not symmetric: superrationality needs a square matrix, got " +
                           std::to_string(n) + "x" + std::to_string(game.num_cols()));
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (game.row_labels()[r] != game.col_labels()[r]) {
      throw NotSymmetric(r, r,
                         "game is not symmetric: row label '" + game.row_labels()[r] +
                             "' differs from column label '" + game.col_labels()[r] + "'");
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (game.cell(r, c)[1] != game.cell(c, r)[0]) {
        throw NotSymmetric(r, c, "game is not symmetric at (" + game.row_labels()[r] + ", " +
                                     game.col_labels()[c] + "): column payoff " +
                                     std::to_string(game.cell(r, c)[1].value) +
                                     " but mirrored row payoff " +
                                     std::to_string(game.cell(c, r)[0].value));
      }
    }
  }
  SuperrationalSolution best{{0, 0, game.cell(0, 0)}, false};
  for (std::size_t k = 1; k < n; ++k) {
    const auto& cell = game.cell(k, k);
    if (best.cell.payoffs[0] < cell[0]) {
      best = {{k, k, cell}, false};
    } else if (cell[0] == best.cell.payoffs[0]) {
      best.tie_broken = true;
    }
  }
  return best;
}

}  // namespace gt
