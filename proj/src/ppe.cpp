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

#include "gt/ppe.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "gt/errors.hpp"

namespace gt {

PossibleSet::PossibleSet(std::vector<OutcomeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

PossibleSet PossibleSet::below(const ExtensiveGame& game, NodeId node) {
  const auto [first, last] = game.outcome_range(node);
  PossibleSet s;
  s.ids_.reserve(last.value - first.value);
  for (std::size_t i = first.value; i < last.value; ++i) s.ids_.push_back(OutcomeId{i});
  return s;
}

bool PossibleSet::contains(OutcomeId o) const {
  return std::binary_search(ids_.begin(), ids_.end(), o);
}

bool PossibleSet::erase(OutcomeId o) {
  const auto it = std::lower_bound(ids_.begin(), ids_.end(), o);
  if (it == ids_.end() || *it != o) return false;
  ids_.erase(it);
  return true;
}

PossibleSet PossibleSet::within(OutcomeId first, OutcomeId last) const {
  PossibleSet s;
  s.ids_.assign(std::lower_bound(ids_.begin(), ids_.end(), first),
                std::lower_bound(ids_.begin(), ids_.end(), last));
  return s;
}

namespace {

// Lowest payoff the owner can still get through each move; nullopt when no
// outcome below that move is conceivable any more.
std::vector<std::optional<Payoff>> guaranteed_minimums(const ExtensiveGame& game, NodeId node,
                                                       const PossibleSet& possible) {
  const auto& n = game.node(node);
  std::vector<std::optional<Payoff>> mins(n.moves.size());
  for (std::size_t m = 0; m < n.moves.size(); ++m) {
    const auto [first, last] = game.outcome_range(n.moves[m].child);
    auto it = std::lower_bound(possible.begin(), possible.end(), first);
    for (; it != possible.end() && *it < last; ++it) {
      const Payoff p = game.payoff(*it, *n.owner);
      if (!mins[m] || p < *mins[m]) mins[m] = p;
    }
  }
  return mins;
}

void check_fixpoint_preconditions(const ExtensiveGame& game, NodeId node,
                                  const PossibleSet& possible) {
  if (game.node(node).is_leaf()) throw InvalidGame("preemption needs a decision node");
  if (possible.empty()) throw InvalidGame("possible set is empty");
  for (const OutcomeId o : possible) {
    if (!game.contains(node, o)) {
      throw InvalidGame("outcome " + std::to_string(o.value) + " is not below node " +
                        node_location(game, node));
    }
  }
}

}  // namespace

FixpointResult preemption_fixpoint(const ExtensiveGame& game, NodeId node, PossibleSet possible,
                                   const ScanOrder& order) {
  check_fixpoint_preconditions(game, node, possible);
  const auto& n = game.node(node);
  const PlayerId owner = *n.owner;

  FixpointResult result;
  for (bool removed = true; removed;) {
    removed = false;
    const auto mins = guaranteed_minimums(game, node, possible);
    const std::vector<OutcomeId> scan = order ? order(possible) : possible.ids();
    for (const OutcomeId o : scan) {
      const Payoff own = game.payoff(o, owner);
      const std::size_t home = game.move_toward(node, o);
      for (std::size_t m = 0; m < mins.size(); ++m) {
        if (m == home || !mins[m] || !(own < *mins[m])) continue;
        if (possible.size() == 1) {
          throw InternalError("preemption would empty the possible set at " +
                              node_location(game, node));
        }
        possible.erase(o);
        result.steps.push_back(EliminationStep{node, o, m, n.moves[m].label, *mins[m], own});
        removed = true;
        break;
      }
      if (removed) break;
    }
  }
  result.survivors = std::move(possible);
  return result;
}

PpeReport ppe(const ExtensiveGame& game, const ScanOrder& order) {
  require_valid(game);
  require_strict(game);

  PpeReport report;
  PossibleSet possible = PossibleSet::below(game, game.root());
  NodeId cur = game.root();
  while (!game.node(cur).is_leaf()) {
    const auto& n = game.node(cur);
    PpeStage stage{cur, possible, {}, 0};
    auto fix = preemption_fixpoint(game, cur, std::move(possible), order);
    report.trace.insert(report.trace.end(), fix.steps.begin(), fix.steps.end());

    const auto best = std::max_element(
        fix.survivors.begin(), fix.survivors.end(), [&](OutcomeId a, OutcomeId b) {
          return game.payoff(a, *n.owner) < game.payoff(b, *n.owner);
        });
    stage.chosen_move = game.move_toward(cur, *best);
    const NodeId next = n.moves[stage.chosen_move].child;
    const auto [first, last] = game.outcome_range(next);
    possible = fix.survivors.within(first, last);
    stage.survivors = std::move(fix.survivors);
    report.stages.push_back(std::move(stage));
    cur = next;
  }
  report.outcome = game.node(cur).first_outcome;
  report.path = game.path_to(report.outcome);
  return report;
}

std::string ComparisonReport::verdict() const {
  if (identical()) return "identical outcomes";
  if (ppe_dominates_spe) return "PPE Pareto-dominates SPE";
  if (spe_dominates_ppe) return "SPE Pareto-dominates PPE";
  return "incomparable";
}

}  // namespace gt
