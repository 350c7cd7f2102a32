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

#ifndef GT_NASH_HPP
#define GT_NASH_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "gt/game.hpp"

namespace gt {

/// Subgame perfect equilibrium found by backward induction.
struct SpeReport {
  OutcomeId outcome;
  Path path;
  /// A decision at every node, reached or not.
  StrategyProfile profile;
  /// Leaf reached from each node when play continues by the profile.
  std::vector<OutcomeId> continuation;
};

/// Requires a valid game with strict preferences (throws StrictnessRequired).
SpeReport backward_induction(const ExtensiveGame& game);

inline constexpr std::size_t kDefaultMaxStrategies = 4096;

/// All pure strategies of one player. Strategy k assigns
/// assignments[k][i] to the i-th node of decision_nodes(player); the first
/// decision node varies slowest.
struct StrategySet {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> assignments;
};

struct NormalFormConversion {
  NormalFormGame game;
  std::array<StrategySet, 2> strategies;  // rows, columns
};

/// Product of branching factors over the player's decision nodes, saturating
/// at SIZE_MAX.
std::size_t strategy_count(const ExtensiveGame& game, PlayerId player);

/// Index of a strategy (move per decision node) within StrategySet order.
std::size_t strategy_index(const ExtensiveGame& game, PlayerId player,
                           const std::vector<std::size_t>& moves);

/// Cartesian-product conversion of a 2-player tree. Throws WrongPlayerCount
/// for other player counts and SizeGuardExceeded if either player has more
/// than `max_strategies` strategies.
NormalFormConversion to_normal_form(const ExtensiveGame& game,
                                    std::size_t max_strategies = kDefaultMaxStrategies);

struct NashCell {
  std::size_t row = 0;
  std::size_t col = 0;
  NormalFormGame::Cell payoffs;

  friend bool operator==(const NashCell&, const NashCell&) = default;
};

/// Pure Nash equilibria under weak best responses, row-major order.
std::vector<NashCell> pure_nash(const NormalFormGame& game);

struct SuperrationalSolution {
  NashCell cell;
  /// Several diagonal cells shared the best payoff; the lowest index won.
  bool tie_broken = false;
};

/// Best diagonal cell of a symmetric game. Throws NotSymmetric naming the
/// first offending (row, col).
SuperrationalSolution superrational(const NormalFormGame& game);

}  // namespace gt

#endif  // GT_NASH_HPP
