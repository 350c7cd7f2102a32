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

#ifndef GT_PPE_HPP
#define GT_PPE_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "gt/game.hpp"

namespace gt {

/// Outcomes still conceivable while reasoning about perfect prediction.
/// Kept sorted by OutcomeId.
class PossibleSet {
 public:
  PossibleSet() = default;
  explicit PossibleSet(std::vector<OutcomeId> ids);
  /// Every outcome below `node`.
  static PossibleSet below(const ExtensiveGame& game, NodeId node);

  bool empty() const noexcept { return ids_.empty(); }
  std::size_t size() const noexcept { return ids_.size(); }
  bool contains(OutcomeId o) const;
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  const std::vector<OutcomeId>& ids() const noexcept { return ids_; }

  /// Removes `o`; returns false if it was absent.
  bool erase(OutcomeId o);
  /// Members within the half-open range [first, last).
  PossibleSet within(OutcomeId first, OutcomeId last) const;

  friend bool operator==(const PossibleSet&, const PossibleSet&) = default;

 private:
  std::vector<OutcomeId> ids_;
};

/// One preemption: at `node`, outcome `eliminated` is inconceivable because
/// the owner is guaranteed `guaranteed_min` by switching to `witness_move`,
/// and that beats `eliminated_payoff`.
struct EliminationStep {
  NodeId node;
  OutcomeId eliminated;
  std::size_t witness_move = 0;
  std::string witness_label;
  Payoff guaranteed_min;
  Payoff eliminated_payoff;

  friend bool operator==(const EliminationStep&, const EliminationStep&) = default;
};

struct FixpointResult {
  PossibleSet survivors;
  std::vector<EliminationStep> steps;
};

/// Order in which candidates are scanned on each pass; must return a
/// permutation of its argument. Empty means ascending OutcomeId. Exists so
/// tests can check that the fixpoint does not depend on scan order.
using ScanOrder = std::function<std::vector<OutcomeId>(const PossibleSet&)>;

/// Removes, one at a time and restarting the scan after every removal, each
/// outcome o of `possible` for which some other move at `node` still has
/// conceivable outcomes that all pay the owner strictly more than o does.
///
/// Preconditions: `node` is internal, `possible` is a non-empty subset of
/// the outcomes below it, and the game has strict preferences.
FixpointResult preemption_fixpoint(const ExtensiveGame& game, NodeId node, PossibleSet possible,
                                   const ScanOrder& order = {});

/// What happened at one node on the equilibrium path.
struct PpeStage {
  NodeId node;
  PossibleSet inherited;
  PossibleSet survivors;
  std::size_t chosen_move = 0;
};

struct PpeReport {
  OutcomeId outcome;
  Path path;
  std::vector<EliminationStep> trace;
  std::vector<PpeStage> stages;
};

/// Perfect Prediction Equilibrium. Walks down from the root; at each node
/// the inherited possible set is reduced to its preemption fixpoint, the
/// owner picks their best surviving outcome, and the set is narrowed to the
/// chosen child. Throws StrictnessRequired on ties.
PpeReport ppe(const ExtensiveGame& game, const ScanOrder& order = {});

inline constexpr std::size_t kOracleMaxOutcomes = 64;

/// Brute-force re-derivation of ppe(game).outcome over bitmask states, for
/// differential testing. Throws ScaleExceeded above kOracleMaxOutcomes.
OutcomeId ppe_oracle(const ExtensiveGame& game);

enum class Preference { kPrefersPpe, kPrefersSpe, kIndifferent };

struct ComparisonReport {
  OutcomeId spe;
  OutcomeId ppe;
  Path spe_path;
  Path ppe_path;
  bool spe_pareto_optimal = false;
  bool ppe_pareto_optimal = false;
  std::vector<Preference> preferences;  // per player
  bool ppe_dominates_spe = false;
  bool spe_dominates_ppe = false;

  bool identical() const noexcept { return spe == ppe; }
  /// "identical outcomes", "PPE Pareto-dominates SPE",
  /// "SPE Pareto-dominates PPE" or "incomparable".
  std::string verdict() const;
};

ComparisonReport compare(const ExtensiveGame& game);

}  // namespace gt

#endif  // GT_PPE_HPP
