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

#include <algorithm>

#include "gt/nash.hpp"
#include "gt/ppe.hpp"

namespace gt {

ComparisonReport compare(const ExtensiveGame& game) {
  const SpeReport spe = backward_induction(game);
  const PpeReport pp = ppe(game);
  const auto pareto = pareto_optimal_outcomes(game);
  auto optimal = [&](OutcomeId o) {
    return std::find(pareto.begin(), pareto.end(), o) != pareto.end();
  };

  ComparisonReport r;
  r.spe = spe.outcome;
  r.ppe = pp.outcome;
  r.spe_path = spe.path;
  r.ppe_path = pp.path;
  r.spe_pareto_optimal = optimal(r.spe);
  r.ppe_pareto_optimal = optimal(r.ppe);
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    const Payoff s = game.payoff(r.spe, PlayerId{p});
    const Payoff q = game.payoff(r.ppe, PlayerId{p});
    r.preferences.push_back(s < q   ? Preference::kPrefersPpe
                            : q < s ? Preference::kPrefersSpe
                                    : Preference::kIndifferent);
  }
  r.ppe_dominates_spe = pareto_dominates(game.payoffs(r.ppe), game.payoffs(r.spe));
  r.spe_dominates_ppe = pareto_dominates(game.payoffs(r.spe), game.payoffs(r.ppe));
  return r;
}

}  // namespace gt
