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

#include "gt/report.hpp"

namespace gt::report {

namespace {

json payoff_array(std::span<const Payoff> payoffs) {
  json out = json::array();
  for (const auto& p : payoffs) out.push_back(p.value);
  return out;
}

json id_list(const PossibleSet& s) {
  json out = json::array();
  for (const auto o : s) out.push_back(o.value);
  return out;
}

const char* preference_name(Preference p) {
  switch (p) {
    case Preference::kPrefersPpe: return "ppe";
    case Preference::kPrefersSpe: return "spe";
    case Preference::kIndifferent: return "indifferent";
  }
  return "?";
}

}  // namespace

json outcome_json(const ExtensiveGame& game, const Path& path) {
  return {{"id", path.outcome.value},
          {"path", path.labels()},
          {"payoffs", payoff_array(game.payoffs(path.outcome))}};
}

json profile_json(const ExtensiveGame& game, const StrategyProfile& profile) {
  json out = json::array();
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    const PlayerId player{p};
    json decisions = json::array();
    const auto nodes = game.decision_nodes(player);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const std::size_t m = profile.moves[p][i];
      decisions.push_back({{"node", node_location(game, nodes[i])},
                           {"move", game.node(nodes[i]).moves[m].label}});
    }
    out.push_back({{"player", game.player_name(player)}, {"decisions", std::move(decisions)}});
  }
  return out;
}

json trace_json(const ExtensiveGame& game, const PpeReport& report) {
  json out = json::array();
  for (const auto& s : report.trace) {
    out.push_back({{"node", node_location(game, s.node)},
                   {"player", game.player_name(*game.node(s.node).owner)},
                   {"eliminated", s.eliminated.value},
                   {"eliminated_path", game.path_to(s.eliminated).labels()},
                   {"eliminated_payoff", s.eliminated_payoff.value},
                   {"witness", s.witness_label},
                   {"guaranteed_min", s.guaranteed_min.value}});
  }
  return out;
}

json stages_json(const ExtensiveGame& game, const PpeReport& report) {
  json out = json::array();
  for (const auto& st : report.stages) {
    out.push_back({{"node", node_location(game, st.node)},
                   {"inherited", id_list(st.inherited)},
                   {"survivors", id_list(st.survivors)},
                   {"move", game.node(st.node).moves[st.chosen_move].label}});
  }
  return out;
}

json cell_json(const NormalFormGame& game, const NashCell& cell) {
  return {{"row", game.row_labels()[cell.row]},
          {"col", game.col_labels()[cell.col]},
          {"row_index", cell.row},
          {"col_index", cell.col},
          {"payoffs", {cell.payoffs[0].value, cell.payoffs[1].value}}};
}

json strategies_json(const ExtensiveGame& game, PlayerId player, const StrategySet& set) {
  json out = json::array();
  const auto nodes = game.decision_nodes(player);
  for (std::size_t k = 0; k < set.labels.size(); ++k) {
    json assignment = json::array();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      assignment.push_back({{"node", node_location(game, nodes[i])},
                            {"move", game.node(nodes[i]).moves[set.assignments[k][i]].label}});
    }
    out.push_back({{"label", set.labels[k]}, {"assignment", std::move(assignment)}});
  }
  return out;
}

json comparison_json(const ExtensiveGame& game, const ComparisonReport& cmp) {
  json prefs = json::array();
  for (std::size_t p = 0; p < cmp.preferences.size(); ++p) {
    prefs.push_back({{"player", game.player_name(PlayerId{p})},
                     {"prefers", preference_name(cmp.preferences[p])}});
  }
  json spe = outcome_json(game, cmp.spe_path);
  spe["pareto_optimal"] = cmp.spe_pareto_optimal;
  json ppe = outcome_json(game, cmp.ppe_path);
  ppe["pareto_optimal"] = cmp.ppe_pareto_optimal;
  return {{"spe", std::move(spe)},
          {"ppe", std::move(ppe)},
          {"identical", cmp.identical()},
          {"preferences", std::move(prefs)},
          {"ppe_dominates_spe", cmp.ppe_dominates_spe},
          {"spe_dominates_ppe", cmp.spe_dominates_ppe},
          {"verdict", cmp.verdict()}};
}

}  // namespace gt::report
