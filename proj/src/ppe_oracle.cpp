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

// Differential-testing oracle for ppe(). It deliberately shares nothing with
// ppe.cpp: it numbers leaves itself, stores conceivable outcomes as 64-bit
// masks, and re-checks the preemption condition for every candidate against
// every alternative outcome on each pass.

#include <bit>
#include <cstdint>
#include <deque>
#include <vector>

#include "gt/errors.hpp"
#include "gt/game.hpp"
#include "gt/ppe.hpp"

namespace gt {

namespace {

using Mask = std::uint64_t;

struct OracleTree {
  std::vector<Mask> below;                        // per node
  std::vector<std::vector<std::int64_t>> payoff;  // [player][leaf]
  std::vector<NodeId> leaf_node;
};

Mask number_leaves(const ExtensiveGame& game, NodeId id, OracleTree& t) {
  const auto& n = game.node(id);
  Mask m = 0;
  if (n.is_leaf()) {
    const std::size_t k = t.leaf_node.size();
    t.leaf_node.push_back(id);
    for (std::size_t p = 0; p < t.payoff.size(); ++p) t.payoff[p].push_back(n.payoffs[p].value);
    m = Mask{1} << k;
  } else {
    for (const auto& e : n.moves) m |= number_leaves(game, e.child, t);
  }
  t.below[id.value] = m;
  return m;
}

// Some other move offers only outcomes that beat `o` for `owner`?
bool preempted(const ExtensiveGame& game, const OracleTree& t, NodeId node, Mask possible,
               std::size_t o) {
  const auto& n = game.node(node);
  const auto& pay = t.payoff[n.owner->value];
  for (const auto& e : n.moves) {
    const Mask alt = possible & t.below[e.child.value];
    if (alt == 0 || (t.below[e.child.value] >> o) & 1) continue;
    bool all_better = true;
    for (std::size_t x = 0; x < 64; ++x) {
      if ((alt >> x) & 1 && pay[x] <= pay[o]) {
        all_better = false;
        break;
      }
    }
    if (all_better) return true;
  }
  return false;
}

}  // namespace

OutcomeId ppe_oracle(const ExtensiveGame& game) {
  require_valid(game);
  require_strict(game);
  if (game.num_outcomes() > kOracleMaxOutcomes) {
    throw ScaleExceeded("oracle handles at most " + std::to_string(kOracleMaxOutcomes) +
                        " outcomes, game has " + std::to_string(game.num_outcomes()));
  }

  OracleTree t;
  t.below.assign(game.num_nodes(), 0);
  t.payoff.assign(game.num_players(), {});
  const Mask all = number_leaves(game, game.root(), t);

  struct State {
    NodeId node;
    Mask possible;
  };
  std::deque<State> work{{game.root(), all}};
  while (!work.empty()) {
    State s = work.front();
    work.pop_front();
    const auto& n = game.node(s.node);
    if (n.is_leaf()) {
      if (std::popcount(s.possible) != 1) throw InternalError("oracle ended on a non-singleton");
      return OutcomeId{static_cast<std::size_t>(std::countr_zero(s.possible))};
    }

    for (;;) {
      bool changed = false;
      for (std::size_t o = 0; o < 64; ++o) {
        if (((s.possible >> o) & 1) && preempted(game, t, s.node, s.possible, o)) {
          s.possible &= ~(Mask{1} << o);
          changed = true;
          break;
        }
      }
      if (!changed) break;
    }
    if (s.possible == 0) throw InternalError("oracle eliminated every outcome");

    const auto& pay = t.payoff[n.owner->value];
    std::size_t best = 64;
    for (std::size_t o = 0; o < 64; ++o) {
      if (((s.possible >> o) & 1) && (best == 64 || pay[o] > pay[best])) best = o;
    }
    for (const auto& e : n.moves) {
      if ((t.below[e.child.value] >> best) & 1) {
        work.push_back({e.child, s.possible & t.below[e.child.value]});
      }
    }
  }
  throw InternalError("oracle never reached a leaf");
}

}  // namespace gt
