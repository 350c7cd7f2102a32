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

#include <set>
#include <sstream>

#include "gt/text.hpp"

namespace gt {

namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

bool belongs_to(const ExtensiveGame& game, const Path& path) {
  NodeId cur = game.root();
  for (const auto& step : path.steps) {
    if (step.node != cur) return false;
    const auto& n = game.node(cur);
    if (n.is_leaf() || step.move >= n.moves.size()) return false;
    if (n.moves[step.move].label != step.label) return false;
    cur = n.moves[step.move].child;
  }
  const auto& last = game.node(cur);
  return last.is_leaf() && last.first_outcome == path.outcome;
}

std::string export_dot(const ExtensiveGame& game, const std::optional<Path>& highlight) {
  std::set<std::pair<std::size_t, std::size_t>> lit;  // (node, move)
  if (highlight) {
    if (!belongs_to(game, *highlight)) {
      throw InvalidGame("highlighted path does not belong to this game");
    }
    for (const auto& s : highlight->steps) lit.emplace(s.node.value, s.move);
  }

  std::ostringstream out;
  out << "digraph game {\n";
  out << "  node [fontname=\"Helvetica\"];\n";
  out << "  edge [fontname=\"Helvetica\"];\n";
  for (std::size_t i = 0; i < game.num_nodes(); ++i) {
    const auto& n = game.node(NodeId{i});
    out << "  n" << i << ' ';
    if (n.is_leaf()) {
      std::string label = "(";
      for (std::size_t p = 0; p < n.payoffs.size(); ++p) {
        if (p) label += ", ";
        label += std::to_string(n.payoffs[p].value);
      }
      label += ')';
      out << "[shape=box, label=" << quoted(label) << "];\n";
    } else {
      out << "[shape=ellipse, label=" << quoted(game.player_name(*n.owner)) << "];\n";
    }
  }
  for (std::size_t i = 0; i < game.num_nodes(); ++i) {
    const auto& n = game.node(NodeId{i});
    for (std::size_t m = 0; m < n.moves.size(); ++m) {
      out << "  n" << i << " -> n" << n.moves[m].child.value << " [label="
          << quoted(n.moves[m].label);
      if (lit.contains({i, m})) out << ", color=red, penwidth=2.5";
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace gt
