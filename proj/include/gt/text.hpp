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

#ifndef GT_TEXT_HPP
#define GT_TEXT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "gt/errors.hpp"
#include "gt/game.hpp"

namespace gt {

/// Byte range [start, end) in the source plus the 1-based line/column of start.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, SourceSpan span, std::string expected = {});

  /// Message without the location prefix.
  const std::string& message() const noexcept { return message_; }
  const SourceSpan& span() const noexcept { return span_; }
  /// What the parser was looking for, empty when not applicable.
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::string message_;
  SourceSpan span_;
  std::string expected_;
};

// Extensive form:
//   game    := "(" "game" players tree ")"
//   players := "(" "players" NAME+ ")"
//   tree    := "(" NAME move+ ")" | "(" "leaf" INT+ ")"
//   move    := "(" LABEL tree ")"
// Normal form:
//   ngame   := "(" "ngame" players "(" "cols" LABEL+ ")" row+ ")"
//   row     := "(" "row" LABEL cell+ ")"
//   cell    := "(" "cell" INT INT ")"
// NAME/LABEL = [A-Za-z_][A-Za-z0-9_-]*, INT = -?[0-9]+, ';' comments to end of line.

ExtensiveGame parse_extensive(std::string_view text);
NormalFormGame parse_normal(std::string_view text);

using AnyGame = std::variant<ExtensiveGame, NormalFormGame>;

/// Dispatches on the leading keyword ("game" or "ngame").
AnyGame parse_game(std::string_view text);

/// Canonical text: one node per line, two spaces of indent per depth, and a
/// move whose child is a leaf kept on the move's line.
std::string serialize_extensive(const ExtensiveGame& game);
std::string serialize_normal(const NormalFormGame& game);

/// Graphviz digraph of the tree. Edges on `highlight` get a red, bold style.
/// Throws InvalidGame if `highlight` is not a path of `game`.
std::string export_dot(const ExtensiveGame& game, const std::optional<Path>& highlight = {});

/// True if `path` is a root-to-leaf path of `game` (node ids, move indices,
/// labels and terminal outcome all agree).
bool belongs_to(const ExtensiveGame& game, const Path& path);

}  // namespace gt

#endif  // GT_TEXT_HPP
