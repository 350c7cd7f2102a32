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

#ifndef GT_CORPUS_HPP
#define GT_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gt/game.hpp"
#include "gt/text.hpp"

namespace gt::corpus {

/// Names of the builtin games, sorted.
std::vector<std::string> names();

/// Source text of a builtin game as shipped in corpus/. Throws UnknownName.
std::string_view text(std::string_view name);

/// Parsed builtin game. Throws UnknownName.
AnyGame builtin(std::string_view name);

/// Shape of a random game. Every leaf sits at exactly `depth`.
struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::size_t depth = 3;
  std::size_t min_branching = 2;
  std::size_t max_branching = 3;
  std::size_t players = 2;
};

/// Upper bound on max_branching^depth.
inline constexpr std::size_t kMaxLeaves = 4096;

/// Throws ConfigError when a bound is violated.
void check_config(const GeneratorConfig& cfg);

/// Deterministic in `cfg`. Each player's payoffs are a permutation of
/// 0..L-1, so preferences are always strict. Owners go round-robin by depth
/// with occasional random reassignment, and every player owns at least one
/// node whenever there are enough decision nodes.
ExtensiveGame random_game(const GeneratorConfig& cfg);

/// Seed for the i-th game of a batch started from `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace gt::corpus

#endif  // GT_CORPUS_HPP
