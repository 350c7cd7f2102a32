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

#include "gt/corpus.hpp"

#include <algorithm>
#include <random>
#include <span>
#include <utility>

#include "gt/errors.hpp"

namespace gt::corpus {

namespace detail {
std::span<const std::pair<std::string_view, std::string_view>> embedded();
}  // namespace detail

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [name, body] : detail::embedded()) out.emplace_back(name);
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view text(std::string_view name) {
  for (const auto& [n, body] : detail::embedded()) {
    if (n == name) return body;
  }
  throw UnknownName("unknown corpus game '" + std::string(name) + "'");
}

AnyGame builtin(std::string_view name) { return parse_game(text(name)); }

void check_config(const GeneratorConfig& cfg) {
  if (cfg.depth < 1) throw ConfigError("depth must be at least 1");
  if (cfg.min_branching < 2) throw ConfigError("minimum branching must be at least 2");
  if (cfg.max_branching < cfg.min_branching) {
    throw ConfigError("maximum branching is below the minimum");
  }
  if (cfg.players < 2) throw ConfigError("random games need at least 2 players");
  std::size_t worst = 1;
  for (std::size_t d = 0; d < cfg.depth; ++d) {
    if (worst > kMaxLeaves / cfg.max_branching) {
      throw ConfigError("up to " + std::to_string(cfg.max_branching) + "^" +
                        std::to_string(cfg.depth) + " leaves exceeds the cap of " +
                        std::to_string(kMaxLeaves));
    }
    worst *= cfg.max_branching;
  }
}

namespace {

// std:: distributions are implementation-defined; these keep generated games
// identical across standard libraries.
std::size_t uniform_below(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t bound = n;
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return static_cast<std::size_t>(x % bound);
  }
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

std::string move_label(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "m" + std::to_string(i);
}

struct Shape {
  std::size_t branching = 0;  // 0 for leaves
  std::size_t level = 0;
  std::size_t owner = 0;
};

void grow(std::vector<Shape>& shape, std::size_t level, const GeneratorConfig& cfg,
          std::mt19937_64& rng) {
  if (level == cfg.depth) {
    shape.push_back({0, level, 0});
    return;
  }
  const std::size_t b =
      cfg.min_branching + uniform_below(rng, cfg.max_branching - cfg.min_branching + 1);
  std::size_t owner = level % cfg.players;
  if (uniform_below(rng, 4) == 0) owner = uniform_below(rng, cfg.players);
  shape.push_back({b, level, owner});
  for (std::size_t m = 0; m < b; ++m) grow(shape, level + 1, cfg, rng);
}

GameNode build(const std::vector<Shape>& shape, std::size_t& pos, std::size_t& leaf,
               const std::vector<std::vector<std::int64_t>>& payoffs) {
  const Shape& s = shape[pos++];
  if (s.branching == 0) {
    std::vector<Payoff> pay;
    for (const auto& per_player : payoffs) pay.push_back(Payoff{per_player[leaf]});
    ++leaf;
    return GameNode::leaf(std::move(pay));
  }
  std::vector<Move> moves;
  for (std::size_t m = 0; m < s.branching; ++m) {
    moves.push_back(Move{move_label(m), build(shape, pos, leaf, payoffs)});
  }
  return GameNode::decision(PlayerId{s.owner}, std::move(moves));
}

}  // namespace

ExtensiveGame random_game(const GeneratorConfig& cfg) {
  check_config(cfg);
  std::mt19937_64 rng(cfg.seed);

  std::vector<Shape> shape;
  grow(shape, 0, cfg, rng);

  // Hand a node to every player who ended up with none, taking it from a
  // player who owns several.
  std::vector<std::size_t> owned(cfg.players, 0);
  std::size_t internal = 0;
  for (const auto& s : shape) {
    if (s.branching == 0) continue;
    ++owned[s.owner];
    ++internal;
  }
  if (internal >= cfg.players) {
    for (std::size_t p = 0; p < cfg.players; ++p) {
      if (owned[p] != 0) continue;
      std::vector<std::size_t> donors;
      for (std::size_t i = 0; i < shape.size(); ++i) {
        if (shape[i].branching != 0 && owned[shape[i].owner] > 1) donors.push_back(i);
      }
      const std::size_t pick = donors[uniform_below(rng, donors.size())];
      --owned[shape[pick].owner];
      shape[pick].owner = p;
      ++owned[p];
    }
  }

  const std::size_t leaves = static_cast<std::size_t>(
      std::count_if(shape.begin(), shape.end(), [](const Shape& s) { return s.branching == 0; }));
  std::vector<std::vector<std::int64_t>> payoffs(cfg.players);
  for (auto& per_player : payoffs) {
    per_player.resize(leaves);
    for (std::size_t i = 0; i < leaves; ++i) per_player[i] = static_cast<std::int64_t>(i);
    shuffle(per_player, rng);
  }

  std::vector<std::string> players;
  for (std::size_t p = 0; p < cfg.players; ++p) players.push_back("P" + std::to_string(p + 1));
  std::size_t pos = 0;
  std::size_t leaf = 0;
  return ExtensiveGame(std::move(players), build(shape, pos, leaf, payoffs));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace gt::corpus
