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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gt/corpus.hpp"
#include "gt/errors.hpp"
#include "gt/nash.hpp"
#include "gt/ppe.hpp"
#include "test_support.hpp"

using namespace gt;
using gt::testing::extensive;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("corpus names") {
  CHECK(corpus::names() == std::vector<std::string>{"centipede_3", "exchange", "fig1_shape",
                                                    "fig3_shape", "newcomb", "pd"});
  CHECK_THROWS_AS(corpus::builtin("nope"), UnknownName);
}

TEST_CASE("builtin games equal the shipped corpus files") {
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(GT_CORPUS_DIR)) {
    if (entry.path().extension() != ".gt") continue;
    ++files;
    const auto name = entry.path().stem().string();
    const auto text = slurp(entry.path());
    CHECK(corpus::text(name) == text);
    const auto from_file = parse_game(text);
    const auto built = corpus::builtin(name);
    CHECK(from_file.index() == built.index());
    if (built.index() == 0) {
      CHECK(std::get<ExtensiveGame>(from_file) == std::get<ExtensiveGame>(built));
    } else {
      CHECK(std::get<NormalFormGame>(from_file) == std::get<NormalFormGame>(built));
    }
  }
  CHECK(files == corpus::names().size());
}

TEST_CASE("builtin games are valid and strict") {
  for (const auto& name : corpus::names()) {
    const auto any = corpus::builtin(name);
    if (const auto* g = std::get_if<ExtensiveGame>(&any)) {
      CHECK(validate(*g).empty());
      CHECK(check_strict_preferences(*g).empty());
    }
  }
  CHECK(extensive("newcomb").num_outcomes() == 4);
  CHECK_NOTHROW(superrational(gt::testing::normal("pd")));
  const auto fig1 = gt::testing::normal("fig1_shape");
  CHECK(fig1.num_rows() == 2);
  CHECK(fig1.num_cols() == 3);
}

TEST_CASE("builtin games land on the expected equilibria") {
  const auto ex = extensive("exchange");
  CHECK(backward_induction(ex).path.labels() == std::vector<std::string>{"withhold"});
  CHECK(ppe(ex).path.labels() == std::vector<std::string>{"give", "pay"});

  const auto nc = extensive("newcomb");
  const PlayerId agent{1};
  const auto spe = backward_induction(nc);
  const auto pp = ppe(nc);
  // Agent ranks: 3 = $1,001,000, 2 = $1,000,000, 1 = $1,000, 0 = $0.
  CHECK(nc.payoff(spe.outcome, agent) == Payoff{1});
  CHECK(nc.payoff(pp.outcome, agent) == Payoff{2});

  const auto cp = extensive("centipede_3");
  CHECK(backward_induction(cp).path.labels() == std::vector<std::string>{"take"});
  CHECK(ppe(cp).path.labels() == std::vector<std::string>{"pass", "pass"});
}

TEST_CASE("random_game is deterministic and strict") {
  corpus::GeneratorConfig cfg;
  cfg.seed = 1;
  cfg.depth = 4;
  CHECK(serialize_extensive(corpus::random_game(cfg)) ==
        serialize_extensive(corpus::random_game(cfg)));
  cfg.seed = 2;
  CHECK(serialize_extensive(corpus::random_game(cfg)) !=
        serialize_extensive(corpus::random_game(corpus::GeneratorConfig{1, 4, 2, 3, 2})));

  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    cfg.seed = seed;
    cfg.players = 2 + seed % 3;
    CHECK(check_strict_preferences(corpus::random_game(cfg)).empty());
  }
}

TEST_CASE("random_game frozen output") {
  corpus::GeneratorConfig cfg;
  cfg.seed = 1;
  cfg.depth = 2;
  cfg.min_branching = 2;
  cfg.max_branching = 3;
  cfg.players = 2;
  CHECK(serialize_extensive(corpus::random_game(cfg)) ==
        slurp(std::filesystem::path(GT_TEST_DATA_DIR) / "golden" / "random_seed1.gt"));
}

TEST_CASE("random_game shape") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    corpus::GeneratorConfig cfg{seed, 5, 2, 3, 2 + seed % 2};
    const auto g = corpus::random_game(cfg);
    CHECK(g.num_outcomes() >= 32);
    CHECK(g.num_outcomes() <= 243);
    std::vector<std::size_t> owned(cfg.players, 0);
    for (std::size_t i = 0; i < g.num_nodes(); ++i) {
      const auto& n = g.node(NodeId{i});
      if (n.is_leaf()) {
        CHECK(n.depth == cfg.depth);
      } else {
        CHECK(n.moves.size() >= 2);
        CHECK(n.moves.size() <= 3);
        ++owned[n.owner->value];
      }
    }
    for (auto c : owned) CHECK(c >= 1);
  }
  // Depth 1 has a single decision node, so only one player can own anything.
  const auto tiny = corpus::random_game(corpus::GeneratorConfig{3, 1, 2, 2, 3});
  CHECK(tiny.num_outcomes() == 2);
}

TEST_CASE("random_game rejects bad configs") {
  CHECK_THROWS_AS(corpus::random_game({1, 0, 2, 3, 2}), ConfigError);
  CHECK_THROWS_AS(corpus::random_game({1, 3, 1, 3, 2}), ConfigError);
  CHECK_THROWS_AS(corpus::random_game({1, 3, 3, 2, 2}), ConfigError);
  CHECK_THROWS_AS(corpus::random_game({1, 3, 2, 3, 1}), ConfigError);
  CHECK_THROWS_AS(corpus::random_game({1, 8, 2, 3, 2}), ConfigError);  // 3^8 > 4096
  CHECK_NOTHROW(corpus::random_game({1, 12, 2, 2, 2}));                // 2^12 == 4096
}

TEST_CASE("random ensemble has both agreeing and disagreeing games") {
  std::size_t same = 0, different = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    corpus::GeneratorConfig cfg{corpus::derive_seed(17, i), 3 + i % 3, 2, 3, 2 + i % 2};
    const auto g = corpus::random_game(cfg);
    (backward_induction(g).outcome == ppe(g).outcome ? same : different)++;
  }
  CHECK(same > 0);
  CHECK(different > 0);
}
