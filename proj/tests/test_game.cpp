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

#include <random>

#include "gt/errors.hpp"
#include "gt/game.hpp"
#include "test_support.hpp"

using namespace gt;
using gt::testing::extensive;

namespace {

// Definition-level Pareto scan, written independently of the library.
std::vector<std::size_t> brute_force_pareto(const ExtensiveGame& g) {
  std::vector<std::size_t> out;
  for (std::size_t o = 0; o < g.num_outcomes(); ++o) {
    bool dominated = false;
    for (std::size_t x = 0; x < g.num_outcomes(); ++x) {
      if (x == o) continue;
      bool all_ge = true, some_gt = false;
      for (std::size_t p = 0; p < g.num_players(); ++p) {
        const auto a = g.payoff(OutcomeId{x}, PlayerId{p}).value;
        const auto b = g.payoff(OutcomeId{o}, PlayerId{p}).value;
        all_ge = all_ge && a >= b;
        some_gt = some_gt || a > b;
      }
      dominated = dominated || (all_ge && some_gt);
    }
    if (!dominated) out.push_back(o);
  }
  return out;
}

std::vector<std::size_t> ids(const std::vector<OutcomeId>& v) {
  std::vector<std::size_t> out;
  for (auto o : v) out.push_back(o.value);
  return out;
}

bool has_code(const std::vector<Diagnostic>& d, const std::string& code) {
  return std::any_of(d.begin(), d.end(), [&](const Diagnostic& x) { return x.code == code; });
}

}  // namespace

TEST_CASE("validate accepts the exchange game") {
  CHECK(validate(extensive("exchange")).empty());
}

TEST_CASE("validate reports structural violations") {
  SUBCASE("payoff arity") {
    ExtensiveGame g({"A", "B"}, GameNode::decision(PlayerId{0}, {{"x", GameNode::leaf({1})},
                                                                  {"y", GameNode::leaf({2, 3})}}));
    const auto d = validate(g);
    REQUIRE(d.size() == 1);
    CHECK(d[0].code == "payoff arity");
    CHECK(d[0].where == "/x");
  }
  SUBCASE("unknown player") {
    ExtensiveGame g({"A", "B"}, GameNode::decision(PlayerId{5}, {{"x", GameNode::leaf({1, 2})}}));
    const auto d = validate(g);
    REQUIRE(d.size() == 1);
    CHECK(d[0].code == "unknown player");
    CHECK(d[0].where == "/");
  }
  SUBCASE("duplicate and empty labels, missing moves") {
    ExtensiveGame g({"A"}, GameNode::decision(
                               PlayerId{0}, {{"x", GameNode::leaf({1})},
                                             {"x", GameNode::leaf({2})},
                                             {"", GameNode::leaf({3})},
                                             {"z", GameNode::decision(PlayerId{0}, {})}}));
    const auto d = validate(g);
    CHECK(has_code(d, "duplicate move label"));
    CHECK(has_code(d, "empty label"));
    CHECK(has_code(d, "no moves"));
    CHECK_THROWS_AS(require_valid(g), InvalidGame);
  }
  SUBCASE("single-child nodes are allowed") {
    ExtensiveGame g({"A"}, GameNode::decision(PlayerId{0}, {{"only", GameNode::leaf({1})}}));
    CHECK(validate(g).empty());
  }
}

TEST_CASE("check_strict_preferences") {
  CHECK(check_strict_preferences(extensive("exchange")).empty());

  ExtensiveGame tie({"A", "B"}, GameNode::decision(PlayerId{0}, {{"x", GameNode::leaf({7, 1})},
                                                                 {"y", GameNode::leaf({7, 2})}}));
  const auto v = check_strict_preferences(tie);
  REQUIRE(v.size() == 1);
  CHECK(v[0].player == PlayerId{0});
  CHECK(v[0].first == OutcomeId{0});
  CHECK(v[0].second == OutcomeId{1});
  CHECK_THROWS_AS(require_strict(tie), StrictnessRequired);

  CHECK(check_strict_preferences(ExtensiveGame({"A"}, GameNode::leaf({4}))).empty());
}

TEST_CASE("outcomes enumerates leaves depth-first") {
  const auto ex = outcomes(extensive("exchange"));
  REQUIRE(ex.size() == 3);
  CHECK(ex[0].path.labels() == std::vector<std::string>{"give", "pay"});
  CHECK(ex[1].path.labels() == std::vector<std::string>{"give", "keep"});
  CHECK(ex[2].path.labels() == std::vector<std::string>{"withhold"});
  CHECK(ex[2].payoffs == std::vector<Payoff>{Payoff{1}, Payoff{0}});

  const auto single = outcomes(ExtensiveGame({"A"}, GameNode::leaf({4})));
  REQUIRE(single.size() == 1);
  CHECK(single[0].path.steps.empty());

  // Player I: one 2-way node; Player II: two 2-way nodes. 1 + 1 + 1 + 1 leaves.
  CHECK(outcomes(extensive("fig3_shape")).size() == 4);
}

TEST_CASE("pareto_optimal_outcomes matches a brute-force scan") {
  // Exchange: (2,1), (0,2), (1,0); withhold is dominated by give/pay.
  CHECK(ids(pareto_optimal_outcomes(extensive("exchange"))) == std::vector<std::size_t>{0, 1});
  CHECK(brute_force_pareto(extensive("exchange")) == std::vector<std::size_t>{0, 1});
  // Newcomb: (3,2), (0,3), (1,0), (2,1).
  CHECK(ids(pareto_optimal_outcomes(extensive("newcomb"))) == std::vector<std::size_t>{0, 1});
  CHECK(brute_force_pareto(extensive("newcomb")) == std::vector<std::size_t>{0, 1});
  CHECK(ids(pareto_optimal_outcomes(ExtensiveGame({"A", "B"}, GameNode::leaf({1, 1})))) ==
        std::vector<std::size_t>{0});

  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = gt::testing::ensemble_game(seed);
    CHECK(ids(pareto_optimal_outcomes(g)) == brute_force_pareto(g));
  }
}

TEST_CASE("pareto handles weak dominance under ties") {
  ExtensiveGame g({"A", "B"}, GameNode::decision(PlayerId{0}, {{"x", GameNode::leaf({1, 1})},
                                                               {"y", GameNode::leaf({1, 2})},
                                                               {"z", GameNode::leaf({1, 2})}}));
  CHECK(ids(pareto_optimal_outcomes(g)) == std::vector<std::size_t>{1, 2});
}

TEST_CASE("property: outcome paths replay to their leaves") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto g = gt::testing::ensemble_game(seed);
    const auto outs = outcomes(g);
    REQUIRE(outs.size() == g.num_outcomes());
    for (const auto& o : outs) {
      std::vector<std::size_t> moves;
      for (const auto& s : o.path.steps) moves.push_back(s.move);
      const auto replayed = g.follow(moves);
      REQUIRE(replayed.has_value());
      CHECK(replayed->outcome == o.id);
      CHECK(*replayed == o.path);
    }
    CHECK_FALSE(pareto_optimal_outcomes(g).empty());
  }
}

TEST_CASE("property: monotone relabeling preserves validity, strictness and Pareto set") {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = gt::testing::ensemble_game(seed);
    const auto h = gt::testing::ordinal_transform(g, rng);
    CHECK(validate(h).empty());
    CHECK(check_strict_preferences(h).empty() == check_strict_preferences(g).empty());
    CHECK(pareto_optimal_outcomes(h) == pareto_optimal_outcomes(g));
  }
}

TEST_CASE("decision nodes are indexed per player in pre-order") {
  const auto g = extensive("fig3_shape");
  REQUIRE(g.decision_nodes(PlayerId{0}).size() == 1);
  REQUIRE(g.decision_nodes(PlayerId{1}).size() == 2);
  CHECK(node_location(g, g.decision_nodes(PlayerId{1})[0]) == "/up");
  CHECK(node_location(g, g.decision_nodes(PlayerId{1})[1]) == "/down");
  CHECK(g.decision_index(g.decision_nodes(PlayerId{1})[1]) == 1);
}

TEST_CASE("normal-form construction rejects malformed matrices") {
  using C = NormalFormGame::Cell;
  const C z{Payoff{0}, Payoff{0}};
  CHECK_NOTHROW(NormalFormGame({"A", "B"}, {"r"}, {"c"}, {{z}}));
  CHECK_THROWS_AS(NormalFormGame({"A", "B"}, {"r", "s"}, {"c", "d"}, {{z, z}, {z, z, z}}),
                  InvalidGame);
  CHECK_THROWS_AS(NormalFormGame({"A", "B"}, {"r", "r"}, {"c"}, {{z}, {z}}), InvalidGame);
  CHECK_THROWS_AS(NormalFormGame({"A", "B"}, {}, {"c"}, {}), InvalidGame);
  CHECK_THROWS_AS(NormalFormGame({"A", "A"}, {"r"}, {"c"}, {{z}}), InvalidGame);
}
