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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "gt/cli.hpp"
#include "gt/nash.hpp"
#include "gt/ppe.hpp"
#include "gt/text.hpp"
#include "test_support.hpp"

using namespace gt;
using nlohmann::json;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

json run_json(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (code != 0) throw std::runtime_error("gt exited " + std::to_string(code) + ": " + err.str());
  auto j = json::parse(out.str());
  j.erase("timing_ms");
  return j;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::pair<std::size_t, std::size_t>> nash_indices(const NormalFormGame& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& c : pure_nash(g)) out.emplace_back(c.row, c.col);
  return out;
}

bool within_guard(const ExtensiveGame& g) {
  return strategy_count(g, PlayerId{0}) <= kDefaultMaxStrategies &&
         strategy_count(g, PlayerId{1}) <= kDefaultMaxStrategies;
}

Verdict exchange_game() {
  Verdict v;
  const auto spe = run_json({"solve", "--corpus", "exchange", "--concept", "spe", "--json"});
  const auto pp = run_json({"solve", "--corpus", "exchange", "--concept", "ppe", "--json"});
  v.require(spe["outcome"]["path"] == json{"withhold"}, "spe path " + spe["outcome"]["path"].dump());
  v.require(pp["outcome"]["path"] == json{"give", "pay"}, "ppe path " + pp["outcome"]["path"].dump());
  v.detail = v.pass ? "spe=withhold ppe=give,pay" : v.detail;
  return v;
}

Verdict newcomb() {
  Verdict v;
  // Agent is the second player; rank 1 encodes $1,000 and rank 2 $1,000,000.
  const auto spe = run_json({"solve", "--corpus", "newcomb", "--concept", "spe", "--json"});
  const auto pp = run_json({"solve", "--corpus", "newcomb", "--concept", "ppe", "--json"});
  v.require(spe["outcome"]["path"] == json{"empty", "two"} && spe["outcome"]["payoffs"][1] == 1,
            "spe " + spe["outcome"].dump());
  v.require(pp["outcome"]["path"] == json{"fill", "one"} && pp["outcome"]["payoffs"][1] == 2,
            "ppe " + pp["outcome"].dump());
  v.detail = v.pass ? "spe=empty,two ($1,000) ppe=fill,one ($1,000,000)" : v.detail;
  return v;
}

Verdict pareto_claim() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  constexpr std::size_t kGames = 10000;
  std::size_t failures = 0;
  for (std::uint64_t i = 0; i < kGames; ++i) {
    const auto g = testing::ensemble_game(corpus::derive_seed(2024, i));
    const auto pareto = pareto_optimal_outcomes(g);
    const auto o = ppe(g).outcome;
    if (std::find(pareto.begin(), pareto.end(), o) == pareto.end()) ++failures;
  }
  const double secs = seconds_since(t0);
  v.require(failures == 0, std::to_string(failures) + " of 10000 ppe outcomes not Pareto-optimal");
  v.require(secs < 60.0, "took " + std::to_string(secs) + " s");
  if (v.pass) v.detail = "10000/10000 Pareto-optimal in " + std::to_string(secs) + " s";
  return v;
}

Verdict spe_in_nash() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t games = 0, hits = 0;
  for (std::uint64_t i = 0; games < 1000; ++i) {
    const auto g = testing::ensemble_game(corpus::derive_seed(77, i), 2);
    if (!within_guard(g)) continue;
    ++games;
    const auto spe = backward_induction(g);
    const auto cells = nash_indices(to_normal_form(g).game);
    const std::pair<std::size_t, std::size_t> cell{
        strategy_index(g, PlayerId{0}, spe.profile.moves[0]),
        strategy_index(g, PlayerId{1}, spe.profile.moves[1])};
    hits += std::find(cells.begin(), cells.end(), cell) != cells.end();
  }
  const double secs = seconds_since(t0);
  v.require(hits == games, std::to_string(games - hits) + " SPE profiles not Nash");
  v.require(secs < 60.0, "took " + std::to_string(secs) + " s");
  if (v.pass) v.detail = "1000/1000 in " + std::to_string(secs) + " s";
  return v;
}

Verdict oracle_agreement() {
  Verdict v;
  std::size_t corpus_games = 0;
  for (const auto& name : corpus::names()) {
    const auto any = corpus::builtin(name);
    if (const auto* g = std::get_if<ExtensiveGame>(&any)) {
      ++corpus_games;
      v.require(ppe_oracle(*g) == ppe(*g).outcome, "corpus game " + name);
    }
  }
  std::size_t disagreements = 0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const auto g = testing::ensemble_game(corpus::derive_seed(555, i), 3, kOracleMaxOutcomes);
    disagreements += ppe_oracle(g) != ppe(g).outcome;
  }
  v.require(disagreements == 0, std::to_string(disagreements) + " random disagreements");
  if (v.pass) v.detail = std::to_string(corpus_games) + " corpus + 10000 random games agree";
  return v;
}

Verdict strategy_count_law() {
  Verdict v;
  const auto g = testing::extensive("fig3_shape");
  const auto conv = to_normal_form(g);
  v.require(conv.game.num_rows() == 2, "rows = " + std::to_string(conv.game.num_rows()));
  v.require(conv.game.num_cols() == 4, "cols = " + std::to_string(conv.game.num_cols()));
  v.require(g.num_outcomes() == 6,
            "fig3_shape has " + std::to_string(g.num_outcomes()) +
                " outcomes, expected 6 (one 2-way node for I over two 2-way nodes for II "
                "gives 1 + (2-1) + (2-1) + (2-1) = 4 leaves)");
  if (v.pass) v.detail = "2 x 4, 6 outcomes";
  return v;
}

Verdict superrationality() {
  Verdict v;
  const auto pd = testing::normal("pd");
  const auto sol = superrational(pd);
  v.require(pd.row_labels()[sol.cell.row] == "c" && pd.col_labels()[sol.cell.col] == "c",
            "pd superrational cell is not (c, c)");
  std::mt19937_64 rng(31337);
  std::size_t mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 5;
    const auto m = testing::random_symmetric(rng, n, 1000);
    std::size_t best = 0;
    for (std::size_t k = 1; k < n; ++k) {
      if (m.cell(k, k)[0].value > m.cell(best, best)[0].value) best = k;
    }
    const auto s = superrational(m);
    mismatches += !(s.cell.row == best && s.cell.col == best);
  }
  v.require(mismatches == 0, std::to_string(mismatches) + " of 1000 differ from diagonal argmax");
  if (v.pass) v.detail = "pd -> (c, c); 1000/1000 random symmetric";
  return v;
}

Verdict ordinal_invariance() {
  Verdict v;
  std::mt19937_64 rng(8128);
  std::size_t broken = 0, nash_checked = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto g = testing::ensemble_game(corpus::derive_seed(99, i));
    const auto h = testing::ordinal_transform(g, rng);
    bool ok = backward_induction(h).outcome == backward_induction(g).outcome &&
              ppe(h).outcome == ppe(g).outcome;
    if (g.num_players() == 2 && within_guard(g)) {
      ++nash_checked;
      ok = ok && nash_indices(to_normal_form(h).game) == nash_indices(to_normal_form(g).game);
    }
    broken += !ok;
  }
  v.require(broken == 0, std::to_string(broken) + " of 1000 games changed");
  if (v.pass) {
    v.detail = "1000/1000 unchanged (" + std::to_string(nash_checked) + " with Nash sets)";
  }
  return v;
}

Verdict determinism() {
  Verdict v;
  const std::vector<std::vector<std::string>> commands = {
      {"solve", "--corpus", "exchange", "--concept", "spe", "--json"},
      {"solve", "--corpus", "exchange", "--concept", "ppe", "--json", "--trace"},
      {"solve", "--corpus", "pd", "--concept", "nash", "--json"},
      {"solve", "--corpus", "pd", "--concept", "superrational", "--json"},
      {"convert", "--corpus", "fig3_shape", "--json"},
      {"compare", "--corpus", "newcomb", "--json"},
      {"batch", "--seed", "42", "--count", "500", "--depth", "4"},
      {"batch", "--seed", "9", "--count", "300", "--depth", "5", "--players", "3"},
      {"export-dot", "--corpus", "exchange", "--highlight", "ppe", "--json"},
      {"corpus", "list", "--json"},
      {"corpus", "emit", "newcomb", "--json"},
  };
  for (const auto& c : commands) {
    const auto a = run_json(c);
    const auto b = run_json(c);
    const auto d = run_json(c);
    v.require(a == b && b == d, "differs: " + c[0]);
  }
  if (v.pass) v.detail = std::to_string(commands.size()) + " commands x3 identical";
  return v;
}

Verdict round_trip() {
  Verdict v;
  for (const auto& name : corpus::names()) {
    const auto any = corpus::builtin(name);
    if (const auto* g = std::get_if<ExtensiveGame>(&any)) {
      v.require(parse_extensive(serialize_extensive(*g)) == *g, "corpus " + name);
    } else {
      const auto& n = std::get<NormalFormGame>(any);
      v.require(parse_normal(serialize_normal(n)) == n, "corpus " + name);
    }
  }
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto g = testing::ensemble_game(corpus::derive_seed(4242, i));
    v.require(parse_extensive(serialize_extensive(g)) == g, "random game " + std::to_string(i));
  }

  std::mt19937_64 rng(1);
  const std::string alphabet = "() \n;-0123456789abcleafgamePQ#";
  std::vector<std::string> sources;
  for (const auto& name : corpus::names()) sources.emplace_back(corpus::text(name));
  for (std::uint64_t i = 0; i < 200; ++i) {
    sources.push_back(serialize_extensive(testing::ensemble_game(i)));
  }
  std::size_t errors = 0;
  for (int i = 0; i < 20000; ++i) {
    std::string text = sources[rng() % sources.size()];
    for (int e = 0; e < 3 && !text.empty(); ++e) {
      const std::size_t at = rng() % text.size();
      switch (rng() % 3) {
        case 0: text.erase(at, 1); break;
        case 1: text.insert(at, 1, alphabet[rng() % alphabet.size()]); break;
        default: text[at] = alphabet[rng() % alphabet.size()]; break;
      }
    }
    try {
      parse_game(text);
    } catch (const ParseError& e) {
      ++errors;
      v.require(e.span().start <= e.span().end && e.span().end <= text.size(),
                "span outside input: " + std::string(e.what()));
    }
  }
  if (v.pass) {
    v.detail = "corpus + 1000 random round-trip; " + std::to_string(errors) +
               " parse errors, all spans in range";
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"1 exchange: spe withholds, ppe gives and is paid", exchange_game},
      {"2 newcomb: spe $1,000 leaf, ppe $1,000,000 leaf", newcomb},
      {"3 ppe outcome Pareto-optimal on 10000 random games", pareto_claim},
      {"4 spe profile is a pure Nash cell on 1000 games", spe_in_nash},
      {"5 ppe agrees with the oracle", oracle_agreement},
      {"6 fig3_shape: 2 x 4 strategies, 6 outcomes", strategy_count_law},
      {"7 superrational: pd cooperates, diagonal argmax", superrationality},
      {"8 ordinal invariance of spe, ppe, pure Nash", ordinal_invariance},
      {"9 CLI JSON deterministic apart from timing", determinism},
      {"10 parser round-trip and error spans", round_trip},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (v.pass ? "PASS " : "FAIL ") << name << " -- " << v.detail << std::endl;
    failed += !v.pass;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
