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

#include "gt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "gt/errors.hpp"
#include "gt/nash.hpp"
#include "gt/ppe.hpp"
#include "gt/report.hpp"
#include "gt/text.hpp"

namespace gt::cli {

using nlohmann::json;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Solver concept does not apply to the form of the input game.
class FormMismatch : public Error {
 public:
  using Error::Error;
};

struct Input {
  std::string source;  // file path or "corpus:NAME", for diagnostics
  json identity;
  AnyGame game;
};

struct InputFlags {
  std::string file;
  std::string corpus_name;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Parses game text and tags ParseErrors with their source.
class SourcedParseError : public Error {
 public:
  SourcedParseError(const std::string& source, const ParseError& e)
      : Error(source + ":" + e.what()) {}
};

Input load(const InputFlags& flags) {
  if (flags.file.empty() == flags.corpus_name.empty()) {
    throw UsageError("give exactly one of FILE or --corpus NAME");
  }
  std::string source;
  json identity;
  std::string text;
  if (!flags.corpus_name.empty()) {
    try {
      text = std::string(corpus::text(flags.corpus_name));
    } catch (const UnknownName& e) {
      throw UsageError(e.what());
    }
    source = "corpus:" + flags.corpus_name;
    identity = {{"kind", "corpus"}, {"name", flags.corpus_name}};
  } else {
    text = read_file(flags.file);
    source = flags.file;
    identity = {{"kind", "file"}, {"path", flags.file}};
  }
  try {
    return Input{source, std::move(identity), parse_game(text)};
  } catch (const ParseError& e) {
    throw SourcedParseError(source, e);
  }
}

const ExtensiveGame& need_extensive(const Input& in, const std::string& what) {
  if (const auto* g = std::get_if<ExtensiveGame>(&in.game)) return *g;
  throw FormMismatch(what + " needs an extensive-form game, but " + in.source +
                     " is in normal form");
}

const NormalFormGame& need_normal(const Input& in, const std::string& what) {
  if (const auto* g = std::get_if<NormalFormGame>(&in.game)) return *g;
  throw FormMismatch(what + " needs a normal-form game, but " + in.source +
                     " is an extensive-form tree (run 'gt convert' first)");
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string payoff_text(const ExtensiveGame& game, OutcomeId o) {
  std::string out;
  for (std::size_t p = 0; p < game.num_players(); ++p) {
    if (p) out += ' ';
    out += game.player_name(PlayerId{p}) + "=" +
           std::to_string(game.payoff(o, PlayerId{p}).value);
  }
  return out;
}

void print_outcome(std::ostream& out, const ExtensiveGame& game, const Path& path) {
  out << "outcome: " << path.outcome.value << '\n';
  out << "path: " << (path.steps.empty() ? "(root is a leaf)" : join(path.labels(), ",")) << '\n';
  out << "payoffs: " << payoff_text(game, path.outcome) << '\n';
}

void print_cell(std::ostream& out, const NormalFormGame& game, const NashCell& c) {
  out << "  (" << game.row_labels()[c.row] << ", " << game.col_labels()[c.col] << ") payoffs ("
      << c.payoffs[0].value << ", " << c.payoffs[1].value << ")\n";
}

class Timer {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit_json(std::ostream& out, json report, const Timer& timer) {
  report["timing_ms"] = timer.elapsed_ms();
  out << report.dump(2) << '\n';
}

struct SolveFlags {
  InputFlags input;
  std::string concept_name;
  bool json = false;
  bool trace = false;
};

int cmd_solve(const SolveFlags& f, std::ostream& out) {
  Timer timer;
  const Input in = load(f.input);
  json report{{"command", "solve"}, {"input", in.identity}, {"concept", f.concept_name}};

  if (f.concept_name == "spe" || f.concept_name == "ppe") {
    const auto& game = need_extensive(in, f.concept_name);
    report["form"] = "extensive";
    report["players"] = std::vector<std::string>(game.players().begin(), game.players().end());
    if (f.concept_name == "spe") {
      const auto spe = backward_induction(game);
      report["outcome"] = report::outcome_json(game, spe.path);
      report["profile"] = report::profile_json(game, spe.profile);
      if (!f.json) {
        out << "concept: spe\n";
        print_outcome(out, game, spe.path);
      }
    } else {
      const auto pp = ppe(game);
      report["outcome"] = report::outcome_json(game, pp.path);
      if (f.trace) {
        report["trace"] = report::trace_json(game, pp);
        report["stages"] = report::stages_json(game, pp);
      }
      if (!f.json) {
        out << "concept: ppe\n";
        print_outcome(out, game, pp.path);
        if (f.trace) {
          out << "trace:\n";
          for (const auto& s : pp.trace) {
            const PlayerId owner = *game.node(s.node).owner;
            out << "  at " << node_location(game, s.node) << ": outcome " << s.eliminated.value
                << " (" << join(game.path_to(s.eliminated).labels(), ",") << ") eliminated; "
                << s.witness_label << " guarantees " << game.player_name(owner) << ' '
                << s.guaranteed_min.value << " > " << s.eliminated_payoff.value << '\n';
          }
        }
      }
    }
  } else if (f.concept_name == "nash") {
    const auto& game = need_normal(in, "nash");
    report["form"] = "normal";
    report["players"] = game.players();
    const auto cells = pure_nash(game);
    json eq = json::array();
    for (const auto& c : cells) eq.push_back(report::cell_json(game, c));
    report["equilibria"] = std::move(eq);
    if (!f.json) {
      out << "concept: nash\n" << "pure equilibria: " << cells.size() << '\n';
      for (const auto& c : cells) print_cell(out, game, c);
    }
  } else if (f.concept_name == "superrational") {
    const auto& game = need_normal(in, "superrational");
    report["form"] = "normal";
    report["players"] = game.players();
    const auto sol = superrational(game);
    report["cell"] = report::cell_json(game, sol.cell);
    report["tie_broken"] = sol.tie_broken;
    if (!f.json) {
      out << "concept: superrational\n";
      print_cell(out, game, sol.cell);
      if (sol.tie_broken) out << "note: diagonal tie, lowest index chosen\n";
    }
  } else {
    throw UsageError("unknown concept '" + f.concept_name + "'");
  }
  if (f.json) emit_json(out, std::move(report), timer);
  return kOk;
}

struct ConvertFlags {
  InputFlags input;
  bool json = false;
  std::size_t max_strategies = kDefaultMaxStrategies;
};

int cmd_convert(const ConvertFlags& f, std::ostream& out) {
  Timer timer;
  const Input in = load(f.input);
  const auto& game = need_extensive(in, "convert");
  const auto conv = to_normal_form(game, f.max_strategies);
  const std::string text = serialize_normal(conv.game);
  if (f.json) {
    emit_json(out,
              {{"command", "convert"},
               {"input", in.identity},
               {"rows", report::strategies_json(game, PlayerId{0}, conv.strategies[0])},
               {"cols", report::strategies_json(game, PlayerId{1}, conv.strategies[1])},
               {"normal_form", text}},
              timer);
    return kOk;
  }
  // The legend is written as comments so the output still parses.
  for (std::size_t p = 0; p < 2; ++p) {
    const PlayerId player{p};
    const auto nodes = game.decision_nodes(player);
    const auto& set = conv.strategies[p];
    out << "; " << (p == 0 ? "rows" : "cols") << ": strategies of " << game.player_name(player)
        << '\n';
    for (std::size_t k = 0; k < set.labels.size(); ++k) {
      out << ";   " << set.labels[k] << " =";
      if (nodes.empty()) out << " (no decision nodes)";
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        out << ' ' << node_location(game, nodes[i]) << "->"
            << game.node(nodes[i]).moves[set.assignments[k][i]].label;
      }
      out << '\n';
    }
  }
  out << text;
  return kOk;
}

struct CompareFlags {
  InputFlags input;
  bool json = false;
};

int cmd_compare(const CompareFlags& f, std::ostream& out) {
  Timer timer;
  const Input in = load(f.input);
  const auto& game = need_extensive(in, "compare");
  const auto cmp = compare(game);
  if (f.json) {
    json report{{"command", "compare"}, {"input", in.identity}};
    report.update(report::comparison_json(game, cmp));
    emit_json(out, std::move(report), timer);
    return kOk;
  }
  auto line = [&](const char* name, const Path& path, bool pareto) {
    out << name << ": outcome " << path.outcome.value << " path "
        << (path.steps.empty() ? "(root)" : join(path.labels(), ",")) << " payoffs "
        << payoff_text(game, path.outcome) << (pareto ? " [Pareto-optimal]" : " [dominated]")
        << '\n';
  };
  line("spe", cmp.spe_path, cmp.spe_pareto_optimal);
  line("ppe", cmp.ppe_path, cmp.ppe_pareto_optimal);
  for (std::size_t p = 0; p < cmp.preferences.size(); ++p) {
    out << game.player_name(PlayerId{p}) << ": ";
    switch (cmp.preferences[p]) {
      case Preference::kPrefersPpe: out << "better off under ppe\n"; break;
      case Preference::kPrefersSpe: out << "better off under spe\n"; break;
      case Preference::kIndifferent: out << "indifferent\n"; break;
    }
  }
  out << "verdict: " << cmp.verdict() << '\n';
  return kOk;
}

struct BatchFlags {
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  std::size_t depth = 4;
  std::string branching = "2,3";
  std::size_t players = 2;
  std::size_t threads = 0;
};

std::pair<std::size_t, std::size_t> parse_branching(const std::string& s) {
  const auto comma = s.find(',');
  auto number = [&](const std::string& part) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(part, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (part.empty() || pos != part.size() || part.front() == '-') {
      throw UsageError("--branching expects MIN,MAX, got '" + s + "'");
    }
    return static_cast<std::size_t>(v);
  };
  if (comma == std::string::npos) {
    const auto v = number(s);
    return {v, v};
  }
  return {number(s.substr(0, comma)), number(s.substr(comma + 1))};
}

corpus::GeneratorConfig generator_config(std::uint64_t seed, std::size_t depth,
                                         const std::string& branching, std::size_t players) {
  corpus::GeneratorConfig cfg;
  cfg.seed = seed;
  cfg.depth = depth;
  std::tie(cfg.min_branching, cfg.max_branching) = parse_branching(branching);
  cfg.players = players;
  return cfg;
}

int cmd_batch(const BatchFlags& f, std::ostream& out) {
  Timer timer;
  BatchOptions opts;
  opts.config = generator_config(f.seed, f.depth, f.branching, f.players);
  opts.count = f.count;
  opts.threads = f.threads;
  corpus::check_config(opts.config);
  const auto summary = run_batch(opts);
  emit_json(out, batch_json(opts, summary), timer);
  return kOk;
}

struct DotFlags {
  InputFlags input;
  std::string highlight = "none";
  bool json = false;
};

int cmd_export_dot(const DotFlags& f, std::ostream& out) {
  Timer timer;
  const Input in = load(f.input);
  const auto& game = need_extensive(in, "export-dot");
  std::optional<Path> path;
  if (f.highlight == "spe") {
    path = backward_induction(game).path;
  } else if (f.highlight == "ppe") {
    path = ppe(game).path;
  } else if (f.highlight != "none") {
    throw UsageError("--highlight must be none, spe or ppe");
  }
  const std::string dot = export_dot(game, path);
  if (f.json) {
    emit_json(out,
              {{"command", "export-dot"},
               {"input", in.identity},
               {"highlight", f.highlight},
               {"dot", dot}},
              timer);
  } else {
    out << dot;
  }
  return kOk;
}

struct GenerateFlags {
  std::uint64_t seed = 1;
  std::size_t depth = 3;
  std::string branching = "2,3";
  std::size_t players = 2;
};

int cmd_generate(const GenerateFlags& f, std::ostream& out) {
  out << serialize_extensive(
      corpus::random_game(generator_config(f.seed, f.depth, f.branching, f.players)));
  return kOk;
}

void add_input(CLI::App* cmd, InputFlags& flags) {
  cmd->add_option("file", flags.file, "Game file in gt notation");
  cmd->add_option("--corpus", flags.corpus_name, "Use a builtin corpus game instead of a file");
}

}  // namespace

BatchSummary run_batch(const BatchOptions& options) {
  corpus::check_config(options.config);
  std::size_t threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(options.count, 1));

  std::vector<BatchSummary> partial(threads);
  std::atomic<std::size_t> next{0};
  auto worker = [&](BatchSummary& acc) {
    for (std::size_t i = next++; i < options.count; i = next++) {
      corpus::GeneratorConfig cfg = options.config;
      cfg.seed = corpus::derive_seed(options.config.seed, i);
      const ExtensiveGame game = corpus::random_game(cfg);
      const auto cmp = compare(game);
      ++acc.games;
      acc.ppe_pareto += cmp.ppe_pareto_optimal;
      acc.spe_pareto += cmp.spe_pareto_optimal;
      acc.ppe_equals_spe += cmp.identical();
      acc.ppe_dominates_spe += cmp.ppe_dominates_spe;
      if (!cmp.ppe_pareto_optimal) acc.failures.push_back({i, cfg.seed, "ppe_not_pareto_optimal"});
      if (game.num_outcomes() <= kOracleMaxOutcomes) {
        ++acc.oracle_checked;
        if (ppe_oracle(game) == cmp.ppe) {
          ++acc.oracle_agree;
        } else {
          acc.failures.push_back({i, cfg.seed, "oracle_disagrees"});
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker, std::ref(partial[t]));
    worker(partial[0]);
  }

  BatchSummary total;
  for (auto& p : partial) {
    total.games += p.games;
    total.ppe_pareto += p.ppe_pareto;
    total.spe_pareto += p.spe_pareto;
    total.ppe_equals_spe += p.ppe_equals_spe;
    total.ppe_dominates_spe += p.ppe_dominates_spe;
    total.oracle_checked += p.oracle_checked;
    total.oracle_agree += p.oracle_agree;
    total.failures.insert(total.failures.end(), p.failures.begin(), p.failures.end());
  }
  std::sort(total.failures.begin(), total.failures.end(),
            [](const BatchFailure& a, const BatchFailure& b) {
              return std::tie(a.index, a.kind) < std::tie(b.index, b.kind);
            });
  return total;
}

json batch_json(const BatchOptions& options, const BatchSummary& s) {
  auto fraction = [](std::size_t num, std::size_t den) -> json {
    if (den == 0) return nullptr;
    return static_cast<double>(num) / static_cast<double>(den);
  };
  json failures = json::array();
  for (const auto& f : s.failures) {
    failures.push_back({{"index", f.index}, {"seed", f.seed}, {"kind", f.kind}});
  }
  const auto& c = options.config;
  return {{"command", "batch"},
          {"config",
           {{"seed", c.seed},
            {"count", options.count},
            {"depth", c.depth},
            {"branching", {c.min_branching, c.max_branching}},
            {"players", c.players}}},
          {"games", s.games},
          {"ppe_pareto_fraction", fraction(s.ppe_pareto, s.games)},
          {"spe_pareto_fraction", fraction(s.spe_pareto, s.games)},
          {"ppe_equals_spe_fraction", fraction(s.ppe_equals_spe, s.games)},
          {"ppe_dominates_spe_fraction", fraction(s.ppe_dominates_spe, s.games)},
          {"oracle_checked", s.oracle_checked},
          {"oracle_agreement_fraction", fraction(s.oracle_agree, s.oracle_checked)},
          {"failures", std::move(failures)}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solve and compare equilibria of finite perfect-information games", "gt"};
  app.require_subcommand(1);

  SolveFlags solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a game under one solution concept");
  add_input(solve_cmd, solve.input);
  solve_cmd->add_option("--concept", solve.concept_name, "spe, ppe, nash or superrational")
      ->required()
      ->check(CLI::IsMember({"spe", "ppe", "nash", "superrational"}));
  solve_cmd->add_flag("--json", solve.json, "Print a JSON report");
  solve_cmd->add_flag("--trace", solve.trace, "Include the ppe elimination trace");

  ConvertFlags convert;
  auto* convert_cmd = app.add_subcommand("convert", "Convert a 2-player tree to normal form");
  add_input(convert_cmd, convert.input);
  convert_cmd->add_flag("--json", convert.json, "Print a JSON report");
  convert_cmd->add_option("--max-strategies", convert.max_strategies,
                          "Size guard on strategies per player")
      ->capture_default_str();

  CompareFlags cmp;
  auto* compare_cmd = app.add_subcommand("compare", "Contrast the spe and ppe outcomes");
  add_input(compare_cmd, cmp.input);
  compare_cmd->add_flag("--json", cmp.json, "Print a JSON report");

  BatchFlags batch;
  auto* batch_cmd = app.add_subcommand("batch", "Check equilibrium properties on random games");
  batch_cmd->add_option("--seed", batch.seed)->capture_default_str();
  batch_cmd->add_option("--count", batch.count)->capture_default_str();
  batch_cmd->add_option("--depth", batch.depth)->capture_default_str();
  batch_cmd->add_option("--branching", batch.branching, "MIN,MAX")->capture_default_str();
  batch_cmd->add_option("--players", batch.players)->capture_default_str();
  batch_cmd->add_option("--threads", batch.threads, "0 uses every core")->capture_default_str();
  batch_cmd->add_flag("--json", "Accepted for symmetry; batch always prints JSON");

  DotFlags dot;
  auto* dot_cmd = app.add_subcommand("export-dot", "Render a tree as Graphviz DOT");
  add_input(dot_cmd, dot.input);
  dot_cmd->add_option("--highlight", dot.highlight)
      ->check(CLI::IsMember({"none", "spe", "ppe"}))
      ->capture_default_str();
  dot_cmd->add_flag("--json", dot.json, "Wrap the DOT text in a JSON report");

  GenerateFlags gen;
  auto* gen_cmd = app.add_subcommand("generate", "Print a random strict game");
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
  gen_cmd->add_option("--depth", gen.depth)->capture_default_str();
  gen_cmd->add_option("--branching", gen.branching, "MIN,MAX")->capture_default_str();
  gen_cmd->add_option("--players", gen.players)->capture_default_str();

  auto* corpus_cmd = app.add_subcommand("corpus", "Builtin games");
  corpus_cmd->require_subcommand(1);
  bool list_json = false;
  auto* list_cmd = corpus_cmd->add_subcommand("list", "List builtin games");
  list_cmd->add_flag("--json", list_json);
  std::string emit_name;
  bool emit_json_flag = false;
  auto* emit_cmd = corpus_cmd->add_subcommand("emit", "Print a builtin game's text");
  emit_cmd->add_option("name", emit_name)->required();
  emit_cmd->add_flag("--json", emit_json_flag);

  std::vector<const char*> argv{"gt"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve, out);
    if (convert_cmd->parsed()) return cmd_convert(convert, out);
    if (compare_cmd->parsed()) return cmd_compare(cmp, out);
    if (batch_cmd->parsed()) return cmd_batch(batch, out);
    if (dot_cmd->parsed()) return cmd_export_dot(dot, out);
    if (gen_cmd->parsed()) return cmd_generate(gen, out);
    if (list_cmd->parsed()) {
      const auto names = corpus::names();
      if (list_json) {
        out << json{{"command", "corpus list"}, {"names", names}}.dump(2) << '\n';
      } else {
        for (const auto& n : names) out << n << '\n';
      }
      return kOk;
    }
    if (emit_cmd->parsed()) {
      std::string_view body;
      try {
        body = corpus::text(emit_name);
      } catch (const UnknownName& e) {
        throw UsageError(e.what());
      }
      if (emit_json_flag) {
        out << json{{"command", "corpus emit"}, {"name", emit_name}, {"text", body}}.dump(2)
            << '\n';
      } else {
        out << body;
      }
      return kOk;
    }
    throw UsageError("no command given");
  } catch (const UsageError& e) {
    err << "gt: " << e.what() << '\n';
    return kUsage;
  } catch (const SourcedParseError& e) {
    err << "gt: parse error: " << e.what() << '\n';
    return kParseFailed;
  } catch (const InternalError& e) {
    err << "gt: internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    err << "gt: " << e.what() << '\n';
    return kRejected;
  }
}

}  // namespace gt::cli
