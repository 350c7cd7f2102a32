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

#ifndef GT_CLI_HPP
#define GT_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gt/corpus.hpp"

namespace gt::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,       // bad flags, unreadable file, unknown corpus name
  kParseFailed = 2, // game text did not parse
  kRejected = 3,    // validation, strictness, form mismatch, size guard
  kInternal = 4,    // library bug
};

struct BatchOptions {
  corpus::GeneratorConfig config;  // seed is the batch seed
  std::size_t count = 1000;
  std::size_t threads = 0;  // 0 picks hardware concurrency
};

struct BatchFailure {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::string kind;
};

/// Aggregate over a batch of random games. Order-independent counts only.
struct BatchSummary {
  std::size_t games = 0;
  std::size_t ppe_pareto = 0;
  std::size_t spe_pareto = 0;
  std::size_t ppe_equals_spe = 0;
  std::size_t ppe_dominates_spe = 0;
  std::size_t oracle_checked = 0;
  std::size_t oracle_agree = 0;
  std::vector<BatchFailure> failures;  // sorted by index
};

/// Game i uses seed corpus::derive_seed(options.config.seed, i).
BatchSummary run_batch(const BatchOptions& options);

nlohmann::json batch_json(const BatchOptions& options, const BatchSummary& summary);

/// Entry point of the `gt` executable; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gt::cli

#endif  // GT_CLI_HPP
