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

#ifndef GT_REPORT_HPP
#define GT_REPORT_HPP

#include <json.hpp>

#include "gt/game.hpp"
#include "gt/nash.hpp"
#include "gt/ppe.hpp"

namespace gt::report {

using nlohmann::json;

json outcome_json(const ExtensiveGame& game, const Path& path);
json profile_json(const ExtensiveGame& game, const StrategyProfile& profile);
json trace_json(const ExtensiveGame& game, const PpeReport& report);
json stages_json(const ExtensiveGame& game, const PpeReport& report);
json cell_json(const NormalFormGame& game, const NashCell& cell);
json strategies_json(const ExtensiveGame& game, PlayerId player, const StrategySet& set);
json comparison_json(const ExtensiveGame& game, const ComparisonReport& cmp);

}  // namespace gt::report

#endif  // GT_REPORT_HPP
