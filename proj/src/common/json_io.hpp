/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The ltelab Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "json.hpp"
#include "ltelab/grid.hpp"
#include "ltelab/interference.hpp"
#include "ltelab/linkmodel.hpp"

namespace ltelab::detail {

using ordered_json = nlohmann::ordered_json;

// Writers emit every field in a fixed order. Readers start from `base` and
// override the fields present, so partial documents pick up defaults.
ordered_json to_json(const CellConfig& cell);
CellConfig cell_from_json(const ordered_json& j, CellConfig base = {});

ordered_json to_json(const LinkConfig& link);
LinkConfig link_from_json(const ordered_json& j, LinkConfig base = {});

ordered_json to_json(const FootprintOptions& options);
FootprintOptions footprint_options_from_json(const ordered_json& j, FootprintOptions base = {});

/// Accepts either a catalog name or a row number for "kind".
ordered_json to_json(const InterferenceScenario& scenario);
InterferenceScenario scenario_from_json(const ordered_json& j);

ordered_json to_json(const IsrMetrics& metrics);
IsrMetrics isr_metrics_from_json(const ordered_json& j);

ordered_json to_json(const ThroughputReport& report);
ThroughputReport report_from_json(const ordered_json& j);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double value);

}  // namespace ltelab::detail
