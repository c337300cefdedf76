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

#include "ltelab/grid.hpp"

#include <stdexcept>

#include "json.hpp"

namespace ltelab {

using ordered_json = nlohmann::ordered_json;

std::string grid_to_json(const ResourceGrid& grid)
{
    ordered_json doc;
    const auto& cfg = grid.config();
    doc["config"] = {{"bandwidth_rb", cfg.bandwidth_rb},
                     {"cell_id", cfg.cell_id},
                     {"cfi", cfg.cfi},
                     {"pucch_fraction", cfg.pucch_fraction},
                     {"cyclic_prefix", "normal"},
                     {"duplex", "FDD"},
                     {"antenna_ports", 1}};
    doc["direction"] = to_string(grid.direction());
    doc["num_subcarriers"] = grid.num_subcarriers();
    doc["num_symbols"] = grid.num_symbols();
    doc["order"] = "symbol-major";

    ordered_json runs = ordered_json::array();
    const auto labels = grid.labels();
    std::size_t i = 0;
    while (i < labels.size()) {
        std::size_t j = i + 1;
        while (j < labels.size() && labels[j] == labels[i])
            ++j;
        runs.push_back(ordered_json::array({to_string(labels[i]), j - i}));
        i = j;
    }
    doc["labels_rle"] = std::move(runs);
    return doc.dump();
}

std::vector<ChannelKind> labels_from_json(std::string_view json_text)
{
    const auto doc = ordered_json::parse(json_text);
    const auto total = doc.at("num_subcarriers").get<std::size_t>() *
                       doc.at("num_symbols").get<std::size_t>();
    std::vector<ChannelKind> labels;
    labels.reserve(total);
    for (const auto& run : doc.at("labels_rle")) {
        const auto kind = channel_from_string(run.at(0).get<std::string>());
        labels.insert(labels.end(), run.at(1).get<std::size_t>(), kind);
    }
    if (labels.size() != total)
        throw std::invalid_argument("label runs do not cover the grid");
    return labels;
}

}  // namespace ltelab
