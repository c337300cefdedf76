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

#include "ltelab/linkmodel.hpp"

#include "../common/json_io.hpp"

namespace ltelab {

std::string report_to_json(const ThroughputReport& report)
{
    return detail::to_json(report).dump();
}

ThroughputReport report_from_json(std::string_view text)
{
    return detail::report_from_json(detail::ordered_json::parse(text));
}

std::string report_csv_header()
{
    return "scenario,direction,isr_re_db,isr_f_db,dl_mbps,ul_mbps,degradation,sync_lost";
}

std::string report_csv_row(const ThroughputReport& report)
{
    using detail::format_double;
    std::string row;
    row += to_string(report.scenario.kind);
    row += ',';
    row += to_string(report.scenario.scope);
    row += ',' + format_double(report.scenario.isr_re_db);
    row += ',';
    if (report.isr_f_db)
        row += format_double(*report.isr_f_db);
    row += ',' + format_double(report.dl_mbps);
    row += ',' + format_double(report.ul_mbps);
    row += ',' + format_double(report.degradation_fraction);
    row += report.sync_lost ? ",true" : ",false";
    return row;
}

}  // namespace ltelab
