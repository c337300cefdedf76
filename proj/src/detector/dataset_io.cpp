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

#include "ltelab/detector.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

#include "../common/json_io.hpp"

namespace ltelab {

using detail::format_double;
using detail::ordered_json;

namespace {

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> out;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, sep))
        out.push_back(field);
    if (!line.empty() && line.back() == sep)
        out.emplace_back();
    return out;
}

std::string strip(std::string s)
{
    while (!s.empty() && (s.back() == '\r' || s.back() == ' '))
        s.pop_back();
    while (!s.empty() && s.front() == ' ')
        s.erase(s.begin());
    return s;
}

ordered_json samples_to_json(const std::vector<Sample>& samples,
                             const std::vector<std::string>& categories)
{
    ordered_json arr = ordered_json::array();
    for (const auto& s : samples)
        arr.push_back({{"features", s.features},
                       {"label", categories.at(static_cast<std::size_t>(s.label))}});
    return arr;
}

ordered_json set_to_json(const TrainingSet& set)
{
    return {{"categories", set.categories},
            {"dimension", set.dimension()},
            {"samples", samples_to_json(set.samples, set.categories)}};
}

TrainingSet set_from_json(const ordered_json& doc)
{
    TrainingSet set;
    set.categories = doc.at("categories").get<std::vector<std::string>>();
    for (const auto& s : doc.at("samples"))
        set.samples.push_back({s.at("features").get<FeatureVector>(),
                               set.category_index(s.at("label").get<std::string>())});
    set.validate();
    return set;
}

}  // namespace

std::string training_set_to_csv(const TrainingSet& set)
{
    std::string out;
    for (std::size_t f = 0; f < set.dimension(); ++f)
        out += "metric_" + std::to_string(f + 1) + ",";
    out += "label\n";
    for (const auto& s : set.samples) {
        for (double v : s.features)
            out += format_double(v) + ",";
        out += set.categories.at(static_cast<std::size_t>(s.label)) + "\n";
    }
    return out;
}

TrainingSet training_set_from_csv(std::string_view text, std::vector<std::string> categories)
{
    TrainingSet set;
    set.categories = std::move(categories);
    std::istringstream is{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::size_t columns = 0;
    while (std::getline(is, line)) {
        ++line_no;
        line = strip(line);
        if (line.empty())
            continue;
        const auto fields = split(line, ',');
        if (columns == 0) {
            if (fields.size() < 2 || strip(fields.back()) != "label")
                throw std::invalid_argument("CSV header must end with a 'label' column");
            columns = fields.size();
            continue;
        }
        if (fields.size() != columns)
            throw std::invalid_argument("CSV line " + std::to_string(line_no) + " has " +
                                        std::to_string(fields.size()) + " fields, expected " +
                                        std::to_string(columns));
        Sample s;
        for (std::size_t f = 0; f + 1 < fields.size(); ++f) {
            std::size_t used = 0;
            const auto value = strip(fields[f]);
            try {
                s.features.push_back(std::stod(value, &used));
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != value.size())
                throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                            ": '" + value + "' is not a number");
        }
        s.label = set.category_index(strip(fields.back()));
        set.samples.push_back(std::move(s));
    }
    if (columns == 0)
        throw std::invalid_argument("CSV has no header");
    set.validate();
    return set;
}

std::string training_set_to_json(const TrainingSet& set) { return set_to_json(set).dump(2); }

TrainingSet training_set_from_json(std::string_view text)
{
    return set_from_json(ordered_json::parse(text));
}

std::string model_to_json(const KnnModel& model)
{
    ordered_json doc;
    doc["k"] = model.options().k;
    doc["metric"] = to_string(model.options().metric);
    doc["normalize"] = model.options().normalize;
    doc["training"] = set_to_json(model.training());
    return doc.dump(2);
}

KnnModel model_from_json(std::string_view text)
{
    const auto doc = ordered_json::parse(text);
    KnnOptions options;
    options.k = doc.value("k", options.k);
    if (auto it = doc.find("metric"); it != doc.end())
        options.metric = distance_metric_from_string(it->get<std::string>());
    options.normalize = doc.value("normalize", options.normalize);
    return KnnModel(set_from_json(doc.at("training")), options);
}

std::string experiment_report_to_json(const ExperimentReport& r)
{
    ordered_json doc;
    doc["categories"] = r.categories;
    doc["n_train"] = r.n_train;
    doc["n_test"] = r.n_test;
    doc["accuracy"] = r.accuracy;
    ordered_json per_class = ordered_json::object();
    for (std::size_t c = 0; c < r.categories.size(); ++c)
        per_class[r.categories[c]] = r.per_class_accuracy.at(c);
    doc["per_class_accuracy"] = std::move(per_class);
    doc["confusion"] = {{"rows", "true"}, {"columns", "predicted"}, {"matrix", r.confusion}};
    if (r.displaced_index)
        doc["displaced_point"] = {
            {"index", *r.displaced_index},
            {"features", r.held_out.at(*r.displaced_index).features},
            {"predicted", r.categories.at(static_cast<std::size_t>(r.predicted.at(*r.displaced_index)))}};
    else
        doc["displaced_point"] = nullptr;
    doc["training"] = samples_to_json(r.training.samples, r.categories);
    ordered_json held = samples_to_json(r.held_out, r.categories);
    for (std::size_t i = 0; i < held.size(); ++i)
        held[i]["predicted"] = r.categories.at(static_cast<std::size_t>(r.predicted.at(i)));
    doc["held_out"] = std::move(held);
    return doc.dump(2);
}

std::string experiment_report_to_csv(const ExperimentReport& r)
{
    std::string out;
    const std::size_t dim = r.held_out.empty() ? 0 : r.held_out.front().features.size();
    for (std::size_t f = 0; f < dim; ++f)
        out += "metric_" + std::to_string(f + 1) + ",";
    out += "label,predicted\n";
    for (std::size_t i = 0; i < r.held_out.size(); ++i) {
        for (double v : r.held_out[i].features)
            out += format_double(v) + ",";
        out += r.categories.at(static_cast<std::size_t>(r.held_out[i].label)) + "," +
               r.categories.at(static_cast<std::size_t>(r.predicted.at(i))) + "\n";
    }
    return out;
}

}  // namespace ltelab
