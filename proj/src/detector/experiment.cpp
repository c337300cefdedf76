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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ltelab {

void ExperimentConfig::validate() const
{
    cell.validate();
    link.validate();
    pm.validate();
    if (samples_per_class < 2)
        throw std::invalid_argument("samples_per_class must be at least 2");
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw std::invalid_argument("train_fraction must lie in (0, 1)");
    if (!std::isfinite(isr_min_db) || !std::isfinite(isr_max_db) || isr_min_db > isr_max_db)
        throw std::invalid_argument("ISR range must be finite with min <= max");
    if (!std::isfinite(displacement_x) || !std::isfinite(displacement_y))
        throw std::invalid_argument("displacement must be finite");
    const auto per_class_train =
        static_cast<int>(std::llround(train_fraction * samples_per_class));
    if (per_class_train < 1 || per_class_train >= samples_per_class)
        throw std::invalid_argument("the split leaves a class without training or held-out samples");
    if (knn.k < 1 || 2 * per_class_train < knn.k)
        throw std::invalid_argument("k = " + std::to_string(knn.k) + " exceeds the " +
                                    std::to_string(2 * per_class_train) + " training samples");
}

ExperimentReport run_detection_experiment(const ExperimentConfig& config)
{
    config.validate();
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> isr(config.isr_min_db, config.isr_max_db);

    const auto baseline =
        evaluate_scenario(config.cell, config.link, InterferenceScenario::make(ScenarioKind::None))
            .report;
    const int per_class = config.samples_per_class;
    std::vector<std::vector<Sample>> clusters(2);
    for (int label : {kInterference, kNoInterference}) {
        for (int i = 0; i < per_class; ++i) {
            ThroughputReport report = baseline;
            if (label == kInterference) {
                const auto scenario = InterferenceScenario::make(ScenarioKind::PucchTarget, isr(rng));
                report = evaluate_scenario(config.cell, config.link, scenario).report;
            }
            clusters[static_cast<std::size_t>(label)].push_back(
                {synth_pm_counters(report, rng(), config.pm), label});
        }
    }

    ExperimentReport out;
    const auto n_train = static_cast<std::size_t>(std::llround(config.train_fraction * per_class));
    for (auto& cluster : clusters) {
        std::shuffle(cluster.begin(), cluster.end(), rng);
        out.training.samples.insert(out.training.samples.end(), cluster.begin(),
                                    cluster.begin() + static_cast<std::ptrdiff_t>(n_train));
        out.held_out.insert(out.held_out.end(),
                            cluster.begin() + static_cast<std::ptrdiff_t>(n_train), cluster.end());
    }
    out.categories = out.training.categories;

    if (config.displaced_point) {
        FeatureVector center(2, 0.0);
        std::size_t n = 0;
        for (const auto& s : out.training.samples) {
            if (s.label != kInterference)
                continue;
            center[0] += s.features[0];
            center[1] += s.features[1];
            ++n;
        }
        center[0] = center[0] / static_cast<double>(n) + config.displacement_x;
        center[1] = center[1] / static_cast<double>(n) + config.displacement_y;
        out.displaced_index = out.held_out.size();
        out.held_out.push_back({center, kInterference});
    }

    const KnnModel model(out.training, config.knn);
    const auto n_cat = out.categories.size();
    out.confusion.assign(n_cat, std::vector<int>(n_cat, 0));
    int correct = 0;
    for (const auto& s : out.held_out) {
        const int p = model.classify(s.features);
        out.predicted.push_back(p);
        ++out.confusion[static_cast<std::size_t>(s.label)][static_cast<std::size_t>(p)];
        correct += p == s.label;
    }
    out.n_train = out.training.size();
    out.n_test = out.held_out.size();
    out.accuracy = static_cast<double>(correct) / static_cast<double>(out.n_test);
    for (std::size_t c = 0; c < n_cat; ++c) {
        const int total = std::accumulate(out.confusion[c].begin(), out.confusion[c].end(), 0);
        out.per_class_accuracy.push_back(
            total == 0 ? 0.0 : static_cast<double>(out.confusion[c][c]) / total);
    }
    return out;
}

}  // namespace ltelab
