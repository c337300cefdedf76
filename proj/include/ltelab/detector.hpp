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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ltelab/grid.hpp"
#include "ltelab/linkmodel.hpp"

namespace ltelab {

/// Ordered PM-counter / KPI values [metric_1 .. metric_N].
using FeatureVector = std::vector<double>;

enum class DistanceMetric : std::uint8_t { Euclidean, Manhattan };

std::string_view to_string(DistanceMetric metric);
DistanceMetric distance_metric_from_string(std::string_view text);

double distance(std::span<const double> a, std::span<const double> b,
                DistanceMetric metric = DistanceMetric::Euclidean);

struct Sample {
    FeatureVector features;
    /// Index into TrainingSet::categories.
    int label = 0;

    bool operator==(const Sample&) const = default;
};

inline constexpr int kInterference = 0;
inline constexpr int kNoInterference = 1;

struct TrainingSet {
    std::vector<std::string> categories{"Interference", "NoInterference"};
    std::vector<Sample> samples;

    std::size_t size() const { return samples.size(); }
    /// Dimensionality of the first sample, 0 when empty.
    std::size_t dimension() const;
    int category_index(std::string_view name) const;
    /// Non-empty category list without duplicates, labels in range, equal
    /// dimensionality and finite values.
    void validate() const;

    bool operator==(const TrainingSet&) const = default;
};

/// Per-feature z-score: normalized = (x - offset) / scale.
struct Normalization {
    std::vector<double> offset;
    std::vector<double> scale;

    FeatureVector apply(std::span<const double> x) const;
    bool operator==(const Normalization&) const = default;
};

/// Mean and population standard deviation per feature. Features with zero
/// spread get scale 1. Needs at least two samples.
Normalization fit_normalization(const TrainingSet& training);

struct KnnOptions {
    int k = 3;
    DistanceMetric metric = DistanceMetric::Euclidean;
    bool normalize = false;

    bool operator==(const KnnOptions&) const = default;
};

struct Neighbor {
    std::size_t index = 0;
    double distance = 0.0;
    int label = 0;
};

/// Majority vote among the k nearest training samples. Immutable once
/// built; classify() may be called concurrently.
class KnnModel {
public:
    KnnModel(TrainingSet training, KnnOptions options = {});

    const TrainingSet& training() const { return training_; }
    const KnnOptions& options() const { return options_; }
    const std::optional<Normalization>& normalization() const { return normalization_; }

    /// Nearest k samples ordered by (distance, sample index).
    std::vector<Neighbor> neighbors(std::span<const double> x) const;

    /// Category index. Vote ties go to the tied class holding the nearest
    /// neighbor, then to the lowest category index.
    int classify(std::span<const double> x) const;
    const std::string& classify_name(std::span<const double> x) const;

private:
    TrainingSet training_;
    KnnOptions options_;
    std::optional<Normalization> normalization_;
    std::size_t dim_ = 0;
    std::vector<double> soa_;  // feature-major, normalized when enabled
};

struct PmCounterOptions {
    /// Standard deviation of the additive measurement noise on each feature.
    double noise_sd = 0.05;
    /// PUCCH SINR at which half of the control decodes fail.
    double pucch_threshold_db = 0.0;
    double failure_slope_db = 2.0;

    void validate() const;
    bool operator==(const PmCounterOptions&) const = default;
};

/// [PUCCH-region decode-failure rate, UL degradation fraction], each with
/// seeded Gaussian noise.
FeatureVector synth_pm_counters(const ThroughputReport& report, std::uint64_t noise_seed,
                                const PmCounterOptions& options = {});

struct ExperimentConfig {
    CellConfig cell;
    LinkConfig link;
    PmCounterOptions pm;
    KnnOptions knn;
    int samples_per_class = 50;
    double train_fraction = 0.8;
    /// Interference samples draw ISR_RE uniformly from this range.
    double isr_min_db = 0.0;
    double isr_max_db = 10.0;
    /// Adds one held-out interference point away from its cluster center.
    bool displaced_point = true;
    double displacement_x = -0.35;
    double displacement_y = -0.25;
    std::uint64_t seed = 1;

    void validate() const;
};

struct ExperimentReport {
    std::vector<std::string> categories;
    std::size_t n_train = 0;
    std::size_t n_test = 0;
    /// confusion[true][predicted]
    std::vector<std::vector<int>> confusion;
    std::vector<double> per_class_accuracy;
    double accuracy = 0.0;
    TrainingSet training;
    std::vector<Sample> held_out;
    std::vector<int> predicted;
    /// Position of the displaced point in held_out.
    std::optional<std::size_t> displaced_index;

    bool operator==(const ExperimentReport&) const = default;
};

/// Two-cluster PUCCH interference detection: synthesize counters for the
/// no-interference and PUCCH-targeted scenarios, split, train, classify.
ExperimentReport run_detection_experiment(const ExperimentConfig& config);

// Persistence. CSV: metric_1..metric_N,label with category names.
std::string training_set_to_csv(const TrainingSet& set);
TrainingSet training_set_from_csv(std::string_view text,
                                  std::vector<std::string> categories = {"Interference",
                                                                         "NoInterference"});
std::string training_set_to_json(const TrainingSet& set);
TrainingSet training_set_from_json(std::string_view text);
std::string model_to_json(const KnnModel& model);
KnnModel model_from_json(std::string_view text);
std::string experiment_report_to_json(const ExperimentReport& report);
/// held-out points: metric columns, true label, predicted label.
std::string experiment_report_to_csv(const ExperimentReport& report);

}  // namespace ltelab
