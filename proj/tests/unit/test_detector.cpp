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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "ltelab/detector.hpp"

using namespace ltelab;

namespace {

TrainingSet toy()
{
    TrainingSet t;
    t.categories = {"A", "B"};
    t.samples = {{{0, 0}, 0}, {{0, 1}, 0}, {{1, 0}, 0}, {{10, 10}, 1}, {{10, 11}, 1}, {{11, 10}, 1}};
    return t;
}

// Full sort of every distance, then majority with the documented tie rule.
int oracle(const TrainingSet& t, const FeatureVector& x, int k, DistanceMetric metric)
{
    std::vector<std::pair<double, std::size_t>> d;
    for (std::size_t i = 0; i < t.samples.size(); ++i) {
        double acc = 0.0;
        for (std::size_t f = 0; f < x.size(); ++f) {
            const double diff = x[f] - t.samples[i].features[f];
            acc += metric == DistanceMetric::Euclidean ? diff * diff : std::fabs(diff);
        }
        d.emplace_back(metric == DistanceMetric::Euclidean ? std::sqrt(acc) : acc, i);
    }
    std::sort(d.begin(), d.end());
    std::map<int, int> votes;
    for (int r = 0; r < k; ++r)
        ++votes[t.samples[d[static_cast<std::size_t>(r)].second].label];
    int top = 0;
    for (const auto& [c, v] : votes)
        top = std::max(top, v);
    std::pair<double, int> best{INFINITY, -1};
    for (int r = 0; r < k; ++r) {
        const auto& [dist, i] = d[static_cast<std::size_t>(r)];
        const int c = t.samples[i].label;
        if (votes[c] == top)
            best = std::min(best, {dist, c});
    }
    return best.second;
}

TrainingSet random_set(std::mt19937_64& rng, std::size_t m, std::size_t dim, int classes,
                       bool integer_grid)
{
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::uniform_int_distribution<int> grid(0, 3);
    std::uniform_int_distribution<int> lab(0, classes - 1);
    TrainingSet t;
    t.categories.clear();
    for (int c = 0; c < classes; ++c)
        t.categories.push_back("c" + std::to_string(c));
    for (std::size_t i = 0; i < m; ++i) {
        FeatureVector f(dim);
        for (auto& v : f)
            v = integer_grid ? grid(rng) : u(rng);
        t.samples.push_back({f, lab(rng)});
    }
    return t;
}

FeatureVector random_query(std::mt19937_64& rng, std::size_t dim, bool integer_grid)
{
    std::uniform_real_distribution<double> u(-3.5, 3.5);
    std::uniform_int_distribution<int> grid(0, 3);
    FeatureVector f(dim);
    for (auto& v : f)
        v = integer_grid ? grid(rng) : u(rng);
    return f;
}

}  // namespace

TEST_CASE("distance examples")
{
    const FeatureVector a{0, 0}, b{3, 4};
    CHECK(distance(a, b) == 5.0);
    CHECK(distance(a, b, DistanceMetric::Manhattan) == 7.0);
    CHECK(distance(b, b) == 0.0);
    CHECK_THROWS_AS(distance(a, FeatureVector{1, 2, 3}), std::invalid_argument);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const auto x = random_query(rng, 4, false), y = random_query(rng, 4, false);
        CHECK(distance(x, y) == distance(y, x));
        CHECK(distance(x, y, DistanceMetric::Manhattan) == distance(y, x, DistanceMetric::Manhattan));
    }
    CHECK(distance_metric_from_string(to_string(DistanceMetric::Manhattan)) == DistanceMetric::Manhattan);
    CHECK_THROWS_AS(distance_metric_from_string("cosine"), std::invalid_argument);
}

TEST_CASE("classify examples")
{
    const KnnModel m(toy());
    CHECK(m.classify_name(FeatureVector{0.5, 0.5}) == "A");
    CHECK(m.classify_name(FeatureVector{10.5, 10.5}) == "B");
    const KnnModel one(toy(), {1});
    for (const auto& s : toy().samples)
        CHECK(one.classify(s.features) == s.label);
}

TEST_CASE("classify matches the exhaustive-sort oracle")
{
    std::mt19937_64 rng(2024);
    int mismatches = 0;
    for (int k : {1, 3, 5}) {
        for (auto metric : {DistanceMetric::Euclidean, DistanceMetric::Manhattan}) {
            for (bool ties : {false, true}) {
                for (int trial = 0; trial < 10; ++trial) {
                    const auto t = random_set(rng, 30 + 7 * static_cast<std::size_t>(trial), 2 + trial % 3,
                                              2 + trial % 2, ties);
                    const KnnModel model(t, {k, metric, false});
                    for (int q = 0; q < 100; ++q) {
                        const auto x = random_query(rng, t.dimension(), ties);
                        mismatches += model.classify(x) != oracle(t, x, k, metric);
                    }
                }
            }
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("neighbors are ordered by distance then index")
{
    TrainingSet t;
    t.samples = {{{1, 0}, 1}, {{0, 1}, 0}, {{-1, 0}, 0}, {{5, 5}, 1}};
    const KnnModel m(t, {3});
    const auto nn = m.neighbors(FeatureVector{0, 0});
    REQUIRE(nn.size() == 3);
    CHECK(nn[0].index == 0);
    CHECK(nn[1].index == 1);
    CHECK(nn[2].index == 2);
    CHECK(nn[0].distance == 1.0);
}

TEST_CASE("vote ties go to the class holding the nearest neighbor, then the lowest index")
{
    TrainingSet t;
    t.categories = {"A", "B", "C"};
    t.samples = {{{2.0}, 0}, {{1.0}, 1}, {{3.0}, 2}, {{-1.5}, 0}};
    // k=2: one A (2.0) and one B (1.0) vote; B is nearer
    CHECK(KnnModel(t, {2}).classify(FeatureVector{0.0}) == 1);
    // equidistant tied neighbors: lowest category index wins
    TrainingSet e;
    e.samples = {{{1.0}, 1}, {{-1.0}, 0}};
    CHECK(KnnModel(e, {2}).classify(FeatureVector{0.0}) == 0);
    // a three-way tie at k=3
    CHECK(KnnModel(t, {3}).classify(FeatureVector{1.9}) == 0);
}

TEST_CASE("training order does not change classifications")
{
    std::mt19937_64 rng(8);
    const auto t = random_set(rng, 60, 3, 2, false);
    auto shuffled = t;
    std::shuffle(shuffled.samples.begin(), shuffled.samples.end(), rng);
    for (int k : {1, 3, 5}) {
        const KnnModel a(t, {k}), b(shuffled, {k});
        for (int q = 0; q < 300; ++q) {
            const auto x = random_query(rng, 3, false);
            CHECK(a.classify(x) == b.classify(x));
        }
    }
}

TEST_CASE("with normalization, rescaling a feature leaves classifications unchanged")
{
    std::mt19937_64 rng(9);
    const auto t = random_set(rng, 80, 2, 2, false);
    for (double factor : {0.001, 7.0, 1e4}) {
        auto scaled = t;
        for (auto& s : scaled.samples)
            s.features[1] *= factor;
        const KnnModel a(t, {3, DistanceMetric::Euclidean, true});
        const KnnModel b(scaled, {3, DistanceMetric::Euclidean, true});
        int mismatches = 0;
        for (int q = 0; q < 300; ++q) {
            auto x = random_query(rng, 2, false);
            const int ca = a.classify(x);
            x[1] *= factor;
            mismatches += ca != b.classify(x);
        }
        CHECK(mismatches == 0);
    }
}

TEST_CASE("k = 1 returns the nearest neighbor's label")
{
    std::mt19937_64 rng(10);
    const auto t = random_set(rng, 50, 2, 3, false);
    const KnnModel m(t, {1});
    for (int q = 0; q < 500; ++q) {
        const auto x = random_query(rng, 2, false);
        std::size_t best = 0;
        for (std::size_t i = 1; i < t.size(); ++i)
            if (distance(x, t.samples[i].features) < distance(x, t.samples[best].features))
                best = i;
        CHECK(m.classify(x) == t.samples[best].label);
    }
}

TEST_CASE("normalization")
{
    TrainingSet t;
    t.samples = {{{4.0, 3.0}, 0}, {{4.0, 7.0}, 1}, {{4.0, 5.0}, 0}, {{4.0, 5.0}, 1}};
    const auto n = fit_normalization(t);
    CHECK(n.offset[0] == 4.0);
    CHECK(n.scale[0] == 1.0);
    CHECK(n.offset[1] == 5.0);
    CHECK(n.scale[1] == doctest::Approx(std::sqrt(2.0)));

    // feature with mean 5 and population sd 2
    TrainingSet u;
    for (double v : {3.0, 7.0, 3.0, 7.0})
        u.samples.push_back({{v}, 0});
    const auto nu = fit_normalization(u);
    CHECK(nu.offset[0] == 5.0);
    CHECK(nu.scale[0] == 2.0);
    TrainingSet z;
    for (const auto& s : u.samples)
        z.samples.push_back({nu.apply(s.features), 0});
    double mean = 0.0, var = 0.0;
    for (const auto& s : z.samples)
        mean += s.features[0] / 4.0;
    for (const auto& s : z.samples)
        var += (s.features[0] - mean) * (s.features[0] - mean) / 4.0;
    CHECK(mean == doctest::Approx(0.0));
    CHECK(var == doctest::Approx(1.0));
    const auto again = fit_normalization(z);
    for (const auto& s : z.samples)
        CHECK(again.apply(s.features)[0] == doctest::Approx(s.features[0]));

    TrainingSet single;
    single.samples = {{{1.0}, 0}};
    CHECK_THROWS_AS(fit_normalization(single), std::invalid_argument);
    CHECK_THROWS_AS(nu.apply(FeatureVector{1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("model construction and query errors")
{
    CHECK_THROWS_AS(KnnModel(toy(), {7}), std::invalid_argument);
    CHECK_THROWS_AS(KnnModel(toy(), {0}), std::invalid_argument);
    const KnnModel m(toy());
    CHECK_THROWS_AS(m.classify(FeatureVector{1.0}), std::invalid_argument);
    CHECK_THROWS_AS(m.classify(FeatureVector{1.0, NAN}), std::invalid_argument);
    auto bad = toy();
    bad.samples[2].label = 5;
    CHECK_THROWS_AS(KnnModel{bad}, std::invalid_argument);
    bad = toy();
    bad.samples[1].features.push_back(0.0);
    CHECK_THROWS_AS(KnnModel{bad}, std::invalid_argument);
    bad = toy();
    bad.categories = {"A", "A"};
    CHECK_THROWS_AS(KnnModel{bad}, std::invalid_argument);
    CHECK(toy().category_index("B") == 1);
    CHECK_THROWS_AS(toy().category_index("Z"), std::invalid_argument);
}

TEST_CASE("PM counters")
{
    CellConfig cell;
    const LinkConfig link;
    PmCounterOptions quiet;
    quiet.noise_sd = 0.0;
    const auto none =
        evaluate_scenario(cell, link, InterferenceScenario::make(ScenarioKind::None)).report;
    const auto base = synth_pm_counters(none, 1, quiet);
    REQUIRE(base.size() == 2);
    CHECK(base[0] < 1e-3);
    CHECK(base[1] == 0.0);
    const auto hit =
        evaluate_scenario(cell, link, InterferenceScenario::make(ScenarioKind::PucchTarget, 5.0))
            .report;
    const auto x = synth_pm_counters(hit, 1, quiet);
    CHECK(x[0] > base[0]);
    CHECK(x[1] > base[1]);
    CHECK(synth_pm_counters(hit, 42) == synth_pm_counters(hit, 42));
    CHECK(synth_pm_counters(hit, 42) != synth_pm_counters(hit, 43));
    PmCounterOptions bad;
    bad.noise_sd = -1.0;
    CHECK_THROWS_AS(synth_pm_counters(hit, 1, bad), std::invalid_argument);
}

TEST_CASE("detection experiment: default clusters are fully separated")
{
    const auto r = run_detection_experiment({});
    CHECK(r.n_train == 80);
    CHECK(r.n_test == 21);
    CHECK(r.accuracy == 1.0);
    CHECK(r.per_class_accuracy == std::vector<double>{1.0, 1.0});
    REQUIRE(r.displaced_index.has_value());
    const auto& p = r.held_out[*r.displaced_index];
    CHECK(p.label == kInterference);
    CHECK(r.predicted[*r.displaced_index] == kInterference);
    CHECK(r.confusion[0][0] + r.confusion[1][1] == 21);
    // the displaced point sits away from the interference cluster centre
    double cx = 0.0, cy = 0.0, n = 0.0;
    for (const auto& s : r.training.samples)
        if (s.label == kInterference) {
            cx += s.features[0];
            cy += s.features[1];
            n += 1.0;
        }
    CHECK(distance(p.features, FeatureVector{cx / n, cy / n}) > 0.3);
}

TEST_CASE("detection experiment across seeds")
{
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        ExperimentConfig c;
        c.seed = seed;
        CHECK(run_detection_experiment(c).accuracy == 1.0);
    }
}

TEST_CASE("detection experiment degrades to chance with overwhelming noise")
{
    ExperimentConfig c;
    c.pm.noise_sd = 50.0;
    c.samples_per_class = 1000;
    c.displaced_point = false;
    const auto r = run_detection_experiment(c);
    CHECK(r.n_test == 400);
    CHECK(std::fabs(r.accuracy - 0.5) < 0.08);
}

TEST_CASE("detection experiment is deterministic")
{
    ExperimentConfig c;
    c.seed = 77;
    const auto a = run_detection_experiment(c), b = run_detection_experiment(c);
    CHECK(a == b);
    CHECK(experiment_report_to_json(a) == experiment_report_to_json(b));
    CHECK(experiment_report_to_csv(a) == experiment_report_to_csv(b));
    ExperimentConfig bad;
    bad.samples_per_class = 1;
    CHECK_THROWS_AS(run_detection_experiment(bad), std::invalid_argument);
}

TEST_CASE("training set and model persistence")
{
    const auto r = run_detection_experiment({});
    const auto csv = training_set_to_csv(r.training);
    CHECK(csv.rfind("metric_1,metric_2,label\n", 0) == 0);
    CHECK(training_set_from_csv(csv) == r.training);
    CHECK(training_set_from_json(training_set_to_json(r.training)) == r.training);
    const KnnModel m(r.training, {3, DistanceMetric::Manhattan, true});
    const auto back = model_from_json(model_to_json(m));
    CHECK(back.training() == m.training());
    CHECK(back.options() == m.options());
    for (const auto& s : r.held_out)
        CHECK(back.classify(s.features) == m.classify(s.features));
    CHECK_THROWS(training_set_from_csv("metric_1,label\n0.1,Unknown\n"));
    CHECK_THROWS(training_set_from_csv("metric_1,label\nabc,Interference\n"));
}
