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
#include <stdexcept>
#include <string>

#include "ltelab/simd/kernels.hpp"

namespace ltelab {

std::string_view to_string(DistanceMetric metric)
{
    return metric == DistanceMetric::Euclidean ? "euclidean" : "manhattan";
}

DistanceMetric distance_metric_from_string(std::string_view text)
{
    if (text == "euclidean")
        return DistanceMetric::Euclidean;
    if (text == "manhattan")
        return DistanceMetric::Manhattan;
    throw std::invalid_argument("unknown distance metric '" + std::string(text) + "'");
}

double distance(std::span<const double> a, std::span<const double> b, DistanceMetric metric)
{
    if (a.size() != b.size())
        throw std::invalid_argument("feature vectors differ in dimensionality (" +
                                    std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                                    ")");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += metric == DistanceMetric::Euclidean ? d * d : std::fabs(d);
    }
    return metric == DistanceMetric::Euclidean ? std::sqrt(acc) : acc;
}

std::size_t TrainingSet::dimension() const
{
    return samples.empty() ? 0 : samples.front().features.size();
}

int TrainingSet::category_index(std::string_view name) const
{
    for (std::size_t i = 0; i < categories.size(); ++i)
        if (categories[i] == name)
            return static_cast<int>(i);
    throw std::invalid_argument("unknown category '" + std::string(name) + "'");
}

void TrainingSet::validate() const
{
    if (categories.empty())
        throw std::invalid_argument("training set declares no categories");
    for (std::size_t i = 0; i < categories.size(); ++i)
        for (std::size_t j = i + 1; j < categories.size(); ++j)
            if (categories[i] == categories[j])
                throw std::invalid_argument("duplicate category '" + categories[i] + "'");
    const auto dim = dimension();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& s = samples[i];
        if (s.label < 0 || s.label >= static_cast<int>(categories.size()))
            throw std::invalid_argument("sample " + std::to_string(i) + " has label " +
                                        std::to_string(s.label) + " outside the category set");
        if (s.features.size() != dim || dim == 0)
            throw std::invalid_argument("sample " + std::to_string(i) +
                                        " does not match the training dimensionality");
        for (double v : s.features)
            if (!std::isfinite(v))
                throw std::invalid_argument("sample " + std::to_string(i) +
                                            " has a non-finite feature");
    }
}

FeatureVector Normalization::apply(std::span<const double> x) const
{
    if (x.size() != offset.size())
        throw std::invalid_argument("feature vector does not match the normalization");
    FeatureVector out(x.size());
    for (std::size_t f = 0; f < x.size(); ++f)
        out[f] = (x[f] - offset[f]) / scale[f];
    return out;
}

Normalization fit_normalization(const TrainingSet& training)
{
    if (training.size() < 2)
        throw std::invalid_argument("normalization needs at least two samples");
    const auto dim = training.dimension();
    const auto m = static_cast<double>(training.size());
    Normalization n;
    n.offset.assign(dim, 0.0);
    n.scale.assign(dim, 1.0);
    for (std::size_t f = 0; f < dim; ++f) {
        double mean = 0.0;
        for (const auto& s : training.samples)
            mean += s.features[f];
        mean /= m;
        double var = 0.0;
        for (const auto& s : training.samples)
            var += (s.features[f] - mean) * (s.features[f] - mean);
        const double sd = std::sqrt(var / m);
        n.offset[f] = mean;
        n.scale[f] = sd > 0.0 ? sd : 1.0;
    }
    return n;
}

KnnModel::KnnModel(TrainingSet training, KnnOptions options)
    : training_(std::move(training)), options_(options)
{
    training_.validate();
    if (options_.k < 1)
        throw std::invalid_argument("k must be at least 1");
    if (static_cast<std::size_t>(options_.k) > training_.size())
        throw std::invalid_argument("k = " + std::to_string(options_.k) + " exceeds the " +
                                    std::to_string(training_.size()) + " training samples");
    dim_ = training_.dimension();
    if (options_.normalize)
        normalization_ = fit_normalization(training_);
    const auto m = training_.size();
    soa_.resize(dim_ * m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto x = normalization_ ? normalization_->apply(training_.samples[i].features)
                                      : training_.samples[i].features;
        for (std::size_t f = 0; f < dim_; ++f)
            soa_[f * m + i] = x[f];
    }
}

std::vector<Neighbor> KnnModel::neighbors(std::span<const double> x) const
{
    if (x.size() != dim_)
        throw std::invalid_argument("query has " + std::to_string(x.size()) +
                                    " features, model expects " + std::to_string(dim_));
    for (double v : x)
        if (!std::isfinite(v))
            throw std::invalid_argument("query has a non-finite feature");
    const auto q = normalization_ ? normalization_->apply(x) : FeatureVector(x.begin(), x.end());
    const auto m = training_.size();
    std::vector<double> d(m);
    if (options_.metric == DistanceMetric::Euclidean)
        simd::squared_euclidean(q, soa_, m, d);
    else
        simd::manhattan(q, soa_, m, d);

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    const auto k = static_cast<std::size_t>(options_.k);
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                      [&](std::size_t a, std::size_t b) {
                          return d[a] < d[b] || (d[a] == d[b] && a < b);
                      });
    std::vector<Neighbor> out;
    out.reserve(k);
    for (std::size_t r = 0; r < k; ++r) {
        const auto i = order[r];
        const double dist = options_.metric == DistanceMetric::Euclidean ? std::sqrt(d[i]) : d[i];
        out.push_back({i, dist, training_.samples[i].label});
    }
    return out;
}

int KnnModel::classify(std::span<const double> x) const
{
    const auto nn = neighbors(x);
    const auto n_cat = training_.categories.size();
    std::vector<int> votes(n_cat, 0);
    std::vector<double> nearest(n_cat, INFINITY);
    for (const auto& n : nn) {
        const auto c = static_cast<std::size_t>(n.label);
        ++votes[c];
        nearest[c] = std::min(nearest[c], n.distance);
    }
    const int top = *std::max_element(votes.begin(), votes.end());
    int best = -1;
    for (std::size_t c = 0; c < n_cat; ++c) {
        if (votes[c] != top)
            continue;
        if (best < 0 || nearest[c] < nearest[static_cast<std::size_t>(best)])
            best = static_cast<int>(c);
    }
    return best;
}

const std::string& KnnModel::classify_name(std::span<const double> x) const
{
    return training_.categories[static_cast<std::size_t>(classify(x))];
}

}  // namespace ltelab
