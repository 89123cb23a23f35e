#include "sudocsp/knn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sudocsp {

void LabeledDataset::add(std::vector<double> vector, int label) {
    if (label < 1 || label > 9) {
        throw std::invalid_argument("dataset label " + std::to_string(label) +
                                    " outside 1..9");
    }
    if (!vectors_.empty() && vector.size() != vectors_.front().size()) {
        throw std::invalid_argument("dataset vector length " +
                                    std::to_string(vector.size()) + " != " +
                                    std::to_string(vectors_.front().size()));
    }
    vectors_.push_back(std::move(vector));
    labels_.push_back(label);
}

void LabeledDataset::add(const FeatureVector& feature, int label) {
    if (feature.encoding != encoding_) {
        throw std::invalid_argument("feature encoding does not match dataset encoding");
    }
    add(feature.values, label);
}

size_t LabeledDataset::vector_length() const {
    return vectors_.empty() ? 0 : vectors_.front().size();
}

double euclidean_distance(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("euclidean_distance: lengths differ (" +
                                    std::to_string(p.size()) + " vs " +
                                    std::to_string(q.size()) + ")");
    }
    double sum = 0.0;
    for (size_t i = 0; i < p.size(); ++i) {
        double d = q[i] - p[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

KnnModel::KnnModel(LabeledDataset dataset, int k) : dataset_(std::move(dataset)), k_(k) {
    if (k < 1 || static_cast<size_t>(k) > dataset_.size()) {
        throw std::invalid_argument("k = " + std::to_string(k) +
                                    " must lie in 1..dataset size (" +
                                    std::to_string(dataset_.size()) + ")");
    }
}

Prediction KnnModel::predict(std::span<const double> query) const {
    if (query.size() != dataset_.vector_length()) {
        throw std::invalid_argument("query length " + std::to_string(query.size()) +
                                    " != trained length " +
                                    std::to_string(dataset_.vector_length()));
    }

    // Sorting by (distance, label) keeps the selected neighborhood
    // independent of dataset order even when distances tie at the cutoff.
    struct Neighbor {
        double distance;
        int label;
    };
    std::vector<Neighbor> neighbors;
    neighbors.reserve(dataset_.size());
    for (size_t i = 0; i < dataset_.size(); ++i) {
        neighbors.push_back(Neighbor{euclidean_distance(dataset_.vector(i), query),
                                     dataset_.label(i)});
    }
    auto closer = [](const Neighbor& a, const Neighbor& b) {
        return a.distance != b.distance ? a.distance < b.distance : a.label < b.label;
    };
    size_t take = static_cast<size_t>(k_);
    std::partial_sort(neighbors.begin(), neighbors.begin() + take, neighbors.end(),
                      closer);

    Prediction prediction;
    std::map<int, double> summed_distance;
    for (size_t i = 0; i < take; ++i) {
        ++prediction.votes[neighbors[i].label];
        summed_distance[neighbors[i].label] += neighbors[i].distance;
    }

    int best_votes = 0;
    for (const auto& [label, count] : prediction.votes) {
        // map iteration is ascending, so on full ties the smaller digit wins
        if (count > best_votes ||
            (count == best_votes &&
             summed_distance[label] < summed_distance[prediction.label])) {
            prediction.label = label;
            best_votes = count;
        }
    }
    return prediction;
}

Prediction KnnModel::predict(const FeatureVector& query) const {
    if (query.encoding != dataset_.encoding()) {
        throw std::invalid_argument("query encoding does not match trained encoding");
    }
    return predict(std::span<const double>(query.values));
}

double evaluate(const KnnModel& model, const LabeledDataset& test) {
    if (test.encoding() != model.dataset().encoding()) {
        throw std::invalid_argument("test encoding does not match trained encoding");
    }
    if (test.empty()) {
        throw std::invalid_argument("evaluate: empty test set");
    }
    size_t correct = 0;
    for (size_t i = 0; i < test.size(); ++i) {
        if (model.predict(test.vector(i)).label == test.label(i)) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(test.size());
}

}  // namespace sudocsp
