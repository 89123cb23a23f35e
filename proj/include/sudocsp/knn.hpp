#pragma once

#include <map>
#include <span>
#include <vector>

#include "sudocsp/image.hpp"

namespace sudocsp {

// Feature vectors of one encoding paired with digit labels 1..9.
class LabeledDataset {
public:
    explicit LabeledDataset(Encoding encoding) : encoding_(encoding) {}

    // All vectors must share a length; labels must lie in 1..9.
    void add(std::vector<double> vector, int label);
    void add(const FeatureVector& feature, int label);

    Encoding encoding() const { return encoding_; }
    size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    size_t vector_length() const;

    std::span<const double> vector(size_t i) const { return vectors_[i]; }
    int label(size_t i) const { return labels_[i]; }

private:
    Encoding encoding_;
    std::vector<std::vector<double>> vectors_;
    std::vector<int> labels_;
};

double euclidean_distance(std::span<const double> p, std::span<const double> q);

struct Prediction {
    int label = 0;
    std::map<int, int> votes;  // digit -> count among the k nearest
};

// Exact brute-force k-nearest-neighbor vote. Label ties are broken by the
// smaller summed distance among the tied labels, then by the smaller digit,
// so predictions do not depend on dataset order.
class KnnModel {
public:
    KnnModel(LabeledDataset dataset, int k);

    const LabeledDataset& dataset() const { return dataset_; }
    int k() const { return k_; }

    Prediction predict(std::span<const double> query) const;
    Prediction predict(const FeatureVector& query) const;

private:
    LabeledDataset dataset_;
    int k_;
};

// Fraction of test items predicted correctly; encodings must match.
double evaluate(const KnnModel& model, const LabeledDataset& test);

}  // namespace sudocsp
