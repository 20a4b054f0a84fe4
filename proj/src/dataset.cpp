#include "dfs/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dfs {

std::size_t LabeledDataset::n_classes() const {
    int top = -1;
    for (int label : labels) top = std::max(top, label);
    return static_cast<std::size_t>(top + 1);
}

void LabeledDataset::validate() const {
    if (n_samples() < 2) throw InvalidSpec("dataset: need at least 2 samples");
    if (n_features() < 1) throw InvalidSpec("dataset: need at least 1 feature");
    if (labels.size() != n_samples())
        throw DimensionMismatch("dataset: " + std::to_string(labels.size()) +
                                " labels for " + std::to_string(n_samples()) + " samples");
    if (!feature_names.empty() && feature_names.size() != n_features())
        throw DimensionMismatch("dataset: feature_names length mismatch");
    const std::size_t c = n_classes();
    if (c < 2) throw InvalidSpec("dataset: need at least 2 classes");
    std::vector<std::size_t> counts(c, 0);
    for (int label : labels) {
        if (label < 0) throw InvalidSpec("dataset: negative class id");
        ++counts[static_cast<std::size_t>(label)];
    }
    for (std::size_t k = 0; k < c; ++k)
        if (counts[k] == 0)
            throw DegenerateClass("dataset: class " + std::to_string(k) + " has no samples");
    if (!all_finite(features)) throw InvalidSpec("dataset: non-finite feature value");
}

std::pair<LabeledDataset, StandardizationParams> standardize(const LabeledDataset& data) {
    const std::size_t n = data.n_samples(), d = data.n_features();
    if (n < 2) throw InvalidSpec("standardize: need at least 2 samples");

    StandardizationParams params;
    params.mean.resize(d);
    params.std_dev.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += data.features(i, j);
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double dev = data.features(i, j) - mean;
            var += dev * dev;
        }
        // population standard deviation
        const double sd = std::sqrt(var / static_cast<double>(n));
        params.mean[j] = mean;
        if (sd < 1e-12) {
            params.std_dev[j] = 1.0;
            params.constant_columns.push_back(j);
        } else {
            params.std_dev[j] = sd;
        }
    }

    LabeledDataset out = data;
    out.features = apply_standardization(data.features, params);
    return {std::move(out), std::move(params)};
}

Matrix apply_standardization(const Matrix& features, const StandardizationParams& params) {
    if (features.cols() != params.mean.size())
        throw DimensionMismatch("apply_standardization: feature count mismatch");
    Matrix out(features.rows(), features.cols());
    for (std::size_t i = 0; i < features.rows(); ++i)
        for (std::size_t j = 0; j < features.cols(); ++j)
            out(i, j) = (features(i, j) - params.mean[j]) / params.std_dev[j];
    return out;
}

}  // namespace dfs
