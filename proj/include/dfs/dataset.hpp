#pragma once

#include <string>
#include <vector>

#include "dfs/matrix.hpp"

namespace dfs {

// Supervised dataset: rows are samples, columns are features, labels are
// contiguous class ids 0..c-1 and every class occurs at least once.
struct LabeledDataset {
    Matrix features;               // n x d
    std::vector<int> labels;       // length n
    std::vector<std::string> feature_names;  // optional, length d or empty

    std::size_t n_samples() const { return features.rows(); }
    std::size_t n_features() const { return features.cols(); }
    std::size_t n_classes() const;

    // Throws on any invariant violation (empty classes, non-finite values,
    // label/feature count mismatch).
    void validate() const;
};

// Per-feature centering/scaling fitted on one dataset and applicable to
// held-out data. Constant columns are centered but left unscaled; their
// indices are recorded as warnings.
struct StandardizationParams {
    std::vector<double> mean;
    std::vector<double> std_dev;              // 1.0 for constant columns
    std::vector<std::size_t> constant_columns;
};

// Zero-mean, unit population standard deviation per column.
std::pair<LabeledDataset, StandardizationParams> standardize(const LabeledDataset& data);

// Applies previously fitted parameters (to held-out folds).
Matrix apply_standardization(const Matrix& features, const StandardizationParams& params);

}  // namespace dfs
